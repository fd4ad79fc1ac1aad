#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grpstat/actions.hpp"
#include "grpstat/rc.hpp"
#include "grpstat/stats.hpp"

namespace grpstat {

/// A named, reproducible action.
///
/// Tags: `large_base`, `primitive`, `imprimitive`, `intransitive`, `slow`,
/// `aux` (small helper groups used by the product and quotient checks), one
/// O'Nan-Scott type `type:AS|HA|SD|PA` on primitive entries, and a family tag
/// (`natural`, `k_subsets`, `partitions`, `affine`, `product`, `diagonal`,
/// `subspaces`, `pairs`, `forms`, `sporadic`, `regular`).
struct CatalogEntry {
  std::string id;
  std::string description;
  std::vector<std::string> tags;
  std::map<std::string, std::string> params;  // construction parameters, e.g. n, q, inner
  std::function<ActionInstance()> build;

  [[nodiscard]] bool has_tag(std::string_view tag) const;
  [[nodiscard]] std::size_t param(const std::string& key) const;  // throws if absent
};

/// Every tag a filter may mention.
const std::vector<std::string>& known_tags();

/// Entries matching `filter`, in catalog order.
///
/// A filter is a list of terms separated by spaces or commas, all of which
/// must hold. A term is a tag, `!tag` for its absence, or `id:<entry id>`.
/// The empty filter selects everything. Throws ParseError on unknown tags.
std::vector<CatalogEntry> catalog(std::string_view filter = "");

/// Throws InvalidArgument when no entry has this id.
const CatalogEntry& catalog_entry(std::string_view id);

enum class CheckStatus { pass, fail, skipped };

std::string to_string(CheckStatus status);

struct CheckResult {
  std::string check_id;
  std::string instance_id;
  std::string claim;  // the relation evaluated, e.g. "H < 9 log2 t"
  double lhs = 0;
  double rhs = 0;
  CheckStatus status = CheckStatus::pass;
  std::string detail;  // human-readable values behind lhs and rhs
  std::vector<StatCertificate> certificates;
  std::optional<TupleWitness> tuple_witness;
  std::map<std::string, std::string> values;  // exact integers, as text
  std::string group_text;                     // generators, filled for failures
  double runtime_seconds = 0;

  [[nodiscard]] bool passed() const { return status == CheckStatus::pass; }
};

struct CheckInfo {
  std::string id;
  std::string claim;
  bool slow = false;
};

/// All registered checks in registry order.
const std::vector<CheckInfo>& check_registry();

struct VerifyParams {
  /// Restricts the instances a check visits, using the catalog filter syntax.
  /// Checks on fixed pairs match a pair when either side matches.
  std::string filter;
  bool include_slow = false;
  std::uint64_t node_budget = kDefaultNodeBudget;
};

/// Runs one check over its instances. A statistic that runs out of budget
/// makes the result `skipped` with the bounds recorded, never `pass`.
/// Throws InvalidArgument for an unregistered check id.
std::vector<CheckResult> verify(std::string_view check_id, const VerifyParams& params = {});

struct SuiteConfig {
  std::vector<std::string> checks;  // empty: nothing runs
  std::string filter;
  bool include_slow = false;
  std::uint64_t node_budget = kDefaultNodeBudget;
  std::optional<std::filesystem::path> json_path;
  std::optional<std::filesystem::path> csv_path;
};

/// The named suites: "default" lists every fast check, "all" every check
/// including the slow tier. Throws InvalidArgument for other names.
SuiteConfig suite_config(std::string_view suite);

/// Node budget from the GRPSTAT_BUDGET environment variable, if set.
std::optional<std::uint64_t> budget_from_environment();

struct SuiteReport {
  std::vector<CheckResult> results;
  [[nodiscard]] bool any_failed() const;
  [[nodiscard]] std::size_t count(CheckStatus status) const;
};

/// Runs the configured checks in registry order and writes the JSON report
/// and CSV summary when paths are set. Throws Error when an output path
/// cannot be written.
SuiteReport run_suite(const SuiteConfig& config);

/// {"schema": 1, "results": [...], "skipped": [...], "summary": {...}}.
std::string report_json(const SuiteReport& report);
std::string report_csv(const SuiteReport& report);

/// Compact JSON renderings shared by the reports and the command line.
std::string to_json(const StatCertificate& cert);
std::string to_json(const RCResult& result);

}  // namespace grpstat
