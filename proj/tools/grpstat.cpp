// grpstat: construct group actions, compute base statistics and relational
// complexity, and run the verification suite.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "grpstat/actions.hpp"
#include "grpstat/error.hpp"
#include "grpstat/group_io.hpp"
#include "grpstat/harness.hpp"
#include "grpstat/rc.hpp"
#include "grpstat/stats.hpp"
#include "grpstat/symplectic.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace grpstat;

// ---------------------------------------------------------------------------
// construct

class Params {
 public:
  explicit Params(const std::vector<std::string>& args) {
    for (const auto& a : args) {
      const auto eq = a.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw InvalidArgument("parameter '" + a + "' is not of the form key=value");
      }
      values_[a.substr(0, eq)] = a.substr(eq + 1);
    }
  }

  std::size_t number(const std::string& key) {
    const std::string text = text_or(key, "");
    if (text.empty()) throw InvalidArgument("missing parameter " + key + "=...");
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(text, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != text.size()) throw InvalidArgument(key + " must be a non-negative integer");
    return v;
  }

  std::string text_or(const std::string& key, const std::string& fallback) {
    used_.insert(key);
    auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
  }

  bool flag(const std::string& key, bool fallback) {
    const std::string v = text_or(key, fallback ? "1" : "0");
    if (v == "1" || v == "true" || v == "yes") return true;
    if (v == "0" || v == "false" || v == "no") return false;
    throw InvalidArgument(key + " must be 0 or 1");
  }

  void require_all_used() const {
    for (const auto& [k, v] : values_) {
      if (!used_.count(k)) throw InvalidArgument("unknown parameter " + k);
    }
  }

 private:
  std::map<std::string, std::string> values_;
  std::set<std::string> used_;
};

SymVariant variant_of(Params& p) {
  const std::string v = p.text_or("variant", "sym");
  if (v == "sym") return SymVariant::sym;
  if (v == "alt") return SymVariant::alt;
  throw InvalidArgument("variant must be sym or alt");
}

// q = p^f with p prime.
std::pair<std::uint32_t, std::uint32_t> prime_power(std::size_t q) {
  if (q < 2) throw InvalidArgument("q must be a prime power");
  std::uint32_t p = 2;
  while (q % p) ++p;
  std::uint32_t f = 0;
  std::size_t r = q;
  while (r % p == 0) {
    r /= p;
    ++f;
  }
  if (r != 1) throw InvalidArgument("q must be a prime power");
  return {p, f};
}

const char* kConstructHelp =
    "Families and their key=value parameters:\n"
    "  natural     n variant=sym|alt\n"
    "  k_subsets   n k variant=sym|alt\n"
    "  partitions  a b variant=sym|alt   (a blocks of size b)\n"
    "  affine      d p\n"
    "  product     inner=<catalog id> r\n"
    "  diagonal    t=alt5|psl32 m outer=0|1\n"
    "  subspaces   n q m group=sl|gl|gammal\n"
    "  pairs       n q m variant=complement|flag graph=0|1\n"
    "  forms       m e sign=plus|minus|all group=transvections|gammasp\n"
    "  m24\n"
    "or any catalog id (see `grpstat catalog`).";

ActionInstance construct(const std::string& name, const std::vector<std::string>& args) {
  Params p(args);
  ActionInstance out;
  if (name == "natural") {
    out = act_natural(p.number("n"), variant_of(p));
  } else if (name == "k_subsets") {
    out = act_k_subsets(p.number("n"), p.number("k"), variant_of(p));
  } else if (name == "partitions") {
    out = act_partitions(p.number("a"), p.number("b"), variant_of(p));
  } else if (name == "affine") {
    out = act_affine(p.number("d"), static_cast<std::uint32_t>(p.number("p")));
  } else if (name == "product") {
    const auto inner = catalog_entry(p.text_or("inner", "")).build();
    out = act_product(inner, p.number("r"));
  } else if (name == "diagonal") {
    const std::string t = p.text_or("t", "alt5");
    const std::size_t m = p.number("m");
    const bool outer = p.flag("outer", true);
    if (t == "alt5") {
      out = act_diagonal(diagonal_spec_alt5(m, outer));
    } else if (t == "psl32") {
      out = act_diagonal(diagonal_spec_psl32(m, outer));
    } else {
      throw InvalidArgument("t must be alt5 or psl32");
    }
  } else if (name == "subspaces") {
    const auto [pp, f] = prime_power(p.number("q"));
    const std::string g = p.text_or("group", "gl");
    const LinearGroup grp = g == "sl"       ? LinearGroup::sl
                            : g == "gammal" ? LinearGroup::gammal
                            : g == "gl"     ? LinearGroup::gl
                                            : throw InvalidArgument("group must be sl|gl|gammal");
    out = act_subspaces(p.number("n"), pp, f, p.number("m"), grp);
  } else if (name == "pairs") {
    const auto [pp, f] = prime_power(p.number("q"));
    const std::string v = p.text_or("variant", "complement");
    if (v != "complement" && v != "flag") throw InvalidArgument("variant must be complement|flag");
    out = act_subspace_pairs(p.number("n"), pp, f, p.number("m"),
                             v == "flag" ? PairVariant::flag : PairVariant::complement,
                             p.flag("graph", true));
  } else if (name == "forms") {
    const std::string s = p.text_or("sign", "plus");
    const FormSign sign = s == "plus"    ? FormSign::plus
                          : s == "minus" ? FormSign::minus
                          : s == "all"   ? FormSign::all
                                         : throw InvalidArgument("sign must be plus|minus|all");
    const std::string g = p.text_or("group", "transvections");
    if (g != "transvections" && g != "gammasp") {
      throw InvalidArgument("group must be transvections|gammasp");
    }
    out = act_quadratic_forms(p.number("m"), static_cast<std::uint32_t>(p.number("e")), sign,
                              g == "gammasp" ? FormGroup::gammasp : FormGroup::transvections);
  } else if (name == "m24") {
    out = act_m24();
  } else {
    out = catalog_entry(name).build();
  }
  p.require_all_used();
  return out;
}

json sidecar(const ActionInstance& a) {
  json meta = json::object();
  if (a.meta.order) meta["order"] = to_string(*a.meta.order);
  if (a.meta.transitive) meta["transitive"] = *a.meta.transitive;
  if (a.meta.primitive) meta["primitive"] = *a.meta.primitive;
  return {{"name", a.name}, {"degree", a.degree}, {"labels", a.labels}, {"meta", meta}};
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
  if (!out) throw Error("failed writing " + path.string());
}

// ---------------------------------------------------------------------------
// stats / rc

PermGroup load_group(const std::string& source) {
  if (std::filesystem::is_regular_file(source)) return read_group_file(source);
  return catalog_entry(source).build().group();
}

std::uint64_t effective_budget(std::uint64_t flag_value) {
  if (flag_value) return flag_value;
  return budget_from_environment().value_or(kDefaultNodeBudget);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutation group base statistics and relational complexity"};
  app.require_subcommand(1);

  // construct
  auto* construct_cmd = app.add_subcommand("construct", "Build a group action");
  construct_cmd->footer(kConstructHelp);
  std::string construct_name;
  std::vector<std::string> construct_args;
  std::string construct_out;
  std::string construct_json;
  construct_cmd->add_option("name", construct_name, "Family or catalog id")->required();
  construct_cmd->add_option("params", construct_args, "key=value parameters");
  construct_cmd->add_option("-o,--out", construct_out,
                            "Write the group here and the sidecar to <out>.json");
  construct_cmd->add_option("--json", construct_json, "Sidecar path (overrides <out>.json)");

  // stats
  auto* stats_cmd = app.add_subcommand("stats", "Compute b, B, H, I and chain length");
  std::string stats_source;
  std::string stats_which = "all";
  std::uint64_t stats_budget = 0;
  std::string stats_json;
  stats_cmd->add_option("group", stats_source, "Group file or catalog id")->required();
  stats_cmd->add_option("--stat", stats_which, "b|B|H|I|len|all")
      ->check(CLI::IsMember({"b", "B", "H", "I", "len", "all"}));
  stats_cmd->add_option("--budget", stats_budget, "Search node budget (default: $GRPSTAT_BUDGET)");
  stats_cmd->add_option("--json", stats_json, "Write certificates as JSON (- for stdout)");

  // rc
  auto* rc_cmd = app.add_subcommand("rc", "Relational complexity");
  std::string rc_source;
  bool rc_exact_flag = false;
  bool rc_upper_flag = false;
  std::size_t rc_ncap = 0;
  std::uint64_t rc_budget = 0;
  std::string rc_json;
  rc_cmd->add_option("group", rc_source, "Group file or catalog id")->required();
  rc_cmd->add_flag("--exact", rc_exact_flag, "Exact search (default)");
  rc_cmd->add_flag("--upper", rc_upper_flag, "Only the bound H + 1");
  rc_cmd->add_option("--ncap", rc_ncap, "Longest tuple considered (default: degree)");
  rc_cmd->add_option("--budget", rc_budget, "Search node budget (default: $GRPSTAT_BUDGET)");
  rc_cmd->add_option("--json", rc_json, "Write the result as JSON (- for stdout)");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Run the verification suite");
  std::string suite = "default";
  std::vector<std::string> include;
  std::vector<std::string> only_checks;
  std::string filter;
  std::string report_out;
  std::string csv_out;
  std::uint64_t verify_budget = 0;
  verify_cmd->add_option("--suite", suite, "default|all")
      ->check(CLI::IsMember({"default", "all"}));
  verify_cmd->add_option("--include", include, "Extra tiers to include (slow)")
      ->check(CLI::IsMember({"slow"}));
  verify_cmd->add_option("--check", only_checks, "Run only these check ids");
  verify_cmd->add_option("--filter", filter, "Catalog filter, e.g. \"primitive !large_base\"");
  verify_cmd->add_option("--out", report_out, "JSON report path");
  verify_cmd->add_option("--csv", csv_out, "CSV summary path");
  verify_cmd->add_option("--budget", verify_budget, "Search node budget (default: $GRPSTAT_BUDGET)");

  // catalog
  auto* catalog_cmd = app.add_subcommand("catalog", "List catalog entries");
  std::string catalog_filter;
  catalog_cmd->add_option("--filter", catalog_filter, "Tag filter");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*construct_cmd) {
      const auto a = construct(construct_name, construct_args);
      check_meta(a);
      const std::string text = format_group(a.group());
      const std::string side = sidecar(a).dump(2) + "\n";
      if (construct_out.empty()) {
        std::cout << text;
      } else {
        write_file(construct_out, text);
      }
      std::string side_path = construct_json;
      if (side_path.empty() && !construct_out.empty()) side_path = construct_out + ".json";
      if (!side_path.empty()) write_file(side_path, side);
      return 0;
    }

    if (*stats_cmd) {
      const PermGroup G = load_group(stats_source);
      const SearchOptions options{effective_budget(stats_budget)};
      json out{{"schema", 1},
               {"group", {{"degree", G.degree()}, {"order", to_string(G.order())}}},
               {"stats", json::array()}};
      std::cout << "degree " << G.degree() << ", order " << G.order() << "\n";
      const std::vector<std::pair<std::string, StatCertificate (*)(const PermGroup&,
                                                                    const SearchOptions&)>>
          kinds = {{"b", stat_b}, {"B", stat_B}, {"H", stat_H}, {"I", stat_I}};
      for (const auto& [letter, fn] : kinds) {
        if (stats_which != "all" && stats_which != letter) continue;
        const auto cert = fn(G, options);
        std::cout << letter << " = " << cert.value;
        if (!cert.exact()) std::cout << " (bounds [" << cert.lower << ", " << cert.upper << "])";
        std::cout << "  witness [";
        for (std::size_t i = 0; i < cert.witness.size(); ++i) {
          std::cout << (i ? "," : "") << cert.witness[i];
        }
        std::cout << "]\n";
        out["stats"].push_back(json::parse(to_json(cert)));
      }
      if (stats_which == "all" || stats_which == "len") {
        const auto len = stat_len(G);
        std::cout << "len = " << len.value << (len.exact() ? "" : " (upper bound)") << " via "
                  << to_string(len.method) << "\n";
        out["len"] = {{"value", len.value},
                      {"status", len.exact() ? "exact" : "upper_bound"},
                      {"method", to_string(len.method)}};
      }
      if (!stats_json.empty()) write_file(stats_json, out.dump(2) + "\n");
      return 0;
    }

    if (*rc_cmd) {
      const PermGroup G = load_group(rc_source);
      const std::uint64_t budget = effective_budget(rc_budget);
      json out{{"schema", 1}, {"group", {{"degree", G.degree()}, {"order", to_string(G.order())}}}};
      if (rc_upper_flag && !rc_exact_flag) {
        const auto H = stat_H(G, SearchOptions{budget});
        const unsigned upper = rc_upper(H);
        std::cout << "RC <= " << upper << (H.exact() ? "" : " (height search out of budget)")
                  << "\n";
        out["upper"] = upper;
        out["height_exact"] = H.exact();
      } else {
        RCOptions options;
        options.node_budget = budget;
        if (rc_ncap) options.n_cap = rc_ncap;
        const auto r = rc_exact(G, options);
        std::cout << "RC = " << r.value << " (" << to_string(r.status);
        if (!r.exact()) std::cout << ", in [" << r.lower << ", " << r.upper << "]";
        std::cout << "), H + 1 = " << r.height + 1 << "\n";
        if (r.witness) {
          auto show = [](const std::vector<Point>& v) {
            std::ostringstream s;
            s << "(";
            for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
            return s.str() + ")";
          };
          std::cout << "witness I=" << show(r.witness->I) << " J=" << show(r.witness->J)
                    << ": " << r.witness->r << "-equivalent, not " << r.witness->n
                    << "-equivalent\n";
        }
        out["rc"] = json::parse(to_json(r));
      }
      if (!rc_json.empty()) write_file(rc_json, out.dump(2) + "\n");
      return 0;
    }

    if (*verify_cmd) {
      SuiteConfig config = suite_config(suite);
      if (!include.empty()) config.include_slow = true;
      if (!only_checks.empty()) {
        for (const auto& id : only_checks) {
          bool known = false;
          for (const auto& c : check_registry()) known = known || c.id == id;
          if (!known) throw InvalidArgument("unknown check '" + id + "'");
        }
        config.checks = only_checks;
      } else if (config.include_slow) {
        config.checks.clear();
        for (const auto& c : check_registry()) config.checks.push_back(c.id);
      }
      config.filter = filter;
      config.node_budget = effective_budget(verify_budget);
      if (!report_out.empty()) config.json_path = report_out;
      if (!csv_out.empty()) config.csv_path = csv_out;
      const auto report = run_suite(config);
      for (const auto& r : report.results) {
        std::cout << to_string(r.status) << "  " << r.check_id << "  " << r.instance_id << "  "
                  << r.detail << "\n";
      }
      std::cout << report.results.size() << " results: " << report.count(CheckStatus::pass)
                << " pass, " << report.count(CheckStatus::fail) << " fail, "
                << report.count(CheckStatus::skipped) << " skipped\n";
      return report.any_failed() ? 1 : 0;
    }

    if (*catalog_cmd) {
      for (const auto& e : catalog(catalog_filter)) {
        std::cout << e.id << "  " << e.description << "  [";
        for (std::size_t i = 0; i < e.tags.size(); ++i) std::cout << (i ? " " : "") << e.tags[i];
        std::cout << "]\n";
      }
      return 0;
    }
  } catch (const grpstat::Error& e) {
    std::cerr << "grpstat: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
