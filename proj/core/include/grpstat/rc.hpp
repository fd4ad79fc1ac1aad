#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "grpstat/perm_group.hpp"
#include "grpstat/stats.hpp"

namespace grpstat {

/// I ~_r J holds but I ~_n J fails, with n the tuple length.
struct TupleWitness {
  std::vector<Point> I;
  std::vector<Point> J;
  unsigned r = 0;
  unsigned n = 0;
};

enum class RCStatus { exact, interval };

struct RCResult {
  unsigned value = 0;  // equals lower when the status is interval
  RCStatus status = RCStatus::exact;
  unsigned lower = 0;
  unsigned upper = 0;
  std::optional<TupleWitness> witness;  // shows that lower - 1 does not suffice
  bool distinct_reduction_used = false;
  // Longest independent prefix behind a witness exceeded H(G). Never expected;
  // reported so that any such instance is visible.
  bool prefix_exceeds_height = false;
  unsigned height = 0;
  bool height_exact = true;
  std::uint64_t nodes = 0;

  [[nodiscard]] bool exact() const { return status == RCStatus::exact; }
};

struct RCOptions {
  std::optional<std::size_t> n_cap;  // longest tuple considered; default degree
  std::uint64_t node_budget = kDefaultNodeBudget;
};

std::string to_string(RCStatus status);

/// Some g with I^g = J entrywise, found along a chain of point stabilizers;
/// nullopt when none exists. Empty tuples give the identity.
std::optional<Permutation> transporter(const PermGroup& group, std::span<const Point> I,
                                       std::span<const Point> J);

/// Every r-element set of positions admits a transporter of the subtuples.
/// Throws InvalidArgument unless 1 <= r <= |I| = |J|.
bool r_equivalent(const PermGroup& group, std::span<const Point> I, std::span<const Point> J,
                  unsigned r);

/// H(G) + 1 from a height certificate. A bounds-status certificate still
/// gives a valid bound through its upper end.
unsigned rc_upper(const StatCertificate& height);
unsigned rc_upper(const PermGroup& group, const SearchOptions& options = {});

/// Relational complexity.
///
/// A counterexample of minimal length m has I ~_{m-1} J but not I ~_m J; for
/// m >= 3 its entries are distinct and, after applying a transporter of the
/// first m-1 entries to J, it reads
///
///   I = (L, x),  J = (L, y),  y in x^{G_(L\a)} for all a in L, y not in x^{G_(L)}
///
/// where L must be independent (a redundant a gives G_(L\a) = G_(L)). RC(G)
/// is the largest such m, at least 2 for any nontrivial group and 1 for the
/// trivial one. The search walks independent sets up to conjugacy with the
/// same orbit-representative tree as stat_H.
RCResult rc_exact(const PermGroup& group, const RCOptions& options = {});

/// Re-checks a witness with r_equivalent.
bool verify_witness(const PermGroup& group, const TupleWitness& witness);

}  // namespace grpstat
