#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "grpstat/order.hpp"
#include "grpstat/perm_group.hpp"

namespace grpstat {

enum class StatKind { min_base, max_minimal_base, max_independent, max_irredundant };

enum class SearchStatus {
  exact,   // search space exhausted; value is the statistic
  bounds,  // node budget ran out; the statistic lies in [lower, upper]
};

/// Default node budget of every exact search.
inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

struct SearchOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
};

/// A statistic together with the evidence needed to re-check it.
///
/// `orders` depends on the kind:
///   - min_base, max_irredundant: |G|, |G_{w1}|, |G_{w1,w2}|, ... along the
///     witness sequence (witness.size() + 1 entries).
///   - max_independent, max_minimal_base: |G_(L)| followed by |G_(L \ a)| for
///     each a in the witness, in witness order.
struct StatCertificate {
  StatKind kind = StatKind::min_base;
  unsigned value = 0;  // best value found (equals lower)
  unsigned lower = 0;
  unsigned upper = 0;
  SearchStatus status = SearchStatus::exact;
  std::vector<Point> witness;
  std::vector<Order> orders;
  std::uint64_t nodes = 0;

  [[nodiscard]] bool exact() const { return status == SearchStatus::exact; }
};

std::string to_string(StatKind kind);

/// Minimum base size b(G): iterative deepening over orbit representatives,
/// pruning branches whose order exceeds (largest orbit)^(remaining depth).
StatCertificate stat_b(const PermGroup& group, const SearchOptions& options = {});

/// Maximum size of a minimal base B(G). Minimal bases are exactly the
/// independent sets with trivial pointwise stabilizer, so this runs the
/// independent-set search and keeps only bases.
StatCertificate stat_B(const PermGroup& group, const SearchOptions& options = {});

/// Height H(G), the maximum size of an independent set.
///
/// Depth-first search over sequences whose every entry is an orbit
/// representative of the pointwise stabilizer of the earlier entries. This is
/// complete: any independent set can be conjugated, point by point, onto such
/// a sequence, and conjugation preserves independence. A branch is pruned
/// when |L| + Omega(|G_(L)|) <= best, since each further point must shrink
/// the stabilizer.
StatCertificate stat_H(const PermGroup& group, const SearchOptions& options = {});

/// Maximum irredundant base length I(G): ordered search over orbit
/// representatives of the current stabilizer, pruned like stat_H.
StatCertificate stat_I(const PermGroup& group, const SearchOptions& options = {});

/// G_(L) differs from G_(L \ a) for every a in L.
bool is_independent(const PermGroup& group, std::span<const Point> points);

/// A subset of `points` with the same pointwise stabilizer that is
/// independent. Points are tried for removal from the last (largest) down.
std::vector<Point> independent_core(const PermGroup& group, std::span<const Point> points);

/// Recomputes every stabilizer order in `cert` from a fresh group built from
/// `group`'s generators and checks the kind's defining property. Returns an
/// empty string when the certificate holds, else a description of the fault.
std::string verify_certificate(const PermGroup& group, const StatCertificate& cert);

// ---------------------------------------------------------------------------
// Subgroup chain length

enum class LenMode { automatic, exact_lattice, bound };
enum class LenStatus { exact, upper_bound };
enum class LenMethod { lattice, log2, cyclic_formula, sym_formula };

struct LenResult {
  unsigned value = 0;
  LenStatus status = LenStatus::exact;
  LenMethod method = LenMethod::log2;

  [[nodiscard]] bool exact() const { return status == LenStatus::exact; }
};

std::string to_string(LenMethod method);

inline constexpr std::size_t kDefaultLatticeCap = 2000;

/// Length of the longest chain of subgroups of G.
///
/// automatic: cyclic groups use Omega(|G|); Sym(n) in its natural action uses
/// ceil(3n/2) - popcount(n) - 1; groups of order <= lattice_cap use the
/// subgroup lattice; anything else gets the floor(log2 |G|) upper bound.
/// exact_lattice throws CapExceeded above the cap.
LenResult stat_len(const PermGroup& group, LenMode mode = LenMode::automatic,
                   std::size_t lattice_cap = kDefaultLatticeCap);

/// Longest subgroup chain computed from the full subgroup lattice.
unsigned subgroup_lattice_chain_length(const PermGroup& group,
                                       std::size_t lattice_cap = kDefaultLatticeCap);

/// ceil(3n/2) - popcount(n) - 1, the longest chain in Sym(n).
unsigned symmetric_chain_length(unsigned n);

bool is_cyclic(const PermGroup& group);

}  // namespace grpstat
