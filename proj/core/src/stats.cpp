#include "grpstat/stats.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <unordered_map>

#include "grpstat/error.hpp"
#include "search_util.hpp"

namespace grpstat {

std::string to_string(StatKind kind) {
  switch (kind) {
    case StatKind::min_base:
      return "min_base";
    case StatKind::max_minimal_base:
      return "max_minimal_base";
    case StatKind::max_independent:
      return "max_independent";
    case StatKind::max_irredundant:
      return "max_irredundant";
  }
  return "unknown";
}

namespace {

using detail::BudgetExhausted;
using detail::NodeCounter;
using detail::omega;

std::vector<Order> sequence_orders(const PermGroup& group, std::span<const Point> seq) {
  return chain_orders(group, seq).orders;
}

// |G_(L)| followed by |G_(L \ a)| for each a in L.
std::vector<Order> leave_one_out_orders(const PermGroup& group, std::span<const Point> set) {
  std::vector<Order> orders{group.pointwise_stabilizer(set).order()};
  for (std::size_t i = 0; i < set.size(); ++i) {
    std::vector<Point> rest(set.begin(), set.end());
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    orders.push_back(group.pointwise_stabilizer(rest).order());
  }
  return orders;
}

// ---------------------------------------------------------------------------
// Independent-set search shared by stat_H and stat_B.

class IndependentSearch {
 public:
  IndependentSearch(bool bases_only, const SearchOptions& options)
      : bases_only_(bases_only), counter_(options.node_budget) {}

  // Returns false when the budget ran out.
  bool run(const PermGroup& group) {
    auto beaten = [&](const detail::IndependentNode& node) {
      return found_ && node.lambda.size() + omega(node.K) <= best_.size();
    };
    try {
      detail::walk_independent_sets(
          group, counter_,
          [&](const detail::IndependentNode& node) {
            if ((!bases_only_ || node.K.order() == 1) &&
                (!found_ || node.lambda.size() > best_.size())) {
              best_.assign(node.lambda.begin(), node.lambda.end());
              found_ = true;
            }
            return !beaten(node);
          },
          [&](const detail::IndependentNode& node) { return !beaten(node); });
      return true;
    } catch (const BudgetExhausted&) {
      return false;
    }
  }

  [[nodiscard]] const std::vector<Point>& best() const { return best_; }
  [[nodiscard]] bool found() const { return found_; }
  [[nodiscard]] std::uint64_t nodes() const { return counter_.count(); }

 private:
  bool bases_only_;
  NodeCounter counter_;
  std::vector<Point> best_;
  bool found_ = false;
};

StatCertificate independent_certificate(const PermGroup& group, const SearchOptions& options,
                                        bool bases_only) {
  IndependentSearch search(bases_only, options);
  const bool complete = search.run(group);
  StatCertificate cert;
  cert.kind = bases_only ? StatKind::max_minimal_base : StatKind::max_independent;
  cert.witness = search.best();
  std::sort(cert.witness.begin(), cert.witness.end());
  cert.value = static_cast<unsigned>(cert.witness.size());
  cert.lower = cert.value;
  cert.nodes = search.nodes();
  if (complete) {
    cert.upper = cert.value;
    cert.status = SearchStatus::exact;
  } else {
    cert.upper = std::max(cert.value, omega(group));
    cert.status = SearchStatus::bounds;
    if (bases_only && !search.found()) {
      // No base seen yet: fall back to a greedy base reduced to a minimal one.
      std::vector<Point> base = group.chain().base();
      cert.witness = independent_core(group, base);
      std::sort(cert.witness.begin(), cert.witness.end());
      cert.value = cert.lower = static_cast<unsigned>(cert.witness.size());
    }
  }
  cert.orders = leave_one_out_orders(group, cert.witness);
  return cert;
}

// ---------------------------------------------------------------------------
// Base-size search.

class MinBaseSearch {
 public:
  explicit MinBaseSearch(NodeCounter& counter) : counter_(counter) {}

  bool exists(const PermGroup& K, unsigned depth_left, std::vector<Point>& seq) {
    counter_.tick();
    if (K.order() == 1) return true;
    if (depth_left == 0) return false;
    const OrbitTable orbits = orbit_table(K.degree(), K.generators());
    const std::uint32_t largest = *std::max_element(orbits.size.begin(), orbits.size.end());
    // Each further point contributes a factor of at most `largest` to |K|.
    if (K.order() > pow(Order(largest), depth_left)) return false;
    for (Point w = 0; w < K.degree(); ++w) {
      if (orbits.rep[w] != w || orbits.size[w] == 1) continue;
      seq.push_back(w);
      if (exists(K.stabilizer(w), depth_left - 1, seq)) return true;
      seq.pop_back();
    }
    return false;
  }

 private:
  NodeCounter& counter_;
};

// A base built by repeatedly fixing a point from a largest orbit.
std::vector<Point> greedy_base(const PermGroup& group) {
  std::vector<Point> base;
  PermGroup K = group;
  while (K.order() != 1) {
    const OrbitTable orbits = orbit_table(K.degree(), K.generators());
    Point best = 0;
    for (Point w = 0; w < K.degree(); ++w) {
      if (orbits.size[w] > orbits.size[best]) best = w;
    }
    base.push_back(best);
    K = K.stabilizer(best);
  }
  return base;
}

// ---------------------------------------------------------------------------
// Irredundant-base search.

class IrredundantSearch {
 public:
  explicit IrredundantSearch(const SearchOptions& options) : counter_(options.node_budget) {}

  bool run(const PermGroup& group) {
    try {
      std::vector<Point> seq;
      visit(group, seq);
      return true;
    } catch (const BudgetExhausted&) {
      return false;
    }
  }

  [[nodiscard]] const std::vector<Point>& best() const { return best_; }
  [[nodiscard]] std::uint64_t nodes() const { return counter_.count(); }

 private:
  void visit(const PermGroup& K, std::vector<Point>& seq) {
    counter_.tick();
    if (K.order() == 1) {
      if (!found_ || seq.size() > best_.size()) {
        best_ = seq;
        found_ = true;
      }
      return;
    }
    auto pruned = [&] {
      return found_ && static_cast<unsigned>(seq.size()) + omega(K) <= best_.size();
    };
    if (pruned()) return;
    const OrbitTable orbits = orbit_table(K.degree(), K.generators());
    for (Point w = 0; w < K.degree(); ++w) {
      if (orbits.rep[w] != w || orbits.size[w] == 1) continue;
      seq.push_back(w);
      visit(K.stabilizer(w), seq);
      seq.pop_back();
      if (pruned()) return;
    }
  }

  NodeCounter counter_;
  std::vector<Point> best_;
  bool found_ = false;
};

}  // namespace

StatCertificate stat_b(const PermGroup& group, const SearchOptions& options) {
  StatCertificate cert;
  cert.kind = StatKind::min_base;
  std::vector<Point> best = greedy_base(group);
  NodeCounter counter(options.node_budget);
  MinBaseSearch search(counter);
  unsigned proven_lower = 0;
  bool complete = true;
  try {
    for (unsigned depth = 0; depth < best.size(); ++depth) {
      std::vector<Point> seq;
      if (search.exists(group, depth, seq)) {
        best = seq;
        break;
      }
      proven_lower = depth + 1;
    }
  } catch (const BudgetExhausted&) {
    complete = false;
  }
  cert.witness = best;
  cert.value = static_cast<unsigned>(best.size());
  cert.upper = cert.value;
  cert.lower = complete ? cert.value : proven_lower;
  cert.status = complete ? SearchStatus::exact : SearchStatus::bounds;
  cert.nodes = counter.count();
  cert.orders = sequence_orders(group, cert.witness);
  return cert;
}

StatCertificate stat_B(const PermGroup& group, const SearchOptions& options) {
  return independent_certificate(group, options, true);
}

StatCertificate stat_H(const PermGroup& group, const SearchOptions& options) {
  return independent_certificate(group, options, false);
}

StatCertificate stat_I(const PermGroup& group, const SearchOptions& options) {
  IrredundantSearch search(options);
  const bool complete = search.run(group);
  StatCertificate cert;
  cert.kind = StatKind::max_irredundant;
  cert.witness = search.best();
  if (group.order() != 1 && cert.witness.empty()) cert.witness = greedy_base(group);
  cert.value = static_cast<unsigned>(cert.witness.size());
  cert.lower = cert.value;
  cert.upper = complete ? cert.value : std::max(cert.value, omega(group));
  cert.status = complete ? SearchStatus::exact : SearchStatus::bounds;
  cert.nodes = search.nodes();
  cert.orders = sequence_orders(group, cert.witness);
  return cert;
}

bool is_independent(const PermGroup& group, std::span<const Point> points) {
  const auto orders = leave_one_out_orders(group, points);
  for (std::size_t i = 1; i < orders.size(); ++i) {
    if (orders[i] == orders[0]) return false;
  }
  return true;
}

std::vector<Point> independent_core(const PermGroup& group, std::span<const Point> points) {
  for (Point x : points) {
    if (x >= group.degree()) throw InvalidArgument("point out of range");
  }
  std::vector<Point> core(points.begin(), points.end());
  std::sort(core.begin(), core.end());
  core.erase(std::unique(core.begin(), core.end()), core.end());
  const Order target = group.pointwise_stabilizer(core).order();
  for (std::size_t i = core.size(); i-- > 0;) {
    std::vector<Point> rest = core;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (group.pointwise_stabilizer(rest).order() == target) core = std::move(rest);
  }
  return core;
}

std::string verify_certificate(const PermGroup& group, const StatCertificate& cert) {
  const PermGroup fresh(group.degree(), group.generators());
  for (Point x : cert.witness) {
    if (x >= fresh.degree()) return "witness point out of range";
  }
  if (cert.witness.size() != cert.value) return "witness size differs from value";
  if (cert.lower > cert.value || cert.value > cert.upper) return "value outside its bounds";
  if (cert.exact() && cert.lower != cert.upper) return "exact certificate with open bounds";

  switch (cert.kind) {
    case StatKind::min_base:
    case StatKind::max_irredundant: {
      const auto record = chain_orders(fresh, cert.witness);
      if (record.orders != cert.orders) return "stabilizer orders do not match";
      if (!record.is_base) return "witness is not a base";
      if (cert.kind == StatKind::max_irredundant && !record.irredundant) {
        return "stabilizer chain is not strictly decreasing";
      }
      return {};
    }
    case StatKind::max_minimal_base:
    case StatKind::max_independent: {
      const auto orders = leave_one_out_orders(fresh, cert.witness);
      if (orders != cert.orders) return "stabilizer orders do not match";
      for (std::size_t i = 1; i < orders.size(); ++i) {
        if (!(orders[i] > orders[0])) return "witness is not independent";
      }
      if (cert.kind == StatKind::max_minimal_base && orders[0] != 1) {
        return "witness is not a base";
      }
      return {};
    }
  }
  return "unknown certificate kind";
}

// ---------------------------------------------------------------------------
// Subgroup chain length

std::string to_string(LenMethod method) {
  switch (method) {
    case LenMethod::lattice:
      return "lattice";
    case LenMethod::log2:
      return "log2";
    case LenMethod::cyclic_formula:
      return "cyclic_formula";
    case LenMethod::sym_formula:
      return "sym_formula";
  }
  return "unknown";
}

unsigned symmetric_chain_length(unsigned n) {
  if (n == 0) return 0;
  return (3 * n + 1) / 2 - static_cast<unsigned>(std::popcount(n)) - 1;
}

bool is_cyclic(const PermGroup& group) {
  const auto& gens = group.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
    }
  }
  // An abelian group is cyclic iff its exponent equals its order; the
  // exponent of an abelian group is the lcm of its generators' orders.
  Order exponent = 1;
  for (const auto& g : gens) {
    const Order o = g.element_order();
    exponent = exponent / boost::multiprecision::gcd(exponent, o) * o;
  }
  return exponent == group.order();
}

namespace {

class SubgroupLattice {
 public:
  SubgroupLattice(const PermGroup& group, std::size_t cap) {
    elements_ = enumerate_elements(group, cap);
    n_ = elements_.size();
    words_ = (n_ + 63) / 64;
    std::unordered_map<Permutation, std::uint32_t, PermutationHash> index;
    for (std::size_t i = 0; i < n_; ++i) index.emplace(elements_[i], static_cast<std::uint32_t>(i));
    table_.resize(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        table_[i * n_ + j] = index.at(elements_[i] * elements_[j]);
      }
    }
  }

  unsigned longest_chain(std::size_t subgroup_cap) {
    // Cyclic subgroups first; every subgroup is a join of cyclic ones, so
    // closing under joins with cyclic subgroups yields the whole lattice.
    std::vector<Bits> cyclic;
    std::vector<std::uint32_t> cyclic_gen;
    for (std::uint32_t g = 0; g < n_; ++g) {
      Bits c = closure({g});
      if (std::find(cyclic.begin(), cyclic.end(), c) == cyclic.end()) {
        cyclic.push_back(std::move(c));
        cyclic_gen.push_back(g);
      }
    }
    std::vector<Bits> subgroups = cyclic;
    std::vector<std::vector<std::uint32_t>> gens;
    for (auto g : cyclic_gen) gens.push_back({g});
    std::set<Bits> seen(subgroups.begin(), subgroups.end());
    for (std::size_t s = 0; s < subgroups.size(); ++s) {
      for (std::size_t c = 0; c < cyclic.size(); ++c) {
        if (subset(cyclic[c], subgroups[s])) continue;
        std::vector<std::uint32_t> joined = gens[s];
        joined.push_back(cyclic_gen[c]);
        Bits j = closure(joined);
        if (seen.insert(j).second) {
          if (subgroups.size() >= subgroup_cap) {
            throw CapExceeded("subgroup lattice exceeds " + std::to_string(subgroup_cap) +
                              " subgroups");
          }
          subgroups.push_back(std::move(j));
          gens.push_back(std::move(joined));
        }
      }
    }
    // Longest chain ending at each subgroup, processed by increasing order.
    std::vector<std::size_t> by_size(subgroups.size());
    std::vector<std::size_t> size(subgroups.size());
    for (std::size_t i = 0; i < subgroups.size(); ++i) {
      by_size[i] = i;
      size[i] = popcount(subgroups[i]);
    }
    std::sort(by_size.begin(), by_size.end(),
              [&](auto a, auto b) { return size[a] < size[b]; });
    std::vector<unsigned> depth(subgroups.size(), 0);
    unsigned best = 0;
    for (std::size_t ii = 0; ii < by_size.size(); ++ii) {
      const auto i = by_size[ii];
      for (std::size_t jj = 0; jj < ii; ++jj) {
        const auto j = by_size[jj];
        if (size[j] < size[i] && subset(subgroups[j], subgroups[i])) {
          depth[i] = std::max(depth[i], depth[j] + 1);
        }
      }
      best = std::max(best, depth[i]);
    }
    return best;
  }

 private:
  using Bits = std::vector<std::uint64_t>;

  Bits closure(const std::vector<std::uint32_t>& gens) const {
    Bits bits(words_, 0);
    std::vector<std::uint32_t> queue{0};
    bits[0] |= 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (auto g : gens) {
        const auto y = table_[queue[i] * n_ + g];
        if (!(bits[y / 64] >> (y % 64) & 1)) {
          bits[y / 64] |= std::uint64_t{1} << (y % 64);
          queue.push_back(y);
        }
      }
    }
    return bits;
  }

  static bool subset(const Bits& a, const Bits& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] & ~b[i]) return false;
    }
    return true;
  }

  static std::size_t popcount(const Bits& a) {
    std::size_t c = 0;
    for (auto w : a) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  std::vector<Permutation> elements_;
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint32_t> table_;
};

constexpr std::size_t kSubgroupCap = 20000;

bool is_natural_symmetric(const PermGroup& group) {
  return group.order() == factorial(static_cast<unsigned>(group.degree()));
}

}  // namespace

unsigned subgroup_lattice_chain_length(const PermGroup& group, std::size_t lattice_cap) {
  if (group.order() > lattice_cap) {
    throw CapExceeded("group order " + to_string(group.order()) + " exceeds the lattice cap of " +
                      std::to_string(lattice_cap));
  }
  SubgroupLattice lattice(group, lattice_cap);
  return lattice.longest_chain(kSubgroupCap);
}

LenResult stat_len(const PermGroup& group, LenMode mode, std::size_t lattice_cap) {
  const Order order = group.order();
  if (mode == LenMode::exact_lattice) {
    return {subgroup_lattice_chain_length(group, lattice_cap), LenStatus::exact,
            LenMethod::lattice};
  }
  if (mode == LenMode::automatic) {
    if (is_cyclic(group)) {
      return {prime_factor_count(order), LenStatus::exact, LenMethod::cyclic_formula};
    }
    if (is_natural_symmetric(group)) {
      return {symmetric_chain_length(static_cast<unsigned>(group.degree())), LenStatus::exact,
              LenMethod::sym_formula};
    }
    if (order <= lattice_cap) {
      try {
        return {subgroup_lattice_chain_length(group, lattice_cap), LenStatus::exact,
                LenMethod::lattice};
      } catch (const CapExceeded&) {
        // Too many subgroups; fall through to the bound.
      }
    }
  }
  return {floor_log2(order), LenStatus::upper_bound, LenMethod::log2};
}

}  // namespace grpstat
