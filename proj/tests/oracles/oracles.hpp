#pragma once

// Brute-force reference implementations. They deliberately avoid stabilizer
// chains: groups are closed into explicit element lists, stabilizers are
// filtered element lists, and tuple equivalence is decided from union-find
// orbit tables on Omega^k.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

namespace oracle {

using Images = std::vector<std::uint32_t>;

inline Images compose(const Images& p, const Images& q) {
  Images r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[x] = q[p[x]];
  return r;
}

/// All elements by closure under right multiplication by generators.
inline std::vector<Images> close(std::size_t degree, const std::vector<Images>& gens,
                                 std::size_t cap = 200000) {
  Images id(degree);
  std::iota(id.begin(), id.end(), 0u);
  std::set<Images> seen{id};
  std::vector<Images> out{id};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : gens) {
      auto h = compose(out[i], g);
      if (seen.insert(h).second) {
        out.push_back(std::move(h));
        if (out.size() > cap) throw std::runtime_error("oracle: group too large");
      }
    }
  }
  return out;
}

class Group {
 public:
  Group(std::size_t degree, const std::vector<Images>& gens)
      : degree_(degree), elements_(close(degree, gens)) {}

  [[nodiscard]] std::size_t degree() const { return degree_; }
  [[nodiscard]] std::size_t order() const { return elements_.size(); }
  [[nodiscard]] const std::vector<Images>& elements() const { return elements_; }

  /// Number of elements fixing every point of `points`.
  [[nodiscard]] std::size_t stabilizer_size(const std::vector<std::uint32_t>& points) const {
    std::size_t n = 0;
    for (const auto& g : elements_) {
      bool fixes = true;
      for (auto p : points) fixes = fixes && g[p] == p;
      n += fixes;
    }
    return n;
  }

 private:
  std::size_t degree_;
  std::vector<Images> elements_;
};

namespace detail {

template <typename F>
void for_each_subset(std::size_t t, F&& f) {
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << t); ++mask) {
    std::vector<std::uint32_t> s;
    for (std::uint32_t x = 0; x < t; ++x)
      if (mask >> x & 1) s.push_back(x);
    f(s);
  }
}

inline bool independent(const Group& G, const std::vector<std::uint32_t>& s) {
  const auto whole = G.stabilizer_size(s);
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto rest = s;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (G.stabilizer_size(rest) == whole) return false;
  }
  return true;
}

}  // namespace detail

inline unsigned min_base(const Group& G) {
  unsigned best = static_cast<unsigned>(G.degree());
  detail::for_each_subset(G.degree(), [&](const std::vector<std::uint32_t>& s) {
    if (s.size() < best && G.stabilizer_size(s) == 1) best = static_cast<unsigned>(s.size());
  });
  return best;
}

inline unsigned height(const Group& G) {
  unsigned best = 0;
  detail::for_each_subset(G.degree(), [&](const std::vector<std::uint32_t>& s) {
    if (s.size() > best && detail::independent(G, s)) best = static_cast<unsigned>(s.size());
  });
  return best;
}

inline unsigned max_minimal_base(const Group& G) {
  unsigned best = 0;
  detail::for_each_subset(G.degree(), [&](const std::vector<std::uint32_t>& s) {
    if (s.size() > best && G.stabilizer_size(s) == 1 && detail::independent(G, s))
      best = static_cast<unsigned>(s.size());
  });
  return best;
}

/// Longest sequence with strictly shrinking stabilizers, ending at {1}.
inline unsigned max_irredundant(const Group& G) {
  unsigned best = 0;
  std::vector<std::uint32_t> seq;
  auto dfs = [&](auto&& self, std::size_t current) -> void {
    if (current == 1) {
      best = std::max(best, static_cast<unsigned>(seq.size()));
      return;
    }
    for (std::uint32_t x = 0; x < G.degree(); ++x) {
      seq.push_back(x);
      const auto next = G.stabilizer_size(seq);
      if (next < current) self(self, next);
      seq.pop_back();
    }
  };
  dfs(dfs, G.order());
  return best;
}

/// Orbit ids of k-tuples, tuples encoded base t (entry 0 least significant).
class TupleOrbits {
 public:
  TupleOrbits(std::size_t degree, const std::vector<Images>& gens, std::size_t k)
      : t_(degree), k_(k) {
    std::size_t n = 1;
    for (std::size_t i = 0; i < k; ++i) n *= t_;
    parent_.resize(n);
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    for (std::size_t code = 0; code < n; ++code) {
      for (const auto& g : gens) unite(code, image(code, g));
    }
    for (std::size_t code = 0; code < n; ++code) find(code);
  }

  [[nodiscard]] std::size_t encode(const std::vector<std::uint32_t>& tuple) const {
    std::size_t code = 0;
    for (std::size_t i = tuple.size(); i-- > 0;) code = code * t_ + tuple[i];
    return code;
  }
  /// Whether `tuple` is the smallest code in its orbit.
  [[nodiscard]] bool is_orbit_minimum(const std::vector<std::uint32_t>& tuple) const {
    const std::size_t code = encode(tuple);
    return parent_[code] == code;
  }
  [[nodiscard]] bool same(const std::vector<std::uint32_t>& a,
                          const std::vector<std::uint32_t>& b) const {
    return parent_[encode(a)] == parent_[encode(b)];
  }

 private:
  std::size_t image(std::size_t code, const Images& g) const {
    std::size_t out = 0, scale = 1;
    for (std::size_t i = 0; i < k_; ++i) {
      out += g[code % t_] * scale;
      code /= t_;
      scale *= t_;
    }
    return out;
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

  std::size_t t_, k_;
  std::vector<std::size_t> parent_;
};

/// Relational complexity over tuples of length <= max_len, repeats allowed.
///
/// RC is the least r with I ~_r J => I ~_n J for all n. Any failure
/// (I ~_r J, not I ~_n J) contains a failing index set S of least size m > r,
/// on which every (m-1)-subset is equivalent; conversely such a pair of
/// length m shows r = m - 1 fails. So RC = max(1, largest such m).
/// Counterexamples map to counterexamples under G, so I runs over one tuple
/// per orbit (the smallest code); J is grown entry by entry keeping its prefix in the
/// orbit of I's prefix (forced, since prefixes of length < m are subtuples).
inline unsigned relational_complexity(std::size_t degree, const std::vector<Images>& gens,
                                      std::size_t max_len) {
  const std::size_t t = degree;
  std::vector<TupleOrbits> orbits;
  orbits.emplace_back(t, gens, 0);
  for (std::size_t k = 1; k <= max_len; ++k) orbits.emplace_back(t, gens, k);

  auto equivalent_on = [&](const std::vector<std::uint32_t>& I, const std::vector<std::uint32_t>& J,
                           const std::vector<std::size_t>& idx) {
    std::vector<std::uint32_t> a, b;
    for (auto i : idx) {
      a.push_back(I[i]);
      b.push_back(J[i]);
    }
    return orbits[idx.size()].same(a, b);
  };

  unsigned best = 1;
  for (std::size_t m = 2; m <= max_len; ++m) {
    bool found = false;
    std::vector<std::uint32_t> I(m, 0);
    while (!found) {
      std::vector<std::uint32_t> J;
      const bool representative = orbits[m].is_orbit_minimum(I);
      auto grow = [&](auto&& self) -> void {
        if (found) return;
        if (J.size() == m) {
          std::vector<std::size_t> all(m);
          std::iota(all.begin(), all.end(), std::size_t{0});
          if (equivalent_on(I, J, all)) return;
          for (std::size_t skip = 0; skip + 1 < m; ++skip) {  // skip = m-1 is the prefix
            auto idx = all;
            idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(skip));
            if (!equivalent_on(I, J, idx)) return;
          }
          found = true;
          return;
        }
        for (std::uint32_t y = 0; y < t; ++y) {
          J.push_back(y);
          std::vector<std::size_t> prefix(J.size());
          std::iota(prefix.begin(), prefix.end(), std::size_t{0});
          if (J.size() == m || equivalent_on(I, J, prefix)) self(self);
          J.pop_back();
        }
      };
      if (representative) grow(grow);
      // next I in base-t counting order
      std::size_t i = 0;
      while (i < m && ++I[i] == t) I[i++] = 0;
      if (i == m) break;
    }
    if (found) best = static_cast<unsigned>(m);
  }
  return best;
}

/// Longest chain of subgroups, from the full subgroup lattice. Every
/// subgroup is reached from {1} by adjoining one element at a time, so a
/// breadth-first closure finds them all.
inline unsigned chain_length(const Group& G) {
  const auto& el = G.elements();
  const std::size_t n = el.size();
  std::map<Images, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[el[i]] = i;
  std::vector<std::vector<std::size_t>> mul(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mul[i][j] = index.at(compose(el[i], el[j]));

  using Set = std::vector<bool>;
  auto close_with = [&](const Set& h, std::size_t g) {
    Set s = h;
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i)
      if (s[i]) members.push_back(i);
    if (!s[g]) {
      s[g] = true;
      members.push_back(g);
    }
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = 0; b <= a; ++b) {
        for (auto p : {mul[members[a]][members[b]], mul[members[b]][members[a]]}) {
          if (!s[p]) {
            s[p] = true;
            members.push_back(p);
          }
        }
      }
    }
    return s;
  };

  Set trivial(n, false);
  trivial[0] = true;  // close() lists the identity first
  std::set<Set> seen{trivial};
  std::vector<Set> subgroups{trivial};
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    for (std::size_t g = 0; g < n; ++g) {
      if (subgroups[i][g]) continue;
      auto s = close_with(subgroups[i], g);
      if (seen.insert(s).second) subgroups.push_back(std::move(s));
    }
  }
  std::sort(subgroups.begin(), subgroups.end(), [](const Set& a, const Set& b) {
    return std::count(a.begin(), a.end(), true) < std::count(b.begin(), b.end(), true);
  });
  std::vector<unsigned> longest(subgroups.size(), 0);  // longest chain ending here
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      bool contained = subgroups[j] != subgroups[i];
      for (std::size_t x = 0; x < n && contained; ++x)
        contained = !subgroups[j][x] || subgroups[i][x];
      if (contained) longest[i] = std::max(longest[i], longest[j] + 1);
    }
  }
  return longest.back();
}

}  // namespace oracle
