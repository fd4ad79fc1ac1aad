#include "grpstat/rc.hpp"

#include <algorithm>
#include <numeric>

#include "grpstat/error.hpp"
#include "search_util.hpp"

namespace grpstat {

std::string to_string(RCStatus status) {
  return status == RCStatus::exact ? "exact" : "interval";
}

namespace {

// A word in the generators carrying `from` to `to`, or nullopt.
std::optional<Permutation> orbit_transversal(const PermGroup& K, Point from, Point to) {
  const std::size_t t = K.degree();
  if (from == to) return Permutation(t);
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> via(t, kNone);
  std::vector<Point> parent(t, 0);
  std::vector<bool> seen(t, false);
  std::vector<Point> queue{from};
  seen[from] = true;
  const auto& gens = K.generators();
  for (std::size_t head = 0; head < queue.size() && !seen[to]; ++head) {
    const Point x = queue[head];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Point y = gens[i](x);
      if (seen[y]) continue;
      seen[y] = true;
      via[y] = i;
      parent[y] = x;
      queue.push_back(y);
    }
  }
  if (!seen[to]) return std::nullopt;
  std::vector<std::size_t> word;
  for (Point y = to; y != from; y = parent[y]) word.push_back(via[y]);
  Permutation g(t);
  for (auto it = word.rbegin(); it != word.rend(); ++it) g *= gens[*it];
  return g;
}

}  // namespace

std::optional<Permutation> transporter(const PermGroup& group, std::span<const Point> I,
                                       std::span<const Point> J) {
  if (I.size() != J.size()) throw InvalidArgument("transporter: tuples differ in length");
  const std::size_t t = group.degree();
  for (std::size_t k = 0; k < I.size(); ++k) {
    if (I[k] >= t || J[k] >= t) throw InvalidArgument("transporter: point out of range");
  }
  // c maps I_1..I_{k-1} onto J_1..J_{k-1}; so does every element of K c.
  Permutation c(t);
  PermGroup K = group;
  for (std::size_t k = 0; k < I.size(); ++k) {
    const Point target = c.inverse()(J[k]);
    auto v = orbit_transversal(K, I[k], target);
    if (!v) return std::nullopt;
    c = *v * c;
    if (k + 1 < I.size()) K = K.stabilizer(I[k]);
  }
  return c;
}

bool r_equivalent(const PermGroup& group, std::span<const Point> I, std::span<const Point> J,
                  unsigned r) {
  if (I.size() != J.size()) throw InvalidArgument("r_equivalent: tuples differ in length");
  if (r < 1 || r > I.size()) {
    throw InvalidArgument("r_equivalent: r must lie in [1, " + std::to_string(I.size()) + "]");
  }
  const std::size_t n = I.size();
  std::vector<std::size_t> pick(r);
  std::iota(pick.begin(), pick.end(), std::size_t{0});
  std::vector<Point> sub_i(r);
  std::vector<Point> sub_j(r);
  while (true) {
    for (unsigned k = 0; k < r; ++k) {
      sub_i[k] = I[pick[k]];
      sub_j[k] = J[pick[k]];
    }
    if (!transporter(group, sub_i, sub_j)) return false;
    // next r-subset of {0..n-1} in lexicographic order
    std::size_t k = r;
    while (k > 0 && pick[k - 1] == n - r + (k - 1)) --k;
    if (k == 0) return true;
    ++pick[k - 1];
    for (std::size_t i = k; i < r; ++i) pick[i] = pick[i - 1] + 1;
  }
}

unsigned rc_upper(const StatCertificate& height) {
  if (height.kind != StatKind::max_independent) {
    throw InvalidArgument("rc_upper: certificate is not a height certificate");
  }
  return height.upper + 1;
}

unsigned rc_upper(const PermGroup& group, const SearchOptions& options) {
  return rc_upper(stat_H(group, options));
}

bool verify_witness(const PermGroup& group, const TupleWitness& w) {
  if (w.I.size() != w.J.size() || w.n != w.I.size() || w.r < 1 || w.r >= w.n) return false;
  return r_equivalent(group, w.I, w.J, w.r) && !transporter(group, w.I, w.J);
}

RCResult rc_exact(const PermGroup& group, const RCOptions& options) {
  RCResult result;
  const auto height = stat_H(group, SearchOptions{options.node_budget});
  result.height = height.value;
  result.height_exact = height.exact();
  result.upper = rc_upper(height);
  const std::size_t n_cap = options.n_cap.value_or(group.degree());

  if (group.is_trivial()) {
    result.value = result.lower = result.upper = 1;
    return result;
  }

  // Length 2: a != b in one orbit, I = (a, b), J = (a, a).
  {
    Point a = 0;
    while (group.orbit_size(a) == 1) ++a;
    const auto orb = group.orbit(a);
    const Point b = *std::min_element(orb.begin(), orb.end(), [&](Point u, Point v) {
      return (u == a) < (v == a) || ((u == a) == (v == a) && u < v);
    });
    result.lower = 2;
    if (n_cap >= 2) result.witness = TupleWitness{{a, b}, {a, a}, 1, 2};
  }

  result.distinct_reduction_used = true;
  bool truncated = n_cap < 2;
  detail::NodeCounter counter(options.node_budget);
  const std::size_t t = group.degree();

  // Tries every K-orbit of x outside L; returns true when a witness of
  // length |L| + 1 was recorded.
  auto try_node = [&](const detail::IndependentNode& node) {
    const std::size_t m = node.lambda.size() + 1;
    const OrbitTable orbits_k = orbit_table(t, node.K.generators());
    std::vector<OrbitTable> orbits_loo;
    for (const auto& Ka : node.leave_one_out) orbits_loo.push_back(orbit_table(t, Ka.generators()));
    for (Point x = 0; x < t; ++x) {
      if (orbits_k.rep[x] != x) continue;
      if (std::find(node.lambda.begin(), node.lambda.end(), x) != node.lambda.end()) continue;
      // y must share x's orbit under every G_(L\a) but not under K.
      for (Point y = 0; y < t; ++y) {
        if (orbits_k.rep[y] == orbits_k.rep[x]) continue;
        bool all = true;
        for (const auto& o : orbits_loo) {
          if (o.rep[y] != o.rep[x]) {
            all = false;
            break;
          }
        }
        if (!all) continue;
        TupleWitness w;
        w.I.assign(node.lambda.begin(), node.lambda.end());
        w.J = w.I;
        w.I.push_back(x);
        w.J.push_back(y);
        w.r = static_cast<unsigned>(m - 1);
        w.n = static_cast<unsigned>(m);
        result.lower = w.n;
        result.witness = std::move(w);
        return true;
      }
    }
    return false;
  };

  // Descendants of L reach at most |L| + Omega(|K|) points, hence witnesses
  // of length at most that plus one.
  auto worth_expanding = [&](const detail::IndependentNode& node) {
    return node.lambda.size() + detail::omega(node.K) + 1 > result.lower;
  };

  bool complete = true;
  try {
    detail::walk_independent_sets(
        group, counter,
        [&](const detail::IndependentNode& node) {
          const std::size_t m = node.lambda.size() + 1;
          if (m >= 3 && m > result.lower) {
            if (m > n_cap) {
              truncated = true;
              return false;
            }
            try_node(node);
          }
          return worth_expanding(node);
        },
        worth_expanding);
  } catch (const detail::BudgetExhausted&) {
    complete = false;
  }
  result.nodes = counter.count();
  result.value = result.lower;
  result.prefix_exceeds_height = result.witness && result.witness->n - 1 > height.upper;
  if (complete && !truncated) {
    result.status = RCStatus::exact;
    result.upper = result.lower;
  } else {
    result.status = RCStatus::interval;
  }
  return result;
}

}  // namespace grpstat
