#include "grpstat/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>
#include <unordered_set>

#include "grpstat/error.hpp"

namespace grpstat {

// ---------------------------------------------------------------------------
// SchreierTree

SchreierTree::SchreierTree(std::size_t degree, Point root)
    : root_(root), orbit_{root}, label_(degree, kAbsent), parent_(degree, 0) {
  label_[root] = kRoot;
  parent_[root] = root;
}

void SchreierTree::extend(std::span<const Permutation> gens) {
  for (std::size_t i = 0; i < orbit_.size(); ++i) {
    const Point x = orbit_[i];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const Point y = gens[j](x);
      if (label_[y] == kAbsent) {
        label_[y] = static_cast<std::int32_t>(j);
        parent_[y] = x;
        orbit_.push_back(y);
      }
    }
  }
}

Permutation SchreierTree::representative(
    Point x, std::span<const Permutation> gens) const {
  std::vector<std::int32_t> path;
  for (Point cur = x; label_[cur] != kRoot; cur = parent_[cur]) {
    path.push_back(label_[cur]);
  }
  Permutation u(label_.size());
  for (auto it = path.rbegin(); it != path.rend(); ++it) u *= gens[*it];
  return u;
}

void SchreierTree::strip_in_place(Permutation& h, Point x,
                                  std::span<const Permutation> inv_gens) const {
  for (Point cur = x; label_[cur] != kRoot; cur = parent_[cur]) {
    h *= inv_gens[label_[cur]];
  }
}

void StabilizerLevel::add_generator(const Permutation& g) {
  gens.push_back(g);
  inv_gens.push_back(g.inverse());
  tree.extend(gens);
}

// ---------------------------------------------------------------------------
// StabilizerChain

namespace {

bool fixes_all(const Permutation& g, const std::vector<StabilizerLevel>& levels,
               std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    if (g(levels[i].base) != levels[i].base) return false;
  }
  return true;
}

}  // namespace

void StabilizerChain::append_level(Point base) {
  StabilizerLevel level;
  level.base = base;
  level.tree = SchreierTree(degree_, base);
  levels_.push_back(std::move(level));
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> b;
  b.reserve(levels_.size());
  for (const auto& level : levels_) b.push_back(level.base);
  return b;
}

std::span<const Permutation> StabilizerChain::strong_generators() const {
  if (levels_.empty()) return {};
  return levels_.front().gens;
}

Order StabilizerChain::order() const {
  Order result = 1;
  for (const auto& level : levels_) result *= level.tree.size();
  return result;
}

unsigned StabilizerChain::order_prime_factor_count() const {
  unsigned count = 0;
  for (const auto& level : levels_) {
    count += prime_factor_count(static_cast<std::uint64_t>(level.tree.size()));
  }
  return count;
}

std::pair<Permutation, std::size_t> StabilizerChain::strip(
    Permutation g, std::size_t from_level) const {
  for (std::size_t i = from_level; i < levels_.size(); ++i) {
    const auto& level = levels_[i];
    const Point x = g(level.base);
    if (!level.tree.contains(x)) return {std::move(g), i};
    level.tree.strip_in_place(g, x, level.inv_gens);
  }
  return {std::move(g), levels_.size()};
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  auto [residue, level] = strip(g);
  return level == levels_.size() && residue.is_identity();
}

Permutation StabilizerChain::random_element(std::mt19937_64& rng) const {
  Permutation g(degree_);
  for (std::size_t i = levels_.size(); i-- > 0;) {
    const auto& level = levels_[i];
    std::uniform_int_distribution<std::size_t> pick(0, level.tree.size() - 1);
    const Point x = level.tree.orbit()[pick(rng)];
    g *= level.tree.representative(x, level.gens);
  }
  return g;
}

StabilizerChain StabilizerChain::tail() const {
  StabilizerChain result(degree_);
  if (levels_.size() > 1) {
    result.levels_.assign(levels_.begin() + 1, levels_.end());
  }
  return result;
}

StabilizerChain StabilizerChain::schreier_sims(std::size_t degree,
                                               std::span<const Permutation> gens,
                                               std::span<const Point> base_prefix) {
  StabilizerChain chain(degree);
  std::vector<Permutation> nontrivial;
  for (const auto& g : gens) {
    if (g.degree() != degree) {
      throw InvalidArgument("generator degree does not match group degree");
    }
    if (!g.is_identity()) nontrivial.push_back(g);
  }
  if (nontrivial.empty()) return chain;

  for (Point b : base_prefix) {
    if (b >= degree) throw InvalidArgument("base point out of range");
    chain.append_level(b);
  }
  for (const auto& g : nontrivial) {
    if (fixes_all(g, chain.levels_, chain.levels_.size())) {
      chain.append_level(g.first_moved_point());
    }
  }
  for (std::size_t l = 0; l < chain.levels_.size(); ++l) {
    auto& level = chain.levels_[l];
    for (const auto& g : nontrivial) {
      if (fixes_all(g, chain.levels_, l)) {
        level.gens.push_back(g);
        level.inv_gens.push_back(g.inverse());
      }
    }
    level.tree.extend(level.gens);
  }

  // checked[l][beta] = number of level-l generators x for which the Schreier
  // generator (beta, x) has been sifted. Trees only ever grow, so a pair that
  // sifted once keeps sifting.
  std::vector<std::vector<std::uint32_t>> checked;
  auto checked_row = [&](std::size_t l) -> std::vector<std::uint32_t>& {
    if (checked.size() <= l) checked.resize(l + 1);
    if (checked[l].empty()) checked[l].assign(degree, 0);
    return checked[l];
  };

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(chain.levels_.size()) - 1;
  while (i >= 0) {
    const auto li = static_cast<std::size_t>(i);
    bool jumped = false;
    for (std::size_t pos = 0; pos < chain.levels_[li].tree.size() && !jumped; ++pos) {
      auto& row = checked_row(li);
      const Point beta = chain.levels_[li].tree.orbit()[pos];
      if (row[beta] >= chain.levels_[li].gens.size()) continue;
      const Permutation u_beta =
          chain.levels_[li].tree.representative(beta, chain.levels_[li].gens);
      for (std::uint32_t xi = row[beta]; xi < chain.levels_[li].gens.size(); ++xi) {
        row[beta] = xi + 1;
        const auto& level = chain.levels_[li];
        const Permutation& x = level.gens[xi];
        Permutation h = u_beta * x;
        level.tree.strip_in_place(h, x(beta), level.inv_gens);
        if (h.is_identity()) continue;
        auto [residue, j] = chain.strip(std::move(h), li + 1);
        if (residue.is_identity()) continue;
        if (j == chain.levels_.size()) {
          chain.append_level(residue.first_moved_point());
        }
        for (std::size_t l = li + 1; l <= j; ++l) {
          chain.levels_[l].add_generator(residue);
        }
        i = static_cast<std::ptrdiff_t>(j);
        jumped = true;
        break;
      }
    }
    if (!jumped) --i;
  }
  return chain;
}

StabilizerChain StabilizerChain::with_base_prefix(const StabilizerChain& source,
                                                  std::span<const Point> prefix,
                                                  std::uint64_t seed) {
  const Order target = source.order();
  StabilizerChain chain(source.degree_);
  if (target == 1) return chain;
  for (Point b : prefix) chain.append_level(b);

  std::mt19937_64 rng(seed);
  // The expected number of random elements is a small multiple of the base
  // length; the cap only guards against a malformed source chain.
  const std::size_t max_rounds = 64 * (source.length() + prefix.size() + 8);
  std::size_t rounds = 0;
  while (chain.order() < target) {
    if (++rounds > max_rounds) {
      return schreier_sims(source.degree_, source.strong_generators(), prefix);
    }
    auto [residue, j] = chain.strip(source.random_element(rng));
    if (residue.is_identity()) continue;
    if (j == chain.levels_.size()) chain.append_level(residue.first_moved_point());
    for (std::size_t l = 0; l <= j; ++l) chain.levels_[l].add_generator(residue);
  }
  return chain;
}

// ---------------------------------------------------------------------------
// PermGroup

struct PermGroup::Lazy {
  std::once_flag once;
  StabilizerChain chain;
};

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), lazy_(std::make_shared<Lazy>()) {
  if (degree == 0) throw InvalidArgument("group degree must be at least 1");
  for (auto& g : generators) {
    if (g.degree() != degree) {
      throw InvalidArgument("generator degree does not match group degree");
    }
    if (!g.is_identity()) gens_.push_back(std::move(g));
  }
}

PermGroup PermGroup::from_chain(StabilizerChain chain) {
  PermGroup group(chain.degree(), {});
  auto strong = chain.strong_generators();
  group.gens_.assign(strong.begin(), strong.end());
  std::call_once(group.lazy_->once,
                 [&] { group.lazy_->chain = std::move(chain); });
  return group;
}

PermGroup PermGroup::symmetric(std::size_t degree) {
  std::vector<Permutation> gens;
  if (degree >= 2) {
    gens.push_back(Permutation::from_cycles(degree, {{0, 1}}));
    std::vector<Point> cycle(degree);
    std::iota(cycle.begin(), cycle.end(), Point{0});
    gens.push_back(Permutation::from_cycles(degree, {cycle}));
  }
  return {degree, std::move(gens)};
}

const StabilizerChain& PermGroup::chain() const {
  std::call_once(lazy_->once, [this] {
    lazy_->chain = StabilizerChain::schreier_sims(degree_, gens_);
  });
  return lazy_->chain;
}

bool PermGroup::contains(const Permutation& g) const {
  return chain().contains(g);
}

PermGroup PermGroup::stabilizer(Point x) const {
  if (x >= degree_) throw InvalidArgument("stabilizer point out of range");
  const auto& c = chain();
  bool fixed = true;
  for (const auto& g : c.strong_generators()) {
    if (g(x) != x) {
      fixed = false;
      break;
    }
  }
  if (fixed) return *this;
  if (c.levels().front().base == x) return from_chain(c.tail());
  const Point prefix[] = {x};
  const std::uint64_t seed = 0x9E3779B97F4A7C15ULL ^ (std::uint64_t{x} << 20) ^ degree_;
  return from_chain(StabilizerChain::with_base_prefix(c, prefix, seed).tail());
}

PermGroup PermGroup::pointwise_stabilizer(std::span<const Point> points) const {
  PermGroup result = *this;
  for (Point x : points) {
    if (x >= degree_) throw InvalidArgument("stabilizer point out of range");
    result = result.stabilizer(x);
  }
  return result;
}

std::vector<Point> PermGroup::orbit(Point x) const {
  if (x >= degree_) throw InvalidArgument("orbit point out of range");
  std::vector<bool> seen(degree_, false);
  std::vector<Point> out{x};
  seen[x] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : gens_) {
      const Point y = g(out[i]);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  }
  return out;
}

std::size_t PermGroup::orbit_size(Point x) const { return orbit(x).size(); }

PermGroup join(const PermGroup& group, std::span<const Permutation> extra) {
  std::vector<Permutation> gens = group.generators();
  gens.insert(gens.end(), extra.begin(), extra.end());
  return {group.degree(), std::move(gens)};
}

// ---------------------------------------------------------------------------
// Orbits and blocks

std::vector<Point> orbit_representatives_map(std::size_t degree,
                                             std::span<const Permutation> gens) {
  std::vector<Point> rep(degree, static_cast<Point>(degree));
  for (Point start = 0; start < degree; ++start) {
    if (rep[start] != degree) continue;
    rep[start] = start;
    std::vector<Point> stack{start};
    while (!stack.empty()) {
      const Point x = stack.back();
      stack.pop_back();
      for (const auto& g : gens) {
        const Point y = g(x);
        if (rep[y] == degree) {
          rep[y] = start;
          stack.push_back(y);
        }
      }
    }
  }
  return rep;
}

std::vector<std::vector<Point>> orbits(std::size_t degree,
                                       std::span<const Permutation> gens) {
  const auto rep = orbit_representatives_map(degree, gens);
  std::vector<std::vector<Point>> out;
  std::vector<std::size_t> slot(degree, degree);
  for (Point x = 0; x < degree; ++x) {
    if (rep[x] == x) {
      slot[x] = out.size();
      out.emplace_back();
    }
    out[slot[rep[x]]].push_back(x);
  }
  return out;
}

std::vector<std::vector<Point>> orbits(const PermGroup& group) {
  return orbits(group.degree(), group.generators());
}

OrbitTable orbit_table(std::size_t degree, std::span<const Permutation> gens) {
  OrbitTable table;
  table.rep = orbit_representatives_map(degree, gens);
  table.size.assign(degree, 0);
  for (Point x = 0; x < degree; ++x) ++table.size[table.rep[x]];
  for (Point x = 0; x < degree; ++x) table.size[x] = table.size[table.rep[x]];
  return table;
}

bool is_transitive(const PermGroup& group) {
  return group.orbit_size(0) == group.degree();
}

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a < b) std::swap(a, b);
    parent[a] = b;
    return true;
  }
  std::vector<std::size_t> parent;
};

}  // namespace

BlockSystem minimal_block_system(const PermGroup& group, Point a, Point b) {
  const std::size_t n = group.degree();
  if (a >= n || b >= n) throw InvalidArgument("block point out of range");
  UnionFind uf(n);
  std::deque<std::pair<Point, Point>> queue;
  if (uf.unite(a, b)) queue.emplace_back(a, b);
  while (!queue.empty()) {
    auto [x, y] = queue.front();
    queue.pop_front();
    for (const auto& g : group.generators()) {
      const auto u = uf.find(g(x));
      const auto v = uf.find(g(y));
      if (u != v) {
        uf.unite(u, v);
        queue.emplace_back(static_cast<Point>(u), static_cast<Point>(v));
      }
    }
  }
  BlockSystem blocks;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto r = uf.find(x);
    if (slot[r] == n) {
      slot[r] = blocks.size();
      blocks.emplace_back();
    }
    blocks[slot[r]].push_back(static_cast<Point>(x));
  }
  return blocks;
}

std::optional<BlockSystem> nontrivial_block_system(const PermGroup& group) {
  if (!is_transitive(group)) {
    throw InvalidArgument("block systems are only computed for transitive groups");
  }
  const std::size_t n = group.degree();
  if (n <= 2) return std::nullopt;
  // Systems generated by (0, b) and (0, b^h) with h in G_0 are conjugate, so
  // one representative per G_0-orbit suffices.
  const PermGroup stab = group.stabilizer(0);
  const auto rep = orbit_representatives_map(n, stab.generators());
  for (Point b = 1; b < n; ++b) {
    if (rep[b] != b) continue;
    auto blocks = minimal_block_system(group, 0, b);
    if (blocks.size() > 1) return blocks;
  }
  return std::nullopt;
}

bool is_primitive(const PermGroup& group) {
  if (group.degree() < 2) return false;
  if (!is_transitive(group)) return false;
  return !nontrivial_block_system(group).has_value();
}

StabilizerChainRecord chain_orders(const PermGroup& group,
                                   std::span<const Point> sequence) {
  StabilizerChainRecord record;
  record.points.assign(sequence.begin(), sequence.end());
  PermGroup current = group;
  record.orders.push_back(current.order());
  for (Point x : sequence) {
    current = current.stabilizer(x);
    record.orders.push_back(current.order());
  }
  record.irredundant = true;
  for (std::size_t i = 1; i < record.orders.size(); ++i) {
    if (!(record.orders[i] < record.orders[i - 1])) record.irredundant = false;
  }
  record.is_base = record.orders.back() == 1;
  return record;
}

std::vector<Permutation> enumerate_elements(const PermGroup& group,
                                            std::size_t cap) {
  if (group.order() > cap) {
    throw CapExceeded("group order " + to_string(group.order()) +
                      " exceeds element enumeration cap");
  }
  std::vector<Permutation> elements{Permutation(group.degree())};
  std::unordered_set<Permutation, PermutationHash> seen{elements.front()};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& g : group.generators()) {
      Permutation h = elements[i] * g;
      if (seen.insert(h).second) elements.push_back(std::move(h));
    }
  }
  return elements;
}

}  // namespace grpstat
