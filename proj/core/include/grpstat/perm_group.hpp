#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "grpstat/order.hpp"
#include "grpstat/perm.hpp"

namespace grpstat {

/// Orbit of a root point under a generator list, stored as a breadth-first
/// spanning tree so coset representatives can be rebuilt on demand.
class SchreierTree {
 public:
  SchreierTree() = default;
  SchreierTree(std::size_t degree, Point root);

  /// Grows the tree with every generator in `gens`. Existing tree edges are
  /// kept, so representatives of points already in the orbit do not change.
  void extend(std::span<const Permutation> gens);

  [[nodiscard]] Point root() const { return root_; }
  [[nodiscard]] bool contains(Point x) const { return label_[x] != kAbsent; }
  [[nodiscard]] const std::vector<Point>& orbit() const { return orbit_; }
  [[nodiscard]] std::size_t size() const { return orbit_.size(); }

  /// Representative u with root^u = x. Requires contains(x).
  [[nodiscard]] Permutation representative(
      Point x, std::span<const Permutation> gens) const;

  /// h <- h * u_x^{-1}, so that afterwards h maps root to itself when x was
  /// the image of root under h.
  void strip_in_place(Permutation& h, Point x,
                      std::span<const Permutation> inv_gens) const;

 private:
  static constexpr std::int32_t kAbsent = -1;
  static constexpr std::int32_t kRoot = -2;

  Point root_ = 0;
  std::vector<Point> orbit_;
  std::vector<std::int32_t> label_;  // generator index that reached the point
  std::vector<Point> parent_;
};

/// One level of a base and strong generating set.
struct StabilizerLevel {
  Point base = 0;
  std::vector<Permutation> gens;      // strong generators fixing earlier base points
  std::vector<Permutation> inv_gens;  // inverses, same order
  SchreierTree tree;                  // fundamental orbit of `base`

  void add_generator(const Permutation& g);
};

/// A complete base and strong generating set for a permutation group.
class StabilizerChain {
 public:
  StabilizerChain() = default;
  explicit StabilizerChain(std::size_t degree) : degree_(degree) {}

  /// Deterministic Schreier-Sims. Base points are the given prefix followed by
  /// smallest moved points; Schreier generators are processed in a fixed order.
  static StabilizerChain schreier_sims(std::size_t degree,
                                       std::span<const Permutation> gens,
                                       std::span<const Point> base_prefix = {});

  /// Builds a chain for the group described by `source` whose base starts with
  /// `prefix`, using random elements of `source` until the fundamental-orbit
  /// product reaches |source|. Exact: the orbit product can only equal the
  /// group order once the chain is complete.
  static StabilizerChain with_base_prefix(const StabilizerChain& source,
                                          std::span<const Point> prefix,
                                          std::uint64_t seed);

  [[nodiscard]] std::size_t degree() const { return degree_; }
  [[nodiscard]] std::size_t length() const { return levels_.size(); }
  [[nodiscard]] const std::vector<StabilizerLevel>& levels() const {
    return levels_;
  }
  [[nodiscard]] std::vector<Point> base() const;

  /// Strong generators of the whole group (level 0 generators).
  [[nodiscard]] std::span<const Permutation> strong_generators() const;

  [[nodiscard]] Order order() const;

  /// Sum of prime_factor_count over fundamental orbit lengths, which equals
  /// the number of prime factors of the group order.
  [[nodiscard]] unsigned order_prime_factor_count() const;

  /// Sifts g. Returns the residue and the level where sifting stopped
  /// (length() when it passed through every level).
  [[nodiscard]] std::pair<Permutation, std::size_t> strip(
      Permutation g, std::size_t from_level = 0) const;

  [[nodiscard]] bool contains(const Permutation& g) const;

  /// Uniformly random group element.
  [[nodiscard]] Permutation random_element(std::mt19937_64& rng) const;

  /// Chain of the stabilizer of the first base point (drops level 0).
  [[nodiscard]] StabilizerChain tail() const;

 private:
  void append_level(Point base);

  std::size_t degree_ = 0;
  std::vector<StabilizerLevel> levels_;
};

/// A permutation group given by generators, with a lazily built stabilizer
/// chain. Copies share the chain; once built it is immutable, so a group can
/// be read from several threads.
class PermGroup {
 public:
  PermGroup() : PermGroup(1, {}) {}
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  /// Group whose chain is already known (e.g. a stabilizer).
  static PermGroup from_chain(StabilizerChain chain);

  static PermGroup trivial(std::size_t degree) { return {degree, {}}; }
  static PermGroup symmetric(std::size_t degree);

  [[nodiscard]] std::size_t degree() const { return degree_; }
  [[nodiscard]] const std::vector<Permutation>& generators() const {
    return gens_;
  }

  [[nodiscard]] const StabilizerChain& chain() const;
  [[nodiscard]] Order order() const { return chain().order(); }
  [[nodiscard]] bool is_trivial() const { return chain().length() == 0; }
  [[nodiscard]] bool contains(const Permutation& g) const;

  /// G_x, returned with its own stabilizer chain. Returns *this when x is a
  /// fixed point. Throws InvalidArgument when x is out of range.
  [[nodiscard]] PermGroup stabilizer(Point x) const;

  /// G_(points). The stabilizer of the empty set is the group itself.
  [[nodiscard]] PermGroup pointwise_stabilizer(std::span<const Point> points) const;

  [[nodiscard]] std::vector<Point> orbit(Point x) const;
  [[nodiscard]] std::size_t orbit_size(Point x) const;

 private:
  struct Lazy;

  std::size_t degree_ = 1;
  std::vector<Permutation> gens_;
  std::shared_ptr<Lazy> lazy_;
};

/// Group generated by `group`'s generators together with `extra`.
PermGroup join(const PermGroup& group, std::span<const Permutation> extra);

/// Orbits as sorted point lists, ordered by smallest element.
std::vector<std::vector<Point>> orbits(std::size_t degree,
                                       std::span<const Permutation> gens);
std::vector<std::vector<Point>> orbits(const PermGroup& group);

/// For each point the smallest element of its orbit.
std::vector<Point> orbit_representatives_map(std::size_t degree,
                                             std::span<const Permutation> gens);

/// Orbit representative (smallest element) and orbit length of every point.
struct OrbitTable {
  std::vector<Point> rep;
  std::vector<std::uint32_t> size;
};
OrbitTable orbit_table(std::size_t degree, std::span<const Permutation> gens);

bool is_transitive(const PermGroup& group);

/// A block system as blocks sorted by smallest element.
using BlockSystem = std::vector<std::vector<Point>>;

/// Finest block system in which `a` and `b` share a block (transitive groups).
BlockSystem minimal_block_system(const PermGroup& group, Point a, Point b);

/// Some nontrivial block system, or nullopt when none exists. Requires a
/// transitive group.
std::optional<BlockSystem> nontrivial_block_system(const PermGroup& group);

/// Transitive with only trivial block systems. Degree 1 counts as not
/// primitive; degree 2 transitive groups are primitive.
bool is_primitive(const PermGroup& group);

/// Orders along G >= G_{w1} >= G_{w1,w2} >= ...
struct StabilizerChainRecord {
  std::vector<Point> points;
  std::vector<Order> orders;  // orders.size() == points.size() + 1
  bool irredundant = false;  // every inclusion strict
  bool is_base = false;      // final order is 1
};

StabilizerChainRecord chain_orders(const PermGroup& group,
                                   std::span<const Point> sequence);

/// Every element of a (small) group, identity first then breadth-first order.
std::vector<Permutation> enumerate_elements(const PermGroup& group,
                                            std::size_t cap);

}  // namespace grpstat
