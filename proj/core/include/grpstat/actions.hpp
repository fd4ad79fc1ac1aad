#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grpstat/field.hpp"
#include "grpstat/matrix.hpp"
#include "grpstat/order.hpp"
#include "grpstat/perm_group.hpp"

namespace grpstat {

/// Claims made by a constructor about the group it built. Absent fields are
/// not claimed; present ones are checked by `check_meta`.
struct ActionMeta {
  std::optional<Order> order;
  std::optional<bool> transitive;
  std::optional<bool> primitive;
};

/// A concrete permutation action: generators on {0, ..., degree-1} together
/// with a human-readable label for every point.
struct ActionInstance {
  std::string name;
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::vector<std::string> labels;
  ActionMeta meta;

  [[nodiscard]] PermGroup group() const { return {degree, generators}; }
};

/// Throws Error describing the first claim in `instance.meta` that the
/// generated group does not satisfy.
void check_meta(const ActionInstance& instance);

/// Size guard shared by every enumerating constructor.
inline constexpr std::size_t kDefaultDegreeCap = 20000;

enum class SymVariant { sym, alt };

ActionInstance act_natural(std::size_t n, SymVariant variant);

/// Action on k-subsets of {0, ..., n-1}, points ordered lexicographically.
ActionInstance act_k_subsets(std::size_t n, std::size_t k, SymVariant variant,
                             std::size_t cap = kDefaultDegreeCap);

/// Action of Sym(ab) or Alt(ab) on partitions of {0, ..., ab-1} into a blocks
/// of size b.
ActionInstance act_partitions(std::size_t a, std::size_t b, SymVariant variant,
                              std::size_t cap = kDefaultDegreeCap);

/// Product action of inner wr top on inner-points^r. `top` holds generators
/// of a subgroup of Sym(r); when absent the full Sym(r) is used. Point
/// (x_0, ..., x_{r-1}) has index sum x_i * d^i.
ActionInstance act_product(const ActionInstance& inner, std::size_t r,
                           const std::optional<std::vector<Permutation>>& top = std::nullopt,
                           std::size_t cap = kDefaultDegreeCap);

/// A x B acting on the Cartesian product of their point sets; point (x, y)
/// has index x + y * deg(A).
ActionInstance act_direct_product(const ActionInstance& a, const ActionInstance& b,
                                  std::size_t cap = kDefaultDegreeCap);

/// AGL_d(p) on GF(p)^d; the point with index sum v_i p^i is the vector v.
ActionInstance act_affine(std::size_t d, std::uint32_t p,
                          std::size_t cap = kDefaultDegreeCap);

/// Right regular action of a group on its own elements.
ActionInstance act_regular(const PermGroup& group, const std::string& name,
                           std::size_t cap = kDefaultDegreeCap);

/// Action of G on the right cosets of a normal subgroup N (given by
/// generators), i.e. the regular action of G/N. Throws InvalidArgument if N is
/// not a normal subgroup of G.
ActionInstance act_quotient(const PermGroup& group, const std::vector<Permutation>& normal_gens,
                            const std::string& name, std::size_t cap = kDefaultDegreeCap);

/// Generators given directly (no labels beyond point indices).
ActionInstance act_from_generators(const std::string& name, std::size_t degree,
                                   std::vector<Permutation> generators,
                                   ActionMeta meta = {});

/// Data for a diagonal-type action of T^m.(Out x Sym(m)).
struct DiagonalSpec {
  std::string name;
  std::vector<Permutation> elements;                  // element 0 is the identity
  std::vector<std::vector<std::uint32_t>> cayley;     // cayley[i][j] = index of elements[i]*elements[j]
  std::vector<std::uint32_t> inverse;                 // index of the inverse
  std::vector<std::uint32_t> generators;              // indices of a generating set of T
  std::vector<std::vector<std::uint32_t>> outer_autos;  // automorphisms as index permutations
  std::size_t m = 2;
};

/// Builds a spec from a permutation group T. Each outer automorphism is given
/// as a permutation of T's element list (see `conjugation_automorphism`).
/// Throws InvalidArgument unless T has trivial centre and is perfect, and
/// unless every automorphism fixes the identity and preserves the Cayley
/// table. Throws CapExceeded if |T| exceeds `element_cap`.
DiagonalSpec make_diagonal_spec(const std::string& name, const PermGroup& T, std::size_t m,
                                const std::vector<std::vector<std::uint32_t>>& outer_autos,
                                std::size_t element_cap = 5000);

/// The automorphism x -> c^{-1} x c of T, as a permutation of `elements`.
/// `c` must normalize T.
std::vector<std::uint32_t> conjugation_automorphism(const std::vector<Permutation>& elements,
                                                    const Permutation& c);

/// Alt(5) with the outer automorphism induced by conjugation by (0 1).
DiagonalSpec diagonal_spec_alt5(std::size_t m, bool with_outer);

/// PSL_3(2) on the 7 points of the Fano plane, with the inverse-transpose
/// automorphism as outer automorphism.
DiagonalSpec diagonal_spec_psl32(std::size_t m, bool with_outer);

/// Points are the distinguished coset representatives (1, t_2, ..., t_m) of
/// the diagonal subgroup, indexed by sum t_{i+2} |T|^i.
ActionInstance act_diagonal(const DiagonalSpec& spec, std::size_t cap = kDefaultDegreeCap);

enum class LinearGroup { sl, gl, gammal };

/// Generators of SL_n(q) (elementary matrices) and, for gl, a diagonal matrix
/// of determinant a primitive element.
std::vector<MatrixGF> linear_group_generators(const Field& F, std::size_t n, LinearGroup grp);

/// Order of the image of SL/GL/GammaL_n(q) in its action on subspaces.
Order projective_group_order(std::size_t n, std::uint32_t p, std::uint32_t f, LinearGroup grp);

/// Action on the m-dimensional subspaces of GF(q)^n, q = p^f.
ActionInstance act_subspaces(std::size_t n, std::uint32_t p, std::uint32_t f, std::size_t m,
                             LinearGroup grp, std::size_t cap = kDefaultDegreeCap);

enum class PairVariant { complement, flag };

/// Action of PGL_n(q) on pairs {U, W} with dim U = m, dim W = n-m, where
/// U + W = V (complement) or U < W (flag). With `graph_aut` the
/// inverse-transpose automorphism is added, acting by U -> perp(U).
ActionInstance act_subspace_pairs(std::size_t n, std::uint32_t p, std::uint32_t f,
                                  std::size_t m, PairVariant variant, bool graph_aut,
                                  std::size_t cap = kDefaultDegreeCap);

/// The displayed degree formulas for the two pair actions.
Order pair_action_degree(std::size_t n, std::uint32_t q, std::size_t m, PairVariant variant);

ActionInstance act_m24();

}  // namespace grpstat
