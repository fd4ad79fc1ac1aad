#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "grpstat/matrix.hpp"

namespace grpstat {

/// A subspace of GF(q)^n stored as its reduced row echelon basis (pivot
/// columns leftmost). Two bases of one subspace canonicalize identically, so
/// the basis doubles as a comparison key.
struct SubspaceIndex {
  MatrixGF basis;  // dimension x n, in RREF

  [[nodiscard]] std::size_t dimension() const { return basis.rows(); }
  [[nodiscard]] std::size_t ambient() const { return basis.cols(); }

  friend bool operator==(const SubspaceIndex&, const SubspaceIndex&) = default;
  friend auto operator<=>(const SubspaceIndex&, const SubspaceIndex&) = default;
};

/// Throws InvalidArgument if the rows are linearly dependent (or empty).
SubspaceIndex subspace_canonical(const Field& F, const MatrixGF& basis);

/// Canonical form of the row space, dropping dependent rows.
SubspaceIndex row_space(const Field& F, const MatrixGF& spanning);

/// Every m-dimensional subspace of GF(q)^n, ordered by pivot set and then by
/// free entries. Count equals the Gaussian binomial [n choose m]_q.
std::vector<SubspaceIndex> enumerate_subspaces(const Field& F, std::size_t n, std::size_t m);

/// Image of U under g (the row space of basis * g).
SubspaceIndex subspace_image(const Field& F, const SubspaceIndex& U, const MatrixGF& g);

/// Orthogonal complement under the standard dot product u . v^T.
SubspaceIndex perp(const Field& F, const SubspaceIndex& U);

/// U ∩ W = 0 and dim U + dim W = n.
bool is_complement(const Field& F, const SubspaceIndex& U, const SubspaceIndex& W);

/// U <= W.
bool is_contained(const Field& F, const SubspaceIndex& U, const SubspaceIndex& W);

/// Point index lookup for a fixed list of subspaces.
class SubspaceLookup {
 public:
  explicit SubspaceLookup(const std::vector<SubspaceIndex>& spaces);
  /// Throws InvalidArgument if U is not in the list.
  [[nodiscard]] std::size_t index(const SubspaceIndex& U) const;

 private:
  std::map<std::vector<FieldElement>, std::size_t> index_;
};

}  // namespace grpstat
