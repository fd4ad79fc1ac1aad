#include "grpstat/subspace.hpp"

#include <algorithm>

#include "grpstat/error.hpp"

namespace grpstat {

SubspaceIndex subspace_canonical(const Field& F, const MatrixGF& basis) {
  if (basis.rows() == 0) throw InvalidArgument("empty basis");
  MatrixGF m = basis;
  if (rref_in_place(F, m).size() != basis.rows()) {
    throw InvalidArgument("basis rows are linearly dependent");
  }
  return {std::move(m)};
}

SubspaceIndex row_space(const Field& F, const MatrixGF& spanning) {
  MatrixGF m = spanning;
  const std::size_t r = rref_in_place(F, m).size();
  std::vector<FieldElement> data(m.data().begin(), m.data().begin() + r * m.cols());
  return {MatrixGF(r, m.cols(), std::move(data))};
}

std::vector<SubspaceIndex> enumerate_subspaces(const Field& F, std::size_t n, std::size_t m) {
  if (m == 0 || m > n) throw InvalidArgument("subspace dimension must satisfy 0 < m <= n");
  const std::uint32_t q = F.size();
  std::vector<SubspaceIndex> out;
  std::vector<std::size_t> pivots(m);
  for (std::size_t i = 0; i < m; ++i) pivots[i] = i;
  while (true) {
    // Free positions: (row i, column c) with c > pivots[i] and c not a pivot.
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t c = pivots[i] + 1; c < n; ++c) {
        if (!std::binary_search(pivots.begin(), pivots.end(), c)) free.emplace_back(i, c);
      }
    }
    std::vector<FieldElement> values(free.size(), 0);
    while (true) {
      MatrixGF basis(m, n);
      for (std::size_t i = 0; i < m; ++i) basis.at(i, pivots[i]) = 1;
      for (std::size_t k = 0; k < free.size(); ++k) {
        basis.at(free[k].first, free[k].second) = values[k];
      }
      out.push_back({std::move(basis)});
      std::size_t k = free.size();
      while (k > 0 && values[k - 1] + 1 == q) values[--k] = 0;
      if (k == 0) break;
      ++values[k - 1];
    }
    // Next pivot set in lexicographic order.
    std::size_t i = m;
    while (i > 0 && pivots[i - 1] == n - m + i - 1) --i;
    if (i == 0) break;
    ++pivots[i - 1];
    for (std::size_t j = i; j < m; ++j) pivots[j] = pivots[j - 1] + 1;
  }
  return out;
}

SubspaceIndex subspace_image(const Field& F, const SubspaceIndex& U, const MatrixGF& g) {
  MatrixGF m = multiply(F, U.basis, g);
  rref_in_place(F, m);
  return {std::move(m)};
}

SubspaceIndex perp(const Field& F, const SubspaceIndex& U) {
  // Null space of the RREF basis: one vector per non-pivot column.
  MatrixGF m = U.basis;
  const auto pivots = rref_in_place(F, m);
  const std::size_t n = U.ambient();
  std::vector<Vector> rows;
  for (std::size_t c = 0; c < n; ++c) {
    if (std::find(pivots.begin(), pivots.end(), c) != pivots.end()) continue;
    Vector v(n, 0);
    v[c] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = F.neg(m.at(i, c));
    rows.push_back(std::move(v));
  }
  if (rows.empty()) return {MatrixGF(0, n)};
  return subspace_canonical(F, MatrixGF::from_rows(rows));
}

namespace {

MatrixGF stack(const MatrixGF& a, const MatrixGF& b) {
  std::vector<FieldElement> data(a.data());
  data.insert(data.end(), b.data().begin(), b.data().end());
  return {a.rows() + b.rows(), a.cols(), std::move(data)};
}

}  // namespace

bool is_complement(const Field& F, const SubspaceIndex& U, const SubspaceIndex& W) {
  return U.dimension() + W.dimension() == U.ambient() &&
         rank(F, stack(U.basis, W.basis)) == U.ambient();
}

bool is_contained(const Field& F, const SubspaceIndex& U, const SubspaceIndex& W) {
  return rank(F, stack(U.basis, W.basis)) == W.dimension();
}

SubspaceLookup::SubspaceLookup(const std::vector<SubspaceIndex>& spaces) {
  for (std::size_t i = 0; i < spaces.size(); ++i) index_.emplace(spaces[i].basis.data(), i);
}

std::size_t SubspaceLookup::index(const SubspaceIndex& U) const {
  auto it = index_.find(U.basis.data());
  if (it == index_.end()) throw InvalidArgument("subspace not in lookup table");
  return it->second;
}

}  // namespace grpstat
