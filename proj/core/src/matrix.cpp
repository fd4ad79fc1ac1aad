#include "grpstat/matrix.hpp"

#include "grpstat/error.hpp"

namespace grpstat {

MatrixGF::MatrixGF(std::size_t rows, std::size_t cols, std::vector<FieldElement> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw InvalidArgument("matrix data size mismatch");
}

MatrixGF MatrixGF::identity(std::size_t n) {
  MatrixGF m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

MatrixGF MatrixGF::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) return {};
  MatrixGF m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw InvalidArgument("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

MatrixGF multiply(const Field& F, const MatrixGF& a, const MatrixGF& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("matrix dimension mismatch");
  MatrixGF out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const FieldElement x = a.at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out.at(i, j) = F.add(out.at(i, j), F.mul(x, b.at(k, j)));
      }
    }
  }
  return out;
}

MatrixGF transpose(const MatrixGF& a) {
  MatrixGF out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(j, i) = a.at(i, j);
  }
  return out;
}

Vector vec_mul(const Field& F, std::span<const FieldElement> u, const MatrixGF& g) {
  if (u.size() != g.rows()) throw InvalidArgument("vector length mismatch");
  Vector out(g.cols(), 0);
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (u[k] == 0) continue;
    for (std::size_t j = 0; j < g.cols(); ++j) {
      out[j] = F.add(out[j], F.mul(u[k], g.at(k, j)));
    }
  }
  return out;
}

std::vector<std::size_t> rref_in_place(const Field& F, MatrixGF& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < a.rows() && a.at(pivot, c) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(pivot, j), a.at(r, j));
    }
    const FieldElement scale = F.inv(a.at(r, c));
    for (std::size_t j = 0; j < a.cols(); ++j) a.at(r, j) = F.mul(a.at(r, j), scale);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      const FieldElement factor = a.at(i, c);
      for (std::size_t j = 0; j < a.cols(); ++j) {
        a.at(i, j) = F.sub(a.at(i, j), F.mul(factor, a.at(r, j)));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const Field& F, MatrixGF a) { return rref_in_place(F, a).size(); }

bool is_invertible(const Field& F, const MatrixGF& a) {
  return a.rows() == a.cols() && rank(F, a) == a.rows();
}

MatrixGF inverse(const Field& F, const MatrixGF& a) {
  if (a.rows() != a.cols()) throw InvalidArgument("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  MatrixGF aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = 1;
  }
  const auto pivots = rref_in_place(F, aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) {
    throw InvalidArgument("matrix is singular");
  }
  MatrixGF out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
  }
  return out;
}

}  // namespace grpstat
