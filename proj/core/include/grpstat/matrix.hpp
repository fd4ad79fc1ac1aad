#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "grpstat/field.hpp"

namespace grpstat {

using Vector = std::vector<FieldElement>;

/// Dense row-major matrix over a Field. Vectors are rows acted on from the
/// right: u -> u * g.
class MatrixGF {
 public:
  MatrixGF() = default;
  MatrixGF(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  MatrixGF(std::size_t rows, std::size_t cols, std::vector<FieldElement> data);

  static MatrixGF identity(std::size_t n);
  static MatrixGF from_rows(const std::vector<Vector>& rows);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] FieldElement& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  [[nodiscard]] FieldElement at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  [[nodiscard]] std::span<const FieldElement> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  [[nodiscard]] const std::vector<FieldElement>& data() const { return data_; }

  friend bool operator==(const MatrixGF&, const MatrixGF&) = default;
  friend auto operator<=>(const MatrixGF&, const MatrixGF&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElement> data_;
};

MatrixGF multiply(const Field& F, const MatrixGF& a, const MatrixGF& b);
MatrixGF transpose(const MatrixGF& a);

/// u * g for a row vector u.
Vector vec_mul(const Field& F, std::span<const FieldElement> u, const MatrixGF& g);

/// Applies `map` (e.g. the Frobenius) to every entry.
template <typename Fn>
MatrixGF map_entries(const MatrixGF& a, Fn map) {
  std::vector<FieldElement> data(a.data());
  for (auto& x : data) x = map(x);
  return {a.rows(), a.cols(), std::move(data)};
}

/// Reduced row echelon form in place; returns the pivot columns. Zero rows
/// end up at the bottom.
std::vector<std::size_t> rref_in_place(const Field& F, MatrixGF& a);

std::size_t rank(const Field& F, MatrixGF a);

/// Throws InvalidArgument when the matrix is singular or not square.
MatrixGF inverse(const Field& F, const MatrixGF& a);

bool is_invertible(const Field& F, const MatrixGF& a);

}  // namespace grpstat
