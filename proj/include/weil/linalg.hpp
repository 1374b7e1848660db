#pragma once

#include <cstddef>
#include <vector>

#include "weil/rational.hpp"

namespace weil {

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> column(std::size_t c) const;
  void set_column(std::size_t c, const std::vector<Rational>& values);

  bool is_zero() const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix transpose() const;

  /// Permutes columns: result column j is this column perm[j].
  Matrix permute_columns(const std::vector<std::size_t>& perm) const;
  Matrix permute_rows(const std::vector<std::size_t>& perm) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Rank by fraction-free (Bareiss) elimination. Each column is first scaled
/// to integers by the lcm of its denominators, so all pivots stay in Z.
std::size_t rank_bareiss(const Matrix& m);

struct RowEchelon {
  Matrix reduced;                    // reduced row echelon form, pivots normalized to 1
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

/// Reduced row echelon form over Q.
RowEchelon rref(const Matrix& m);

/// Canonical kernel basis: one vector per free column, read off the RREF,
/// with the free variable set to 1. Ordered by free column.
std::vector<std::vector<Rational>> kernel_basis(const Matrix& m);

/// Canonical basis of the span of `vectors` (rows of the RREF, zero rows
/// dropped). All vectors must share one length.
std::vector<std::vector<Rational>> span_basis(const std::vector<std::vector<Rational>>& vectors,
                                              std::size_t length);

/// Matrix whose columns are the given vectors.
Matrix from_columns(const std::vector<std::vector<Rational>>& cols, std::size_t rows);

}  // namespace weil
