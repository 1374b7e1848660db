#include "weil/linalg.hpp"

#include <algorithm>
#include <utility>

namespace weil {

std::vector<Rational> Matrix::column(std::size_t c) const {
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

void Matrix::set_column(std::size_t c, const std::vector<Rational>& values) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw MismatchError("matrix product: inner dimensions differ");
  Matrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Rational& b = rhs(k, j);
        if (sgn(b) != 0) out(i, j) += a * b;
      }
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

Matrix Matrix::permute_columns(const std::vector<std::size_t>& perm) const {
  Matrix out(rows_, perm.size());
  for (std::size_t j = 0; j < perm.size(); ++j)
    for (std::size_t r = 0; r < rows_; ++r) out(r, j) = (*this)(r, perm[j]);
  return out;
}

Matrix Matrix::permute_rows(const std::vector<std::size_t>& perm) const {
  Matrix out(perm.size(), cols_);
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t c = 0; c < cols_; ++c) out(i, c) = (*this)(perm[i], c);
  return out;
}

std::size_t rank_bareiss(const Matrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  if (rows == 0 || cols == 0) return 0;

  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t c = 0; c < cols; ++c) {
    Integer scale = 1;
    for (std::size_t r = 0; r < rows; ++r) {
      const Rational& q = m(r, c);
      if (sgn(q) != 0) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den_mpz_t());
    }
    for (std::size_t r = 0; r < rows; ++r) {
      const Rational& q = m(r, c);
      if (sgn(q) != 0) a[r][c] = q.get_num() * (scale / q.get_den());
    }
  }

  Integer prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && sgn(a[pivot][col]) == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const Integer& p = a[rank][col];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const Integer lead = a[i][col];
      for (std::size_t j = col + 1; j < cols; ++j) {
        Integer v = p * a[i][j] - lead * a[rank][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

RowEchelon rref(const Matrix& m) {
  RowEchelon out{m, {}};
  Matrix& a = out.reduced;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && sgn(a(pivot, col)) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(pivot, j), a(row, j));
    const Rational inv = 1 / a(row, col);
    for (std::size_t j = col; j < cols; ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || sgn(a(i, col)) == 0) continue;
      const Rational f = a(i, col);
      for (std::size_t j = col; j < cols; ++j)
        if (sgn(a(row, j)) != 0) a(i, j) -= f * a(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

std::vector<std::vector<Rational>> kernel_basis(const Matrix& m) {
  const RowEchelon e = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix from_columns(const std::vector<std::vector<Rational>>& cols, std::size_t rows) {
  Matrix out(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw MismatchError("from_columns: ragged column");
    out.set_column(j, cols[j]);
  }
  return out;
}

std::vector<std::vector<Rational>> span_basis(const std::vector<std::vector<Rational>>& vectors,
                                              std::size_t length) {
  Matrix m(vectors.size(), length);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != length) throw MismatchError("span_basis: ragged vector");
    for (std::size_t j = 0; j < length; ++j) m(i, j) = vectors[i][j];
  }
  const RowEchelon e = rref(m);
  std::vector<std::vector<Rational>> out;
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    std::vector<Rational> row(length);
    for (std::size_t j = 0; j < length; ++j) row[j] = e.reduced(r, j);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace weil
