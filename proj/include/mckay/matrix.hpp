#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mckay/error.hpp"
#include "mckay/scalar.hpp"

namespace mckay {

/// Dense row-major matrix over an exact field (Rational or ModP<P>).
template <class S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, S(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<S> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw Error(ErrorCode::kShapeMismatch, "matrix data size");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<S>>& rows, std::size_t cols_if_empty = 0) {
    const std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw Error(ErrorCode::kShapeMismatch, "ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix column_vector(const std::vector<S>& v) {
    Matrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (!mckay::is_zero(x)) return false;
    }
    return true;
  }

  std::vector<S> column(std::size_t j) const {
    std::vector<S> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  std::vector<S> row(std::size_t i) const {
    return std::vector<S>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix select_columns(const std::vector<std::size_t>& idx) const {
    Matrix m(rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < idx.size(); ++k) m(i, k) = (*this)(i, idx[k]);
    return m;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix m(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw Error(ErrorCode::kShapeMismatch, "product of " + a.shape() + " and " + b.shape());
    }
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (mckay::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.require_same_shape(b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.require_same_shape(b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
    return a;
  }

  friend Matrix operator*(const S& s, Matrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  const std::vector<S>& data() const { return data_; }

 private:
  void require_same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) {
      throw Error(ErrorCode::kShapeMismatch, "shapes " + shape() + " and " + b.shape());
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

template <class S>
Matrix<S> hstack(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() != b.rows()) throw Error(ErrorCode::kShapeMismatch, "hstack rows");
  Matrix<S> m(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
  }
  return m;
}

template <class S>
Matrix<S> vstack(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.cols() != b.cols()) throw Error(ErrorCode::kShapeMismatch, "vstack cols");
  Matrix<S> m(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, j) = b(i, j);
  return m;
}

template <class S>
struct RowEchelon {
  Matrix<S> reduced;               // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan elimination; the returned matrix has exactly rank() rows.
template <class S>
RowEchelon<S> rref(Matrix<S> m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pr = row;
    while (pr < m.rows() && is_zero(m(pr, col))) ++pr;
    if (pr == m.rows()) continue;
    if (pr != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pr, j), m(row, j));
    }
    const S inv = S(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      const S f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {m.block(0, 0, row, m.cols()), std::move(pivots)};
}

template <class S>
std::size_t rank(const Matrix<S>& m) {
  if (m.rows() > m.cols()) return rref(m.transpose()).pivots.size();
  return rref(m).pivots.size();
}

/// Columns form a basis of the null space {x : m x = 0}.
template <class S>
Matrix<S> kernel(const Matrix<S>& m) {
  const auto e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  Matrix<S> k(m.cols(), free_cols.size());
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    k(free_cols[f], f) = S(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) k(e.pivots[r], f) = -e.reduced(r, free_cols[f]);
  }
  return k;
}

template <class S>
bool is_invertible(const Matrix<S>& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

template <class S>
std::optional<Matrix<S>> inverse(const Matrix<S>& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  auto e = rref(hstack(m, Matrix<S>::identity(n)));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  return e.reduced.block(0, n, n, n);
}

/// Some X with a X = b, if one exists.
template <class S>
std::optional<Matrix<S>> solve(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() != b.rows()) throw Error(ErrorCode::kShapeMismatch, "solve rows");
  auto e = rref(hstack(a, b));
  Matrix<S> x(a.cols(), b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[r], j) = e.reduced(r, a.cols() + j);
  }
  return x;
}

/// Subspace of S^n held as its canonical reduced row-echelon basis.
template <class S>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient), rows_(0, ambient) {}

  static Subspace zero(std::size_t n) { return Subspace(n); }
  static Subspace full(std::size_t n) { return from_rows(Matrix<S>::identity(n)); }

  /// Span of the rows of m (m.cols() is the ambient dimension).
  static Subspace from_rows(const Matrix<S>& m) {
    Subspace s(m.cols());
    auto e = rref(m);
    s.rows_ = std::move(e.reduced);
    s.pivots_ = std::move(e.pivots);
    return s;
  }
  static Subspace from_columns(const Matrix<S>& m) { return from_rows(m.transpose()); }

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.rows(); }
  const Matrix<S>& basis_rows() const { return rows_; }
  Matrix<S> basis_columns() const { return rows_.transpose(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const std::vector<S>& v) const {
    std::vector<S> r = v;
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
      const S c = r[pivots_[k]];
      if (is_zero(c)) continue;
      for (std::size_t j = 0; j < ambient_; ++j) r[j] -= c * rows_(k, j);
    }
    for (const auto& x : r)
      if (!is_zero(x)) return false;
    return true;
  }

  bool contains(const Subspace& other) const {
    for (std::size_t k = 0; k < other.dim(); ++k)
      if (!contains(other.rows_.row(k))) return false;
    return true;
  }

  friend Subspace operator+(const Subspace& a, const Subspace& b) {
    return from_rows(vstack(a.rows_, b.rows_));
  }

  /// Rows spanning the annihilator {y : y . x = 0 for x in this}.
  Matrix<S> annihilator_rows() const { return kernel(rows_).transpose(); }

  Subspace intersect(const Subspace& b) const {
    // x in both <=> x killed by both annihilators
    const Matrix<S> ann = vstack(annihilator_rows(), b.annihilator_rows());
    return from_columns(kernel(ann));
  }

  /// Image under a linear map given by its matrix (rows = target dimension).
  Subspace image(const Matrix<S>& map) const {
    if (map.cols() != ambient_) throw Error(ErrorCode::kShapeMismatch, "image source dimension");
    if (dim() == 0) return Subspace(map.rows());
    return from_columns(map * basis_columns());
  }

  /// {x : map x lies in target}.
  static Subspace preimage(const Matrix<S>& map, const Subspace& target) {
    if (map.rows() != target.ambient()) throw Error(ErrorCode::kShapeMismatch, "preimage target dimension");
    const Matrix<S> ann = target.annihilator_rows();
    if (ann.rows() == 0) return full(map.cols());
    return from_columns(kernel(ann * map));
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t ambient_ = 0;
  Matrix<S> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace mckay
