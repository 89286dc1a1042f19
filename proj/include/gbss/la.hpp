#pragma once

// Dense exact linear algebra over a field type T (Rat, or rational
// functions in pole.hpp). Sizes in this project are small (<= a few
// hundred rows), so everything is plain Gaussian elimination with
// first-nonzero pivoting.

#include <optional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gbss/rational.hpp"

namespace gbss {

struct SingularMatrixError : std::runtime_error {
  SingularMatrixError() : std::runtime_error("singular matrix") {}
};

template <typename T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const T& x = (*this)(i, k);
        if (x == T(0)) continue;
        for (int j = 0; j < o.cols_; ++j) {
          if (o(k, j) == T(0)) continue;
          out(i, j) += x * o(k, j);
        }
      }
    return out;
  }

  Matrix operator+(const Matrix& o) const {
    check_same_shape(o);
    Matrix out(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
    return out;
  }

  Matrix operator-(const Matrix& o) const {
    check_same_shape(o);
    Matrix out(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
    return out;
  }

  Matrix scaled(const T& c) const {
    Matrix out(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * c;
    return out;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  bool is_zero() const {
    for (const T& x : a_)
      if (!(x == T(0))) return false;
    return true;
  }

  /// Kronecker product, row-major index convention.
  Matrix kron(const Matrix& o) const {
    Matrix out(rows_ * o.rows_, cols_ * o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) {
        const T& x = (*this)(i, j);
        if (x == T(0)) continue;
        for (int p = 0; p < o.rows_; ++p)
          for (int q = 0; q < o.cols_; ++q) {
            if (o(p, q) == T(0)) continue;
            out(i * o.rows_ + p, j * o.cols_ + q) = x * o(p, q);
          }
      }
    return out;
  }

  std::vector<T> col(int j) const {
    std::vector<T> v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("apply: shape mismatch");
    std::vector<T> out(rows_, T(0));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (!(v[j] == T(0)) && !((*this)(i, j) == T(0))) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  T det() const {
    if (rows_ != cols_) throw std::invalid_argument("det: not square");
    Matrix w(*this);
    T d(1);
    for (int k = 0; k < rows_; ++k) {
      int p = -1;
      for (int i = k; i < rows_; ++i)
        if (!(w(i, k) == T(0))) { p = i; break; }
      if (p < 0) return T(0);
      if (p != k) { w.swap_rows(p, k); d = d * T(-1); }
      d = d * w(k, k);
      T inv = T(1) / w(k, k);
      for (int i = k + 1; i < rows_; ++i) {
        if (w(i, k) == T(0)) continue;
        T f = w(i, k) * inv;
        for (int j = k; j < cols_; ++j) w(i, j) = w(i, j) - f * w(k, j);
      }
    }
    return d;
  }

  int rank() const {
    Matrix w(*this);
    int rk = 0;
    for (int j = 0; j < cols_ && rk < rows_; ++j) {
      int p = -1;
      for (int i = rk; i < rows_; ++i)
        if (!(w(i, j) == T(0))) { p = i; break; }
      if (p < 0) continue;
      w.swap_rows(p, rk);
      T inv = T(1) / w(rk, j);
      for (int i = rk + 1; i < rows_; ++i) {
        if (w(i, j) == T(0)) continue;
        T f = w(i, j) * inv;
        for (int jj = j; jj < cols_; ++jj) w(i, jj) = w(i, jj) - f * w(rk, jj);
      }
      ++rk;
    }
    return rk;
  }

  Matrix inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse: not square");
    Matrix w(*this), inv = identity(rows_);
    for (int k = 0; k < rows_; ++k) {
      int p = -1;
      for (int i = k; i < rows_; ++i)
        if (!(w(i, k) == T(0))) { p = i; break; }
      if (p < 0) throw SingularMatrixError();
      if (p != k) { w.swap_rows(p, k); inv.swap_rows(p, k); }
      T f = T(1) / w(k, k);
      for (int j = 0; j < rows_; ++j) { w(k, j) = w(k, j) * f; inv(k, j) = inv(k, j) * f; }
      for (int i = 0; i < rows_; ++i) {
        if (i == k || w(i, k) == T(0)) continue;
        T g = w(i, k);
        for (int j = 0; j < rows_; ++j) {
          w(i, j) = w(i, j) - g * w(k, j);
          inv(i, j) = inv(i, j) - g * inv(k, j);
        }
      }
    }
    return inv;
  }

  /// Solve (*this) * X = rhs. Returns nullopt if inconsistent; free
  /// variables (column-rank deficiency) are set to zero.
  std::optional<Matrix> solve(const Matrix& rhs) const {
    if (rhs.rows_ != rows_) throw std::invalid_argument("solve: shape mismatch");
    int n = cols_, m = rhs.cols_;
    Matrix w(rows_, n + m);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < n; ++j) w(i, j) = (*this)(i, j);
      for (int j = 0; j < m; ++j) w(i, n + j) = rhs(i, j);
    }
    std::vector<int> pivot_col;
    int rk = 0;
    for (int j = 0; j < n && rk < rows_; ++j) {
      int p = -1;
      for (int i = rk; i < rows_; ++i)
        if (!(w(i, j) == T(0))) { p = i; break; }
      if (p < 0) continue;
      w.swap_rows(p, rk);
      T f = T(1) / w(rk, j);
      for (int jj = j; jj < n + m; ++jj) w(rk, jj) = w(rk, jj) * f;
      for (int i = 0; i < rows_; ++i) {
        if (i == rk || w(i, j) == T(0)) continue;
        T g = w(i, j);
        for (int jj = j; jj < n + m; ++jj) w(i, jj) = w(i, jj) - g * w(rk, jj);
      }
      pivot_col.push_back(j);
      ++rk;
    }
    for (int i = rk; i < rows_; ++i)
      for (int j = 0; j < m; ++j)
        if (!(w(i, n + j) == T(0))) return std::nullopt;
    Matrix x(n, m);
    for (int k = 0; k < rk; ++k)
      for (int j = 0; j < m; ++j) x(pivot_col[k], j) = w(k, n + j);
    return x;
  }

  /// Basis of the right kernel, one vector per column.
  Matrix nullspace() const {
    Matrix w(*this);
    int n = cols_;
    std::vector<int> pivot_of_col(n, -1);
    int rk = 0;
    for (int j = 0; j < n && rk < rows_; ++j) {
      int p = -1;
      for (int i = rk; i < rows_; ++i)
        if (!(w(i, j) == T(0))) { p = i; break; }
      if (p < 0) continue;
      w.swap_rows(p, rk);
      T f = T(1) / w(rk, j);
      for (int jj = j; jj < n; ++jj) w(rk, jj) = w(rk, jj) * f;
      for (int i = 0; i < rows_; ++i) {
        if (i == rk || w(i, j) == T(0)) continue;
        T g = w(i, j);
        for (int jj = j; jj < n; ++jj) w(i, jj) = w(i, jj) - g * w(rk, jj);
      }
      pivot_of_col[j] = rk;
      ++rk;
    }
    Matrix ker(n, n - rk);
    int out = 0;
    for (int j = 0; j < n; ++j) {
      if (pivot_of_col[j] >= 0) continue;
      ker(j, out) = T(1);
      for (int jj = 0; jj < n; ++jj)
        if (pivot_of_col[jj] >= 0) ker(jj, out) = T(0) - w(pivot_of_col[jj], j);
      ++out;
    }
    return ker;
  }

  void swap_rows(int i, int k) {
    for (int j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  int rows_, cols_;
  std::vector<T> a_;
};

using QMat = Matrix<Rat>;

/// Incremental row-echelon span: cheap rank growth and membership tests
/// for streams of vectors (used for coinvariant and column-space work).
template <typename T>
class RowSpace {
 public:
  explicit RowSpace(int len) : len_(len) {}

  int dim() const { return static_cast<int>(rows_.size()); }

  /// Returns true if v was independent of the current span.
  bool insert(std::vector<T> v) {
    if (!reduce(v)) return false;
    int piv = leading(v);
    T f = T(1) / v[piv];
    for (int j = piv; j < len_; ++j) v[j] = v[j] * f;
    rows_[piv] = std::move(v);
    return true;
  }

  bool contains(std::vector<T> v) const { return !reduce(v); }

 private:
  // Reduces v against the span; returns false if it vanishes.
  bool reduce(std::vector<T>& v) const {
    for (const auto& [piv, row] : rows_) {
      if (v[piv] == T(0)) continue;
      T f = v[piv];
      for (int j = piv; j < len_; ++j) v[j] = v[j] - f * row[j];
    }
    return leading(v) >= 0;
  }

  int leading(const std::vector<T>& v) const {
    for (int j = 0; j < len_; ++j)
      if (!(v[j] == T(0))) return j;
    return -1;
  }

  int len_;
  std::map<int, std::vector<T>> rows_;  // pivot column -> normalized row
};

}  // namespace gbss
