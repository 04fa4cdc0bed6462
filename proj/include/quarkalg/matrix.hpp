// Small dense matrices over an exact (CycloScalar) or floating
// (std::complex<double>) scalar. The two backends are distinct types, so a
// mixed-backend expression does not compile.

#ifndef QUARKALG_MATRIX_HPP
#define QUARKALG_MATRIX_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "quarkalg/cyclo.hpp"

namespace quarkalg {

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<CycloScalar> {
  static constexpr bool exact = true;
  static constexpr const char* backend_name = "exact";
  static CycloScalar from_exact(const CycloScalar& x) { return x; }
  static CycloScalar conj(const CycloScalar& x) { return x.conj(); }
  static bool is_zero(const CycloScalar& x) { return x.is_zero(); }
  static double magnitude(const CycloScalar& x) { return x.is_zero() ? 0.0 : std::abs(x.to_complex()); }
};

template <>
struct scalar_traits<ComplexFloat> {
  static constexpr bool exact = false;
  static constexpr const char* backend_name = "float";
  static ComplexFloat from_exact(const CycloScalar& x) { return x.to_complex(); }
  static ComplexFloat conj(const ComplexFloat& x) { return std::conj(x); }
  static bool is_zero(const ComplexFloat& x) { return x == ComplexFloat(0.0, 0.0); }
  static double magnitude(const ComplexFloat& x) { return std::abs(x); }
};

class SingularMatrix : public std::domain_error {
 public:
  SingularMatrix() : std::domain_error("matrix is singular") {}
};

template <class T>
class Matrix {
 public:
  using value_type = T;
  using traits = scalar_traits<T>;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) : rows_(init.size()) {
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = T(1);
    return m;
  }

  static Matrix diagonal(std::initializer_list<T> values) {
    Matrix m(values.size(), values.size());
    std::size_t k = 0;
    for (const auto& v : values) {
      m(k, k) = v;
      ++k;
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<T>& data() const { return data_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(r, k);
        if (traits::is_zero(x)) continue;
        for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += x * b(k, c);
      }
    return out;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
  }

  /// Entrywise complex conjugate.
  Matrix conjugate() const {
    Matrix out = *this;
    for (auto& x : out.data_) x = traits::conj(x);
    return out;
  }

  Matrix adjoint() const { return conjugate().transpose(); }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    Matrix<decltype(f(std::declval<const T&>()))> out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(r, c) = f((*this)(r, c));
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (std::size_t r = 0; r < m.rows_; ++r) {
      os << (r ? ", [" : "[");
      for (std::size_t c = 0; c < m.cols_; ++c) os << (c ? ", " : "") << m(r, c);
      os << ']';
    }
    return os << ']';
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ExactMatrix = Matrix<CycloScalar>;
using FloatMatrix = Matrix<ComplexFloat>;

inline FloatMatrix to_float(const ExactMatrix& m) {
  return m.map([](const CycloScalar& x) { return x.to_complex(); });
}

template <class T>
T trace(const Matrix<T>& m) {
  T t(0);
  for (std::size_t k = 0; k < std::min(m.rows(), m.cols()); ++k) t += m(k, k);
  return t;
}

template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          out(r * b.rows() + p, c * b.cols() + q) = a(r, c) * b(p, q);
  return out;
}

/// Largest entrywise magnitude of a - b.
template <class T>
double max_abs_diff(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix shape mismatch");
  double worst = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k)
    worst = std::max(worst, scalar_traits<T>::magnitude(a.data()[k] - b.data()[k]));
  return worst;
}

namespace detail {

// Row index of the pivot for column `col` among rows >= col, or rows() if none.
template <class T>
std::size_t pick_pivot(const Matrix<T>& m, std::size_t col) {
  using tr = scalar_traits<T>;
  std::size_t best = m.rows();
  double best_mag = 0.0;
  for (std::size_t r = col; r < m.rows(); ++r) {
    if (tr::is_zero(m(r, col))) continue;
    if constexpr (tr::exact) return r;
    const double mag = tr::magnitude(m(r, col));
    if (mag > best_mag) {
      best_mag = mag;
      best = r;
    }
  }
  return best;
}

template <class T>
void swap_rows(Matrix<T>& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

}  // namespace detail

template <class T>
T determinant(Matrix<T> m) {
  if (!m.square()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  T det(1);
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t p = detail::pick_pivot(m, col);
    if (p == n) return T(0);
    if (p != col) {
      detail::swap_rows(m, p, col);
      det = -det;
    }
    const T pivot = m(col, col);
    det *= pivot;
    const T inv = T(1) / pivot;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (scalar_traits<T>::is_zero(m(r, col))) continue;
      const T f = m(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

/// Solves a * x = b by Gauss-Jordan elimination. Throws SingularMatrix.
template <class T>
Matrix<T> solve(Matrix<T> a, Matrix<T> b) {
  if (!a.square() || a.rows() != b.rows()) throw std::invalid_argument("solve shape mismatch");
  const std::size_t n = a.rows();
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t p = detail::pick_pivot(a, col);
    if (p == n) throw SingularMatrix();
    detail::swap_rows(a, p, col);
    detail::swap_rows(b, p, col);
    const T inv = T(1) / a(col, col);
    for (std::size_t c = 0; c < n; ++c) a(col, c) *= inv;
    for (std::size_t c = 0; c < b.cols(); ++c) b(col, c) *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || scalar_traits<T>::is_zero(a(r, col))) continue;
      const T f = a(r, col);
      for (std::size_t c = 0; c < n; ++c) a(r, c) -= f * a(col, c);
      for (std::size_t c = 0; c < b.cols(); ++c) b(r, c) -= f * b(col, c);
    }
  }
  return b;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& a) {
  return solve(a, Matrix<T>::identity(a.rows()));
}

}  // namespace quarkalg

#endif  // QUARKALG_MATRIX_HPP
