#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "odla/errors.hpp"
#include "odla/scalar.hpp"

namespace odla {

template <class T>
using BasicVector = std::vector<T>;

using Vector = BasicVector<Scalar>;
using FloatVector = BasicVector<double>;

/// Dense square matrix, row-major, indices zero-based.
template <class T>
class BasicMatrix {
 public:
  BasicMatrix() = default;
  explicit BasicMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim, T(0)) {}

  BasicMatrix(std::initializer_list<std::initializer_list<T>> rows) : BasicMatrix(rows.size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != dim_) throw DimensionError("matrix rows must all have length dim");
      std::size_t j = 0;
      for (const auto& x : row) (*this)(i, j++) = x;
      ++i;
    }
  }

  static BasicMatrix identity(std::size_t dim) {
    BasicMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = T(1);
    return m;
  }

  static BasicMatrix diagonal(std::span<const T> d) {
    BasicMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t dim() const noexcept { return dim_; }

  T& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

  std::span<const T> entries() const noexcept { return entries_; }

  bool operator==(const BasicMatrix& other) const {
    return dim_ == other.dim_ && entries_ == other.entries_;
  }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  bool is_skew() const {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i; j < dim_; ++j)
        if ((*this)(i, j) != -(*this)(j, i)) return false;
    return true;
  }

  bool is_zero() const {
    for (const auto& x : entries_)
      if (!odla::is_zero(x)) return false;
    return true;
  }

  BasicMatrix transpose() const {
    BasicMatrix t(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < dim_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

 private:
  std::size_t dim_ = 0;
  std::vector<T> entries_;
};

using Matrix = BasicMatrix<Scalar>;
using FloatMatrix = BasicMatrix<double>;

template <class T>
BasicMatrix<T> operator*(const BasicMatrix<T>& x, const BasicMatrix<T>& y) {
  if (x.dim() != y.dim()) throw DimensionError("matrix product of mismatched sizes");
  const std::size_t n = x.dim();
  BasicMatrix<T> r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (is_zero(x(i, k))) continue;
      for (std::size_t j = 0; j < n; ++j) r(i, j) += x(i, k) * y(k, j);
    }
  return r;
}

template <class T>
BasicVector<T> operator*(const BasicMatrix<T>& m, std::span<const T> v) {
  if (m.dim() != v.size()) throw DimensionError("matrix-vector product of mismatched sizes");
  BasicVector<T> r(v.size(), T(0));
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) r[i] += m(i, j) * v[j];
  return r;
}

template <class T>
BasicMatrix<T> scaled(const BasicMatrix<T>& m, const T& factor) {
  BasicMatrix<T> r = m;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) r(i, j) *= factor;
  return r;
}

namespace detail {

template <class T>
std::size_t pick_pivot(const BasicMatrix<T>& a, std::size_t col) {
  std::size_t best = a.dim();
  if constexpr (std::is_floating_point_v<T>) {
    double best_abs = 0.0;
    for (std::size_t r = col; r < a.dim(); ++r) {
      if (std::abs(a(r, col)) > best_abs) {
        best_abs = std::abs(a(r, col));
        best = r;
      }
    }
  } else {
    for (std::size_t r = col; r < a.dim(); ++r) {
      if (!is_zero(a(r, col))) return r;
    }
  }
  return best;
}

}  // namespace detail

/// Determinant by Gaussian elimination (exact for Scalar).
template <class T>
T determinant(BasicMatrix<T> a) {
  T det(1);
  const std::size_t n = a.dim();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = detail::pick_pivot(a, col);
    if (piv == n) return T(0);
    if (piv != col) {
      a.swap_rows(piv, col);
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (is_zero(a(r, col))) continue;
      T f = a(r, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(r, j) -= f * a(col, j);
    }
  }
  return det;
}

/// Gauss-Jordan inverse. Throws SingularMatrixError when det = 0.
template <class T>
BasicMatrix<T> invert(const BasicMatrix<T>& m) {
  const std::size_t n = m.dim();
  BasicMatrix<T> a = m;
  BasicMatrix<T> inv = BasicMatrix<T>::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = detail::pick_pivot(a, col);
    if (piv == n || is_zero(a(piv, col))) throw SingularMatrixError("matrix is singular");
    a.swap_rows(piv, col);
    inv.swap_rows(piv, col);
    T p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(a(r, col))) continue;
      T f = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

FloatMatrix to_float(const Matrix& m);
FloatVector to_float(std::span<const Scalar> v);

// ---------------------------------------------------------------------------
// Index symbols

/// Sign of the permutation (i,j,k) of (1,2,3); 0 on a repeated index.
/// Throws IndexError for indices outside 1..3.
Scalar levi_civita(int i, int j, int k);

namespace detail {

/// Zero-based Levi-Civita symbol for internal contractions.
constexpr int epsilon(std::size_t i, std::size_t j, std::size_t k) {
  if (i == j || j == k || i == k) return 0;
  // (0,1,2), (1,2,0), (2,0,1) are even.
  return ((j + 3 - i) % 3 == 1) ? 1 : -1;
}

constexpr int delta(std::size_t i, std::size_t j) { return i == j ? 1 : 0; }

}  // namespace detail

// ---------------------------------------------------------------------------
// Symmetric forms

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;

  int rank() const { return positive + negative; }
  bool operator==(const Inertia&) const = default;
};

struct CongruenceDiagonalization {
  Matrix transform;  // S
  Vector diagonal;   // d, with S * M * S^T = diag(d)
};

/// Symmetric Gaussian elimination with diagonal pivoting. When only
/// off-diagonal entries remain, e_i + e_j exposes a 2m pivot. Stays in Q.
/// Throws DimensionError if M is not symmetric.
CongruenceDiagonalization congruence_diagonalize(const Matrix& m);

/// Counts of positive, negative and zero entries of a congruence diagonal.
Inertia inertia(const Matrix& m);

}  // namespace odla
