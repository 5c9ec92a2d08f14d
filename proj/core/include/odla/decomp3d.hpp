#pragma once

#include <span>

#include "odla/algebra.hpp"
#include "odla/tensor.hpp"

namespace odla {

/// Three-dimensional dual data of a (bracket, 2-form) pair:
///   c^i_jk   = n^il eps_jkl - delta^i_j a_k + delta^i_k a_j
///   omega_ij = eps_ijk b^k
/// n is symmetric (upper indices), a a covector, b a vector.
template <class T>
struct BasicNabTriple {
  BasicMatrix<T> n = BasicMatrix<T>(3);
  BasicVector<T> a = BasicVector<T>(3, T(0));
  BasicVector<T> b = BasicVector<T>(3, T(0));

  bool operator==(const BasicNabTriple&) const = default;
};

using NabTriple = BasicNabTriple<Scalar>;

/// c^il = 1/2 c^i_jk eps^jkl. Not symmetric in general.
Matrix dual_c(const AlgebraSpec& spec);

/// (c, omega) -> (n, a, b) with n the symmetric part of c^il,
/// a_m = 1/2 eps_mil c^il and b^k = 1/2 eps^ijk omega_ij.
/// Throws DimensionError unless dim = 3, SkewError on non-skew input.
NabTriple decompose(const AlgebraSpec& spec);

/// Inverse of decompose. n is expected to be symmetric.
template <class T>
BasicAlgebraSpec<T> reconstruct(const BasicNabTriple<T>& t) {
  if (t.n.dim() != 3 || t.a.size() != 3 || t.b.size() != 3) throw DimensionError("(n, a, b) must be 3-dimensional");
  BasicAlgebraSpec<T> spec(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) {
        T v(0);
        for (std::size_t l = 0; l < 3; ++l) {
          if (int e = detail::epsilon(j, k, l)) v += T(e) * t.n(i, l);
        }
        if (i == j) v -= t.a[k];
        if (i == k) v += t.a[j];
        spec.c(i, j, k) = v;
      }
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      T v(0);
      for (std::size_t k = 0; k < 3; ++k) {
        if (int e = detail::epsilon(i, j, k)) v += T(e) * t.b[k];
      }
      spec.omega()(i, j) = v;
    }
  return spec;
}

/// t^m = 4 n^ml a_l + 2 b^m; zero iff the reconstructed spec satisfies the
/// deformed Jacobi identity.
Vector t_vector(const NabTriple& t);

/// b^i = -2 n^il a_l, the only b compatible with (n, a).
Vector forced_b(const Matrix& n, std::span<const Scalar> a);

/// (n, a, b) after the basis change e'_j = P^q_j e_q:
///   n' = det P * P^-1 n P^-T,   a' = P^T a,   b' = det P * P^-1 b.
/// Agrees with decompose(transport(reconstruct(t), P)).
NabTriple transport(const NabTriple& t, const Matrix& p);

}  // namespace odla
