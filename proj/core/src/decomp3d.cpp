#include "odla/decomp3d.hpp"

namespace odla {

namespace {

void require_three(const AlgebraSpec& spec) {
  if (spec.dim() != 3) throw DimensionError("the (n, a, b) decomposition exists only in dimension 3");
}

}  // namespace

Matrix dual_c(const AlgebraSpec& spec) {
  require_three(spec);
  Matrix out(3);
  const Scalar half(1, 2);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t l = 0; l < 3; ++l) {
      Scalar acc = 0;
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k)
          if (int e = detail::epsilon(j, k, l)) acc += e * spec.c(i, j, k);
      out(i, l) = acc * half;
    }
  return out;
}

NabTriple decompose(const AlgebraSpec& spec) {
  require_three(spec);
  if (!validate_skew(spec).ok()) throw SkewError("decompose needs skew structure constants and 2-form");
  const Matrix cd = dual_c(spec);
  const Scalar half(1, 2);
  NabTriple t;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t l = 0; l < 3; ++l) t.n(i, l) = (cd(i, l) + cd(l, i)) * half;
  for (std::size_t m = 0; m < 3; ++m) {
    Scalar acc = 0;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t l = 0; l < 3; ++l)
        if (int e = detail::epsilon(m, i, l)) acc += e * cd(i, l);
    t.a[m] = acc * half;
  }
  // Inverse of omega_ij = eps_ijk b^k.
  for (std::size_t k = 0; k < 3; ++k) {
    Scalar acc = 0;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        if (int e = detail::epsilon(i, j, k)) acc += e * spec.omega()(i, j);
    t.b[k] = acc * half;
  }
  return t;
}

Vector t_vector(const NabTriple& t) {
  Vector na = t.n * std::span<const Scalar>(t.a);
  Vector out(3);
  for (std::size_t m = 0; m < 3; ++m) out[m] = 4 * na[m] + 2 * t.b[m];
  return out;
}

Vector forced_b(const Matrix& n, std::span<const Scalar> a) {
  if (n.dim() != 3 || a.size() != 3) throw DimensionError("forced_b works on 3x3 n and a 3-covector");
  Vector b = n * a;
  for (auto& x : b) x *= -2;
  return b;
}

NabTriple transport(const NabTriple& t, const Matrix& p) {
  if (p.dim() != 3) throw DimensionError("basis change must be 3x3");
  const Scalar det = determinant(p);
  const Matrix p_inv = invert(p);
  NabTriple out;
  out.n = scaled(p_inv * t.n * p_inv.transpose(), det);
  out.a = p.transpose() * std::span<const Scalar>(t.a);
  out.b = p_inv * std::span<const Scalar>(t.b);
  for (auto& x : out.b) x *= det;
  return out;
}

}  // namespace odla
