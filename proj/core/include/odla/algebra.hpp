#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "odla/errors.hpp"
#include "odla/scalar.hpp"
#include "odla/tensor.hpp"

namespace odla {

/// A bracket [e_i, e_j] = c^k_ij e_k together with a 2-form omega_ij on an
/// n-dimensional space. Storage is zero-based and deliberately permissive:
/// `c(k, i, j)` can hold non-skew data so that validate_skew can report it.
/// Use set_bracket / set_omega to write skew pairs.
template <class T>
class BasicAlgebraSpec {
 public:
  BasicAlgebraSpec() = default;
  explicit BasicAlgebraSpec(std::size_t dim) : dim_(dim), c_(dim * dim * dim, T(0)), omega_(dim) {}

  std::size_t dim() const noexcept { return dim_; }

  /// e_k-component of [e_i, e_j].
  T& c(std::size_t k, std::size_t i, std::size_t j) { return c_[(k * dim_ + i) * dim_ + j]; }
  const T& c(std::size_t k, std::size_t i, std::size_t j) const { return c_[(k * dim_ + i) * dim_ + j]; }

  BasicMatrix<T>& omega() noexcept { return omega_; }
  const BasicMatrix<T>& omega() const noexcept { return omega_; }

  /// Sets c^k_ij = value and c^k_ji = -value.
  void set_bracket(std::size_t i, std::size_t j, std::size_t k, const T& value) {
    c(k, i, j) = value;
    c(k, j, i) = -value;
  }

  /// Sets omega_ij = value and omega_ji = -value.
  void set_omega(std::size_t i, std::size_t j, const T& value) {
    omega_(i, j) = value;
    omega_(j, i) = -value;
  }

  std::span<const T> structure_constants() const noexcept { return c_; }

  bool operator==(const BasicAlgebraSpec& other) const {
    return dim_ == other.dim_ && c_ == other.c_ && omega_ == other.omega_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<T> c_;
  BasicMatrix<T> omega_;
};

using AlgebraSpec = BasicAlgebraSpec<Scalar>;
using FloatAlgebraSpec = BasicAlgebraSpec<double>;

FloatAlgebraSpec to_float(const AlgebraSpec& spec);

/// Returns e_i (zero-based) in dimension dim.
Vector basis_vector(std::size_t dim, std::size_t i);

// ---------------------------------------------------------------------------
// Skew validation

struct SkewViolation {
  enum class Kind { bracket, omega };
  Kind kind;
  // One-based. For bracket violations: c^k_ij vs c^k_ji. For omega, k = 0.
  int k;
  int i;
  int j;
};

struct SkewReport {
  std::vector<SkewViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Lists every index pair (i <= j) breaking c^k_ij = -c^k_ji or
/// omega_ij = -omega_ji.
SkewReport validate_skew(const AlgebraSpec& spec);

// ---------------------------------------------------------------------------
// Bracket and the two sides of the deformed Jacobi identity

Vector bracket(const AlgebraSpec& spec, std::span<const Scalar> x, std::span<const Scalar> y);

/// [A,[B,C]] + [C,[A,B]] + [B,[C,A]].
Vector jacobiator(const AlgebraSpec& spec, std::span<const Scalar> a, std::span<const Scalar> b,
                  std::span<const Scalar> c);

/// omega(B,C) A + omega(A,B) C + omega(C,A) B.
Vector omega_rhs(const AlgebraSpec& spec, std::span<const Scalar> a, std::span<const Scalar> b,
                 std::span<const Scalar> c);

Scalar evaluate_form(const Matrix& omega, std::span<const Scalar> x, std::span<const Scalar> y);

/// R[m][l][j][k] = c^m_{i[l} c^i_{jk]} + delta^m_{[l} omega_{jk]}, with the
/// antisymmetrizer carrying its 1/3! weight. Totally antisymmetric in (l,j,k).
/// Equals (omega_rhs - jacobiator)(e_l, e_j, e_k)^m / 3.
class ResidualTensor {
 public:
  struct Component {
    int m, l, j, k;  // one-based
    Scalar value;
  };

  explicit ResidualTensor(std::size_t dim) : dim_(dim), r_(dim * dim * dim * dim) {}

  std::size_t dim() const noexcept { return dim_; }

  Scalar& operator()(std::size_t m, std::size_t l, std::size_t j, std::size_t k) {
    return r_[((m * dim_ + l) * dim_ + j) * dim_ + k];
  }
  const Scalar& operator()(std::size_t m, std::size_t l, std::size_t j, std::size_t k) const {
    return r_[((m * dim_ + l) * dim_ + j) * dim_ + k];
  }

  bool is_zero() const;

  /// Nonzero components with l < j < k (the rest follow by antisymmetry).
  std::vector<Component> nonzero_components() const;

 private:
  std::size_t dim_;
  std::vector<Scalar> r_;
};

/// Throws SkewError if validate_skew fails.
ResidualTensor residual(const AlgebraSpec& spec);

/// residual(spec).is_zero(), i.e. spec is an omega-deformed Lie algebra.
bool is_deformed_lie_algebra(const AlgebraSpec& spec);

// ---------------------------------------------------------------------------
// Change of basis

/// New basis e'_j = P^q_j e_q (columns of P are the new basis vectors):
///   c'^i_jk = (P^-1)^i_p c^p_qr P^q_j P^r_k,   omega'_ij = P^w_i P^v_j omega_wv.
/// transport(transport(s, P), Q) == transport(s, P * Q).
template <class T>
BasicAlgebraSpec<T> transport(const BasicAlgebraSpec<T>& spec, const BasicMatrix<T>& p) {
  const std::size_t n = spec.dim();
  if (p.dim() != n) throw DimensionError("basis change matrix does not match algebra dimension");
  const BasicMatrix<T> p_inv = invert(p);

  // Contract the lower indices first: tmp^p_jk = c^p_qr P^q_j P^r_k.
  std::vector<T> half(n * n * n, T(0));
  for (std::size_t pp = 0; pp < n; ++pp)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t k = 0; k < n; ++k) {
        T acc(0);
        for (std::size_t r = 0; r < n; ++r) acc += spec.c(pp, q, r) * p(r, k);
        half[(pp * n + q) * n + k] = acc;
      }
  std::vector<T> lower(n * n * n, T(0));
  for (std::size_t pp = 0; pp < n; ++pp)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        T acc(0);
        for (std::size_t q = 0; q < n; ++q) acc += p(q, j) * half[(pp * n + q) * n + k];
        lower[(pp * n + j) * n + k] = acc;
      }

  BasicAlgebraSpec<T> out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        T acc(0);
        for (std::size_t pp = 0; pp < n; ++pp) acc += p_inv(i, pp) * lower[(pp * n + j) * n + k];
        out.c(i, j, k) = acc;
      }
  out.omega() = p.transpose() * spec.omega() * p;
  return out;
}

/// True iff omega(B,C)A + omega(A,B)C + omega(C,A)B vanishes on every basis
/// triple. Always true in dimension 2; otherwise true only for omega = 0.
bool omega_rhs_is_identically_zero(std::size_t dim, const Matrix& omega);

}  // namespace odla
