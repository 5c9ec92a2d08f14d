#pragma once

#include <optional>
#include <vector>

#include "odla/algebra.hpp"

namespace odla {

/// c^i_jk = alpha^i_jk + a_k delta^i_j - a_j delta^i_k with alpha^i_ik = 0.
///
/// Note the sign convention on `a` is opposite to the (n, a, b) triple of
/// decomp3d: in dimension 3, split_trace(c).a == -decompose(c).a and
/// alpha^i_jk == n^il eps_jkl.
struct GeneralSplit {
  std::size_t dim = 0;
  std::vector<Scalar> alpha;  // alpha[(i * dim + j) * dim + k] = alpha^i_jk
  Vector a;

  const Scalar& alpha_at(std::size_t i, std::size_t j, std::size_t k) const { return alpha[(i * dim + j) * dim + k]; }
  Scalar& alpha_at(std::size_t i, std::size_t j, std::size_t k) { return alpha[(i * dim + j) * dim + k]; }

  bool operator==(const GeneralSplit&) const = default;
};

/// a_k = c^i_ik / (n - 1). Throws DimensionError for dim < 2.
GeneralSplit split_trace(const AlgebraSpec& spec);

/// Inverse of split_trace, ignoring the 2-form (the result has omega = 0).
AlgebraSpec reassemble(const GeneralSplit& split);

/// omega_jk = (n-1)/(n-2) a_i alpha^i_jk. Throws DimensionError for dim <= 2.
Matrix induced_omega(const GeneralSplit& split);

/// Outcome of asking whether a bracket carries any compatible 2-form.
/// The trace of the deformed Jacobi identity forces the candidate, so either
/// the candidate works or nothing does.
struct Deformability {
  Matrix candidate;             // induced_omega(split_trace(c)), always filled
  std::optional<Matrix> omega;  // set iff the candidate satisfies the identity
  std::vector<ResidualTensor::Component> failures;  // residual with the candidate

  bool admits() const { return omega.has_value(); }
};

/// Uses only the bracket of `spec`; its 2-form is ignored.
/// Throws DimensionError for dim <= 2, SkewError on a non-skew bracket.
Deformability deformability(const AlgebraSpec& spec);

}  // namespace odla
