#include "odla/decomp_nd.hpp"

namespace odla {

GeneralSplit split_trace(const AlgebraSpec& spec) {
  const std::size_t n = spec.dim();
  if (n < 2) throw DimensionError("trace split needs dimension >= 2");
  GeneralSplit s;
  s.dim = n;
  s.a.assign(n, Scalar(0));
  const Scalar inv(1, static_cast<long>(n - 1));
  for (std::size_t k = 0; k < n; ++k) {
    Scalar trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += spec.c(i, i, k);
    s.a[k] = trace * inv;
  }
  s.alpha.assign(n * n * n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Scalar v = spec.c(i, j, k);
        if (i == j) v -= s.a[k];
        if (i == k) v += s.a[j];
        s.alpha_at(i, j, k) = v;
      }
  return s;
}

AlgebraSpec reassemble(const GeneralSplit& split) {
  const std::size_t n = split.dim;
  AlgebraSpec spec(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Scalar v = split.alpha_at(i, j, k);
        if (i == j) v += split.a[k];
        if (i == k) v -= split.a[j];
        spec.c(i, j, k) = v;
      }
  return spec;
}

Matrix induced_omega(const GeneralSplit& split) {
  const std::size_t n = split.dim;
  if (n <= 2) throw DimensionError("induced 2-form needs dimension >= 3");
  const Scalar factor(static_cast<long>(n - 1), static_cast<long>(n - 2));
  Matrix omega(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      Scalar acc = 0;
      for (std::size_t i = 0; i < n; ++i) acc += split.a[i] * split.alpha_at(i, j, k);
      omega(j, k) = acc * factor;
    }
  return omega;
}

Deformability deformability(const AlgebraSpec& spec) {
  if (spec.dim() <= 2) throw DimensionError("deformability is defined for dimension >= 3");
  AlgebraSpec candidate_spec = spec;
  candidate_spec.omega() = Matrix(spec.dim());
  if (!validate_skew(candidate_spec).ok()) throw SkewError("bracket is not skew");

  Deformability out;
  out.candidate = induced_omega(split_trace(spec));
  candidate_spec.omega() = out.candidate;
  ResidualTensor r = residual(candidate_spec);
  if (r.is_zero()) {
    out.omega = out.candidate;
  } else {
    out.failures = r.nonzero_components();
  }
  return out;
}

}  // namespace odla
