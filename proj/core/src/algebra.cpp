#include "odla/algebra.hpp"

namespace odla {

namespace {

void require_dim(const AlgebraSpec& spec, std::span<const Scalar> v) {
  if (v.size() != spec.dim()) throw DimensionError("vector length does not match algebra dimension");
}

}  // namespace

FloatAlgebraSpec to_float(const AlgebraSpec& spec) {
  const std::size_t n = spec.dim();
  FloatAlgebraSpec out(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out.c(k, i, j) = spec.c(k, i, j).get_d();
  out.omega() = to_float(spec.omega());
  return out;
}

Vector basis_vector(std::size_t dim, std::size_t i) {
  if (i >= dim) throw IndexError("basis index out of range");
  Vector e(dim);
  e[i] = 1;
  return e;
}

SkewReport validate_skew(const AlgebraSpec& spec) {
  SkewReport report;
  const std::size_t n = spec.dim();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        if (spec.c(k, i, j) != -spec.c(k, j, i)) {
          report.violations.push_back({SkewViolation::Kind::bracket, int(k + 1), int(i + 1), int(j + 1)});
        }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (spec.omega()(i, j) != -spec.omega()(j, i)) {
        report.violations.push_back({SkewViolation::Kind::omega, 0, int(i + 1), int(j + 1)});
      }
  return report;
}

Vector bracket(const AlgebraSpec& spec, std::span<const Scalar> x, std::span<const Scalar> y) {
  require_dim(spec, x);
  require_dim(spec, y);
  const std::size_t n = spec.dim();
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (is_zero(y[j])) continue;
      Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) out[k] += spec.c(k, i, j) * xy;
    }
  }
  return out;
}

Vector jacobiator(const AlgebraSpec& spec, std::span<const Scalar> a, std::span<const Scalar> b,
                  std::span<const Scalar> c) {
  Vector out = bracket(spec, a, bracket(spec, b, c));
  Vector t2 = bracket(spec, c, bracket(spec, a, b));
  Vector t3 = bracket(spec, b, bracket(spec, c, a));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += t2[i] + t3[i];
  return out;
}

Scalar evaluate_form(const Matrix& omega, std::span<const Scalar> x, std::span<const Scalar> y) {
  if (x.size() != omega.dim() || y.size() != omega.dim()) throw DimensionError("form argument length mismatch");
  Scalar acc = 0;
  for (std::size_t i = 0; i < omega.dim(); ++i)
    for (std::size_t j = 0; j < omega.dim(); ++j) acc += omega(i, j) * x[i] * y[j];
  return acc;
}

Vector omega_rhs(const AlgebraSpec& spec, std::span<const Scalar> a, std::span<const Scalar> b,
                 std::span<const Scalar> c) {
  require_dim(spec, a);
  require_dim(spec, b);
  require_dim(spec, c);
  const Scalar w_bc = evaluate_form(spec.omega(), b, c);
  const Scalar w_ab = evaluate_form(spec.omega(), a, b);
  const Scalar w_ca = evaluate_form(spec.omega(), c, a);
  Vector out(spec.dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = w_bc * a[i] + w_ab * c[i] + w_ca * b[i];
  return out;
}

bool ResidualTensor::is_zero() const {
  for (const auto& x : r_)
    if (!odla::is_zero(x)) return false;
  return true;
}

std::vector<ResidualTensor::Component> ResidualTensor::nonzero_components() const {
  std::vector<Component> out;
  for (std::size_t m = 0; m < dim_; ++m)
    for (std::size_t l = 0; l < dim_; ++l)
      for (std::size_t j = l + 1; j < dim_; ++j)
        for (std::size_t k = j + 1; k < dim_; ++k)
          if (!odla::is_zero((*this)(m, l, j, k))) {
            out.push_back({int(m + 1), int(l + 1), int(j + 1), int(k + 1), (*this)(m, l, j, k)});
          }
  return out;
}

ResidualTensor residual(const AlgebraSpec& spec) {
  const SkewReport report = validate_skew(spec);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    throw SkewError("spec is not skew: first violation at (" + std::to_string(v.k) + "," + std::to_string(v.i) +
                    "," + std::to_string(v.j) + ")");
  }
  const std::size_t n = spec.dim();

  // x[m][l][j][k] = c^m_il c^i_jk + delta^m_l omega_jk, before antisymmetrizing.
  std::vector<Scalar> x(n * n * n * n);
  auto at = [n](std::size_t m, std::size_t l, std::size_t j, std::size_t k) {
    return ((m * n + l) * n + j) * n + k;
  };
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          Scalar acc = 0;
          for (std::size_t i = 0; i < n; ++i) acc += spec.c(m, i, l) * spec.c(i, j, k);
          if (m == l) acc += spec.omega()(j, k);
          x[at(m, l, j, k)] = acc;
        }

  const Scalar sixth(1, 6);
  ResidualTensor r(n);
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          Scalar s = x[at(m, l, j, k)] + x[at(m, j, k, l)] + x[at(m, k, l, j)] - x[at(m, j, l, k)] -
                     x[at(m, l, k, j)] - x[at(m, k, j, l)];
          r(m, l, j, k) = s * sixth;
        }
  return r;
}

bool is_deformed_lie_algebra(const AlgebraSpec& spec) { return residual(spec).is_zero(); }

bool omega_rhs_is_identically_zero(std::size_t dim, const Matrix& omega) {
  if (omega.dim() != dim) throw DimensionError("2-form size does not match dimension");
  if (!omega.is_skew()) throw SkewError("omega is not skew");
  AlgebraSpec spec(dim);
  spec.omega() = omega;
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b)
      for (std::size_t c = 0; c < dim; ++c) {
        Vector v = omega_rhs(spec, basis_vector(dim, a), basis_vector(dim, b), basis_vector(dim, c));
        for (const auto& x : v)
          if (!is_zero(x)) return false;
      }
  return true;
}

}  // namespace odla
