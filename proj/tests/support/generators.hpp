#pragma once

#include <cstdint>
#include <random>

#include "odla/algebra.hpp"
#include "odla/decomp3d.hpp"

namespace odla::testing {

/// Hand-rolled generators for property tests; deterministic per seed.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }

  bool coin() { return (rng_() & 1u) != 0; }

  Scalar rational(long range = 5, long max_den = 4) { return make_scalar(integer(-range, range), integer(1, max_den)); }

  Vector vector(std::size_t dim) {
    Vector v(dim);
    for (auto& x : v) x = rational();
    return v;
  }

  Matrix matrix(std::size_t dim, long range = 5) {
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) m(i, j) = integer(-range, range);
    return m;
  }

  Matrix symmetric_integer(std::size_t dim, long range = 3) {
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = i; j < dim; ++j) {
        Scalar v = integer(-range, range);
        m(i, j) = v;
        m(j, i) = v;
      }
    return m;
  }

  Matrix symmetric_rational(std::size_t dim) {
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = i; j < dim; ++j) {
        Scalar v = rational();
        m(i, j) = v;
        m(j, i) = v;
      }
    return m;
  }

  Matrix invertible(std::size_t dim, long range = 3) {
    for (;;) {
      Matrix p(dim);
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) p(i, j) = rational(range, 3);
      if (!is_zero(determinant(p))) return p;
    }
  }

  /// Skew bracket with integer entries in [-range, range]; omega zero.
  AlgebraSpec integer_bracket(std::size_t dim, long range = 5) {
    AlgebraSpec s(dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = i + 1; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k) s.set_bracket(i, j, k, integer(-range, range));
    return s;
  }

  /// Skew bracket and skew 2-form with rational entries.
  AlgebraSpec rational_spec(std::size_t dim) {
    AlgebraSpec s(dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = i + 1; j < dim; ++j) {
        for (std::size_t k = 0; k < dim; ++k) s.set_bracket(i, j, k, rational());
        s.set_omega(i, j, rational());
      }
    return s;
  }

  NabTriple triple() {
    NabTriple t;
    t.n = symmetric_rational(3);
    t.a = vector(3);
    t.b = vector(3);
    return t;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace odla::testing
