#include <doctest.h>

#include "odla/algebra.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace odla;
using fixtures::e;

namespace {

Vector add(const Vector& x, const Vector& y) {
  Vector r = x;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += y[i];
  return r;
}

Vector times(const Scalar& s, const Vector& x) {
  Vector r = x;
  for (auto& v : r) v *= s;
  return r;
}

// Valid 3D algebras without going through decomp3d: the hand-built IX_a,
// II and V moved by random basis changes.
AlgebraSpec random_valid_spec(testing::Gen& gen) {
  AlgebraSpec base;
  switch (gen.integer(0, 2)) {
    case 0: base = fixtures::ix_a1(); break;
    case 1: base = fixtures::type_ii(); break;
    default: base = fixtures::type_v(); break;
  }
  return transport(base, gen.invertible(3));
}

}  // namespace

TEST_CASE("validate_skew") {
  CHECK(validate_skew(AlgebraSpec(3)).ok());

  AlgebraSpec paired(3);
  paired.c(0, 1, 2) = 1;
  paired.c(0, 2, 1) = -1;
  CHECK(validate_skew(paired).ok());

  AlgebraSpec broken(3);
  broken.c(0, 1, 2) = 1;
  const auto report = validate_skew(broken);
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].kind == SkewViolation::Kind::bracket);
  CHECK(report.violations[0].k == 1);
  CHECK(report.violations[0].i == 2);
  CHECK(report.violations[0].j == 3);

  AlgebraSpec diag_bracket(2);
  diag_bracket.c(1, 0, 0) = 5;
  CHECK(!validate_skew(diag_bracket).ok());

  AlgebraSpec bad_omega(3);
  bad_omega.omega()(0, 2) = 1;
  const auto w = validate_skew(bad_omega);
  REQUIRE(w.violations.size() == 1);
  CHECK(w.violations[0].kind == SkewViolation::Kind::omega);
  CHECK(w.violations[0].i == 1);
  CHECK(w.violations[0].j == 3);
}

TEST_CASE("bracket") {
  CHECK(bracket(fixtures::type_ii(), e(2), e(3)) == e(1));
  CHECK(bracket(fixtures::ix_a1(), e(3), e(1)) == add(e(2), e(1)));
  CHECK_THROWS_AS(bracket(fixtures::type_ii(), e(1, 2), e(2)), DimensionError);

  testing::Gen gen(5);
  for (int trial = 0; trial < 50; ++trial) {
    const AlgebraSpec s = gen.rational_spec(4);
    const Vector x = gen.vector(4);
    CHECK(bracket(s, x, x) == Vector(4));
  }
}

TEST_CASE("jacobiator and omega_rhs") {
  const Vector zero(3);
  CHECK(jacobiator(AlgebraSpec(3), e(1), e(2), e(3)) == zero);
  CHECK(jacobiator(fixtures::type_ii(), e(1), e(2), e(3)) == zero);
  CHECK(jacobiator(fixtures::ix_a1(), e(1), e(2), e(3)) == times(-2, e(3)));

  CHECK(omega_rhs(AlgebraSpec(3), e(1), e(2), e(3)) == zero);
  CHECK(omega_rhs(fixtures::ix_a1(), e(1), e(2), e(3)) == times(-2, e(3)));

  testing::Gen gen(17);
  for (int trial = 0; trial < 50; ++trial) {
    const AlgebraSpec s = gen.rational_spec(2);
    CHECK(omega_rhs(s, gen.vector(2), gen.vector(2), gen.vector(2)) == Vector(2));
  }
}

TEST_CASE("jacobiator and omega_rhs are multilinear") {
  testing::Gen gen(99);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t dim = static_cast<std::size_t>(gen.integer(2, 4));
    const AlgebraSpec s = gen.rational_spec(dim);
    const Vector x = gen.vector(dim), y = gen.vector(dim), b = gen.vector(dim), c = gen.vector(dim);
    const Scalar alpha = gen.rational(), beta = gen.rational();
    const Vector mix = add(times(alpha, x), times(beta, y));
    for (auto* f : {&jacobiator, &omega_rhs}) {
      CHECK(f(s, mix, b, c) == add(times(alpha, f(s, x, b, c)), times(beta, f(s, y, b, c))));
      CHECK(f(s, b, mix, c) == add(times(alpha, f(s, b, x, c)), times(beta, f(s, b, y, c))));
      CHECK(f(s, b, c, mix) == add(times(alpha, f(s, b, c, x)), times(beta, f(s, b, c, y))));
    }
  }
}

TEST_CASE("residual") {
  CHECK(residual(fixtures::ix_a1()).is_zero());
  CHECK(residual(AlgebraSpec(3)).is_zero());

  SUBCASE("IX_a bracket with omega dropped") {
    AlgebraSpec s = fixtures::ix_a1();
    s.omega() = Matrix(3);
    const ResidualTensor r = residual(s);
    CHECK(!r.is_zero());
    // (omega_rhs - jacobiator)(e1, e2, e3) / 3 = (0 - (-2 e3)) / 3.
    CHECK(r(2, 0, 1, 2) == make_scalar(2, 3));
    CHECK(r(0, 0, 1, 2) == 0);
    CHECK(r(2, 1, 0, 2) == make_scalar(-2, 3));
    const auto comps = r.nonzero_components();
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].m == 3);
  }

  SUBCASE("skew violation is reported first") {
    AlgebraSpec s(3);
    s.c(0, 1, 2) = 1;
    CHECK_THROWS_AS(residual(s), SkewError);
  }

  SUBCASE("totally antisymmetric in the lower slots") {
    testing::Gen gen(3);
    const AlgebraSpec s = gen.rational_spec(4);
    const ResidualTensor r = residual(s);
    for (std::size_t m = 0; m < 4; ++m)
      for (std::size_t l = 0; l < 4; ++l)
        for (std::size_t j = 0; j < 4; ++j)
          for (std::size_t k = 0; k < 4; ++k) {
            CHECK(r(m, l, j, k) == -r(m, j, l, k));
            CHECK(r(m, l, j, k) == -r(m, l, k, j));
          }
  }
}

TEST_CASE("residual zero-set agrees with the bracket route on random specs") {
  testing::Gen gen(314);
  int valid = 0, invalid = 0;
  for (int trial = 0; trial < 240; ++trial) {
    const AlgebraSpec s = gen.coin() ? random_valid_spec(gen) : gen.rational_spec(3);
    const bool tensor_route = residual(s).is_zero();
    CHECK(tensor_route == oracle::jacobi_holds_on_basis(s));
    (tensor_route ? valid : invalid)++;
  }
  CHECK(valid >= 50);
  CHECK(invalid >= 50);
}

TEST_CASE("every two-dimensional pair is a deformed Lie algebra") {
  testing::Gen gen(22);
  for (int trial = 0; trial < 200; ++trial) {
    const AlgebraSpec s = gen.rational_spec(2);
    CHECK(residual(s).is_zero());
  }
}

TEST_CASE("transport") {
  testing::Gen gen(8);
  SUBCASE("identity leaves a spec unchanged") {
    const AlgebraSpec s = gen.rational_spec(3);
    CHECK(transport(s, Matrix::identity(3)) == s);
  }
  SUBCASE("type II rescaled") {
    Matrix p = Matrix::identity(3);
    p(2, 2) = 2;
    const AlgebraSpec t = transport(fixtures::type_ii(), p);
    CHECK(t.c(0, 1, 2) == 2);
    CHECK(t.c(0, 2, 1) == -2);
  }
  SUBCASE("composition") {
    for (int trial = 0; trial < 20; ++trial) {
      const AlgebraSpec s = gen.rational_spec(3);
      const Matrix p = gen.invertible(3), q = gen.invertible(3);
      CHECK(transport(transport(s, p), q) == transport(s, p * q));
    }
  }
  SUBCASE("validity is preserved") {
    for (int trial = 0; trial < 40; ++trial) {
      const AlgebraSpec s = transport(fixtures::ix_a1(), gen.invertible(3));
      CHECK(residual(s).is_zero());
    }
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(transport(fixtures::type_ii(), Matrix(3)), SingularMatrixError);
    CHECK_THROWS_AS(transport(fixtures::type_ii(), Matrix::identity(2)), DimensionError);
  }
}

TEST_CASE("omega_rhs_is_identically_zero") {
  Matrix w2(2);
  w2(0, 1) = 5;
  w2(1, 0) = -5;
  CHECK(omega_rhs_is_identically_zero(2, w2));

  Matrix w3(3);
  w3(0, 1) = 1;
  w3(1, 0) = -1;
  CHECK_FALSE(omega_rhs_is_identically_zero(3, w3));
  CHECK(omega_rhs_is_identically_zero(4, Matrix(4)));
}

TEST_CASE("only omega = 0 has a vanishing right side in dims 3 and 4") {
  const std::array<long, 3> grid = {-1, 0, 1};
  for (std::size_t dim : {3u, 4u}) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = i + 1; j < dim; ++j) slots.push_back({i, j});
    std::size_t combos = 1;
    for (std::size_t s = 0; s < slots.size(); ++s) combos *= grid.size();
    for (std::size_t code = 0; code < combos; ++code) {
      Matrix w(dim);
      bool nonzero = false;
      std::size_t rest = code;
      for (auto [i, j] : slots) {
        const long v = grid[rest % grid.size()];
        rest /= grid.size();
        w(i, j) = v;
        w(j, i) = -v;
        nonzero = nonzero || v != 0;
      }
      CHECK(omega_rhs_is_identically_zero(dim, w) == !nonzero);
    }
  }
}
