#include <doctest.h>

#include "odla/classify3d.hpp"
#include "odla/decomp3d.hpp"
#include "odla/decomp_nd.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace odla;

namespace {

std::vector<AlgebraSpec> table_algebras() {
  std::vector<AlgebraSpec> out;
  for (BianchiType t : kUnimodularTypes) out.push_back(generate(t));
  for (BianchiType t : kNonUnimodularTypes) {
    if (!takes_parameter(t)) {
      out.push_back(generate(t));
      continue;
    }
    for (const Scalar& p : {make_scalar(1, 2), make_scalar(1), make_scalar(2)}) out.push_back(generate(t, p));
  }
  return out;
}

bool alpha_matches_n(const GeneralSplit& s, const Matrix& n) {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) {
        Scalar expect = 0;
        for (std::size_t l = 0; l < 3; ++l) expect += detail::epsilon(j, k, l) * n(i, l);
        if (s.alpha_at(i, j, k) != expect) return false;
      }
  return true;
}

bool alpha_traceless(const GeneralSplit& s) {
  for (std::size_t k = 0; k < s.dim; ++k) {
    Scalar tr = 0;
    for (std::size_t i = 0; i < s.dim; ++i) tr += s.alpha_at(i, i, k);
    if (!is_zero(tr)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("split_trace") {
  for (std::size_t dim : {2u, 3u, 5u}) {
    const GeneralSplit s = split_trace(AlgebraSpec(dim));
    CHECK(s.a == Vector(dim));
    for (const auto& v : s.alpha) CHECK(is_zero(v));
  }

  const GeneralSplit ix = split_trace(fixtures::ix_a1());
  CHECK(ix.a == Vector{0, 0, -1});
  const Vector ones{1, 1, 1};
  CHECK(alpha_matches_n(ix, Matrix::diagonal(ones)));

  const GeneralSplit v = split_trace(fixtures::type_v());
  CHECK(v.a == Vector{0, 0, -1});
  for (const auto& x : v.alpha) CHECK(is_zero(x));

  CHECK_THROWS_AS(split_trace(AlgebraSpec(1)), DimensionError);
}

TEST_CASE("induced_omega") {
  const Matrix w = induced_omega(split_trace(fixtures::ix_a1()));
  CHECK(w(0, 1) == -2);
  CHECK(w(1, 2) == 0);
  CHECK(w(2, 0) == 0);

  CHECK_THROWS_AS(induced_omega(split_trace(AlgebraSpec(2))), DimensionError);
}

TEST_CASE("induced_omega vanishes when either part does") {
  testing::Gen gen(12);
  for (std::size_t dim : {3u, 4u, 5u}) {
    for (int trial = 0; trial < 30; ++trial) {
      GeneralSplit s = split_trace(gen.integer_bracket(dim));
      GeneralSplit no_a = s;
      no_a.a = Vector(dim);
      CHECK(induced_omega(no_a).is_zero());
      GeneralSplit no_alpha = s;
      for (auto& x : no_alpha.alpha) x = 0;
      CHECK(induced_omega(no_alpha).is_zero());
    }
  }
}

TEST_CASE("split and reassemble are inverse") {
  testing::Gen gen(31);
  for (std::size_t dim : {3u, 4u, 5u}) {
    for (int trial = 0; trial < 170; ++trial) {
      const AlgebraSpec s = gen.integer_bracket(dim);
      const GeneralSplit split = split_trace(s);
      CHECK(alpha_traceless(split));
      CHECK(reassemble(split) == s);
    }
  }
}

TEST_CASE("table algebras: stored 2-form and sign bridge") {
  for (const AlgebraSpec& s : table_algebras()) {
    const GeneralSplit split = split_trace(s);
    const NabTriple t = decompose(s);
    CHECK(induced_omega(split) == s.omega());
    for (std::size_t i = 0; i < 3; ++i) CHECK(split.a[i] == -t.a[i]);
    CHECK(alpha_matches_n(split, t.n));
  }
}

TEST_CASE("deformability") {
  SUBCASE("IX_a recovers the table 2-form") {
    AlgebraSpec bare = fixtures::ix_a1();
    bare.omega() = Matrix(3);
    const Deformability d = deformability(bare);
    REQUIRE(d.admits());
    CHECK(*d.omega == fixtures::ix_a1().omega());
  }

  SUBCASE("every dim-3 bracket admits the forced 2-form") {
    testing::Gen gen(8);
    for (int trial = 0; trial < 200; ++trial) {
      const AlgebraSpec c = gen.integer_bracket(3);
      const Deformability d = deformability(c);
      REQUIRE(d.admits());
      const NabTriple t = decompose(c);
      NabTriple forced = t;
      forced.b = forced_b(t.n, t.a);
      CHECK(*d.omega == reconstruct(forced).omega());
    }
  }

  SUBCASE("small integer brackets in dim 4 that admit nothing") {
    // Random brackets with entries in {-1, 0, 1} until one fails.
    testing::Gen gen(404);
    int rejected = 0;
    for (int trial = 0; trial < 200 && rejected == 0; ++trial) {
      const AlgebraSpec c = gen.integer_bracket(4, 1);
      const Deformability d = deformability(c);
      if (!d.admits()) {
        ++rejected;
        CHECK(!d.failures.empty());
        AlgebraSpec with_candidate = c;
        with_candidate.omega() = d.candidate;
        CHECK(!residual(with_candidate).is_zero());
      }
    }
    CHECK(rejected == 1);
  }

  CHECK_THROWS_AS(deformability(AlgebraSpec(2)), DimensionError);
}
