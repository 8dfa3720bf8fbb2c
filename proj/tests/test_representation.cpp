#include <doctest.h>

#include "repvar/homology.hpp"

using namespace repvar;

namespace {

const Field F = Field::prime(101);

AlgebraPtr kr() {
  static AlgebraPtr a = Algebra::build(kronecker_quiver(), F);
  return a;
}
AlgebraPtr sq() {
  static AlgebraPtr a = Algebra::build(commutative_square(), F);
  return a;
}

Representation m_lambda(long lambda) {
  return Representation(kr(), {1, 1}, {Mat::from_ints(F, {{1}}), Mat::from_ints(F, {{lambda}})});
}

}  // namespace

TEST_CASE("relations are checked") {
  // alpha and beta nonzero, gamma and delta zero: beta.alpha != delta.gamma.
  Representation bad(sq(), {1, 1, 1, 1},
                     {Mat::from_ints(F, {{1}}), Mat::from_ints(F, {{1}}), Mat(F, 1, 1), Mat(F, 1, 1)});
  CHECK_FALSE(validate(bad));
  CHECK_THROWS_AS(require_valid(bad), NotARepresentation);
  CHECK_THROWS_AS(Representation(kr(), {1, 1}, {Mat(F, 2, 1), Mat(F, 1, 1)}), ShapeError);
}

TEST_CASE("direct sums put the first summand first") {
  Representation s = direct_sum(m_lambda(2), simple(kr(), 0));
  CHECK(s.dim() == DimVec{2, 1});
  CHECK(s.map(0) == Mat::from_ints(F, {{1, 0}}));
  CHECK(s.map(1) == Mat::from_ints(F, {{2, 0}}));
}

TEST_CASE("decomposition of Kronecker modules") {
  auto parts = decompose(m_lambda(3));
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].multiplicity == 1);

  Representation p = projective(kr(), 0);
  auto pp = decompose(direct_sum(p, p));
  REQUIRE(pp.size() == 1);
  CHECK(pp[0].multiplicity == 2);
  CHECK(iso(pp[0].module, p));

  Representation mix = direct_sum({m_lambda(3), simple(kr(), 1), m_lambda(4), m_lambda(3)}, kr());
  auto mp = decompose(mix);
  REQUIRE(mp.size() == 3);
  CHECK(mp[0].module.dim() == DimVec{0, 1});
  std::size_t total = 0;
  for (const auto& s : mp) total += s.multiplicity;
  CHECK(total == 4);

  // Jordan block of size 2 at lambda = 0 is indecomposable.
  Representation j(kr(), {2, 2}, {Mat::identity(F, 2), Mat::from_ints(F, {{0, 1}, {0, 0}})});
  CHECK(is_indecomposable(j));
  CHECK_THROWS_AS(decompose(Representation(Algebra::build(kronecker_quiver(), Field::rationals()), {1, 1})),
                  UnsupportedField);
}

TEST_CASE("isomorphism classes of regular modules") {
  CHECK(iso(m_lambda(5), m_lambda(5)));
  CHECK_FALSE(iso(m_lambda(5), m_lambda(6)));
  CHECK_FALSE(iso(projective(kr(), 0), injective(kr(), 1)));
  Rng rng(4);
  IsoResult r = iso_test(m_lambda(5), m_lambda(6), rng);
  CHECK_FALSE(r.isomorphic);
  CHECK(r.miss_probability < 1e-6);
}

TEST_CASE("conjugation preserves validity and isomorphism type") {
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    DimVec d{draw(rng, 3), draw(rng, 3), draw(rng, 3), draw(rng, 3)};
    if (d == DimVec{0, 0, 0, 0}) d[0] = 1;
    Representation m = random_module(sq(), d, rng());
    REQUIRE(validate(m));
    CHECK(m.dim() == d);
    Representation g = conjugate(m, random_gl(sq(), d, rng));
    CHECK(validate(g));
    CHECK(iso(m, g));
    std::size_t before = 0, after = 0;
    for (const auto& s : decompose(m)) before += s.multiplicity;
    for (const auto& s : decompose(g)) after += s.multiplicity;
    CHECK(before == after);
  }
}

TEST_CASE("random modules are deterministic per seed") {
  CHECK(random_module(sq(), {2, 1, 1, 2}, 9) == random_module(sq(), {2, 1, 1, 2}, 9));
}

TEST_CASE("duality") {
  Representation p = projective(sq(), 0);
  Representation dp = dual(p);
  CHECK(dp.algebra()->same_as(*sq()->opposite()));
  CHECK(validate(dp));
  CHECK(dual(dp).dim() == p.dim());
  CHECK(iso(dp, injective(sq()->opposite(), 0)));
}

TEST_CASE("endomorphism algebra") {
  Representation m = m_lambda(2);
  EndAlgebra e1 = end_algebra(m);
  REQUIRE(e1.basis.size() == 1);
  CHECK(is_morphism(m, m, e1.basis[0]));
  CHECK(end_algebra(direct_sum(m, m)).basis.size() == 4);
  CHECK(end_algebra(projective(kr(), 0)).basis.size() == 1);
}

TEST_CASE("truncated representations") {
  TMat a(F, 2, 1, 1);
  a.coeff(1) = Mat::from_ints(F, {{1}});
  TruncatedRepresentation fam(kr(), 2, {1, 1}, {a, TMat(F, 2, 1, 1)});
  CHECK(validate(fam));
  Representation s = fam.special_fiber();
  CHECK(s.map(0).is_zero());
  CHECK(fam.truncate(1).order() == 1);
  CHECK(TruncatedRepresentation::constant(m_lambda(4), 3).special_fiber() == m_lambda(4));
}
