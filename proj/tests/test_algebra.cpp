#include <doctest.h>

#include "repvar/canonical.hpp"

using namespace repvar;

namespace {
const Field F = Field::prime(101);
}

TEST_CASE("path algebra dimensions") {
  CHECK(Algebra::build(kronecker_quiver(), F)->dimension() == 4);
  CHECK(Algebra::build(commutative_square(), F)->dimension() == 9);
  CHECK(Algebra::build(commutative_square(), Field::rationals())->dimension() == 9);
  // 5 idempotents, 6 arrows, and three arm paths 0 -> w modulo one relation.
  CHECK(build_canonical({2, 2, 2}, {1}, F).algebra->dimension() == 13);
}

TEST_CASE("reduction respects the commutativity relation") {
  AlgebraPtr a = Algebra::build(commutative_square(), F);
  const Quiver& q = a->quiver();
  CHECK(a->reduce(Path::parse(q, "beta.alpha")) == a->reduce(Path::parse(q, "delta.gamma")));
  CHECK(a->basis(q.vertex_index("1"), q.vertex_index("4")).size() == 1);
}

TEST_CASE("bound kills long paths") {
  BoundQuiver loop;
  loop.name = "loop";
  loop.quiver.add_vertex("x");
  loop.quiver.add_arrow("l", "x", "x");
  loop.relations.push_back({{{1, Path::parse(loop.quiver, "l.l")}}});
  AlgebraPtr a = Algebra::build(loop, F);
  CHECK(a->dimension() == 2);
  CHECK(a->reduce(Path::parse(loop.quiver, "l.l")).is_zero());
  loop.relations.clear();
  CHECK_THROWS_AS(Algebra::build(loop, F), NotAdmissible);
}

TEST_CASE("standard modules") {
  AlgebraPtr k = Algebra::build(kronecker_quiver(), F);
  CHECK(projective(k, 0).dim() == DimVec{1, 2});
  CHECK(projective(k, 1).dim() == DimVec{0, 1});
  CHECK(injective(k, 0).dim() == DimVec{1, 0});
  CHECK(injective(k, 1).dim() == DimVec{2, 1});
  CHECK(simple(k, 1).dim() == DimVec{0, 1});

  AlgebraPtr s = Algebra::build(commutative_square(), F);
  CHECK(projective(s, 0).dim() == DimVec{1, 1, 1, 1});
  CHECK(injective(s, 3).dim() == DimVec{1, 1, 1, 1});
  for (std::size_t x = 0; x < 4; ++x) {
    CHECK(validate(projective(s, x)));
    CHECK(validate(injective(s, x)));
  }
}

TEST_CASE("opposite algebra") {
  AlgebraPtr s = Algebra::build(commutative_square(), F);
  AlgebraPtr op = s->opposite();
  CHECK(op->dimension() == s->dimension());
  CHECK(op->opposite()->same_as(*s));
  CHECK_FALSE(op->same_as(*s));
  // P_x of the opposite is the dual of I_x.
  for (std::size_t x = 0; x < 4; ++x) CHECK(projective(op, x).dim() == injective(s, x).dim());
}

TEST_CASE("algebras over different fields differ") {
  AlgebraPtr a = Algebra::build(kronecker_quiver(), F);
  AlgebraPtr b = Algebra::build(kronecker_quiver(), Field::prime(7));
  CHECK_FALSE(a->same_as(*b));
  CHECK_THROWS_AS(require_same_algebra(a, b), QuiverMismatch);
}
