#include <doctest.h>

#include "repvar/canonical.hpp"
#include "repvar/text_format.hpp"

using namespace repvar;

namespace {
const Field F = Field::prime(101);
}

TEST_CASE("field specifications") {
  CHECK(parse_field("Q").first.is_rational());
  for (const char* s : {"GF 101", "gf101", "GF(101)"}) {
    auto [f, order] = parse_field(s);
    CHECK(f == F);
    CHECK(order == 1);
  }
  auto [f, order] = parse_field("GF 7 / t^3");
  CHECK(f == Field::prime(7));
  CHECK(order == 3);
  CHECK(field_spec(f, order) == "GF 7 / t^3");
  CHECK_THROWS(parse_field("GF 8"));
  CHECK_THROWS(parse_field("R"));
}

TEST_CASE("quiver round trip") {
  for (const char* name : {"kronecker", "square", "canonical:2,3,4", "canonical:2,2,2,2"}) {
    auto bq = builtin_quiver(name);
    REQUIRE(bq);
    BoundQuiver back = parse_quiver(emit_quiver(*bq));
    CHECK(back.quiver == bq->quiver);
    CHECK(back.bound == bq->bound);
    CHECK(emit_quiver(back) == emit_quiver(*bq));
  }
  CHECK_FALSE(builtin_quiver("pentagon"));
}

TEST_CASE("quiver defaults and errors") {
  BoundQuiver q = parse_quiver("quiver p\nvertex a b c\narrow x a b\narrow y b c\n");
  CHECK(q.bound == 3);
  try {
    parse_quiver("quiver p\nvertex a\narrow x a zz\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 11);
  }
  CHECK_THROWS_AS(parse_quiver("quiver p\nvertex a b\narrow x a b\nrelation x.x\n"), ParseError);
  CHECK_THROWS_AS(parse_quiver("quiver p\nvertex a\nfrobnicate\n"), ParseError);
}

TEST_CASE("module files") {
  ModuleFile mf = parse_module("module M over GF 101 on kronecker\ndim 1=2 2=1\nmat a = [1, 0]\n"
                               "mat b = [[0, 1]]\n");
  CHECK(mf.name == "M");
  CHECK_FALSE(mf.truncated());
  CHECK(mf.module.dim() == DimVec{2, 1});
  CHECK(mf.module.map(0) == Mat::from_ints(F, {{1, 0}}));

  ModuleFile back = parse_module(emit_module(mf.module, "M"));
  CHECK(back.module == mf.module);

  auto sq = Algebra::build(commutative_square(), Field::rationals());
  Representation p = projective(sq, 0);
  p.set_map(0, Mat::from_rows(sq->field(), 1, 1, {Scalar(sq->field(), mpq_class(-3, 7))}));
  p.set_map(1, Mat::from_rows(sq->field(), 1, 1, {Scalar(sq->field(), mpq_class(7, -3))}));
  ModuleFile rq = parse_module(emit_module(p, "P"));
  CHECK(rq.module == p);
}

TEST_CASE("module files with a separate quiver") {
  std::vector<BoundQuiver> known = parse_quivers("quiver a2\nvertex 1 2\narrow x 1 2\n");
  ModuleFile mf = parse_module("module M over Q on a2\ndim 1=1 2=1\nmat x = [[1/2]]\n", known);
  CHECK(mf.module.map(0).at(0, 0).rational() == mpq_class(1, 2));
  CHECK_THROWS_AS(parse_module("module M over Q on a3\ndim 1=1\n", known), ParseError);
}

TEST_CASE("module parse errors carry positions") {
  try {
    parse_module("module M over GF 101 on kronecker\ndim 1=1 2=1\nmat a = [[1, 2]]\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  // Relations are checked by the caller, not the parser.
  ModuleFile bad = parse_module("module M over GF 101 on square\ndim 1=1 2=1 3=1 4=1\nmat alpha = [[1]]\n"
                                "mat beta = [[1]]\n");
  CHECK_FALSE(validate(bad.module));
  CHECK_THROWS_AS(require_valid(bad.module), NotARepresentation);
}

TEST_CASE("truncated families") {
  ModuleFile mf = parse_module("module A over GF 101 / t^3 on kronecker\ndim 1=1 2=1\nmat a = [[1+2*t^2]]\n"
                               "mat b = [[t]]\n");
  REQUIRE(mf.truncated());
  CHECK(mf.order == 3);
  const TMat& a = mf.family.map(0);
  CHECK(a.coeff(0) == Mat::from_ints(F, {{1}}));
  CHECK(a.coeff(1).is_zero());
  CHECK(a.coeff(2) == Mat::from_ints(F, {{2}}));
  CHECK(mf.family.map(1).valuation() == 1);
  ModuleFile back = parse_module(emit_module(mf.family, "A"));
  CHECK(back.family.map(0) == a);
  CHECK(back.family.map(1) == mf.family.map(1));
  // t^2 vanishes in k[t]/(t^2).
  CHECK(parse_module("module A over GF 101 / t^2 on kronecker\ndim 1=1 2=1\nmat a = [[1+t^2]]\n").family.map(0) ==
        TMat::identity(F, 2, 1));
  CHECK_THROWS_AS(parse_module("module A over GF 101 on kronecker\ndim 1=1 2=1\nmat a = [[t]]\n"), ParseError);
}

TEST_CASE("cochains") {
  auto k = Algebra::build(kronecker_quiver(), F);
  Representation s1 = simple(k, 0), s2 = simple(k, 1);
  Cochain z = parse_cochain("a=[[1]]; b=[[3]]", s1, s2);
  CHECK(z[0] == Mat::from_ints(F, {{1}}));
  CHECK(z[1] == Mat::from_ints(F, {{3}}));
  CHECK(parse_cochain(emit_cochain(z, k->quiver()), s1, s2) == z);
  CHECK(parse_cochain("mat a = 2", s1, s2)[0] == Mat::from_ints(F, {{2}}));
  CHECK(parse_cochain("a=[[1]]", s1, s2)[1].is_zero());
  CHECK_THROWS_AS(parse_cochain("a=[[1, 2]]", s1, s2), ParseError);
}
