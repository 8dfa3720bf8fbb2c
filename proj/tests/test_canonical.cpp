#include <doctest.h>

#include "repvar/canonical.hpp"

using namespace repvar;

namespace {
const Field F = Field::prime(101);
}

TEST_CASE("weight normalization and type") {
  CHECK(normalize_weights({1, 2, 3}) == std::vector<std::size_t>{2, 3});
  CHECK(normalize_weights({1, 1}) == std::vector<std::size_t>{1, 1});
  CHECK(normalize_weights({2, 1, 2, 2}) == std::vector<std::size_t>{2, 2, 2});
  CHECK(classify_weights({2, 2, 2}) == WeightType::domestic);
  CHECK(classify_weights({2, 3, 5}) == WeightType::domestic);
  CHECK(classify_weights({2, 3, 6}) == WeightType::tubular);
  CHECK(classify_weights({3, 3, 3}) == WeightType::tubular);
  CHECK(classify_weights({2, 2, 2, 2}) == WeightType::tubular);
  CHECK(classify_weights({2, 3, 7}) == WeightType::wild);
  CHECK(classify_weights({2, 2, 2, 2, 2}) == WeightType::wild);
  CHECK(parse_weights("2,3,7") == std::vector<std::size_t>{2, 3, 7});
  CHECK_THROWS_AS(parse_weights("2,x"), BadParameters);
  CHECK_THROWS_AS(parse_weights("0,2"), BadParameters);
}

TEST_CASE("canonical bound quiver shape") {
  CanonicalAlgebra c = build_canonical({2, 2, 2}, {1}, F);
  CHECK(c.algebra->vertex_count() == 5);
  CHECK(c.algebra->quiver().arrow_count() == 6);
  CHECK(c.type() == WeightType::domestic);
  CHECK(c.algebra->bound_quiver().bound == 3);
  CHECK(c.euler.flags_hold());
  CanonicalAlgebra w = build_canonical({2, 3, 7}, {1}, F);
  CHECK(w.algebra->vertex_count() == 11);
  CHECK(w.type() == WeightType::wild);
  CHECK(w.algebra->bound_quiver().bound == 8);
}

TEST_CASE("parameters must be distinct and nonzero") {
  CHECK_THROWS_AS(build_canonical({2, 2, 2, 2}, {1, 1}, F), BadParameters);
  CHECK_THROWS_AS(build_canonical({2, 2, 2}, {0}, F), BadParameters);
  CHECK_THROWS_AS(build_canonical({2, 2, 2, 2}, {1, 102}, F), BadParameters);
  CHECK_THROWS_AS(build_canonical({2, 2, 2}, {}, F), BadParameters);
  CHECK_NOTHROW(build_canonical({2, 2, 2, 2}, {1, 2}, F));
  CHECK(default_lambda({2, 2, 2, 2}) == std::vector<mpq_class>{1, 2});
}

TEST_CASE("h is radical and homogeneous modules are tau-fixed") {
  for (auto p : {std::vector<std::size_t>{2, 2, 2}, {2, 3, 7}, {2, 2, 2, 2}}) {
    CanonicalAlgebra c = build_canonical(p, default_lambda(p), F);
    DimVec h = h_vector(c);
    CHECK(c.euler.chi(h) == 0);
    for (const auto& mu : homogeneous_parameters(c, 2)) {
      Representation hm = homogeneous_module(c, mu);
      REQUIRE(validate(hm));
      CHECK(hm.dim() == h);
      CHECK(hom_dim(hm, hm) == 1);
      CHECK(ext1_dim(hm, hm) == 1);
      PeriodReport pr = tau_orbit(hm, 3);
      CHECK(pr.periodic);
      CHECK(pr.period == 1);
    }
  }
}

TEST_CASE("exceptional parameters") {
  CanonicalAlgebra c = build_canonical({2, 2, 2, 2}, {1, 2}, F);
  CHECK(is_exceptional_parameter(c, 0));
  CHECK(is_exceptional_parameter(c, 2));
  CHECK_FALSE(is_exceptional_parameter(c, 3));
  CHECK_THROWS(homogeneous_module(c, 1));
}

TEST_CASE("exceptional tube mouths have length equal to the weight") {
  for (auto p : {std::vector<std::size_t>{2, 2, 2}, {2, 3, 7}, {3, 3, 3}}) {
    CanonicalAlgebra c = build_canonical(p, default_lambda(p), F);
    for (std::size_t i = 0; i < c.arms(); ++i) CHECK(exceptional_mouth(c, i).size() == p[i]);
  }
}

TEST_CASE("bisection of simples") {
  CanonicalAlgebra c = build_canonical({2, 2, 2}, {1}, F);
  DimVec h = h_vector(c);
  Bisection s0 = bisection_classify(c, simple(c.algebra, c.source));
  CHECK(s0.cls == BisectionClass::right);
  REQUIRE(s0.summands.size() == 1);
  CHECK(s0.summands[0].pairing == 1);
  Bisection sw = bisection_classify(c, simple(c.algebra, c.sink));
  CHECK(sw.cls == BisectionClass::left);
  CHECK(sw.summands[0].pairing == -1);
  for (const auto& arm : c.arm_vertices)
    for (std::size_t v : arm) CHECK(c.euler.pair(h, simple(c.algebra, v).dim()) == 0);
  Bisection mixed =
      bisection_classify(c, direct_sum(simple(c.algebra, c.source), simple(c.algebra, c.sink)));
  CHECK(mixed.cls == BisectionClass::mixed);
  CHECK(to_string(BisectionClass::left) == "L");
  CHECK(pdim(simple(c.algebra, c.source)) == 2u);
}

TEST_CASE("Hom from the right class to the left class vanishes") {
  CanonicalAlgebra c = build_canonical({2, 3, 7}, {1}, F);
  DimVec h = h_vector(c);
  std::vector<Representation> left, right;
  for (const auto& z : probe_zoo(c.algebra, tube_modules(c)))
    (c.euler.pair(h, z.module.dim()) <= 0 ? left : right).push_back(z.module);
  REQUIRE_FALSE(left.empty());
  REQUIRE_FALSE(right.empty());
  for (const auto& u : left)
    for (const auto& v : right) {
      CHECK(hom_dim(v, u) == 0);
      CHECK(ext1_dim(u, v) == 0);
    }
}

TEST_CASE("periodicity scan is consistent") {
  CanonicalAlgebra c = build_canonical({2, 2, 2}, {1}, F);
  ScanReport s = tau_periodicity_scan(c, h_vector(c), 10, 4, 3);
  CHECK(s.samples.size() == 10);
  CHECK(s.consistent());
  CHECK(s.periodic_count() > 0);
  ScanReport again = tau_periodicity_scan(c, h_vector(c), 10, 4, 3);
  CHECK(again.periodic_count() == s.periodic_count());
}
