#include <doctest.h>

#include <variant>

#include "repvar/geometry.hpp"

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

DimVec random_d(Rng& rng, std::size_t n, std::size_t max) {
  DimVec d(n);
  for (auto& x : d) x = draw(rng, max + 1);
  return d;
}

}  // namespace

TEST_CASE("Euler form values") {
  EulerForm k = euler_form(kr());
  CHECK(k.matrix == std::vector<std::vector<long>>{{1, -2}, {0, 1}});
  CHECK(k.pair({1, 1}, {1, 1}) == 0);
  CHECK(k.flags_hold());
  EulerForm s = euler_form(sq());
  CHECK(s.gldim == 2u);
  CHECK(s.chi({1, 1, 1, 1}) == 1);
  CHECK(s.matrix[0][3] == 1);
  CHECK(a_coeff(commutative_square(), {1, 1, 1, 1}) == 3);
  CHECK(a_coeff(kronecker_quiver(), {1, 1}) == 2);
  CHECK(vdim({1, 2}, {3, 4}) == 11);
}

TEST_CASE("flags are enforced") {
  BoundQuiver loop;
  loop.name = "loop";
  loop.quiver.add_vertex("x");
  loop.quiver.add_arrow("l", "x", "x");
  loop.relations.push_back({{{1, Path::parse(loop.quiver, "l.l")}}});
  AlgebraPtr a = Algebra::build(loop, F);
  CHECK_THROWS_AS(euler_form(a), FlagsRequired);
  EulerForm t = euler_form(a, true);
  CHECK(t.trusted);
  CHECK_FALSE(t.flags_hold());
}

TEST_CASE("alternating sum of Ext equals the Euler form") {
  EulerForm e = euler_form(sq());
  Rng rng(40);
  for (int trial = 0; trial < 25; ++trial) {
    Representation m = random_module(sq(), random_d(rng, 4, 2), rng());
    Representation n = random_module(sq(), random_d(rng, 4, 2), rng());
    long alt = static_cast<long>(extn_dim(m, n, 0)) - static_cast<long>(extn_dim(m, n, 1)) +
               static_cast<long>(extn_dim(m, n, 2));
    CHECK(extn_dim(m, n, 3) == 0);
    CHECK(alt == e.pair(m.dim(), n.dim()));
  }
}

TEST_CASE("tangent reports") {
  TangentReport t = tangent_report(m_lambda(5));
  CHECK(t.dim_t == 2);
  CHECK(t.orbit_dim == 1);
  CHECK(t.ext1 == 1);
  CHECK(t.a == 2);
  CHECK(t.ext2_euler == 0L);

  TangentReport p = tangent_report(projective(kr(), 0));
  CHECK(p.dim_t == 4);
  CHECK(p.orbit_dim == 4);
  CHECK(p.ext1 == 0);
  CHECK(p.a == 4);
}

TEST_CASE("dim T - a equals Ext^2 on random square modules") {
  Rng rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    Representation m = random_module(sq(), random_d(rng, 4, 2), rng());
    TangentReport t = tangent_report(m);
    REQUIRE(t.flags);
    REQUIRE(t.ext2_euler);
    REQUIRE(t.ext2_resolution);
    CHECK(*t.ext2_euler == static_cast<long>(*t.ext2_resolution));
    CHECK(t.dim_t == t.orbit_dim + t.ext1);
    CHECK(t.orbit_dim == t.vdim - t.hom);
  }
}

TEST_CASE("Phi matrix rank") {
  Rng rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    Representation h = random_module(sq(), random_d(rng, 4, 2), rng());
    Representation w = random_module(sq(), random_d(rng, 4, 2), rng());
    Mat phi = phi_matrix(h, w);
    CHECK(phi.cols() == vdim(h.dim(), w.dim()));
    CHECK(phi.cols() - rank(phi) == hom_dim(h, w));
    auto prof = hom_rank_profile(h, TruncatedRepresentation::constant(w, 3));
    CHECK(prof == std::vector<std::size_t>{hom_dim(h, w), 2 * hom_dim(h, w), 3 * hom_dim(h, w)});
  }
}

TEST_CASE("triangularization: a nonsplit family yields a witness") {
  TMat a(F, 2, 1, 1);
  a.coeff(1) = Mat::from_ints(F, {{1}});
  TruncatedRepresentation fam(kr(), 2, {1, 1}, {a, TMat(F, 2, 1, 1)});
  Representation u = simple(kr(), 1), v = simple(kr(), 0);
  SplitOrWitness r = triangularize_family(fam, u, v);
  REQUIRE(std::holds_alternative<WitnessResult>(r));
  const auto& w = std::get<WitnessResult>(r);
  CHECK(w.level == 1);
  CHECK(is_cocycle(v, u, w.z));
  CHECK_FALSE(coboundary_preimage(v, u, w.z).has_value());
  CHECK(is_indecomposable(w.middle));

  // Probes: W degenerates to U + V, so Hom into the split module is larger.
  auto probes = hom_order_probe(direct_sum(u, v), w.middle, probe_zoo(kr()));
  long strict = 0;
  for (const auto& p : probes) {
    CHECK(p.difference() >= 0);
    if (p.difference() > 0) ++strict;
  }
  CHECK(strict > 0);
}

TEST_CASE("triangularization: a split family") {
  Representation p = projective(kr(), 0);
  TruncatedRepresentation fam = TruncatedRepresentation::constant(direct_sum(p, p), 3);
  Rng rng(5);
  std::vector<TMat> g;
  for (std::size_t x = 0; x < 2; ++x) {
    TMat gx = TMat::identity(F, 3, fam.dim(x));
    gx.coeff(1) = Mat::random(F, fam.dim(x), fam.dim(x), rng);
    g.push_back(gx);
  }
  TruncatedRepresentation moved = conjugate(fam, g);
  SplitOrWitness r = triangularize_family(moved, p, p);
  REQUIRE(std::holds_alternative<SplitResult>(r));
  const auto& s = std::get<SplitResult>(r);
  CHECK(validate(s.diagonal));
  // Off-diagonal blocks vanish mod t^3.
  for (std::size_t a = 0; a < 2; ++a) {
    const TMat& m = s.diagonal.map(a);
    CHECK(m.block(0, 1, 2, 1).is_zero());
    CHECK(m.block(2, 0, 2, 1).is_zero());
  }
}

TEST_CASE("nonsingularity certificate on the Kronecker quiver") {
  Representation u = simple(kr(), 1), v = simple(kr(), 0);
  Representation n = direct_sum(u, v);
  Cochain z = zero_cochain(v, u);
  z[0] = Mat::from_ints(F, {{1}});
  SmoothnessCertificate c = certify_nonsingular(n, u, v, z);
  CHECK(c.tangent_bound == 2);
  CHECK(c.a == 2);
  CHECK(c.z_nn == 2);
  CHECK(c.stratum_tangent <= c.stratum_bound);
  CHECK(c.tangent_bound == c.a);
}

TEST_CASE("certificate refusal names the hypothesis") {
  Representation u = simple(sq(), 1);
  Representation v = direct_sum(simple(sq(), 0), simple(sq(), 0));
  Representation n(sq(), {2, 1, 0, 0});
  Cochain z = zero_cochain(v, u);
  z[0] = Mat::from_ints(F, {{1, 0}});
  try {
    certify_nonsingular(n, u, v, z);
    FAIL("expected a refusal");
  } catch (const CertificateRefused& e) {
    CHECK(std::string(e.what()).find("pdim W <= 1") != std::string::npos);
  }
}

TEST_CASE("stratum tangent conditions") {
  // Hom(V,U) = 0 and Ext^2(V,U) = 0: no condition cuts the tangent space.
  Representation u = simple(kr(), 1), v = simple(kr(), 0);
  ETangent t = e_tangent(u, v);
  CHECK(stratum_tangent_dim(u, v) == t.dim());
  CHECK(stratum_tangent_test(zero_cochain(u, u), t.vu.z_basis[0], zero_cochain(v, v), u, v).holds());

  Rng rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    Representation a = random_module(sq(), random_d(rng, 4, 2), rng());
    Representation b = random_module(sq(), random_d(rng, 4, 2), rng());
    ETangent e = e_tangent(a, b);
    CHECK(stratum_tangent_dim(a, b) <= e.dim());
    CHECK(stratum_tangent_test(zero_cochain(a, a), zero_cochain(b, a), zero_cochain(b, b), a, b).holds());
    // Coboundaries on the diagonal are tangent to the orbit, hence to the stratum.
    for (const auto& z11 : cocycles(a, a).b_basis)
      CHECK(stratum_tangent_test(z11, zero_cochain(b, a), zero_cochain(b, b), a, b).holds());
  }
}
