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

// Counts all vertexwise maps commuting with the arrows over GF(3).
std::size_t brute_hom_dim(const Representation& h, const Representation& w) {
  std::vector<std::pair<std::size_t, std::size_t>> shapes;
  std::size_t entries = 0;
  for (std::size_t x = 0; x < h.dim().size(); ++x) {
    shapes.emplace_back(w.dim(x), h.dim(x));
    entries += w.dim(x) * h.dim(x);
  }
  REQUIRE(entries <= 8);
  std::size_t total = 1, count = 0;
  for (std::size_t i = 0; i < entries; ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    Morphism f;
    for (auto [r, k] : shapes) {
      Mat m(h.field(), r, k);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < k; ++j, c /= 3) m.set(i, j, static_cast<long>(c % 3));
      f.push_back(m);
    }
    if (is_morphism(h, w, f)) ++count;
  }
  std::size_t dim = 0;
  while (count > 1) count /= 3, ++dim;
  return dim;
}

}  // namespace

TEST_CASE("hom dimension agrees with brute force over GF(3)") {
  AlgebraPtr s3 = Algebra::build(commutative_square(), Field::prime(3));
  Rng rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    DimVec d1{draw(rng, 2), draw(rng, 2), draw(rng, 2), draw(rng, 2)};
    DimVec d2{draw(rng, 2), draw(rng, 2), draw(rng, 2), draw(rng, 2)};
    std::size_t entries = 0;
    for (std::size_t x = 0; x < 4; ++x) entries += d1[x] * d2[x];
    if (entries > 8) continue;
    Representation h = random_module(s3, d1, rng());
    Representation w = random_module(s3, d2, rng());
    CHECK(hom_dim(h, w) == brute_hom_dim(h, w));
  }
}

TEST_CASE("hom between standard Kronecker modules") {
  Representation p1 = projective(kr(), 0), p2 = projective(kr(), 1);
  CHECK(hom_dim(p2, p1) == 2);
  CHECK(hom_dim(p1, p2) == 0);
  CHECK(hom_dim(p1, p1) == 1);
  // [P_x, M] = dim M_x.
  Representation m = random_module(sq(), {2, 1, 2, 1}, 5);
  for (std::size_t x = 0; x < 4; ++x) CHECK(hom_dim(projective(sq(), x), m) == m.dim(x));
  for (std::size_t x = 0; x < 4; ++x) CHECK(hom_dim(m, injective(sq(), x)) == m.dim(x));
}

TEST_CASE("ext between Kronecker simples") {
  Representation s1 = simple(kr(), 0), s2 = simple(kr(), 1);
  CocycleSpace cs = cocycles(s1, s2);
  CHECK(cs.z_dim() == 2);
  CHECK(cs.b_dim() == 0);
  CHECK(cs.ext1_dim() == 2);
  CHECK(ext1_dim(s2, s1) == 0);
  CHECK(extn_dim(s1, s2, 1) == 2);
}

TEST_CASE("square resolutions and Ext^2") {
  Representation s1 = simple(sq(), 0), s4 = simple(sq(), 3);
  Resolution r = resolution(s1, 4);
  CHECK(r.complete);
  auto t = r.terms();
  REQUIRE(t.size() == 3);
  CHECK(t[0] == std::vector<std::size_t>{1, 0, 0, 0});
  CHECK(t[1] == std::vector<std::size_t>{0, 1, 1, 0});
  CHECK(t[2] == std::vector<std::size_t>{0, 0, 0, 1});
  CHECK(pdim(s1) == 2u);
  CHECK(idim(s4) == 2u);
  CHECK(pdim(projective(sq(), 0)) == 0u);
  CHECK(pdim(zero_module(sq())) == 0u);
  CHECK(extn_dim(s1, s4, 2) == 1);
  CHECK(extn_dim(s1, s4, 1) == 0);
  CHECK(extn_dim(s1, s4, 3) == 0);
}

TEST_CASE("cocycle space identities on random pairs") {
  Rng rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    DimVec d1{draw(rng, 3), draw(rng, 3), draw(rng, 3), draw(rng, 3)};
    DimVec d2{draw(rng, 3), draw(rng, 3), draw(rng, 3), draw(rng, 3)};
    Representation n = random_module(sq(), d1, rng());
    Representation m = random_module(sq(), d2, rng());
    CocycleSpace cs = cocycles(n, m);
    // B is the image of h -> h o N - M o h, whose kernel is Hom(N, M).
    CHECK(cs.b_dim() == cs.vdim - hom_dim(n, m));
    CHECK(cs.ext1_dim() == extn_dim(n, m, 1));
    for (const auto& z : cs.z_basis) CHECK(is_cocycle(n, m, z));
    for (std::size_t i = 0; i < cs.b_basis.size(); ++i)
      CHECK(cs.b_basis[i] == coboundary(n, m, cs.b_witness[i]));
  }
}

TEST_CASE("middle terms split exactly on coboundaries") {
  Representation s1 = simple(kr(), 0), s2 = simple(kr(), 1);
  CocycleSpace cs = cocycles(s1, s2);
  Rng rng(3);
  ExtClass xi = random_ext_class(cs, rng);
  REQUIRE_FALSE(is_zero(xi));
  Representation w = middle_term(xi);
  CHECK(validate(w));
  CHECK(w.dim() == DimVec{1, 1});
  CHECK(is_indecomposable(w));

  ExtClass zero{s1, s2, zero_cochain(s1, s2)};
  CHECK(iso(middle_term(zero), direct_sum(s2, s1)));

  Cochain bogus = zero_cochain(simple(sq(), 0), projective(sq(), 1));
  bogus[0] = Mat::from_ints(F, {{1}});
  // Z_beta.alpha - Z_delta.gamma must vanish; a lone Z_alpha into P_2 does not.
  CHECK_THROWS_AS(middle_term({simple(sq(), 0), projective(sq(), 1), bogus}), NotACocycle);
}

TEST_CASE("coboundary preimages") {
  Representation m = random_module(sq(), {1, 2, 1, 1}, 2);
  Representation n = random_module(sq(), {2, 1, 1, 0}, 3);
  Rng rng(6);
  Morphism h;
  for (std::size_t x = 0; x < 4; ++x) h.push_back(Mat::random(F, m.dim(x), n.dim(x), rng));
  Cochain b = coboundary(n, m, h);
  auto pre = coboundary_preimage(n, m, b);
  REQUIRE(pre);
  CHECK(coboundary(n, m, *pre) == b);
}

TEST_CASE("pushout and pullback along identities") {
  Representation s1 = simple(kr(), 0), s2 = simple(kr(), 1);
  Rng rng(8);
  ExtClass xi = random_ext_class(cocycles(s1, s2), rng);
  ExtClass l = push_pull(identity_morphism(s2), xi, Side::left, s2);
  ExtClass r = push_pull(identity_morphism(s1), xi, Side::right, s1);
  CHECK(l.z == xi.z);
  CHECK(r.z == xi.z);
}

TEST_CASE("Yoneda product on the square") {
  // S1 -> S2 -> S4 glue to a nonzero class in Ext^2(S1, S4).
  Representation s1 = simple(sq(), 0), s2 = simple(sq(), 1), s4 = simple(sq(), 3);
  Rng rng(12);
  ExtClass xi = random_ext_class(cocycles(s1, s2), rng);
  ExtClass eta = random_ext_class(cocycles(s2, s4), rng);
  CHECK_FALSE(yoneda_product(eta, xi).is_zero());
}

TEST_CASE("Auslander-Reiten translate on the Kronecker quiver") {
  Representation m(kr(), {1, 1}, {Mat::from_ints(F, {{1}}), Mat::from_ints(F, {{5}})});
  CHECK(iso(tau(m).module, m));
  CHECK(iso(tau_inverse(m).module, m));
  CHECK(tau(simple(kr(), 0)).module.dim() == DimVec{3, 2});
  CHECK(tau_inverse(projective(kr(), 1)).module.dim() == DimVec{2, 3});
  TauResult tp = tau(projective(kr(), 0));
  CHECK(tp.module.is_zero());
  CHECK(tp.dropped_any());
  PeriodReport pr = tau_orbit(m, 3);
  CHECK(pr.periodic);
  CHECK(pr.period == 1);
  PeriodReport pp = tau_orbit(simple(kr(), 0), 4);
  CHECK_FALSE(pp.periodic);
}

TEST_CASE("projective and injective multiplicities") {
  Representation m = direct_sum({projective(sq(), 0), projective(sq(), 0), simple(sq(), 1)}, sq());
  CHECK(projective_multiplicity(m, 0) == 2);
  CHECK(projective_multiplicity(m, 1) == 0);
  CHECK(injective_multiplicity(m, 3) == 2);
}

TEST_CASE("syzygy of a simple is the radical of its cover") {
  Representation s = syzygy(simple(kr(), 0));
  CHECK(s.dim() == DimVec{0, 2});
}
