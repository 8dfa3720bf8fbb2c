#include <doctest.h>

#include "repvar/fp_poly.hpp"

using namespace repvar;

namespace {

// Brute-force nullity over GF(5) for tiny matrices.
std::size_t brute_nullity_gf5(const Mat& a) {
  std::size_t n = a.cols(), count = 0, total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 5;
  for (std::size_t code = 0; code < total; ++code) {
    Mat v(a.field(), n, 1);
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i, c /= 5) v.set(i, 0, static_cast<long>(c % 5));
    if ((a * v).is_zero()) ++count;
  }
  std::size_t dim = 0;
  while (count > 1) count /= 5, ++dim;
  return dim;
}

// Block lower-triangular Toeplitz matrix written out entry by entry.
Mat unfold_by_hand(const TMat& a) {
  const std::size_t n = a.order(), r = a.rows(), c = a.cols();
  Mat out(a.field(), n * r, n * c);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (std::size_t x = 0; x < r; ++x)
        for (std::size_t y = 0; y < c; ++y) out.set(i * r + x, j * c + y, a.coeff(i - j).at(x, y));
  return out;
}

}  // namespace

TEST_CASE("kernel and rank on small examples") {
  Field q = Field::rationals();
  Field f5 = Field::prime(5);
  CHECK(kernel_basis(Mat(q, 2, 3)).cols() == 3);
  CHECK(kernel_basis(Mat::identity(q, 3)).cols() == 0);
  Mat a = Mat::from_ints(f5, {{1, 2}, {2, 4}});
  Mat k = kernel_basis(a);
  REQUIRE(k.cols() == 1);
  CHECK((a * k).is_zero());
  CHECK(brute_nullity_gf5(a) == 1);
  CHECK(rank(Mat::identity(q, 4)) == 4);
  CHECK(rank(Mat(q, 4, 4)) == 0);
  CHECK(rank(Mat::from_ints(q, {{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("solve") {
  Field q = Field::rationals();
  Mat b = Mat::from_ints(q, {{3}, {1}});
  auto x = solve(Mat::from_ints(q, {{1, 1}, {0, 1}}), b);
  REQUIRE(x);
  CHECK(*x == Mat::from_ints(q, {{2}, {1}}));
  CHECK(*solve(Mat::identity(q, 2), b) == b);
  CHECK_FALSE(solve(Mat(q, 2, 2), b).has_value());
  CHECK_THROWS_AS(solve(Mat::identity(q, 3), b), ShapeError);
}

TEST_CASE("rank-nullity and solvability on random GF(101) matrices") {
  Field f = Field::prime(101);
  Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = 1 + draw(rng, 6), c = 1 + draw(rng, 6), k = draw(rng, 4);
    // Low-rank products make the kernel nontrivial.
    Mat a = Mat::random(f, r, k, rng) * Mat::random(f, k, c, rng);
    CHECK(rank(a) + kernel_basis(a).cols() == c);
    Mat b = Mat::random(f, r, 1, rng);
    bool consistent = rank(a) == rank(hstack({a, b}, f, r));
    auto x = solve(a, b);
    CHECK(x.has_value() == consistent);
    if (x) CHECK(a * *x == b);
  }
}

TEST_CASE("brute-force kernel dimension over GF(5)") {
  Field f5 = Field::prime(5);
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    Mat a = Mat::random(f5, 1 + draw(rng, 3), 3, rng);
    CHECK(kernel_basis(a).cols() == brute_nullity_gf5(a));
  }
}

TEST_CASE("rational arithmetic is exact") {
  Field q = Field::rationals();
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    long n = static_cast<long>(draw(rng, 1000000)) + 1, d = static_cast<long>(draw(rng, 1000000)) + 1;
    Scalar a(q, mpq_class(n, d)), b(q, mpq_class(d, n));
    CHECK((a * b).is_one());
    CHECK(a.rational().get_den() > 0);
  }
  Scalar h(q, mpq_class(6, -4));
  CHECK(h.rational() == mpq_class(-3, 2));
  CHECK(h.rational().get_den() == 2);
}

TEST_CASE("determinant and inverse") {
  Field q = Field::rationals();
  Mat a = Mat::from_ints(q, {{2, 1}, {7, 4}});
  CHECK(determinant(a) == Scalar(q, 1L));
  CHECK(*inverse(a) * a == Mat::identity(q, 2));
  CHECK_FALSE(inverse(Mat::from_ints(q, {{1, 2}, {2, 4}})).has_value());
}

TEST_CASE("vec identity: vec(AXB) = (B^T kron A) vec(X)") {
  Field f = Field::prime(101);
  Rng rng(9);
  Mat a = Mat::random(f, 2, 3, rng), x = Mat::random(f, 3, 4, rng), b = Mat::random(f, 4, 2, rng);
  CHECK(vec(a * x * b) == kron(b.transpose(), a) * vec(x));
  CHECK(unvec(vec(x), 3, 4) == x);
}

TEST_CASE("truncated rank matches the hand-written unfolding") {
  Field f = Field::prime(101);
  Rng rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    TMat a(f, 3, 3, 3);
    for (std::size_t k = 0; k < 3; ++k) {
      std::size_t r = draw(rng, 4);
      a.coeff(k) = Mat::random(f, 3, r, rng) * Mat::random(f, r, 3, rng);
    }
    CHECK(rank_k_truncated(a) == rank(unfold_by_hand(a)));
    CHECK(a.unfold() == unfold_by_hand(a));
  }
}

TEST_CASE("truncated inverse and valuation") {
  Field f = Field::prime(101);
  TMat a = TMat::identity(f, 3, 2);
  a.coeff(1) = Mat::from_ints(f, {{0, 1}, {1, 0}});
  auto inv = inverse(a);
  REQUIRE(inv);
  CHECK(*inv * a == TMat::identity(f, 3, 2));
  TMat t(f, 3, 1, 1);
  t.coeff(2) = Mat::from_ints(f, {{4}});
  CHECK(t.valuation() == 2);
  CHECK_FALSE(inverse(t).has_value());
}

TEST_CASE("polynomial factorization over GF(p) reproduces the input") {
  Rng rng(2);
  const std::uint32_t p = 101;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::uint32_t> c;
    std::size_t deg = 1 + draw(rng, 6);
    for (std::size_t i = 0; i < deg; ++i) c.push_back(static_cast<std::uint32_t>(draw(rng, p)));
    c.push_back(1);
    FpPoly f(p, c);
    FpPoly prod = FpPoly::constant(p, 1);
    for (const auto& [g, m] : factor(f, rng)) {
      CHECK(g.leading() == 1);
      for (std::size_t i = 0; i < m; ++i) prod = prod * g;
    }
    CHECK(prod == f);
  }
}

TEST_CASE("characteristic polynomial annihilates its matrix") {
  Field f = Field::prime(101);
  Rng rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    Mat a = Mat::random(f, 4, 4, rng);
    CHECK(evaluate(char_poly(a), a).is_zero());
    CHECK(char_poly(a).degree() == 4);
  }
}

TEST_CASE("field errors") {
  CHECK_THROWS_AS(Field::prime(100), BadParameters);
  CHECK_THROWS_AS(kernel_basis(TMat(Field::prime(7), 2, 1, 1)), NotAField);
}
