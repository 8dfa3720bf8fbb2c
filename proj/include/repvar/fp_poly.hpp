#pragma once

// Univariate polynomials over GF(p), just enough to split characteristic
// polynomials of endomorphisms into coprime primary parts.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "repvar/arith.hpp"

namespace repvar {

class FpPoly {
 public:
  explicit FpPoly(std::uint32_t p) : p_(p) {}
  FpPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs);  // low degree first
  static FpPoly x(std::uint32_t p);
  static FpPoly constant(std::uint32_t p, std::uint32_t c);

  std::uint32_t modulus() const noexcept { return p_; }
  // -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  std::uint32_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  std::uint32_t leading() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<std::uint32_t>& coefficients() const noexcept { return c_; }

  FpPoly monic() const;
  FpPoly derivative() const;

  friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
  friend bool operator==(const FpPoly& a, const FpPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

  // Quotient and remainder.
  std::pair<FpPoly, FpPoly> divmod(const FpPoly& d) const;
  FpPoly operator%(const FpPoly& d) const { return divmod(d).second; }
  FpPoly operator/(const FpPoly& d) const { return divmod(d).first; }

  std::string to_string() const;

 private:
  void trim();
  std::uint32_t p_;
  std::vector<std::uint32_t> c_;
};

FpPoly gcd(FpPoly a, FpPoly b);
// base^e mod m with e given in binary via a std::uint64_t.
FpPoly powmod(const FpPoly& base, std::uint64_t e, const FpPoly& m);

// Monic irreducible factors with multiplicities, sorted by (degree, coefficients).
// Randomised equal-degree splitting draws from `rng`.
std::vector<std::pair<FpPoly, std::size_t>> factor(const FpPoly& f, Rng& rng);

// Characteristic polynomial det(x I - A) of a square matrix over GF(p).
FpPoly char_poly(const Mat& a);
// f(A) for a square matrix A over GF(p).
Mat evaluate(const FpPoly& f, const Mat& a);

}  // namespace repvar
