#include "repvar/fp_poly.hpp"

#include <algorithm>
#include <sstream>

namespace repvar {

namespace {

std::uint32_t mulm(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}
std::uint32_t powm(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint32_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulm(r, a, p);
    a = mulm(a, a, p);
    e >>= 1;
  }
  return r;
}
std::uint32_t invm(std::uint32_t a, std::uint32_t p) { return powm(a, p - 2, p); }

}  // namespace

FpPoly::FpPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= p_;
  trim();
}

FpPoly FpPoly::x(std::uint32_t p) { return FpPoly(p, {0, 1}); }
FpPoly FpPoly::constant(std::uint32_t p, std::uint32_t c) { return FpPoly(p, {c}); }

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::monic() const {
  if (is_zero()) return *this;
  std::uint32_t inv = invm(leading(), p_);
  FpPoly r = *this;
  for (auto& c : r.c_) c = mulm(c, inv, p_);
  return r;
}

FpPoly FpPoly::derivative() const {
  std::vector<std::uint32_t> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(mulm(c_[i], static_cast<std::uint32_t>(i % p_), p_));
  return FpPoly(p_, std::move(d));
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
  std::vector<std::uint32_t> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a.coeff(i) + b.coeff(i)) % a.p_;
  return FpPoly(a.p_, std::move(c));
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) {
  std::vector<std::uint32_t> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a.coeff(i) + a.p_ - b.coeff(i)) % a.p_;
  return FpPoly(a.p_, std::move(c));
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  if (a.is_zero() || b.is_zero()) return FpPoly(a.p_);
  std::vector<std::uint64_t> acc(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t(a.c_[i]) * b.c_[j]) % a.p_;
  std::vector<std::uint32_t> c(acc.begin(), acc.end());
  return FpPoly(a.p_, std::move(c));
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<std::uint32_t> r = c_;
  if (degree() < d.degree()) return {FpPoly(p_), *this};
  std::vector<std::uint32_t> q(c_.size() - d.c_.size() + 1, 0);
  std::uint32_t inv = invm(d.leading(), p_);
  for (std::size_t k = q.size(); k-- > 0;) {
    std::uint32_t coef = mulm(r[k + d.c_.size() - 1], inv, p_);
    q[k] = coef;
    if (coef == 0) continue;
    for (std::size_t j = 0; j < d.c_.size(); ++j)
      r[k + j] = (r[k + j] + p_ - mulm(coef, d.c_[j], p_)) % p_;
  }
  return {FpPoly(p_, std::move(q)), FpPoly(p_, std::move(r))};
}

std::string FpPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (c_[i] != 1 || i == 0) os << c_[i];
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

FpPoly gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FpPoly powmod(const FpPoly& base, std::uint64_t e, const FpPoly& m) {
  FpPoly r = FpPoly::constant(m.modulus(), 1) % m;
  FpPoly b = base % m;
  while (e) {
    if (e & 1) r = (r * b) % m;
    b = (b * b) % m;
    e >>= 1;
  }
  return r;
}

namespace {

bool is_one(const FpPoly& f) { return f.degree() == 0 && f.coeff(0) == 1; }

// Inverse Frobenius for a polynomial in x^p: sum a_{kp} x^k.
FpPoly pth_root(const FpPoly& f) {
  const auto p = f.modulus();
  std::vector<std::uint32_t> c;
  for (std::size_t i = 0; i < f.coefficients().size(); i += p) c.push_back(f.coeff(i));
  return FpPoly(p, std::move(c));
}

void squarefree(const FpPoly& f, std::size_t mult, std::vector<std::pair<FpPoly, std::size_t>>& out) {
  const auto p = f.modulus();
  if (f.degree() <= 0) return;
  FpPoly d = f.derivative();
  if (d.is_zero()) {
    squarefree(pth_root(f), mult * p, out);
    return;
  }
  FpPoly c = gcd(f, d);
  FpPoly w = f / c;
  std::size_t i = 1;
  while (!is_one(w)) {
    FpPoly y = gcd(w, c);
    FpPoly z = w / y;
    if (z.degree() > 0) out.emplace_back(z.monic(), i * mult);
    ++i;
    w = y;
    c = c / y;
  }
  if (!is_one(c) && c.degree() > 0) squarefree(pth_root(c.monic()), mult * p, out);
}

std::vector<std::pair<FpPoly, std::size_t>> distinct_degree(FpPoly f) {
  const auto p = f.modulus();
  std::vector<std::pair<FpPoly, std::size_t>> out;
  FpPoly x = FpPoly::x(p);
  FpPoly h = x % f;
  for (std::size_t i = 1; f.degree() >= static_cast<long>(2 * i); ++i) {
    h = powmod(h, p, f);
    FpPoly g = gcd(f, h - x);
    if (!is_one(g)) {
      out.emplace_back(g, i);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f.monic(), static_cast<std::size_t>(f.degree()));
  return out;
}

FpPoly random_below(std::uint32_t p, long deg, Rng& rng) {
  std::vector<std::uint32_t> c(static_cast<std::size_t>(deg));
  for (auto& e : c) e = static_cast<std::uint32_t>(draw(rng, p));
  return FpPoly(p, std::move(c));
}

void equal_degree(const FpPoly& f, std::size_t d, Rng& rng, std::vector<FpPoly>& out) {
  const auto p = f.modulus();
  if (f.degree() == static_cast<long>(d)) {
    out.push_back(f.monic());
    return;
  }
  for (;;) {
    FpPoly a = random_below(p, f.degree(), rng);
    if (a.degree() <= 0) continue;
    FpPoly g = gcd(a, f);
    if (g.degree() <= 0) {
      FpPoly b(p);
      if (p == 2) {
        // Trace map a + a^2 + ... + a^{2^{d-1}}.
        FpPoly t = a % f;
        b = t;
        for (std::size_t i = 1; i < d; ++i) {
          t = (t * t) % f;
          b = b + t;
        }
      } else {
        // a^{(p^d - 1)/2} = (a^{1 + p + ... + p^{d-1}})^{(p-1)/2}
        FpPoly t = a % f;
        FpPoly norm = t;
        for (std::size_t i = 1; i < d; ++i) {
          t = powmod(t, p, f);
          norm = (norm * t) % f;
        }
        b = powmod(norm, (p - 1) / 2, f) - FpPoly::constant(p, 1);
      }
      g = gcd(b, f);
    }
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<FpPoly, std::size_t>> factor(const FpPoly& f, Rng& rng) {
  std::vector<std::pair<FpPoly, std::size_t>> sqf;
  squarefree(f.monic(), 1, sqf);
  std::vector<std::pair<FpPoly, std::size_t>> out;
  for (const auto& [part, mult] : sqf) {
    for (const auto& [g, d] : distinct_degree(part)) {
      std::vector<FpPoly> irr;
      equal_degree(g, d, rng, irr);
      for (auto& q : irr) out.emplace_back(std::move(q), mult);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    return a.first.coefficients() < b.first.coefficients();
  });
  return out;
}

FpPoly char_poly(const Mat& a) {
  if (!a.is_square() || !a.field().is_prime()) throw NotAField("char_poly needs a square matrix over GF(p)");
  const auto p = a.field().characteristic();
  const std::size_t n = a.rows();
  std::vector<std::vector<std::uint32_t>> h(n, std::vector<std::uint32_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h[i][j] = a.at(i, j).residue();
  auto sub = [p](std::uint32_t x, std::uint32_t y) { return (x + p - y) % p; };
  // Reduce to upper Hessenberg form by similarity.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][i], h[r][m]);
    }
    std::uint32_t tinv = invm(h[m][m - 1], p);
    for (std::size_t r = m + 1; r < n; ++r) {
      std::uint32_t u = mulm(h[r][m - 1], tinv, p);
      if (u == 0) continue;
      for (std::size_t c = 0; c < n; ++c) h[r][c] = sub(h[r][c], mulm(u, h[m][c], p));
      for (std::size_t c = 0; c < n; ++c) h[c][m] = (h[c][m] + mulm(u, h[c][r], p)) % p;
    }
  }
  std::vector<FpPoly> ps;
  ps.push_back(FpPoly::constant(p, 1));
  const FpPoly x = FpPoly::x(p);
  for (std::size_t m = 0; m < n; ++m) {
    FpPoly next = (x - FpPoly::constant(p, h[m][m])) * ps[m];
    std::uint32_t t = 1;
    for (std::size_t i = 1; i <= m; ++i) {
      t = mulm(t, h[m - i + 1][m - i], p);
      std::uint32_t c = mulm(t, h[m - i][m], p);
      if (c) next = next - FpPoly::constant(p, c) * ps[m - i];
    }
    ps.push_back(std::move(next));
  }
  return ps[n];
}

Mat evaluate(const FpPoly& f, const Mat& a) {
  const auto n = a.rows();
  Mat r(a.field(), n, n);
  for (std::size_t i = f.coefficients().size(); i-- > 0;) {
    r = r * a;
    r += Mat::identity(a.field(), n).scaled(Scalar::residue(a.field(), f.coeff(i)));
  }
  return r;
}

}  // namespace repvar
