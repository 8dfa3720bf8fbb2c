#include "repvar/representation.hpp"

#include <sstream>

#include "repvar/homology.hpp"

namespace repvar {

namespace {

void check_shape(const Mat& m, std::size_t rows, std::size_t cols, const std::string& what) {
  if (m.rows() != rows || m.cols() != cols)
    throw ShapeError(what + " has shape " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                     ", expected " + std::to_string(rows) + "x" + std::to_string(cols));
}

}  // namespace

Representation::Representation(AlgebraPtr alg, DimVec dim) : alg_(std::move(alg)), dim_(std::move(dim)) {
  if (dim_.size() != alg_->vertex_count()) throw ShapeError("dimension vector has the wrong length");
  for (const auto& a : alg_->quiver().arrows()) maps_.emplace_back(alg_->field(), dim_[a.target], dim_[a.source]);
}

Representation::Representation(AlgebraPtr alg, DimVec dim, std::vector<Mat> maps)
    : alg_(std::move(alg)), dim_(std::move(dim)), maps_(std::move(maps)) {
  if (dim_.size() != alg_->vertex_count()) throw ShapeError("dimension vector has the wrong length");
  if (maps_.size() != alg_->quiver().arrow_count()) throw ShapeError("wrong number of arrow matrices");
  for (std::size_t a = 0; a < maps_.size(); ++a) {
    const Arrow& ar = alg_->quiver().arrow(a);
    if (!(maps_[a].field() == alg_->field())) throw ShapeError("matrix for arrow " + ar.name + " has the wrong field");
    check_shape(maps_[a], dim_[ar.target], dim_[ar.source], "matrix for arrow " + ar.name);
  }
}

std::size_t Representation::total_dim() const {
  std::size_t s = 0;
  for (auto d : dim_) s += d;
  return s;
}

void Representation::set_map(std::size_t a, Mat m) {
  const Arrow& ar = alg_->quiver().arrow(a);
  check_shape(m, dim_[ar.target], dim_[ar.source], "matrix for arrow " + ar.name);
  maps_.at(a) = std::move(m);
}

bool operator==(const Representation& a, const Representation& b) {
  if (!a.alg_ || !b.alg_) return a.alg_ == b.alg_;
  return a.alg_->same_as(*b.alg_) && a.dim_ == b.dim_ && a.maps_ == b.maps_;
}

Mat evaluate_path(const Representation& m, const Path& p) {
  Mat r = Mat::identity(m.field(), m.dim(p.source()));
  const auto& arrows = p.arrows();
  for (auto it = arrows.rbegin(); it != arrows.rend(); ++it) r = m.map(*it) * r;
  return r;
}

Mat evaluate_relation(const Representation& m, const Relation& rho) {
  Mat r(m.field(), m.dim(rho.target()), m.dim(rho.source()));
  for (const auto& t : rho.terms) r += evaluate_path(m, t.path).scaled(Scalar(m.field(), t.coefficient));
  return r;
}

bool validate(const Representation& m) {
  for (const auto& rho : m.algebra()->bound_quiver().relations)
    if (!evaluate_relation(m, rho).is_zero()) return false;
  return true;
}

void require_valid(const Representation& m) {
  const auto& rels = m.algebra()->bound_quiver().relations;
  for (const auto& rho : rels)
    if (!evaluate_relation(m, rho).is_zero())
      throw NotARepresentation("relation " + rho.to_string(m.quiver()) + " does not vanish");
}

void require_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a != b && !a->same_as(*b)) throw QuiverMismatch("representations live over different algebras");
}

void require_same_algebra(const Representation& a, const Representation& b) {
  require_same_algebra(a.algebra(), b.algebra());
}

Representation zero_module(const AlgebraPtr& alg) { return Representation(alg, DimVec(alg->vertex_count(), 0)); }

Representation direct_sum(const Representation& a, const Representation& b) {
  require_same_algebra(a, b);
  DimVec d(a.dim().size());
  for (std::size_t x = 0; x < d.size(); ++x) d[x] = a.dim(x) + b.dim(x);
  std::vector<Mat> maps;
  for (std::size_t k = 0; k < a.maps().size(); ++k) maps.push_back(diag_sum(a.map(k), b.map(k)));
  return Representation(a.algebra(), std::move(d), std::move(maps));
}

Representation direct_sum(const std::vector<Representation>& parts, const AlgebraPtr& alg) {
  Representation r = zero_module(alg);
  for (const auto& p : parts) r = direct_sum(r, p);
  return r;
}

Representation conjugate(const Representation& m, const Morphism& g) {
  std::vector<Mat> inv;
  for (const auto& gx : g) {
    auto i = inverse(gx);
    if (!i) throw BadParameters("conjugating matrix is not invertible");
    inv.push_back(std::move(*i));
  }
  std::vector<Mat> maps;
  for (std::size_t a = 0; a < m.maps().size(); ++a) {
    const Arrow& ar = m.quiver().arrow(a);
    maps.push_back(g.at(ar.target) * m.map(a) * inv.at(ar.source));
  }
  return Representation(m.algebra(), m.dim(), std::move(maps));
}

Morphism random_gl(const AlgebraPtr& alg, const DimVec& d, Rng& rng) {
  Morphism g;
  for (auto n : d) {
    for (;;) {
      Mat c = Mat::random(alg->field(), n, n, rng);
      if (rank(c) == n) {
        g.push_back(std::move(c));
        break;
      }
    }
  }
  return g;
}

Representation dual(const Representation& m) {
  std::vector<Mat> maps;
  for (const auto& a : m.maps()) maps.push_back(a.transpose());
  return Representation(m.algebra()->opposite(), m.dim(), std::move(maps));
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (g.size() != f.size()) throw ShapeError("morphisms over different vertex sets");
  Morphism r;
  for (std::size_t x = 0; x < f.size(); ++x) r.push_back(g[x] * f[x]);
  return r;
}

Morphism identity_morphism(const Representation& m) {
  Morphism r;
  for (auto d : m.dim()) r.push_back(Mat::identity(m.field(), d));
  return r;
}

bool is_morphism(const Representation& m, const Representation& n, const Morphism& f) {
  for (std::size_t a = 0; a < m.maps().size(); ++a) {
    const Arrow& ar = m.quiver().arrow(a);
    if (!(f[ar.target] * m.map(a) == n.map(a) * f[ar.source])) return false;
  }
  return true;
}

bool is_invertible(const Morphism& f) {
  for (const auto& fx : f)
    if (!fx.is_square() || rank(fx) != fx.rows()) return false;
  return true;
}

EndAlgebra end_algebra(const Representation& m) {
  EndAlgebra e;
  HomBasis hb = hom_basis(m, m);
  // Put the identity first and complete it to a basis.
  Morphism id = identity_morphism(m);
  std::vector<Mat> cols{flatten(id)};
  for (const auto& f : hb.basis) cols.push_back(flatten(f));
  Mat all = hstack(cols, m.field(), cols.front().rows());
  for (std::size_t c : independent_columns(all)) e.basis.push_back(c == 0 ? id : hb.basis[c - 1]);
  if (m.is_zero()) e.basis.clear();
  std::vector<Mat> basis_cols;
  for (const auto& b : e.basis) basis_cols.push_back(flatten(b));
  Mat bm = hstack(basis_cols, m.field(), basis_cols.empty() ? 0 : basis_cols.front().rows());
  for (const auto& bi : e.basis) {
    std::vector<std::vector<Scalar>> row;
    for (const auto& bj : e.basis) {
      auto c = solve(bm, flatten(compose(bi, bj)));
      ensure(c.has_value(), "endomorphisms not closed under composition");
      std::vector<Scalar> coords;
      for (std::size_t k = 0; k < c->rows(); ++k) coords.push_back(c->at(k, 0));
      row.push_back(std::move(coords));
    }
    e.structure.push_back(std::move(row));
  }
  return e;
}

IsoResult iso_test(const Representation& m, const Representation& n, Rng& rng) {
  require_same_algebra(m, n);
  IsoResult res;
  if (m.dim() != n.dim()) return res;
  if (m.is_zero()) {
    res.isomorphic = true;
    res.witness = identity_morphism(m);
    return res;
  }
  HomBasis mn = hom_basis(m, n);
  if (mn.dim() != hom_dim(m, m) || mn.dim() != hom_dim(n, n) || mn.dim() == 0) return res;
  // A generic element of Hom(M, N) is invertible iff one is. The determinant
  // is a polynomial of degree <= dim M in the coefficients, so a random
  // point over a field with q elements misses with probability <= dim M / q.
  const Field f = m.field();
  const double q = f.is_prime() ? static_cast<double>(f.characteristic()) : 1e9;
  const double per_trial = std::min(1.0, static_cast<double>(m.total_dim()) / q);
  constexpr int kTrials = 64;
  res.miss_probability = 1.0;
  for (int trial = 0; trial < kTrials; ++trial) {
    Morphism g;
    for (std::size_t x = 0; x < m.dim().size(); ++x) g.emplace_back(f, n.dim(x), m.dim(x));
    for (const auto& b : mn.basis) {
      Scalar c = f.is_prime() ? Scalar::residue(f, static_cast<std::uint32_t>(draw(rng, f.characteristic())))
                              : Scalar(f, static_cast<long>(draw(rng, 2000000001ULL)) - 1000000000L);
      for (std::size_t x = 0; x < g.size(); ++x) g[x] += b[x].scaled(c);
    }
    res.miss_probability *= per_trial;
    if (is_invertible(g)) {
      res.isomorphic = true;
      res.miss_probability = 0.0;
      res.witness = std::move(g);
      return res;
    }
  }
  return res;
}

bool iso(const Representation& m, const Representation& n, std::uint64_t seed) {
  Rng rng(seed);
  return iso_test(m, n, rng).isomorphic;
}

TruncatedRepresentation::TruncatedRepresentation(AlgebraPtr alg, std::size_t order, DimVec dim)
    : alg_(std::move(alg)), order_(order), dim_(std::move(dim)) {
  if (order_ == 0) throw BadParameters("truncation order must be positive");
  if (dim_.size() != alg_->vertex_count()) throw ShapeError("dimension vector has the wrong length");
  for (const auto& a : alg_->quiver().arrows()) maps_.emplace_back(alg_->field(), order_, dim_[a.target], dim_[a.source]);
}

TruncatedRepresentation::TruncatedRepresentation(AlgebraPtr alg, std::size_t order, DimVec dim,
                                                 std::vector<TMat> maps)
    : TruncatedRepresentation(std::move(alg), order, std::move(dim)) {
  if (maps.size() != maps_.size()) throw ShapeError("wrong number of arrow matrices");
  for (std::size_t a = 0; a < maps.size(); ++a) set_map(a, std::move(maps[a]));
}

TruncatedRepresentation TruncatedRepresentation::constant(const Representation& m, std::size_t order) {
  TruncatedRepresentation r(m.algebra(), order, m.dim());
  for (std::size_t a = 0; a < m.maps().size(); ++a) r.maps_[a] = TMat::constant(m.map(a), order);
  return r;
}

void TruncatedRepresentation::set_map(std::size_t a, TMat m) {
  const Arrow& ar = alg_->quiver().arrow(a);
  if (m.order() != order_ || m.rows() != dim_[ar.target] || m.cols() != dim_[ar.source] ||
      !(m.field() == alg_->field()))
    throw ShapeError("matrix for arrow " + ar.name + " has the wrong shape or ring");
  maps_.at(a) = std::move(m);
}

Representation TruncatedRepresentation::special_fiber() const {
  std::vector<Mat> maps;
  for (const auto& m : maps_) maps.push_back(m.coeff(0));
  return Representation(alg_, dim_, std::move(maps));
}

TruncatedRepresentation TruncatedRepresentation::truncate(std::size_t k) const {
  TruncatedRepresentation r(alg_, k, dim_);
  for (std::size_t a = 0; a < maps_.size(); ++a) r.maps_[a] = maps_[a].truncate(k);
  return r;
}

TMat evaluate_path(const TruncatedRepresentation& m, const Path& p) {
  TMat r = TMat::identity(m.field(), m.order(), m.dim(p.source()));
  const auto& arrows = p.arrows();
  for (auto it = arrows.rbegin(); it != arrows.rend(); ++it) r = m.map(*it) * r;
  return r;
}

TMat evaluate_relation(const TruncatedRepresentation& m, const Relation& rho) {
  TMat r(m.field(), m.order(), m.dim(rho.target()), m.dim(rho.source()));
  for (const auto& t : rho.terms) r = r + evaluate_path(m, t.path).scaled(Scalar(m.field(), t.coefficient));
  return r;
}

bool validate(const TruncatedRepresentation& m) {
  for (const auto& rho : m.algebra()->bound_quiver().relations)
    if (!evaluate_relation(m, rho).is_zero()) return false;
  return true;
}

TruncatedRepresentation conjugate(const TruncatedRepresentation& m, const std::vector<TMat>& g) {
  std::vector<TMat> inv;
  for (const auto& gx : g) {
    auto i = inverse(gx);
    if (!i) throw BadParameters("conjugating matrix is not invertible");
    inv.push_back(std::move(*i));
  }
  TruncatedRepresentation r(m.algebra(), m.order(), m.dim());
  for (std::size_t a = 0; a < m.maps().size(); ++a) {
    const Arrow& ar = m.quiver().arrow(a);
    r.set_map(a, g.at(ar.target) * m.map(a) * inv.at(ar.source));
  }
  return r;
}

std::string format_dim(const DimVec& d) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  os << ')';
  return os.str();
}

}  // namespace repvar
