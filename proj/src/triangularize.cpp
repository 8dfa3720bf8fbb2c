// Block triangularization of a family over k[t]/(t^n) whose special fiber is
// U + V, clearing the lower-left block order by order and stopping at the
// first upper-right coefficient that is not a coboundary.

#include "repvar/geometry.hpp"

namespace repvar {

namespace {

struct Blocks {
  const DimVec& du;
  const DimVec& dv;
};

// Coefficient k of the lower-left (U -> V) or upper-right (V -> U) block.
Cochain off_diagonal(const TruncatedRepresentation& b, const Blocks& bl, std::size_t k, bool lower) {
  Cochain z;
  for (std::size_t a = 0; a < b.maps().size(); ++a) {
    const Arrow& ar = b.quiver().arrow(a);
    const Mat& c = b.map(a).coeff(k);
    if (lower)
      z.push_back(c.block(bl.du[ar.target], 0, bl.dv[ar.target], bl.du[ar.source]));
    else
      z.push_back(c.block(0, bl.du[ar.source], bl.du[ar.target], bl.dv[ar.source]));
  }
  return z;
}

bool off_diagonal_vanishes(const TruncatedRepresentation& b, const Blocks& bl, std::size_t upto, bool lower) {
  for (std::size_t k = 0; k < upto; ++k)
    for (const auto& m : off_diagonal(b, bl, k, lower))
      if (!m.is_zero()) return false;
  return true;
}

// [[1, 0], [c t^k h, 1]] (lower) or [[1, c t^k h], [0, 1]] (upper) per vertex.
std::vector<TMat> elementary(const TruncatedRepresentation& b, const Blocks& bl, const Morphism& h, std::size_t k,
                             bool lower) {
  const Field f = b.field();
  std::vector<TMat> g;
  for (std::size_t x = 0; x < bl.du.size(); ++x) {
    const std::size_t n = bl.du[x] + bl.dv[x];
    TMat gx = TMat::identity(f, b.order(), n);
    Mat c = h[x].scaled(Scalar(f, -1L));
    if (lower)
      gx.coeff(k).set_block(bl.du[x], 0, c);
    else
      gx.coeff(k).set_block(0, bl.du[x], c);
    g.push_back(std::move(gx));
  }
  return g;
}

std::vector<TMat> compose(const std::vector<TMat>& g, const std::vector<TMat>& f) {
  std::vector<TMat> r;
  for (std::size_t x = 0; x < g.size(); ++x) r.push_back(g[x] * f[x]);
  return r;
}

}  // namespace

SplitOrWitness triangularize_family(const TruncatedRepresentation& a, const Representation& u,
                                    const Representation& v) {
  require_same_algebra(a.algebra(), u.algebra());
  require_same_algebra(u, v);
  if (!validate(a)) throw NotARepresentation("the family violates a relation over the truncated ring");
  if (!(a.special_fiber() == direct_sum(u, v)))
    throw HypothesisFailed("special fiber", "A / tA is not the block diagonal U + V");
  CocycleSpace uv = cocycles(u, v);
  if (uv.ext1_dim() != 0)
    throw HypothesisFailed("Ext1(U,V) = 0", "dim Ext^1(U,V) = " + std::to_string(uv.ext1_dim()));

  const Blocks bl{u.dim(), v.dim()};
  const std::size_t n = a.order();
  TruncatedRepresentation b = a;
  std::vector<TMat> total;
  for (std::size_t x = 0; x < u.dim().size(); ++x) total.push_back(TMat::identity(a.field(), n, u.dim(x) + v.dim(x)));
  std::vector<std::vector<TMat>> steps;

  for (std::size_t k = 1; k < n; ++k) {
    // Lower-left: a cocycle in Z^{U,V} = B^{U,V}; conjugate it away.
    Cochain zl = off_diagonal(b, bl, k, true);
    ensure(is_cocycle(u, v, zl), "lower-left coefficient is not a cocycle");
    auto hl = coboundary_preimage(u, v, zl);
    ensure(hl.has_value(), "lower-left coefficient is not a coboundary although Ext^1(U,V) = 0");
    auto gl = elementary(b, bl, *hl, k, true);
    b = conjugate(b, gl);
    total = compose(gl, total);
    steps.push_back(std::move(gl));
    ensure(off_diagonal_vanishes(b, bl, k + 1, true), "lower-left block survived the conjugation");

    // Upper-right: either a coboundary, removed the same way, or the witness.
    Cochain zu = off_diagonal(b, bl, k, false);
    ensure(is_cocycle(v, u, zu), "upper-right coefficient is not a cocycle");
    auto hu = coboundary_preimage(v, u, zu);
    if (!hu) {
      WitnessResult w;
      w.level = k;
      w.z = zu;
      w.middle = middle_term({v, u, zu});
      w.total = total;
      w.conjugated = b;
      ensure(conjugate(a, total).maps() == b.maps(), "composite conjugator does not reproduce the family");
      return w;
    }
    auto gu = elementary(b, bl, *hu, k, false);
    b = conjugate(b, gu);
    total = compose(gu, total);
    steps.push_back(std::move(gu));
    ensure(off_diagonal_vanishes(b, bl, k + 1, false), "upper-right block survived the conjugation");
    ensure(off_diagonal_vanishes(b, bl, k + 1, true), "lower-left block reappeared");
  }
  SplitResult s;
  s.conjugators = std::move(steps);
  s.total = total;
  s.diagonal = b;
  TruncatedRepresentation check = conjugate(a, total);
  ensure(check.maps() == b.maps(), "composite conjugator does not reproduce the family");
  ensure(off_diagonal_vanishes(check, bl, n, true) && off_diagonal_vanishes(check, bl, n, false),
         "split family is not block diagonal");
  return s;
}

}  // namespace repvar
