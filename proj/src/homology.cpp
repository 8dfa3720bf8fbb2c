#include "repvar/homology.hpp"

namespace repvar {

namespace {

// X with A X = B for A of full column rank; throws when inconsistent.
Mat solve_matrix(const Mat& a, const Mat& b) {
  Mat x(a.field(), a.cols(), b.cols());
  if (a.cols() == 0) {
    ensure(b.is_zero(), "right-hand side outside the column space");
    return x;
  }
  std::vector<std::size_t> rows = independent_columns(a.transpose());
  ensure(rows.size() == a.cols(), "solve_matrix needs full column rank");
  Mat sq(a.field(), rows.size(), a.cols());
  Mat rhs(a.field(), rows.size(), b.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    sq.set_block(i, 0, a.block(rows[i], 0, 1, a.cols()));
    rhs.set_block(i, 0, b.block(rows[i], 0, 1, b.cols()));
  }
  auto inv = inverse(sq);
  ensure(inv.has_value(), "selected rows are singular");
  x = *inv * rhs;
  ensure(a * x == b, "right-hand side outside the column space");
  return x;
}

// Product of the maps of `arrows[begin, end)` in written order; `vertex` sizes
// the identity for an empty range.
Mat segment(const Representation& m, const std::vector<std::size_t>& arrows, std::size_t begin, std::size_t end,
            std::size_t vertex) {
  if (begin < end) vertex = m.quiver().arrow(arrows[end - 1]).source;
  Mat r = Mat::identity(m.field(), m.dim(vertex));
  for (std::size_t i = end; i-- > begin;) r = m.map(arrows[i]) * r;
  return r;
}

std::vector<std::size_t> offsets_for(const Representation& n, const Representation& m) {
  std::vector<std::size_t> off;
  std::size_t acc = 0;
  for (const auto& a : n.quiver().arrows()) {
    off.push_back(acc);
    acc += m.dim(a.target) * n.dim(a.source);
  }
  off.push_back(acc);
  return off;
}

std::vector<std::size_t> vertex_offsets(const DimVec& from, const DimVec& to) {
  std::vector<std::size_t> off;
  std::size_t acc = 0;
  for (std::size_t x = 0; x < from.size(); ++x) {
    off.push_back(acc);
    acc += from[x] * to[x];
  }
  off.push_back(acc);
  return off;
}

// Relation constraints on cochains: rows = stacked Z_rho, cols = cochain coordinates.
Mat cocycle_system(const Representation& n, const Representation& m) {
  const Field f = n.field();
  const auto& bq = n.algebra()->bound_quiver();
  const auto off = offsets_for(n, m);
  std::size_t rows = 0;
  for (const auto& rho : bq.relations) rows += m.dim(rho.target()) * n.dim(rho.source());
  Mat sys(f, rows, off.back());
  std::size_t r0 = 0;
  for (const auto& rho : bq.relations) {
    const std::size_t block_rows = m.dim(rho.target()) * n.dim(rho.source());
    for (const auto& term : rho.terms) {
      Scalar c(f, term.coefficient);
      const auto& arrows = term.path.arrows();
      for (std::size_t i = 0; i < arrows.size(); ++i) {
        const Arrow& ai = n.quiver().arrow(arrows[i]);
        Mat pre = segment(m, arrows, 0, i, rho.target());
        Mat post = segment(n, arrows, i + 1, arrows.size(), rho.source());
        Mat k = kron(post.transpose(), pre).scaled(c);
        const std::size_t c0 = off[arrows[i]];
        ensure(k.rows() == block_rows && k.cols() == m.dim(ai.target) * n.dim(ai.source), "cocycle block shape");
        Mat cur = sys.block(r0, c0, k.rows(), k.cols());
        sys.set_block(r0, c0, cur + k);
      }
    }
    r0 += block_rows;
  }
  return sys;
}

// h -> h o N - M o h, from vertex maps h_x : N_x -> M_x to cochains.
Mat coboundary_map(const Representation& n, const Representation& m) {
  const Field f = n.field();
  const auto off = offsets_for(n, m);
  const auto voff = vertex_offsets(n.dim(), m.dim());
  Mat d(f, off.back(), voff.back());
  for (std::size_t a = 0; a < n.maps().size(); ++a) {
    const Arrow& ar = n.quiver().arrow(a);
    Mat ht = kron(n.map(a).transpose(), Mat::identity(f, m.dim(ar.target)));
    Mat hs = kron(Mat::identity(f, n.dim(ar.source)), m.map(a));
    Mat cur = d.block(off[a], voff[ar.target], ht.rows(), ht.cols());
    d.set_block(off[a], voff[ar.target], cur + ht);
    cur = d.block(off[a], voff[ar.source], hs.rows(), hs.cols());
    d.set_block(off[a], voff[ar.source], cur - hs);
  }
  return d;
}

}  // namespace

Mat flatten(const Morphism& f) {
  std::size_t total = 0;
  for (const auto& fx : f) total += fx.rows() * fx.cols();
  Mat v(f.empty() ? Field() : f.front().field(), total, 1);
  std::size_t r = 0;
  for (const auto& fx : f) {
    v.set_block(r, 0, vec(fx));
    r += fx.rows() * fx.cols();
  }
  return v;
}

Morphism unflatten_morphism(const Mat& v, const DimVec& from, const DimVec& to) {
  Morphism f;
  std::size_t off = 0;
  for (std::size_t x = 0; x < from.size(); ++x) {
    f.push_back(unvec(v, to[x], from[x], off));
    off += to[x] * from[x];
  }
  return f;
}

Mat flatten_cochain(const Cochain& z) { return flatten(z); }

Cochain unflatten_cochain(const Mat& v, const Representation& n, const Representation& m) {
  Cochain z;
  std::size_t off = 0;
  for (const auto& a : n.quiver().arrows()) {
    z.push_back(unvec(v, m.dim(a.target), n.dim(a.source), off));
    off += m.dim(a.target) * n.dim(a.source);
  }
  return z;
}

Cochain zero_cochain(const Representation& n, const Representation& m) {
  Cochain z;
  for (const auto& a : n.quiver().arrows()) z.emplace_back(n.field(), m.dim(a.target), n.dim(a.source));
  return z;
}

Cochain add(const Cochain& a, const Cochain& b) {
  if (a.size() != b.size()) throw ShapeError("cochains over different arrow sets");
  Cochain r;
  for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] + b[i]);
  return r;
}

Cochain scale(const Cochain& a, const Scalar& c) {
  Cochain r;
  for (const auto& z : a) r.push_back(z.scaled(c));
  return r;
}

HomBasis hom_basis(const Representation& h, const Representation& w) {
  require_same_algebra(h, w);
  const Field f = h.field();
  const auto voff = vertex_offsets(h.dim(), w.dim());
  std::size_t rows = 0;
  for (const auto& a : h.quiver().arrows()) rows += w.dim(a.target) * h.dim(a.source);
  Mat sys(f, rows, voff.back());
  std::size_t r0 = 0;
  for (std::size_t a = 0; a < h.maps().size(); ++a) {
    const Arrow& ar = h.quiver().arrow(a);
    const std::size_t wt = w.dim(ar.target), ws = w.dim(ar.source), hs = h.dim(ar.source), ht = h.dim(ar.target);
    const Mat& wa = w.map(a);
    const Mat& ha = h.map(a);
    // Equation (i, j): sum_k W[i,k] f_s[k,j] - sum_k f_t[i,k] H[k,j] = 0.
    for (std::size_t i = 0; i < wt; ++i)
      for (std::size_t j = 0; j < hs; ++j) {
        const std::size_t row = r0 + j * wt + i;
        for (std::size_t k = 0; k < ws; ++k)
          if (!wa.entry_is_zero(i, k)) sys.add_to(row, voff[ar.source] + j * ws + k, wa.at(i, k));
        for (std::size_t k = 0; k < ht; ++k)
          if (!ha.entry_is_zero(k, j)) sys.add_to(row, voff[ar.target] + k * wt + i, -ha.at(k, j));
      }
    r0 += wt * hs;
  }
  HomBasis hb;
  Mat ker = kernel_basis(sys);
  for (std::size_t c = 0; c < ker.cols(); ++c) hb.basis.push_back(unflatten_morphism(ker.column(c), h.dim(), w.dim()));
  return hb;
}

std::size_t hom_dim(const Representation& h, const Representation& w) { return hom_basis(h, w).dim(); }

Mat evaluate_relation(const Representation& n, const Representation& m, const Cochain& z, const Relation& rho) {
  const Field f = n.field();
  Mat r(f, m.dim(rho.target()), n.dim(rho.source()));
  for (const auto& term : rho.terms) {
    const auto& arrows = term.path.arrows();
    Mat sum(f, r.rows(), r.cols());
    for (std::size_t i = 0; i < arrows.size(); ++i)
      sum += segment(m, arrows, 0, i, rho.target()) * z[arrows[i]] *
             segment(n, arrows, i + 1, arrows.size(), rho.source());
    r += sum.scaled(Scalar(f, term.coefficient));
  }
  return r;
}

bool is_cocycle(const Representation& n, const Representation& m, const Cochain& z) {
  for (const auto& rho : n.algebra()->bound_quiver().relations)
    if (!evaluate_relation(n, m, z, rho).is_zero()) return false;
  return true;
}

Cochain coboundary(const Representation& n, const Representation& m, const Morphism& h) {
  Cochain z;
  for (std::size_t a = 0; a < n.maps().size(); ++a) {
    const Arrow& ar = n.quiver().arrow(a);
    z.push_back(h[ar.target] * n.map(a) - m.map(a) * h[ar.source]);
  }
  return z;
}

std::optional<Morphism> coboundary_preimage(const Representation& n, const Representation& m, const Cochain& z) {
  require_same_algebra(n, m);
  Mat d = coboundary_map(n, m);
  auto x = solve(d, flatten_cochain(z));
  if (!x) return std::nullopt;
  Morphism h = unflatten_morphism(*x, n.dim(), m.dim());
  ensure(coboundary(n, m, h) == z, "coboundary solve returned a wrong preimage");
  return h;
}

CocycleSpace cocycles(const Representation& n, const Representation& m) {
  require_same_algebra(n, m);
  const Field f = n.field();
  CocycleSpace cs;
  cs.n = n;
  cs.m = m;
  Mat sys = cocycle_system(n, m);
  cs.ambient_dim = sys.cols();
  Mat zb = kernel_basis(sys);
  for (std::size_t c = 0; c < zb.cols(); ++c) cs.z_basis.push_back(unflatten_cochain(zb.column(c), n, m));

  Mat d = coboundary_map(n, m);
  cs.vdim = d.cols();
  std::vector<std::size_t> bcols = independent_columns(d);
  for (std::size_t c : bcols) {
    cs.b_basis.push_back(unflatten_cochain(d.column(c), n, m));
    Mat unit = Mat::unit_column(f, d.cols(), c);
    cs.b_witness.push_back(unflatten_morphism(unit, n.dim(), m.dim()));
  }
  Mat bm = d.select_columns(bcols);
  ensure((sys * bm).is_zero(), "coboundary fails a relation");

  cs.hom_nm = hom_dim(n, m);
  ensure(cs.vdim - cs.hom_nm == cs.b_basis.size(), "dim B differs from dim V - [N,M]");

  Mat both = hstack({bm, zb}, f, sys.cols());
  for (std::size_t c : independent_columns(both)) {
    if (c < bm.cols()) continue;
    cs.ext_basis.push_back(cs.z_basis[c - bm.cols()]);
  }
  ensure(cs.ext_basis.size() == cs.ext1_dim(), "Ext representatives do not complete B in Z");
  return cs;
}

std::size_t ext1_dim(const Representation& n, const Representation& m) { return cocycles(n, m).ext1_dim(); }

bool is_zero(const ExtClass& e) { return coboundary_preimage(e.n, e.m, e.z).has_value(); }

ExtClass random_ext_class(const CocycleSpace& cs, Rng& rng) {
  const Field f = cs.n.field();
  Cochain z = zero_cochain(cs.n, cs.m);
  for (const auto& b : cs.z_basis) {
    Scalar c = f.is_prime() ? Scalar::residue(f, static_cast<std::uint32_t>(draw(rng, f.characteristic())))
                            : Scalar(f, static_cast<long>(draw(rng, 21)) - 10);
    z = add(z, scale(b, c));
  }
  return {cs.n, cs.m, z};
}

Representation middle_term(const ExtClass& e) {
  require_same_algebra(e.n, e.m);
  if (e.z.size() != e.n.maps().size()) throw ShapeError("cochain has the wrong number of arrows");
  for (std::size_t a = 0; a < e.z.size(); ++a) {
    const Arrow& ar = e.n.quiver().arrow(a);
    if (e.z[a].rows() != e.m.dim(ar.target) || e.z[a].cols() != e.n.dim(ar.source))
      throw ShapeError("cochain block for arrow " + ar.name + " has the wrong shape");
  }
  if (!is_cocycle(e.n, e.m, e.z)) throw NotACocycle("cochain violates a relation");
  const Field f = e.n.field();
  DimVec d(e.n.dim().size());
  for (std::size_t x = 0; x < d.size(); ++x) d[x] = e.m.dim(x) + e.n.dim(x);
  std::vector<Mat> maps;
  for (std::size_t a = 0; a < e.z.size(); ++a) {
    const Arrow& ar = e.n.quiver().arrow(a);
    Mat w(f, d[ar.target], d[ar.source]);
    w.set_block(0, 0, e.m.map(a));
    w.set_block(0, e.m.dim(ar.source), e.z[a]);
    w.set_block(e.m.dim(ar.target), e.m.dim(ar.source), e.n.map(a));
    maps.push_back(std::move(w));
  }
  Representation w(e.n.algebra(), std::move(d), std::move(maps));
  ensure(validate(w), "middle term of a cocycle fails a relation");
  return w;
}

ExtClass push_pull(const Morphism& f, const ExtClass& xi, Side side, const Representation& other) {
  ExtClass r;
  Cochain z;
  const auto& q = xi.n.quiver();
  if (side == Side::left) {
    // f : M -> M'
    for (std::size_t x = 0; x < f.size(); ++x)
      if (f[x].rows() != other.dim(x) || f[x].cols() != xi.m.dim(x)) throw ShapeError("f is not a map M -> M'");
    for (std::size_t a = 0; a < xi.z.size(); ++a) z.push_back(f[q.arrow(a).target] * xi.z[a]);
    r = {xi.n, other, std::move(z)};
  } else {
    // f : N' -> N
    for (std::size_t x = 0; x < f.size(); ++x)
      if (f[x].rows() != xi.n.dim(x) || f[x].cols() != other.dim(x)) throw ShapeError("f is not a map N' -> N");
    for (std::size_t a = 0; a < xi.z.size(); ++a) z.push_back(xi.z[a] * f[q.arrow(a).source]);
    r = {other, xi.m, std::move(z)};
  }
  return r;
}

Subrepresentation subrepresentation(const Representation& m, const std::vector<Mat>& spans) {
  Subrepresentation s;
  DimVec d;
  for (const auto& sp : spans) d.push_back(sp.cols());
  std::vector<Mat> maps;
  for (std::size_t a = 0; a < m.maps().size(); ++a) {
    const Arrow& ar = m.quiver().arrow(a);
    maps.push_back(solve_matrix(spans[ar.target], m.map(a) * spans[ar.source]));
  }
  s.module = Representation(m.algebra(), std::move(d), std::move(maps));
  s.inclusion = spans;
  return s;
}

Quotient quotient(const Representation& m, const std::vector<Mat>& spans) {
  const Field f = m.field();
  Quotient q;
  std::vector<Mat> proj, sections;
  DimVec d;
  for (std::size_t x = 0; x < spans.size(); ++x) {
    Mat p = spans[x].cols() == 0 ? Mat::identity(f, m.dim(x)) : kernel_basis(spans[x].transpose()).transpose();
    d.push_back(p.rows());
    proj.push_back(std::move(p));
  }
  // Right inverses r_x with p_x r_x = 1.
  for (std::size_t x = 0; x < spans.size(); ++x) {
    const Mat& p = proj[x];
    Mat r(f, p.cols(), p.rows());
    if (p.rows() > 0) {
      auto cols = independent_columns(p);
      auto inv = inverse(p.select_columns(cols));
      ensure(inv.has_value(), "quotient projection is not onto");
      for (std::size_t i = 0; i < cols.size(); ++i) r.set_block(cols[i], 0, inv->block(i, 0, 1, p.rows()));
    }
    sections.push_back(std::move(r));
  }
  std::vector<Mat> maps;
  for (std::size_t a = 0; a < m.maps().size(); ++a) {
    const Arrow& ar = m.quiver().arrow(a);
    Mat qa = proj[ar.target] * m.map(a) * sections[ar.source];
    ensure(qa * proj[ar.source] == proj[ar.target] * m.map(a), "subspace is not a subrepresentation");
    maps.push_back(std::move(qa));
  }
  q.module = Representation(m.algebra(), std::move(d), std::move(maps));
  q.projection = std::move(proj);
  return q;
}

Subrepresentation kernel(const Representation& m, const Morphism& f) {
  std::vector<Mat> spans;
  for (const auto& fx : f) spans.push_back(kernel_basis(fx));
  return subrepresentation(m, spans);
}

Representation projective_sum(const AlgebraPtr& alg, const std::vector<std::size_t>& tops) {
  std::vector<Representation> parts;
  for (auto x : tops) parts.push_back(projective(alg, x));
  return direct_sum(parts, alg);
}

Morphism morphism_from_projectives(const std::vector<std::size_t>& tops, const std::vector<Mat>& elements,
                                   const Representation& n) {
  const auto& alg = n.algebra();
  Morphism f;
  for (std::size_t y = 0; y < alg->vertex_count(); ++y) {
    std::vector<Mat> cols;
    for (std::size_t i = 0; i < tops.size(); ++i)
      for (const auto& sigma : alg->basis(tops[i], y)) cols.push_back(evaluate_path(n, sigma) * elements[i]);
    f.push_back(hstack(cols, n.field(), n.dim(y)));
  }
  return f;
}

ProjectiveCover projective_cover(const Representation& m) {
  const Field f = m.field();
  const auto& alg = m.algebra();
  ProjectiveCover pc;
  for (std::size_t y = 0; y < alg->vertex_count(); ++y) {
    std::vector<Mat> rad;
    for (std::size_t a = 0; a < m.maps().size(); ++a)
      if (m.quiver().arrow(a).target == y) rad.push_back(m.map(a));
    Mat radm = hstack(rad, f, m.dim(y));
    Mat both = hstack({radm, Mat::identity(f, m.dim(y))}, f, m.dim(y));
    for (std::size_t c : independent_columns(both)) {
      if (c < radm.cols()) continue;
      pc.tops.push_back(y);
      pc.generators.push_back(Mat::unit_column(f, m.dim(y), c - radm.cols()));
    }
  }
  pc.projective = projective_sum(alg, pc.tops);
  pc.map = morphism_from_projectives(pc.tops, pc.generators, m);
  ensure(is_morphism(pc.projective, m, pc.map), "projective cover map is not a morphism");
  for (std::size_t y = 0; y < alg->vertex_count(); ++y)
    ensure(rank(pc.map[y]) == m.dim(y), "projective cover map is not onto");
  pc.syzygy = kernel(pc.projective, pc.map);
  return pc;
}

Representation syzygy(const Representation& m, std::size_t n) {
  Representation cur = m;
  for (std::size_t i = 0; i < n; ++i) cur = projective_cover(cur).syzygy.module;
  return cur;
}

std::vector<std::vector<std::size_t>> Resolution::terms() const {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& s : steps) {
    std::vector<std::size_t> mult(module.dim().size(), 0);
    for (auto x : s.tops) ++mult[x];
    out.push_back(std::move(mult));
  }
  return out;
}

Resolution resolution(const Representation& m, std::size_t max_len) {
  Resolution r;
  r.module = m;
  Representation cur = m;
  for (std::size_t i = 0; i < max_len; ++i) {
    r.steps.push_back(projective_cover(cur));
    cur = r.steps.back().syzygy.module;
    if (cur.is_zero()) {
      r.complete = true;
      break;
    }
  }
  return r;
}

std::optional<std::size_t> pdim(const Representation& m, std::size_t cap) {
  Resolution r = resolution(m, cap + 1);
  if (!r.complete) return std::nullopt;
  return r.steps.size() - 1;
}

std::optional<std::size_t> idim(const Representation& m, std::size_t cap) { return pdim(dual(m), cap); }

std::size_t extn_dim(const Representation& m, const Representation& n, std::size_t degree) {
  require_same_algebra(m, n);
  if (degree == 0) return hom_dim(m, n);
  Representation x = syzygy(m, degree - 1);
  ProjectiveCover pc = projective_cover(x);
  std::size_t hom_p0 = 0;
  for (auto v : pc.tops) hom_p0 += n.dim(v);
  const std::size_t plus = hom_dim(pc.syzygy.module, n) + hom_dim(x, n);
  ensure(plus >= hom_p0, "negative Ext dimension");
  return plus - hom_p0;
}

bool Ext2Element::is_zero() const { return coboundary_preimage(syzygy, target, z).has_value(); }

Ext2Element yoneda_product(const ExtClass& eta, const ExtClass& xi) {
  require_same_algebra(eta.n, xi.n);
  if (!(eta.n == xi.m)) throw ShapeError("Yoneda product needs eta in Ext(Y, -) and xi in Ext(-, Y)");
  const Field f = xi.n.field();
  const Representation& x = xi.n;
  const Representation& y = xi.m;
  Representation e = middle_term(xi);
  ProjectiveCover pc = projective_cover(x);
  // Lift the generators of X to E along E -> X.
  std::vector<Mat> lifted;
  for (std::size_t i = 0; i < pc.tops.size(); ++i) {
    const auto v = pc.tops[i];
    Mat l(f, e.dim(v), 1);
    l.set_block(y.dim(v), 0, pc.generators[i]);
    lifted.push_back(std::move(l));
  }
  Morphism lift = morphism_from_projectives(pc.tops, lifted, e);
  const Representation& omega = pc.syzygy.module;
  Morphism g1;
  for (std::size_t v = 0; v < x.dim().size(); ++v) {
    Mat restricted = lift[v] * pc.syzygy.inclusion[v];
    ensure(restricted.block(y.dim(v), 0, x.dim(v), restricted.cols()).is_zero(), "lift of the syzygy leaves Y");
    g1.push_back(restricted.block(0, 0, y.dim(v), restricted.cols()));
  }
  ensure(is_morphism(omega, y, g1), "connecting map is not a morphism");
  Ext2Element out;
  out.syzygy = omega;
  out.target = eta.m;
  for (std::size_t a = 0; a < eta.z.size(); ++a) out.z.push_back(eta.z[a] * g1[x.quiver().arrow(a).source]);
  ensure(is_cocycle(out.syzygy, out.target, out.z), "pulled-back cochain is not a cocycle");
  return out;
}

Ext2Element add(const Ext2Element& a, const Ext2Element& b) {
  if (!(a.syzygy == b.syzygy) || !(a.target == b.target)) throw ShapeError("Ext^2 elements in different groups");
  return {a.syzygy, a.target, add(a.z, b.z)};
}

std::size_t projective_multiplicity(const Representation& m, std::size_t x) {
  Representation p = projective(m.algebra(), x);
  HomBasis hb = hom_basis(m, p);
  // Pairing (v, m) -> coefficient of e_x in v(m); e_x is the first basis path at (x, x).
  Mat pairing(m.field(), hb.dim(), m.dim(x));
  for (std::size_t r = 0; r < hb.dim(); ++r)
    for (std::size_t k = 0; k < m.dim(x); ++k) pairing.set(r, k, hb.basis[r][x].at(0, k));
  return rank(pairing);
}

std::size_t injective_multiplicity(const Representation& m, std::size_t x) {
  return projective_multiplicity(dual(m), x);
}

bool TauResult::dropped_any() const {
  for (auto d : dropped)
    if (d) return true;
  return false;
}

TauResult tau(const Representation& m) {
  const auto& alg = m.algebra();
  const Field f = m.field();
  TauResult res;
  for (std::size_t x = 0; x < alg->vertex_count(); ++x) res.dropped.push_back(projective_multiplicity(m, x));

  ProjectiveCover p0 = projective_cover(m);
  ProjectiveCover p1 = projective_cover(p0.syzygy.module);
  auto op = alg->opposite();
  Representation p0s = projective_sum(op, p0.tops);
  Representation p1s = projective_sum(op, p1.tops);

  // Offsets of the summands of P_1^* at each vertex.
  std::vector<std::vector<std::size_t>> p1_off(op->vertex_count());
  for (std::size_t v = 0; v < op->vertex_count(); ++v) {
    std::size_t acc = 0;
    for (auto yj : p1.tops) {
      p1_off[v].push_back(acc);
      acc += op->basis(yj, v).size();
    }
  }
  // The generator of P_{x_i}^* goes to sum_j rev(c_ij), where c_ij is the x_i
  // component of the j-th generator of the syzygy.
  std::vector<Mat> images;
  for (std::size_t i = 0; i < p0.tops.size(); ++i) {
    const auto xi = p0.tops[i];
    Mat img(f, p1s.dim(xi), 1);
    for (std::size_t j = 0; j < p1.tops.size(); ++j) {
      const auto yj = p1.tops[j];
      Mat k = p0.syzygy.inclusion[yj] * p1.generators[j];
      std::size_t off = 0;
      for (std::size_t i2 = 0; i2 < i; ++i2) off += alg->basis(p0.tops[i2], yj).size();
      const auto& paths = alg->basis(xi, yj);
      for (std::size_t s = 0; s < paths.size(); ++s) {
        if (k.entry_is_zero(off + s, 0)) continue;
        Mat coords = op->reduce(paths[s].reversed()).scaled(k.at(off + s, 0));
        Mat cur = img.block(p1_off[xi][j], 0, coords.rows(), 1);
        img.set_block(p1_off[xi][j], 0, cur + coords);
      }
    }
    images.push_back(std::move(img));
  }
  Morphism fstar = morphism_from_projectives(p0.tops, images, p1s);
  ensure(is_morphism(p0s, p1s, fstar), "transpose map is not a morphism");
  std::vector<Mat> spans;
  for (const auto& fv : fstar) spans.push_back(fv.select_columns(independent_columns(fv)));
  Representation tr = quotient(p1s, spans).module;
  res.module = dual(tr);
  ensure(res.module.algebra()->same_as(*alg), "tau landed over a different algebra");
  return res;
}

TauResult tau_inverse(const Representation& m) {
  TauResult t = tau(dual(m));
  t.module = dual(t.module);
  return t;
}

PeriodReport tau_orbit(const Representation& m, std::size_t max_steps, std::uint64_t seed) {
  PeriodReport rep;
  rep.orbit.push_back(m.dim());
  Representation cur = m;
  for (std::size_t step = 1; step <= max_steps; ++step) {
    TauResult t = tau(cur);
    if (t.dropped_any()) rep.hit_projective = true;
    cur = t.module;
    rep.orbit.push_back(cur.dim());
    if (cur.dim() == m.dim() && iso(cur, m, seed)) {
      rep.periodic = true;
      rep.period = step;
      break;
    }
    if (cur.is_zero()) break;
  }
  return rep;
}

}  // namespace repvar
