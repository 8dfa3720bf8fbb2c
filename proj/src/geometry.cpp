#include "repvar/geometry.hpp"

namespace repvar {

namespace {

// Coordinates of the class of z in Ext^1 with respect to cs.ext_basis.
Mat ext_coordinates(const CocycleSpace& cs, const Cochain& z) {
  const Field f = cs.n.field();
  std::vector<Mat> cols;
  for (const auto& b : cs.b_basis) cols.push_back(flatten_cochain(b));
  for (const auto& e : cs.ext_basis) cols.push_back(flatten_cochain(e));
  const std::size_t rows = flatten_cochain(z).rows();
  auto c = solve(hstack(cols, f, rows), flatten_cochain(z));
  ensure(c.has_value(), "element is not a cocycle");
  return c->block(cs.b_dim(), 0, cs.ext1_dim(), 1);
}

// Phi with the W-part taken from `wmaps` and the H-part included when `with_h`.
Mat phi_block(const Representation& h, const DimVec& d, const std::vector<Mat>& wmaps, bool with_h) {
  const Field f = h.field();
  const Quiver& q = h.quiver();
  std::vector<std::size_t> roff, coff;
  std::size_t p = 0, qq = 0;
  for (const auto& a : q.arrows()) {
    roff.push_back(p);
    p += h.dim(a.source) * d[a.target];
  }
  for (std::size_t y = 0; y < d.size(); ++y) {
    coff.push_back(qq);
    qq += h.dim(y) * d[y];
  }
  Mat phi(f, p, qq);
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    // vec(W_a f_s) = (1 kron W_a) vec f_s ; vec(f_t H_a) = (H_a^T kron 1) vec f_t.
    Mat ws = kron(Mat::identity(f, h.dim(ar.source)), wmaps[a]);
    Mat cur = phi.block(roff[a], coff[ar.source], ws.rows(), ws.cols());
    phi.set_block(roff[a], coff[ar.source], cur + ws);
    if (with_h) {
      Mat ht = kron(h.map(a).transpose(), Mat::identity(f, d[ar.target]));
      cur = phi.block(roff[a], coff[ar.target], ht.rows(), ht.cols());
      phi.set_block(roff[a], coff[ar.target], cur - ht);
    }
  }
  return phi;
}

}  // namespace

long EulerForm::pair(const DimVec& d1, const DimVec& d2) const {
  if (d1.size() != matrix.size() || d2.size() != matrix.size()) throw ShapeError("dimension vector has the wrong length");
  long s = 0;
  for (std::size_t x = 0; x < d1.size(); ++x)
    for (std::size_t y = 0; y < d2.size(); ++y)
      s += static_cast<long>(d1[x]) * matrix[x][y] * static_cast<long>(d2[y]);
  return s;
}

EulerForm euler_form(const AlgebraPtr& alg, bool trust) {
  const auto& bq = alg->bound_quiver();
  const std::size_t n = alg->vertex_count();
  EulerForm e;
  e.matrix.assign(n, std::vector<long>(n, 0));
  for (std::size_t x = 0; x < n; ++x) e.matrix[x][x] = 1;
  for (const auto& a : bq.quiver.arrows()) --e.matrix[a.source][a.target];
  for (const auto& rho : bq.relations) ++e.matrix[rho.source()][rho.target()];
  e.triangular = bq.quiver.is_acyclic();
  e.gldim = 0;
  for (std::size_t x = 0; x < n && e.gldim; ++x) {
    auto p = pdim(simple(alg, x), 4);
    e.gldim = p ? std::optional<std::size_t>(std::max(*e.gldim, *p)) : std::nullopt;
  }
  if (!e.flags_hold()) {
    if (!trust)
      throw FlagsRequired("the Euler form needs a triangular algebra of global dimension at most 2 (" +
                          std::string(e.triangular ? "triangular" : "not triangular") + ", gldim " +
                          (e.gldim ? std::to_string(*e.gldim) : std::string("> 4")) + ")");
    e.trusted = true;
  }
  return e;
}

long chi(const AlgebraPtr& alg, const DimVec& d, bool trust) { return euler_form(alg, trust).chi(d); }

long a_coeff(const BoundQuiver& bq, const DimVec& d) {
  if (d.size() != bq.quiver.vertex_count()) throw ShapeError("dimension vector has the wrong length");
  long s = 0;
  for (const auto& a : bq.quiver.arrows()) s += static_cast<long>(d[a.source] * d[a.target]);
  for (const auto& rho : bq.relations) s -= static_cast<long>(d[rho.source()] * d[rho.target()]);
  return s;
}

std::size_t vdim(const DimVec& d1, const DimVec& d2) {
  std::size_t s = 0;
  for (std::size_t x = 0; x < d1.size(); ++x) s += d1[x] * d2[x];
  return s;
}

TangentReport tangent_report(const Representation& m) {
  if (!m.field().is_prime() && !m.field().is_rational()) throw NotAField("tangent spaces need a field");
  TangentReport r;
  r.d = m.dim();
  CocycleSpace cs = cocycles(m, m);
  r.dim_t = cs.z_dim();
  r.orbit_dim = cs.b_dim();
  r.hom = cs.hom_nm;
  r.vdim = cs.vdim;
  r.ext1 = extn_dim(m, m, 1);
  ensure(r.dim_t == r.orbit_dim + r.ext1, "Voigt identity fails");
  r.a = a_coeff(m.algebra()->bound_quiver(), m.dim());
  try {
    EulerForm e = euler_form(m.algebra());
    r.flags = true;
    r.ext2_euler = static_cast<long>(r.dim_t) - r.a;
    r.ext2_resolution = extn_dim(m, m, 2);
    ensure(*r.ext2_euler == static_cast<long>(*r.ext2_resolution), "dim T - a differs from ext^2(M,M)");
    ensure(r.a == static_cast<long>(r.vdim) - e.chi(m.dim()), "a(d) differs from dim V - chi(d)");
  } catch (const FlagsRequired&) {
    r.flags = false;
  }
  r.verdict = r.ext1 == 0 ? "orbit-open-in-scheme" : "orbit-not-open";
  return r;
}

ETangent e_tangent(const Representation& u, const Representation& v) {
  require_same_algebra(u, v);
  return {cocycles(u, u), cocycles(v, u), cocycles(v, v)};
}

StratumTangentTest stratum_tangent_test(const Cochain& z11, const Cochain& z21, const Cochain& z22,
                                        const Representation& u, const Representation& v) {
  require_same_algebra(u, v);
  auto check = [](const Representation& n, const Representation& m, const Cochain& z, const char* what) {
    if (z.size() != n.maps().size()) throw ShapeError(std::string(what) + " has the wrong number of arrows");
    for (std::size_t a = 0; a < z.size(); ++a) {
      const Arrow& ar = n.quiver().arrow(a);
      if (z[a].rows() != m.dim(ar.target) || z[a].cols() != n.dim(ar.source))
        throw ShapeError(std::string(what) + " has a block of the wrong shape");
    }
    if (!is_cocycle(n, m, z)) throw NotACocycle(std::string(what) + " is not a cocycle");
  };
  check(u, u, z11, "Z11");
  check(v, u, z21, "Z21");
  check(v, v, z22, "Z22");
  StratumTangentTest res;
  const ExtClass x11{u, u, z11};
  const ExtClass x22{v, v, z22};
  for (const auto& f : hom_basis(v, u).basis) {
    ExtClass lhs = push_pull(f, x11, Side::right, v);
    ExtClass rhs = push_pull(f, x22, Side::left, u);
    if (!coboundary_preimage(v, u, add(lhs.z, scale(rhs.z, Scalar(u.field(), -1L))))) {
      res.hom_condition = false;
      break;
    }
  }
  for (const auto& xi : cocycles(v, u).ext_basis) {
    const ExtClass x{v, u, xi};
    if (!add(yoneda_product(x11, x), yoneda_product(x, x22)).is_zero()) {
      res.ext_condition = false;
      break;
    }
  }
  return res;
}

std::size_t stratum_tangent_dim(const Representation& u, const Representation& v) {
  const Field f = u.field();
  ETangent t = e_tangent(u, v);
  const auto homs = hom_basis(v, u).basis;
  const auto& exts = t.vu.ext_basis;
  std::optional<CocycleSpace> ext2;
  if (!exts.empty()) ext2 = cocycles(projective_cover(v).syzygy.module, u);

  // One column per basis element of Z^{U,U} x Z^{V,V}.
  std::vector<Mat> cols;
  auto image = [&](const Cochain& z11, const Cochain& z22) {
    std::vector<Mat> parts;
    for (const auto& fm : homs) {
      ExtClass lhs = push_pull(fm, ExtClass{u, u, z11}, Side::right, v);
      ExtClass rhs = push_pull(fm, ExtClass{v, v, z22}, Side::left, u);
      parts.push_back(ext_coordinates(t.vu, add(lhs.z, scale(rhs.z, Scalar(f, -1L)))));
    }
    for (const auto& xi : exts) {
      const ExtClass x{v, u, xi};
      Ext2Element y = add(yoneda_product(ExtClass{u, u, z11}, x), yoneda_product(x, ExtClass{v, v, z22}));
      parts.push_back(ext_coordinates(*ext2, y.z));
    }
    return vstack(parts, f, 1);
  };
  const Cochain zero_uu = zero_cochain(u, u), zero_vv = zero_cochain(v, v);
  for (const auto& z : t.uu.z_basis) cols.push_back(image(z, zero_vv));
  for (const auto& z : t.vv.z_basis) cols.push_back(image(zero_uu, z));
  const std::size_t nvars = cols.size();
  std::size_t kernel = nvars;
  if (nvars > 0) kernel = nvars - rank(hstack(cols, f, cols.front().rows()));
  return t.vu.z_dim() + kernel;
}

Mat phi_matrix(const Representation& h, const Representation& w) {
  require_same_algebra(h, w);
  return phi_block(h, w.dim(), w.maps(), true);
}

TMat phi_matrix(const Representation& h, const TruncatedRepresentation& w) {
  require_same_algebra(h.algebra(), w.algebra());
  TMat out;
  for (std::size_t k = 0; k < w.order(); ++k) {
    std::vector<Mat> coeffs;
    for (const auto& m : w.maps()) coeffs.push_back(m.coeff(k));
    Mat c = phi_block(h, w.dim(), coeffs, k == 0);
    if (k == 0) out = TMat(h.field(), w.order(), c.rows(), c.cols());
    out.coeff(k) = std::move(c);
  }
  return out;
}

std::vector<std::size_t> hom_rank_profile(const Representation& h, const TruncatedRepresentation& a) {
  TMat phi = phi_matrix(h, a);
  std::vector<std::size_t> out;
  for (std::size_t j = 1; j <= a.order(); ++j) {
    const std::size_t r = rank_k_truncated(phi.truncate(j));
    out.push_back(phi.cols() * j - r);
  }
  return out;
}

std::vector<NamedModule> probe_zoo(const AlgebraPtr& alg, const std::vector<NamedModule>& extra) {
  std::vector<NamedModule> out;
  for (std::size_t x = 0; x < alg->vertex_count(); ++x) {
    const std::string& name = alg->quiver().vertex_name(x);
    out.push_back({"P_" + name, projective(alg, x)});
    out.push_back({"I_" + name, injective(alg, x)});
    out.push_back({"S_" + name, simple(alg, x)});
  }
  out.insert(out.end(), extra.begin(), extra.end());
  return out;
}

std::vector<ProbeValue> hom_order_probe(const Representation& n, const Representation& m,
                                        const std::vector<NamedModule>& probes) {
  require_same_algebra(n, m);
  std::vector<ProbeValue> out;
  for (const auto& p : probes) out.push_back({p.name, hom_dim(p.module, n), hom_dim(p.module, m)});
  return out;
}

SmoothnessCertificate certify_nonsingular(const Representation& n, const Representation& u, const Representation& v,
                                          const Cochain& z) {
  require_same_algebra(n, u);
  require_same_algebra(n, v);
  const auto& alg = n.algebra();
  EulerForm e;
  try {
    e = euler_form(alg);
  } catch (const FlagsRequired& err) {
    throw CertificateRefused("triangular, gldim <= 2", err.what());
  }
  SmoothnessCertificate c;
  c.d = n.dim();
  c.d_u = u.dim();
  c.d_v = v.dim();
  if (!iso(n, direct_sum(u, v))) throw CertificateRefused("N = U + V", "N is not isomorphic to U + V");
  if (z.size() != n.maps().size() || !is_cocycle(v, u, z))
    throw CertificateRefused("witness", "Z is not a cocycle in Z^{V,U}");

  CocycleSpace uv = cocycles(u, v);
  c.ext1_uv = uv.ext1_dim();
  if (c.ext1_uv != 0) throw CertificateRefused("Ext1(U,V) = 0", "dim Ext^1(U,V) = " + std::to_string(c.ext1_uv));
  auto iv = idim(v);
  if (!iv || *iv > 1)
    throw CertificateRefused("idim V <= 1", "idim V = " + (iv ? std::to_string(*iv) : std::string("> 4")));
  c.idim_v = *iv;
  Representation w = middle_term({v, u, z});
  auto pw = pdim(w);
  if (!pw || *pw > 1)
    throw CertificateRefused("pdim W <= 1", "pdim W = " + (pw ? std::to_string(*pw) : std::string("> 4")));
  c.pdim_w = *pw;
  auto pu = pdim(u);
  ensure(pu && *pu <= 1, "pdim U exceeds 1 although pdim W <= 1 and gldim <= 2");
  c.pdim_u = *pu;

  ETangent t = e_tangent(u, v);
  c.z_uu = t.uu.z_dim();
  c.z_vv = t.vv.z_dim();
  c.z_vu = t.vu.z_dim();
  c.b_uv = uv.b_dim();
  ensure(uv.z_dim() == uv.b_dim(), "Z^{U,V} differs from B^{U,V}");
  c.ext2_vu = extn_dim(v, u, 2);
  c.stratum_bound = c.z_uu + c.z_vv + c.z_vu - c.ext2_vu;
  c.stratum_tangent = stratum_tangent_dim(u, v);
  ensure(c.stratum_tangent <= c.stratum_bound, "stratum tangent space exceeds its bound");

  c.z_nn = cocycles(n, n).z_dim();
  ensure(c.z_nn == c.z_uu + c.z_vv + c.z_vu + c.b_uv, "Z^{N,N} does not split into its blocks");
  c.ext2_nn_resolution = extn_dim(n, n, 2);
  c.ext2_nn_euler = e.chi(n.dim()) - static_cast<long>(hom_dim(n, n)) + static_cast<long>(extn_dim(n, n, 1));
  ensure(c.ext2_nn_euler == static_cast<long>(c.ext2_nn_resolution), "Ext^2(N,N) differs between routes");
  ensure(c.ext2_nn_resolution == c.ext2_vu, "Ext^2(N,N) differs from Ext^2(V,U)");
  c.tangent_bound = static_cast<long>(c.z_nn) - static_cast<long>(c.ext2_nn_resolution);
  c.a = a_coeff(alg->bound_quiver(), n.dim());
  ensure(c.tangent_bound == static_cast<long>(vdim(n.dim(), n.dim())) - e.chi(n.dim()),
         "dim Z^{N,N} - ext^2 differs from dim V - chi(d)");
  if (c.tangent_bound > c.a)
    throw CertificateRefused("dim T <= a(d)", "bound " + std::to_string(c.tangent_bound) + " exceeds a(d) = " +
                                                  std::to_string(c.a));
  c.assumptions = {
      "N lies on the irreducible component under consideration",
      "some open subset of the component meeting E^{d2,d1} contains N and has constant hom = [V,U] and ext = "
      "[V,U]^1",
  };
  return c;
}

}  // namespace repvar
