#pragma once

// Euler form, tangent spaces of module schemes, the hom matrix Phi, the
// deformation triangularization over k[t]/(t^n) and nonsingularity certificates.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "repvar/homology.hpp"

namespace repvar {

struct EulerForm {
  std::vector<std::vector<long>> matrix;  // <d1, d2> = d1^T C d2
  bool triangular = false;
  std::optional<std::size_t> gldim;  // max pdim of simples, nullopt beyond the cap
  bool trusted = false;              // flags were not verified but trust was granted

  bool flags_hold() const { return triangular && gldim && *gldim <= 2; }
  long pair(const DimVec& d1, const DimVec& d2) const;
  long chi(const DimVec& d) const { return pair(d, d); }
};

// Throws FlagsRequired unless the algebra is triangular with gldim <= 2 or
// `trust` is set.
EulerForm euler_form(const AlgebraPtr& alg, bool trust = false);
long chi(const AlgebraPtr& alg, const DimVec& d, bool trust = false);
// sum_a d(sa) d(ta) - sum_rho d(s rho) d(t rho).
long a_coeff(const BoundQuiver& bq, const DimVec& d);
// dim V^{d1,d2} = sum_x d1(x) d2(x).
std::size_t vdim(const DimVec& d1, const DimVec& d2);

struct TangentReport {
  DimVec d;
  std::size_t dim_t = 0;      // dim Z^{M,M}
  std::size_t orbit_dim = 0;  // dim B^{M,M}
  std::size_t ext1 = 0;
  std::size_t hom = 0;  // [M, M]
  std::size_t vdim = 0;
  long a = 0;
  bool flags = false;
  std::optional<long> ext2_euler;              // dim T - a
  std::optional<std::size_t> ext2_resolution;  // from the resolution of M
  std::string verdict;
};
TangentReport tangent_report(const Representation& m);

// Blocks of T_{U+V} E^{d2,d1}: Z^{U,U}, Z^{V,U}, Z^{V,V}.
struct ETangent {
  CocycleSpace uu;
  CocycleSpace vu;
  CocycleSpace vv;
  std::size_t dim() const { return uu.z_dim() + vu.z_dim() + vv.z_dim(); }
};
ETangent e_tangent(const Representation& u, const Representation& v);

// Whether (Z11, Z21, Z22) is tangent to the stratum with constant [V,U] and
// [V,U]^1: every f in Hom(V,U) must satisfy Z11 f = f Z22 in Ext^1(V,U), and
// every xi in Ext^1(V,U) must satisfy Z11 xi + xi Z22 = 0 in Ext^2(V,U).
struct StratumTangentTest {
  bool hom_condition = true;
  bool ext_condition = true;
  bool holds() const { return hom_condition && ext_condition; }
};
StratumTangentTest stratum_tangent_test(const Cochain& z11, const Cochain& z21, const Cochain& z22,
                                        const Representation& u, const Representation& v);
// Dimension of the subspace of T E cut out by those conditions.
std::size_t stratum_tangent_dim(const Representation& u, const Representation& v);

// Phi(H, W): the p x q matrix of f -> (W_a f_{sa} - f_{ta} H_a)_a.
Mat phi_matrix(const Representation& h, const Representation& w);
TMat phi_matrix(const Representation& h, const TruncatedRepresentation& w);
// [H, A / t^j A] = q j - rank_k(Phi(A) / t^j), for j = 1..order.
std::vector<std::size_t> hom_rank_profile(const Representation& h, const TruncatedRepresentation& a);

struct ProbeValue {
  std::string name;
  std::size_t hom_n = 0;
  std::size_t hom_m = 0;
  long difference() const { return static_cast<long>(hom_n) - static_cast<long>(hom_m); }
};
struct NamedModule {
  std::string name;
  Representation module;
};
// Indecomposable projectives, injectives and simples, plus `extra`.
std::vector<NamedModule> probe_zoo(const AlgebraPtr& alg, const std::vector<NamedModule>& extra = {});
std::vector<ProbeValue> hom_order_probe(const Representation& n, const Representation& m,
                                        const std::vector<NamedModule>& probes);

// Outcome of the triangularization of a family A over k[t]/(t^n) with special
// fiber U + V.
struct SplitResult {
  std::vector<std::vector<TMat>> conjugators;  // g_1, g_2, ... in order of application
  std::vector<TMat> total;                     // composite conjugator
  TruncatedRepresentation diagonal;            // g * A, block diagonal mod t^n
};
struct WitnessResult {
  std::size_t level = 0;  // exponent of t carrying the obstruction
  Cochain z;              // in Z^{V,U} \ B^{V,U}
  Representation middle;  // W^Z
  std::vector<TMat> total;
  TruncatedRepresentation conjugated;
};
using SplitOrWitness = std::variant<SplitResult, WitnessResult>;

SplitOrWitness triangularize_family(const TruncatedRepresentation& a, const Representation& u,
                                    const Representation& v);

struct SmoothnessCertificate {
  DimVec d;
  DimVec d_u;
  DimVec d_v;
  std::size_t ext1_uv = 0;
  std::size_t idim_v = 0;
  std::size_t pdim_w = 0;
  std::size_t pdim_u = 0;
  std::size_t z_uu = 0;
  std::size_t z_vv = 0;
  std::size_t z_vu = 0;
  std::size_t b_uv = 0;
  std::size_t ext2_vu = 0;
  std::size_t ext2_nn_resolution = 0;
  long ext2_nn_euler = 0;
  std::size_t z_nn = 0;
  std::size_t stratum_bound = 0;  // z_uu + z_vv + z_vu - ext2_vu
  std::size_t stratum_tangent = 0;
  long tangent_bound = 0;  // dim Z^{N,N} - ext^2(N,N)
  long a = 0;
  std::vector<std::string> assumptions;
};
// Throws CertificateRefused naming the failing hypothesis.
SmoothnessCertificate certify_nonsingular(const Representation& n, const Representation& u, const Representation& v,
                                          const Cochain& z);

}  // namespace repvar
