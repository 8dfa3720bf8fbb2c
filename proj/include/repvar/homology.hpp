#pragma once

// Hom spaces, cocycles and coboundaries, extensions, projective resolutions,
// Yoneda products and the Auslander-Reiten translate.

#include <optional>
#include <vector>

#include "repvar/representation.hpp"

namespace repvar {

// Arrow-indexed maps Z_a : N_{sa} -> M_{ta} (a point of the affine space of
// off-diagonal blocks for extensions 0 -> M -> W -> N -> 0).
using Cochain = std::vector<Mat>;

struct HomBasis {
  std::vector<Morphism> basis;
  std::size_t dim() const noexcept { return basis.size(); }
};

// Basis of Hom(H, W) from the system W_a f_{sa} - f_{ta} H_a = 0.
HomBasis hom_basis(const Representation& h, const Representation& w);
std::size_t hom_dim(const Representation& h, const Representation& w);

// Flat coordinates: concatenated column-major blocks.
Mat flatten(const Morphism& f);
Morphism unflatten_morphism(const Mat& v, const DimVec& from, const DimVec& to);
Mat flatten_cochain(const Cochain& z);
Cochain unflatten_cochain(const Mat& v, const Representation& n, const Representation& m);
Cochain zero_cochain(const Representation& n, const Representation& m);
Cochain add(const Cochain& a, const Cochain& b);
Cochain scale(const Cochain& a, const Scalar& c);

// The cocycle space Z^{N,M}, its coboundaries B^{N,M} and complement
// representatives of Ext^1(N, M).
struct CocycleSpace {
  Representation n;
  Representation m;
  std::vector<Cochain> z_basis;
  std::vector<Cochain> b_basis;
  std::vector<Morphism> b_witness;  // b_basis[i] = h o N - M o h for h = b_witness[i]
  std::vector<Cochain> ext_basis;
  std::size_t ambient_dim = 0;  // dim of the affine space of cochains
  std::size_t vdim = 0;         // sum_x d_N(x) d_M(x)
  std::size_t hom_nm = 0;       // [N, M]

  std::size_t z_dim() const noexcept { return z_basis.size(); }
  std::size_t b_dim() const noexcept { return b_basis.size(); }
  std::size_t ext1_dim() const noexcept { return z_basis.size() - b_basis.size(); }
};
CocycleSpace cocycles(const Representation& n, const Representation& m);

// Z_rho^{N,M} for the relation rho.
Mat evaluate_relation(const Representation& n, const Representation& m, const Cochain& z, const Relation& rho);
bool is_cocycle(const Representation& n, const Representation& m, const Cochain& z);
// (h o N - M o h)_a = h_{ta} N_a - M_a h_{sa}.
Cochain coboundary(const Representation& n, const Representation& m, const Morphism& h);
// Some h with Z = h o N - M o h, if Z is a coboundary.
std::optional<Morphism> coboundary_preimage(const Representation& n, const Representation& m, const Cochain& z);
std::size_t ext1_dim(const Representation& n, const Representation& m);

struct ExtClass {
  Representation n;  // quotient end
  Representation m;  // submodule end
  Cochain z;
};
bool is_zero(const ExtClass& e);
ExtClass random_ext_class(const CocycleSpace& cs, Rng& rng);

// W^Z = [[M, Z], [0, N]]; throws NotACocycle.
Representation middle_term(const ExtClass& e);

enum class Side { left, right };
// left: f o xi with f : M -> M', cocycle f_{ta} Z_a.
// right: xi o f with f : N' -> N, cocycle Z_a f_{sa}.
ExtClass push_pull(const Morphism& f, const ExtClass& xi, Side side, const Representation& other);

// Submodules and quotients given by vertexwise subspaces (columns).
struct Subrepresentation {
  Representation module;
  Morphism inclusion;
};
Subrepresentation subrepresentation(const Representation& m, const std::vector<Mat>& spans);
struct Quotient {
  Representation module;
  Morphism projection;
};
Quotient quotient(const Representation& m, const std::vector<Mat>& spans);
Subrepresentation kernel(const Representation& m, const Morphism& f);

// A direct sum of indecomposable projectives P_{x_1} + ... + P_{x_r}.
Representation projective_sum(const AlgebraPtr& alg, const std::vector<std::size_t>& tops);
// The morphism out of projective_sum(tops) sending the i-th generator to the
// column elements[i] in N_{tops[i]}.
Morphism morphism_from_projectives(const std::vector<std::size_t>& tops, const std::vector<Mat>& elements,
                                   const Representation& n);

// Minimal projective cover built on a basis of the top M / rad M.
struct ProjectiveCover {
  std::vector<std::size_t> tops;
  std::vector<Mat> generators;
  Representation projective;
  Morphism map;
  Subrepresentation syzygy;
};
ProjectiveCover projective_cover(const Representation& m);
Representation syzygy(const Representation& m, std::size_t n = 1);

struct Resolution {
  Representation module;
  std::vector<ProjectiveCover> steps;  // steps[i] covers the i-th syzygy
  bool complete = false;               // some syzygy vanished
  bool minimal = true;
  // Projective terms as vertex multiplicities.
  std::vector<std::vector<std::size_t>> terms() const;
};
Resolution resolution(const Representation& m, std::size_t max_len);

// nullopt when the dimension exceeds `cap`. The zero module has dimension 0.
std::optional<std::size_t> pdim(const Representation& m, std::size_t cap = 4);
std::optional<std::size_t> idim(const Representation& m, std::size_t cap = 4);

// dim Ext^n(M, N) from the resolution of M: n = 0 is [M, N]; n >= 1 uses
// [Omega X, N] - [P_0(X), N] + [X, N] with X = Omega^{n-1} M.
std::size_t extn_dim(const Representation& m, const Representation& n, std::size_t degree);

// Ext^2(X, Z') realised as Ext^1(Omega X, Z').
struct Ext2Element {
  Representation syzygy;
  Representation target;
  Cochain z;
  bool is_zero() const;
};
// eta in Ext^1(Y, Z'), xi in Ext^1(X, Y).
Ext2Element yoneda_product(const ExtClass& eta, const ExtClass& xi);
Ext2Element add(const Ext2Element& a, const Ext2Element& b);

// Multiplicity of P_x (resp. I_x) as a direct summand.
std::size_t projective_multiplicity(const Representation& m, std::size_t x);
std::size_t injective_multiplicity(const Representation& m, std::size_t x);

struct TauResult {
  Representation module;
  std::vector<std::size_t> dropped;  // multiplicity per vertex of dropped P_x (or I_x)
  bool dropped_any() const;
};
// D Tr via a minimal projective presentation; projective summands go to zero.
TauResult tau(const Representation& m);
TauResult tau_inverse(const Representation& m);

struct PeriodReport {
  bool periodic = false;
  std::size_t period = 0;
  std::vector<DimVec> orbit;  // dimension vectors of M, tau M, ...
  bool hit_projective = false;
};
PeriodReport tau_orbit(const Representation& m, std::size_t max_steps, std::uint64_t seed = 1);

}  // namespace repvar
