#pragma once

// Representations of bound quivers over a field or over k[t]/(t^n).

#include <cstdint>
#include <string>
#include <vector>

#include "repvar/algebra.hpp"
#include "repvar/arith.hpp"

namespace repvar {

using DimVec = std::vector<std::size_t>;

// Vertex-indexed linear maps f_x : M_x -> N_x.
using Morphism = std::vector<Mat>;

class Representation {
 public:
  Representation() = default;
  // All arrow maps zero.
  Representation(AlgebraPtr alg, DimVec dim);
  // Throws ShapeError on wrong matrix shapes (does not check relations).
  Representation(AlgebraPtr alg, DimVec dim, std::vector<Mat> maps);

  const AlgebraPtr& algebra() const noexcept { return alg_; }
  const Quiver& quiver() const { return alg_->quiver(); }
  Field field() const { return alg_->field(); }
  const DimVec& dim() const noexcept { return dim_; }
  std::size_t dim(std::size_t x) const { return dim_.at(x); }
  std::size_t total_dim() const;
  bool is_zero() const { return total_dim() == 0; }

  const Mat& map(std::size_t a) const { return maps_.at(a); }
  const std::vector<Mat>& maps() const noexcept { return maps_; }
  void set_map(std::size_t a, Mat m);

  friend bool operator==(const Representation& a, const Representation& b);

 private:
  AlgebraPtr alg_;
  DimVec dim_;
  std::vector<Mat> maps_;
};

// M_sigma = M_{a_1} ... M_{a_l}; identity for a trivial path.
Mat evaluate_path(const Representation& m, const Path& p);
Mat evaluate_relation(const Representation& m, const Relation& rho);

bool validate(const Representation& m);
// Throws NotARepresentation naming the first failing relation.
void require_valid(const Representation& m);

// Throws QuiverMismatch unless both live over the same algebra.
void require_same_algebra(const Representation& a, const Representation& b);
void require_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

Representation zero_module(const AlgebraPtr& alg);
// Block diagonal, a's coordinates first.
Representation direct_sum(const Representation& a, const Representation& b);
Representation direct_sum(const std::vector<Representation>& parts, const AlgebraPtr& alg);

// g * M with (g*M)_a = g_{ta} M_a g_{sa}^{-1}.
Representation conjugate(const Representation& m, const Morphism& g);
// Random element of GL_d.
Morphism random_gl(const AlgebraPtr& alg, const DimVec& d, Rng& rng);

// The dual D M as a representation of the opposite algebra.
Representation dual(const Representation& m);

// Composition and checks for vertex-indexed maps.
Morphism compose(const Morphism& g, const Morphism& f);  // g after f
Morphism identity_morphism(const Representation& m);
bool is_morphism(const Representation& m, const Representation& n, const Morphism& f);
bool is_invertible(const Morphism& f);

struct EndAlgebra {
  std::vector<Morphism> basis;  // basis.front() is the identity when M != 0
  // structure[i][j] = coordinates of basis[i] * basis[j].
  std::vector<std::vector<std::vector<Scalar>>> structure;
};
EndAlgebra end_algebra(const Representation& m);

struct Summand {
  Representation module;
  std::size_t multiplicity;
};
// Krull-Schmidt decomposition over GF(p). Summands are grouped by isomorphism
// class and sorted by (total dimension, dimension vector). Throws
// UnsupportedField over Q.
std::vector<Summand> decompose(const Representation& m, Rng& rng);
std::vector<Summand> decompose(const Representation& m, std::uint64_t seed = 1);
bool is_indecomposable(const Representation& m, std::uint64_t seed = 1);

struct IsoResult {
  bool isomorphic = false;
  // Upper bound on the probability that an isomorphism exists but was missed.
  double miss_probability = 0.0;
  Morphism witness;  // an isomorphism when found
};
IsoResult iso_test(const Representation& m, const Representation& n, Rng& rng);
bool iso(const Representation& m, const Representation& n, std::uint64_t seed = 1);

// Random module of dimension vector d: a random sum of building blocks
// (simples, projectives, injectives and `extra`), glued by random extension
// cocycles and conjugated by a random element of GL_d. Deterministic per seed.
Representation random_module(const AlgebraPtr& alg, const DimVec& d, std::uint64_t seed,
                             const std::vector<Representation>& extra = {});

// A representation over k[t]/(t^n).
class TruncatedRepresentation {
 public:
  TruncatedRepresentation() = default;
  TruncatedRepresentation(AlgebraPtr alg, std::size_t order, DimVec dim);
  TruncatedRepresentation(AlgebraPtr alg, std::size_t order, DimVec dim, std::vector<TMat> maps);
  static TruncatedRepresentation constant(const Representation& m, std::size_t order);

  const AlgebraPtr& algebra() const noexcept { return alg_; }
  const Quiver& quiver() const { return alg_->quiver(); }
  Field field() const { return alg_->field(); }
  std::size_t order() const noexcept { return order_; }
  const DimVec& dim() const noexcept { return dim_; }
  std::size_t dim(std::size_t x) const { return dim_.at(x); }
  const TMat& map(std::size_t a) const { return maps_.at(a); }
  const std::vector<TMat>& maps() const noexcept { return maps_; }
  void set_map(std::size_t a, TMat m);

  // Reduction modulo t: A / tA.
  Representation special_fiber() const;
  // Image in k[t]/(t^k).
  TruncatedRepresentation truncate(std::size_t k) const;

 private:
  AlgebraPtr alg_;
  std::size_t order_ = 1;
  DimVec dim_;
  std::vector<TMat> maps_;
};

TMat evaluate_path(const TruncatedRepresentation& m, const Path& p);
TMat evaluate_relation(const TruncatedRepresentation& m, const Relation& rho);
bool validate(const TruncatedRepresentation& m);
// (g*A)_a = g_{ta} A_a g_{sa}^{-1}; g vertex-indexed over the same ring.
TruncatedRepresentation conjugate(const TruncatedRepresentation& m, const std::vector<TMat>& g);

std::string format_dim(const DimVec& d);

}  // namespace repvar
