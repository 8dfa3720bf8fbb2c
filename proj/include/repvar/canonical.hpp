#pragma once

// Ringel canonical algebras C(p, lambda), their tube modules and the bisection
// of mod C into {<h, X> <= 0} and {<h, X> > 0}.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "repvar/geometry.hpp"

namespace repvar {

enum class WeightType { domestic, tubular, wild };
std::string to_string(WeightType w);

// Drops weights equal to 1 while more than two arms remain.
std::vector<std::size_t> normalize_weights(const std::vector<std::size_t>& p);
WeightType classify_weights(const std::vector<std::size_t>& p);
// "2,3,7"; throws BadParameters.
std::vector<std::size_t> parse_weights(const std::string& text);
// lambda_i = i - 2 for i = 3..t, matching the builtin names canonical:P1,P2,...
std::vector<mpq_class> default_lambda(const std::vector<std::size_t>& p);

// Vertices "0", a<i>_<j> (arm i, position j), "w"; arrows x<i>_<j> with
// x<i>_1 leaving 0. Relations arm_i - arm_2 + lambda_i arm_1 for i >= 3.
// `lambda` lists lambda_3..lambda_t for the normalized weights.
BoundQuiver canonical_bound_quiver(const std::vector<std::size_t>& p, const std::vector<mpq_class>& lambda);

struct CanonicalAlgebra {
  std::vector<std::size_t> weights;  // normalized
  std::vector<mpq_class> lambda;
  AlgebraPtr algebra;
  EulerForm euler;
  std::size_t source = 0;
  std::size_t sink = 0;
  std::vector<std::vector<std::size_t>> arm_vertices;  // interior vertices, from 0 towards w
  std::vector<std::vector<std::size_t>> arm_arrows;    // from 0 towards w

  std::size_t arms() const { return weights.size(); }
  WeightType type() const { return classify_weights(weights); }
};

// Throws BadParameters when t < 2, the number of parameters is not t - 2, or
// the lambda_i are not distinct and nonzero in the field.
CanonicalAlgebra build_canonical(const std::vector<std::size_t>& p, const std::vector<mpq_class>& lambda, Field f);

DimVec h_vector(const CanonicalAlgebra& ca);
// Parameters mu for which homogeneous_module is not defined: 0 and the lambda_i.
bool is_exceptional_parameter(const CanonicalAlgebra& ca, const mpq_class& mu);
// Dimension vector h, every arrow 1 except the last arrow of arm i >= 2,
// which acts by mu (i = 2) or mu - lambda_i.
Representation homogeneous_module(const CanonicalAlgebra& ca, const mpq_class& mu);
// The first `count` non-exceptional parameters 1, 2, 3, ...
std::vector<mpq_class> homogeneous_parameters(const CanonicalAlgebra& ca, std::size_t count);

// tau-orbit of the simple at the first interior vertex of `arm` (0-based).
// Its length equals the arm weight; asserted.
std::vector<Representation> exceptional_mouth(const CanonicalAlgebra& ca, std::size_t arm);

// Mouth modules of every exceptional tube plus `homogeneous` homogeneous ones.
std::vector<NamedModule> tube_modules(const CanonicalAlgebra& ca, std::size_t homogeneous = 2);

enum class BisectionClass { left, right, mixed };
std::string to_string(BisectionClass c);

struct ClassifiedSummand {
  Representation module;
  std::size_t multiplicity = 0;
  long pairing = 0;  // <h, dim X>
};
struct Bisection {
  BisectionClass cls = BisectionClass::left;
  std::vector<ClassifiedSummand> summands;
};
Bisection bisection_classify(const CanonicalAlgebra& ca, const Representation& m, std::uint64_t seed = 1);

struct ScanSample {
  std::uint64_t seed = 0;
  PeriodReport period;
  Bisection bisection;
  std::optional<std::size_t> pdim;
  bool consistent = true;  // periodic implies class L, pairings 0 and pdim <= 1
};
struct ScanReport {
  DimVec d;
  std::size_t max_period = 0;
  std::vector<ScanSample> samples;
  std::size_t periodic_count() const;
  bool consistent() const;
};
// Samples random modules of dimension vector d (glued from the zoo and the
// tube modules) and checks that the tau-periodic ones lie in the left class.
ScanReport tau_periodicity_scan(const CanonicalAlgebra& ca, const DimVec& d, std::size_t samples,
                                std::size_t max_period, std::uint64_t seed);

}  // namespace repvar
