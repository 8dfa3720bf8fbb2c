#pragma once

// Deterministic invariant battery over one of the builtin algebras.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "repvar/report.hpp"

namespace repvar {

struct SuiteAlgebra {
  std::string name;
  AlgebraPtr algebra;
  std::optional<CanonicalAlgebra> canonical;
};
// kronecker | square | canonical:P1,P2,... (lambda_i = 1, 2, ...), over GF(101) by default.
SuiteAlgebra suite_algebra(const std::string& name, Field f = Field::prime(101));

// Uniform entries in [0, max_entry], not all zero.
DimVec random_dim(const AlgebraPtr& alg, Rng& rng, std::size_t max_entry);
// Entry bound used by the suite and the acceptance runs for this algebra.
std::size_t default_max_entry(const SuiteAlgebra& sa);
// A random module of a random dimension vector, glued from the zoo (and the
// tube modules for canonical algebras).
Representation random_sample(const SuiteAlgebra& sa, Rng& rng, const std::vector<Representation>& extra = {});

// Coxeter matrix -C^{-1} C^T of a hereditary algebra: dim tau X = Phi dim X
// for indecomposable non-projective X.
std::vector<std::vector<long>> coxeter_matrix(const EulerForm& e);

struct SuiteCheck {
  std::string name;
  std::size_t samples = 0;
  std::size_t failures = 0;
  std::string first_failure;
  bool passed() const { return failures == 0; }
};

struct SuiteResult {
  std::string algebra;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::vector<SuiteCheck> checks;
  bool passed() const;
};

SuiteResult run_suite(const std::string& algebra, std::uint64_t seed, std::size_t samples = 20);
Json to_json(const SuiteResult& r);

}  // namespace repvar
