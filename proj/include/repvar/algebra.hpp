#pragma once

// The algebra kQ/<R> of a bound quiver: a path basis per vertex pair, reduction
// of arbitrary paths to that basis, and the opposite algebra.

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "repvar/arith.hpp"
#include "repvar/quiver.hpp"

namespace repvar {

class Algebra;
class Representation;
using AlgebraPtr = std::shared_ptr<const Algebra>;

class Algebra {
  struct Private {};

 public:
  // Throws NotAdmissible unless the bound quiver validates over `f`.
  static AlgebraPtr build(BoundQuiver bq, Field f);

  Algebra(Private, BoundQuiver bq, Field f);

  const BoundQuiver& bound_quiver() const noexcept { return bq_; }
  const Quiver& quiver() const noexcept { return bq_.quiver; }
  Field field() const noexcept { return field_; }
  std::size_t vertex_count() const noexcept { return bq_.quiver.vertex_count(); }
  std::size_t dimension() const noexcept { return dimension_; }

  // Basis of e_y A e_x: residues of paths x -> y.
  const std::vector<Path>& basis(std::size_t x, std::size_t y) const { return pairs_.at(x * n_ + y).basis; }
  // Coordinates of a path in basis(source, target), as a column.
  Mat reduce(const Path& p) const;
  // Matrix of left multiplication by arrow a on e_? A e_x: basis(x, s a) -> basis(x, t a).
  const Mat& left_action(std::size_t x, std::size_t a) const { return actions_.at(x).at(a); }

  // Opposite algebra (arrows and relation words reversed). Cached; the
  // opposite of the opposite compares equal to this algebra.
  AlgebraPtr opposite() const;

  // Same bound quiver (names, arrows, relations, bound) and field.
  bool same_as(const Algebra& other) const;

 private:
  struct PairData {
    std::vector<Path> basis;
    std::map<std::vector<std::size_t>, std::size_t> path_index;
    Mat reduction;  // basis.size() x (paths of length < bound)
  };

  BoundQuiver bq_;
  Field field_;
  std::size_t n_ = 0;
  std::size_t dimension_ = 0;
  std::vector<PairData> pairs_;
  std::vector<std::vector<Mat>> actions_;

  mutable std::once_flag op_once_;
  mutable AlgebraPtr op_;
  std::weak_ptr<const Algebra> op_parent_;
  std::weak_ptr<const Algebra> self_;
};

BoundQuiver opposite_bound_quiver(const BoundQuiver& bq);

// The standard modules.
Representation projective(const AlgebraPtr& alg, std::size_t x);
Representation injective(const AlgebraPtr& alg, std::size_t x);
Representation simple(const AlgebraPtr& alg, std::size_t x);

}  // namespace repvar
