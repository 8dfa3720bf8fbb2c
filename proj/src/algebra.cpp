#include "repvar/algebra.hpp"

#include "repvar/representation.hpp"

namespace repvar {

AlgebraPtr Algebra::build(BoundQuiver bq, Field f) {
  ValidationReport rep = validate(bq, f);
  if (!rep.valid()) {
    std::string why = rep.relation_issues.empty() ? "some path of length " + std::to_string(bq.bound) +
                                                        " is not in the relation ideal"
                                                  : rep.relation_issues.front();
    throw NotAdmissible("bound quiver '" + bq.name + "' is not admissible: " + why);
  }
  auto alg = std::make_shared<Algebra>(Private{}, std::move(bq), f);
  alg->self_ = alg;
  return alg;
}

Algebra::Algebra(Private, BoundQuiver bq, Field f) : bq_(std::move(bq)), field_(f) {
  n_ = bq_.quiver.vertex_count();
  const std::size_t top = bq_.bound == 0 ? 0 : bq_.bound - 1;
  pairs_.resize(n_ * n_);
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t y = 0; y < n_; ++y) {
      PathSpace ps = ideal_span(bq_, x, y, top, f);
      PairData& pd = pairs_[x * n_ + y];
      pd.path_index = ps.index;
      const std::size_t np = ps.paths.size();
      const std::size_t ng = ps.generators.cols();
      // Greedy complement of the ideal: a path is a basis element when it is
      // independent of the ideal and of all smaller paths.
      Mat all = hstack({ps.generators, Mat::identity(f, np)}, f, np);
      std::vector<std::size_t> chosen = independent_columns(all);
      std::vector<std::size_t> gens, basis_rows;
      for (std::size_t c : chosen) (c < ng ? gens : basis_rows).push_back(c < ng ? c : c - ng);
      Mat square(f, np, np);
      for (std::size_t j = 0; j < basis_rows.size(); ++j) {
        pd.basis.push_back(ps.paths[basis_rows[j]]);
        square.set(basis_rows[j], j, 1);
      }
      square.set_block(0, basis_rows.size(), ps.generators.select_columns(gens));
      auto inv = inverse(square);
      ensure(inv.has_value(), "path basis completion is not invertible");
      pd.reduction = inv->block(0, 0, basis_rows.size(), np);
      dimension_ += pd.basis.size();
      if (x == y) ensure(!pd.basis.empty() && pd.basis.front().is_trivial(), "idempotent missing from basis");
    }
  actions_.assign(n_, {});
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t a = 0; a < bq_.quiver.arrow_count(); ++a) {
      const Arrow& ar = bq_.quiver.arrow(a);
      const auto& from = basis(x, ar.source);
      Mat act(f, basis(x, ar.target).size(), from.size());
      for (std::size_t j = 0; j < from.size(); ++j) act.set_block(0, j, reduce(Path::arrow(bq_.quiver, a).after(from[j])));
      actions_[x].push_back(std::move(act));
    }
}

Mat Algebra::reduce(const Path& p) const {
  const PairData& pd = pairs_.at(p.source() * n_ + p.target());
  if (p.length() >= bq_.bound) return Mat(field_, pd.basis.size(), 1);
  return pd.reduction.column(pd.path_index.at(p.arrows()));
}

BoundQuiver opposite_bound_quiver(const BoundQuiver& bq) {
  BoundQuiver op;
  const std::string suffix = "_op";
  const bool is_op = bq.name.size() >= suffix.size() &&
                     bq.name.compare(bq.name.size() - suffix.size(), suffix.size(), suffix) == 0;
  op.name = is_op ? bq.name.substr(0, bq.name.size() - suffix.size()) : bq.name + suffix;
  for (const auto& v : bq.quiver.vertex_names()) op.quiver.add_vertex(v);
  for (const auto& a : bq.quiver.arrows()) op.quiver.add_arrow(a.name, a.target, a.source);
  for (const auto& rho : bq.relations) {
    Relation r;
    for (const auto& t : rho.terms) r.terms.push_back({t.coefficient, t.path.reversed()});
    op.relations.push_back(std::move(r));
  }
  op.bound = bq.bound;
  return op;
}

AlgebraPtr Algebra::opposite() const {
  if (auto parent = op_parent_.lock()) return parent;
  std::call_once(op_once_, [this] {
    auto op = std::make_shared<Algebra>(Private{}, opposite_bound_quiver(bq_), field_);
    op->self_ = op;
    op->op_parent_ = self_;
    op_ = op;
  });
  return op_;
}

bool Algebra::same_as(const Algebra& other) const {
  if (this == &other) return true;
  if (!(field_ == other.field_) || bq_.bound != other.bq_.bound || !(bq_.quiver == other.bq_.quiver)) return false;
  if (bq_.relations.size() != other.bq_.relations.size()) return false;
  for (std::size_t r = 0; r < bq_.relations.size(); ++r) {
    const auto& a = bq_.relations[r].terms;
    const auto& b = other.bq_.relations[r].terms;
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i].coefficient != b[i].coefficient || !(a[i].path == b[i].path)) return false;
  }
  return true;
}

Representation projective(const AlgebraPtr& alg, std::size_t x) {
  if (x >= alg->vertex_count()) throw UnknownVertex("vertex index out of range");
  DimVec d(alg->vertex_count());
  for (std::size_t y = 0; y < d.size(); ++y) d[y] = alg->basis(x, y).size();
  std::vector<Mat> maps;
  for (std::size_t a = 0; a < alg->quiver().arrow_count(); ++a) maps.push_back(alg->left_action(x, a));
  return Representation(alg, std::move(d), std::move(maps));
}

Representation injective(const AlgebraPtr& alg, std::size_t x) {
  Representation m = dual(projective(alg->opposite(), x));
  ensure(m.algebra()->same_as(*alg), "double opposite differs from the algebra");
  return m;
}

Representation simple(const AlgebraPtr& alg, std::size_t x) {
  if (x >= alg->vertex_count()) throw UnknownVertex("vertex index out of range");
  DimVec d(alg->vertex_count(), 0);
  d[x] = 1;
  return Representation(alg, std::move(d));
}

}  // namespace repvar
