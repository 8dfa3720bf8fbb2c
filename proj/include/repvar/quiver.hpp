#pragma once

// Quivers, paths, relations and bound quivers.
//
// Paths are stored in written order: sigma = a_1 a_2 ... a_l means a_l is
// applied first, so s(sigma) = s(a_l) and t(sigma) = t(a_1). In text they are
// written dot-separated, e.g. "beta.alpha".

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "repvar/arith.hpp"

namespace repvar {

struct Arrow {
  std::string name;
  std::size_t source;
  std::size_t target;
};

class Quiver {
 public:
  std::size_t add_vertex(const std::string& name);
  std::size_t add_arrow(const std::string& name, std::size_t source, std::size_t target);
  std::size_t add_arrow(const std::string& name, const std::string& source, const std::string& target);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }
  const std::string& vertex_name(std::size_t v) const { return vertices_.at(v); }
  const std::vector<std::string>& vertex_names() const noexcept { return vertices_; }
  const Arrow& arrow(std::size_t a) const { return arrows_.at(a); }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }

  // Throws UnknownVertex.
  std::size_t vertex_index(const std::string& name) const;
  std::optional<std::size_t> find_arrow(const std::string& name) const;

  bool is_acyclic() const;
  // Longest path length; only meaningful for acyclic quivers.
  std::size_t longest_path() const;

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.vertices_ == b.vertices_ && a.arrow_key() == b.arrow_key();
  }

 private:
  std::vector<std::tuple<std::string, std::size_t, std::size_t>> arrow_key() const;
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::map<std::string, std::size_t> vertex_index_;
  std::map<std::string, std::size_t> arrow_index_;
};

class Path {
 public:
  static Path trivial(std::size_t vertex) { return Path(vertex, vertex, {}); }
  static Path arrow(const Quiver& q, std::size_t a) { return Path(q.arrow(a).source, q.arrow(a).target, {a}); }
  // Written-order arrow list; checks composability.
  static Path from_arrows(const Quiver& q, std::vector<std::size_t> arrows);
  // Parses "b.a"; a single vertex name denotes its trivial path "e_x" if prefixed with "e_".
  static Path parse(const Quiver& q, const std::string& text);

  std::size_t source() const noexcept { return source_; }
  std::size_t target() const noexcept { return target_; }
  std::size_t length() const noexcept { return arrows_.size(); }
  bool is_trivial() const noexcept { return arrows_.empty(); }
  const std::vector<std::size_t>& arrows() const noexcept { return arrows_; }

  // this * first: `first` is traversed before this path.
  Path after(const Path& first) const;
  // Same arrows read in the opposite quiver.
  Path reversed() const;

  std::string to_string(const Quiver& q) const;
  // Order by length, then lexicographically by arrow names in written order.
  static bool less(const Quiver& q, const Path& a, const Path& b);

  friend bool operator==(const Path& a, const Path& b) = default;

 private:
  Path(std::size_t s, std::size_t t, std::vector<std::size_t> arrows)
      : source_(s), target_(t), arrows_(std::move(arrows)) {}
  std::size_t source_;
  std::size_t target_;
  std::vector<std::size_t> arrows_;
};

struct RelationTerm {
  mpq_class coefficient;
  Path path;
};

struct Relation {
  std::vector<RelationTerm> terms;
  // Common source / target; meaningful once validated.
  std::size_t source() const { return terms.front().path.source(); }
  std::size_t target() const { return terms.front().path.target(); }
  std::size_t min_length() const;
  std::string to_string(const Quiver& q) const;
};

struct BoundQuiver {
  std::string name;
  Quiver quiver;
  std::vector<Relation> relations;
  std::size_t bound = 2;  // every path of this length lies in the ideal
};

struct PairCertificate {
  std::size_t source;
  std::size_t target;
  std::size_t paths_of_bound_length;
  std::size_t ideal_rank;
  bool contained;
};

struct AdmissibilityCertificate {
  bool admissible = true;
  std::size_t bound = 0;
  std::vector<PairCertificate> pairs;
};

struct ValidationReport {
  std::vector<std::string> relation_issues;
  AdmissibilityCertificate admissibility;
  bool triangular = false;
  // Lint, e.g. relations lying in the ideal of the others.
  std::vector<std::string> warnings;
  bool valid() const { return relation_issues.empty() && admissibility.admissible; }
};

// All paths x -> y of length <= max_len, ordered by (length, names).
std::vector<Path> enumerate_paths(const BoundQuiver& bq, const std::string& x, const std::string& y,
                                  std::size_t max_len);
std::vector<Path> enumerate_paths(const Quiver& q, std::size_t x, std::size_t y, std::size_t max_len);

// Path space between a vertex pair, truncated at a length, together with the
// spanning set {u rho v} of the relation ideal inside it.
struct PathSpace {
  std::vector<Path> paths;
  std::map<std::vector<std::size_t>, std::size_t> index;
  Mat generators;  // one column per u rho v
};
PathSpace ideal_span(const BoundQuiver& bq, std::size_t x, std::size_t y, std::size_t max_len, Field f);

AdmissibilityCertificate is_admissible(const BoundQuiver& bq, std::size_t bound, Field f = Field::rationals());
ValidationReport validate(const BoundQuiver& bq, Field f = Field::rationals());

// Built-in examples.
BoundQuiver kronecker_quiver();
// 1 -alpha-> 2 -beta-> 4, 1 -gamma-> 3 -delta-> 4 with beta.alpha = delta.gamma.
BoundQuiver commutative_square();

}  // namespace repvar
