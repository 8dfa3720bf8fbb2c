#include "repvar/quiver.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace repvar {

std::size_t Quiver::add_vertex(const std::string& name) {
  if (name.empty()) throw BadParameters("empty vertex name");
  if (vertex_index_.count(name)) throw BadParameters("duplicate vertex '" + name + "'");
  vertex_index_[name] = vertices_.size();
  vertices_.push_back(name);
  return vertices_.size() - 1;
}

std::size_t Quiver::add_arrow(const std::string& name, std::size_t source, std::size_t target) {
  if (name.empty()) throw BadParameters("empty arrow name");
  if (arrow_index_.count(name) || vertex_index_.count(name))
    throw BadParameters("duplicate name '" + name + "'");
  if (source >= vertices_.size() || target >= vertices_.size())
    throw UnknownVertex("arrow '" + name + "' has an undeclared endpoint");
  arrow_index_[name] = arrows_.size();
  arrows_.push_back({name, source, target});
  return arrows_.size() - 1;
}

std::size_t Quiver::add_arrow(const std::string& name, const std::string& source, const std::string& target) {
  return add_arrow(name, vertex_index(source), vertex_index(target));
}

std::size_t Quiver::vertex_index(const std::string& name) const {
  auto it = vertex_index_.find(name);
  if (it == vertex_index_.end()) throw UnknownVertex("unknown vertex '" + name + "'");
  return it->second;
}

std::optional<std::size_t> Quiver::find_arrow(const std::string& name) const {
  auto it = arrow_index_.find(name);
  if (it == arrow_index_.end()) return std::nullopt;
  return it->second;
}

bool Quiver::is_acyclic() const {
  // Kahn's algorithm.
  std::vector<std::size_t> indeg(vertices_.size(), 0);
  for (const auto& a : arrows_) ++indeg[a.target];
  std::vector<std::size_t> stack;
  for (std::size_t v = 0; v < indeg.size(); ++v)
    if (indeg[v] == 0) stack.push_back(v);
  std::size_t seen = 0;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    ++seen;
    for (const auto& a : arrows_)
      if (a.source == v && --indeg[a.target] == 0) stack.push_back(a.target);
  }
  return seen == vertices_.size();
}

std::size_t Quiver::longest_path() const {
  std::vector<std::size_t> best(vertices_.size(), 0);
  // Bellman-style relaxation; terminates for acyclic quivers.
  for (std::size_t round = 0; round < vertices_.size(); ++round)
    for (const auto& a : arrows_) best[a.target] = std::max(best[a.target], best[a.source] + 1);
  return vertices_.empty() ? 0 : *std::max_element(best.begin(), best.end());
}

std::vector<std::tuple<std::string, std::size_t, std::size_t>> Quiver::arrow_key() const {
  std::vector<std::tuple<std::string, std::size_t, std::size_t>> out;
  for (const auto& a : arrows_) out.emplace_back(a.name, a.source, a.target);
  return out;
}

Path Path::from_arrows(const Quiver& q, std::vector<std::size_t> arrows) {
  if (arrows.empty()) throw BadParameters("empty arrow list; use Path::trivial");
  for (std::size_t i = 0; i + 1 < arrows.size(); ++i)
    if (q.arrow(arrows[i]).source != q.arrow(arrows[i + 1]).target)
      throw BadParameters("arrows " + q.arrow(arrows[i]).name + " and " + q.arrow(arrows[i + 1]).name +
                          " do not compose");
  std::size_t s = q.arrow(arrows.back()).source;
  std::size_t t = q.arrow(arrows.front()).target;
  return Path(s, t, std::move(arrows));
}

Path Path::parse(const Quiver& q, const std::string& text) {
  if (text.rfind("e_", 0) == 0) return trivial(q.vertex_index(text.substr(2)));
  std::vector<std::size_t> arrows;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, '.')) {
    auto a = q.find_arrow(item);
    if (!a) throw BadParameters("unknown arrow '" + item + "'");
    arrows.push_back(*a);
  }
  return from_arrows(q, std::move(arrows));
}

Path Path::after(const Path& first) const {
  if (first.target_ != source_) throw BadParameters("paths do not compose");
  std::vector<std::size_t> arrows = arrows_;
  arrows.insert(arrows.end(), first.arrows_.begin(), first.arrows_.end());
  return Path(first.source_, target_, std::move(arrows));
}

Path Path::reversed() const {
  std::vector<std::size_t> arrows(arrows_.rbegin(), arrows_.rend());
  return Path(target_, source_, std::move(arrows));
}

std::string Path::to_string(const Quiver& q) const {
  if (arrows_.empty()) return "e_" + q.vertex_name(source_);
  std::string out;
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    if (i) out += '.';
    out += q.arrow(arrows_[i]).name;
  }
  return out;
}

bool Path::less(const Quiver& q, const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.is_trivial()) return a.source_ < b.source_;
  for (std::size_t i = 0; i < a.arrows_.size(); ++i) {
    const auto& na = q.arrow(a.arrows_[i]).name;
    const auto& nb = q.arrow(b.arrows_[i]).name;
    if (na != nb) return na < nb;
  }
  return false;
}

std::size_t Relation::min_length() const {
  std::size_t m = SIZE_MAX;
  for (const auto& t : terms) m = std::min(m, t.path.length());
  return m;
}

std::string Relation::to_string(const Quiver& q) const {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    mpq_class c = terms[i].coefficient;
    if (i) {
      out += sgn(c) < 0 ? " - " : " + ";
      c = abs(c);
    }
    if (c != 1) out += c.get_str() + "*";
    out += terms[i].path.to_string(q);
  }
  return out;
}

std::vector<Path> enumerate_paths(const Quiver& q, std::size_t x, std::size_t y, std::size_t max_len) {
  if (x >= q.vertex_count() || y >= q.vertex_count()) throw UnknownVertex("vertex index out of range");
  std::vector<Path> out;
  std::vector<Path> frontier{Path::trivial(x)};
  for (std::size_t len = 0;; ++len) {
    for (const auto& p : frontier)
      if (p.target() == y) out.push_back(p);
    if (len == max_len || frontier.empty()) break;
    std::vector<Path> next;
    for (const auto& p : frontier)
      for (std::size_t a = 0; a < q.arrow_count(); ++a)
        if (q.arrow(a).source == p.target()) next.push_back(Path::arrow(q, a).after(p));
    frontier = std::move(next);
  }
  std::stable_sort(out.begin(), out.end(), [&q](const Path& a, const Path& b) { return Path::less(q, a, b); });
  return out;
}

std::vector<Path> enumerate_paths(const BoundQuiver& bq, const std::string& x, const std::string& y,
                                  std::size_t max_len) {
  return enumerate_paths(bq.quiver, bq.quiver.vertex_index(x), bq.quiver.vertex_index(y), max_len);
}

namespace {

// All paths starting (or ending) at v of length <= max_len.
std::vector<Path> paths_from(const Quiver& q, std::size_t v, std::size_t max_len) {
  std::vector<Path> out;
  std::vector<Path> frontier{Path::trivial(v)};
  for (std::size_t len = 0; len <= max_len && !frontier.empty(); ++len) {
    out.insert(out.end(), frontier.begin(), frontier.end());
    if (len == max_len) break;
    std::vector<Path> next;
    for (const auto& p : frontier)
      for (std::size_t a = 0; a < q.arrow_count(); ++a)
        if (q.arrow(a).source == p.target()) next.push_back(Path::arrow(q, a).after(p));
    frontier = std::move(next);
  }
  return out;
}

std::vector<Path> paths_to(const Quiver& q, std::size_t v, std::size_t max_len) {
  std::vector<Path> out;
  std::vector<Path> frontier{Path::trivial(v)};
  for (std::size_t len = 0; len <= max_len && !frontier.empty(); ++len) {
    out.insert(out.end(), frontier.begin(), frontier.end());
    if (len == max_len) break;
    std::vector<Path> next;
    for (const auto& p : frontier)
      for (std::size_t a = 0; a < q.arrow_count(); ++a)
        if (q.arrow(a).target == p.source()) next.push_back(p.after(Path::arrow(q, a)));
    frontier = std::move(next);
  }
  return out;
}

PathSpace span_of(const BoundQuiver& bq, std::size_t x, std::size_t y, std::size_t max_len, Field f,
                  const std::function<bool(std::size_t)>& use_relation) {
  const Quiver& q = bq.quiver;
  PathSpace ps;
  ps.paths = enumerate_paths(q, x, y, max_len);
  for (std::size_t i = 0; i < ps.paths.size(); ++i) ps.index[ps.paths[i].arrows()] = i;
  std::vector<std::vector<Scalar>> cols;
  for (std::size_t r = 0; r < bq.relations.size(); ++r) {
    if (!use_relation(r)) continue;
    const Relation& rho = bq.relations[r];
    const std::size_t lmin = rho.min_length();
    if (lmin > max_len) continue;
    for (const auto& v : paths_to(q, rho.source(), max_len - lmin)) {
      if (v.source() != x) continue;
      for (const auto& u : paths_from(q, rho.target(), max_len - lmin - v.length())) {
        if (u.target() != y) continue;
        std::vector<Scalar> col(ps.paths.size(), Scalar(f, 0));
        bool nonzero = false;
        for (const auto& term : rho.terms) {
          Path p = u.after(term.path).after(v);
          if (p.length() > max_len) continue;
          Scalar c(f, term.coefficient);
          if (c.is_zero()) continue;
          auto& slot = col[ps.index.at(p.arrows())];
          slot = slot + c;
          nonzero = true;
        }
        if (nonzero) cols.push_back(std::move(col));
      }
    }
  }
  ps.generators = Mat(f, ps.paths.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < ps.paths.size(); ++i)
      if (!cols[j][i].is_zero()) ps.generators.set(i, j, cols[j][i]);
  return ps;
}

}  // namespace

PathSpace ideal_span(const BoundQuiver& bq, std::size_t x, std::size_t y, std::size_t max_len, Field f) {
  return span_of(bq, x, y, max_len, f, [](std::size_t) { return true; });
}

AdmissibilityCertificate is_admissible(const BoundQuiver& bq, std::size_t bound, Field f) {
  const Quiver& q = bq.quiver;
  AdmissibilityCertificate cert;
  cert.bound = bound;
  for (std::size_t x = 0; x < q.vertex_count(); ++x)
    for (std::size_t y = 0; y < q.vertex_count(); ++y) {
      PathSpace ps = ideal_span(bq, x, y, bound, f);
      std::vector<std::size_t> top;
      for (std::size_t i = 0; i < ps.paths.size(); ++i)
        if (ps.paths[i].length() == bound) top.push_back(i);
      if (top.empty()) continue;
      PairCertificate pc{x, y, top.size(), rank(ps.generators), true};
      Mat units(f, ps.paths.size(), top.size());
      for (std::size_t j = 0; j < top.size(); ++j) units.set(top[j], j, 1);
      pc.contained = rank(hstack({ps.generators, units}, f, ps.paths.size())) == pc.ideal_rank;
      cert.admissible = cert.admissible && pc.contained;
      cert.pairs.push_back(pc);
    }
  return cert;
}

ValidationReport validate(const BoundQuiver& bq, Field f) {
  const Quiver& q = bq.quiver;
  ValidationReport rep;
  for (std::size_t r = 0; r < bq.relations.size(); ++r) {
    const Relation& rho = bq.relations[r];
    const std::string tag = "relation " + std::to_string(r + 1);
    if (rho.terms.empty()) {
      rep.relation_issues.push_back(tag + ": no terms");
      continue;
    }
    bool any_nonzero = false;
    for (const auto& t : rho.terms) {
      if (t.path.source() != rho.source() || t.path.target() != rho.target())
        rep.relation_issues.push_back(tag + ": path " + t.path.to_string(q) + " is not parallel to the others");
      if (t.path.length() < 2)
        rep.relation_issues.push_back(tag + ": path " + t.path.to_string(q) + " has length < 2");
      if (!Scalar(f, t.coefficient).is_zero()) any_nonzero = true;
    }
    if (!any_nonzero) rep.relation_issues.push_back(tag + ": all coefficients vanish");
  }
  rep.triangular = q.is_acyclic();
  if (!rep.relation_issues.empty()) {
    rep.admissibility.admissible = false;
    rep.admissibility.bound = bq.bound;
    return rep;
  }
  rep.admissibility = is_admissible(bq, bq.bound, f);

  // Minimality lint: is a relation in the span generated by the others?
  for (std::size_t r = 0; r < bq.relations.size(); ++r) {
    const Relation& rho = bq.relations[r];
    PathSpace ps = span_of(bq, rho.source(), rho.target(), bq.bound, f, [r](std::size_t i) { return i != r; });
    Mat v(f, ps.paths.size(), 1);
    for (const auto& t : rho.terms)
      if (t.path.length() <= bq.bound) v.add_to(ps.index.at(t.path.arrows()), 0, Scalar(f, t.coefficient));
    if (rank(hstack({ps.generators, v}, f, ps.paths.size())) == rank(ps.generators))
      rep.warnings.push_back("relation " + std::to_string(r + 1) + " lies in the ideal generated by the others");
  }
  return rep;
}

BoundQuiver kronecker_quiver() {
  BoundQuiver bq;
  bq.name = "kronecker";
  bq.quiver.add_vertex("1");
  bq.quiver.add_vertex("2");
  bq.quiver.add_arrow("a", "1", "2");
  bq.quiver.add_arrow("b", "1", "2");
  bq.bound = 2;
  return bq;
}

BoundQuiver commutative_square() {
  BoundQuiver bq;
  bq.name = "square";
  Quiver& q = bq.quiver;
  for (const char* v : {"1", "2", "3", "4"}) q.add_vertex(v);
  q.add_arrow("alpha", "1", "2");
  q.add_arrow("beta", "2", "4");
  q.add_arrow("gamma", "1", "3");
  q.add_arrow("delta", "3", "4");
  Relation rho;
  rho.terms.push_back({mpq_class(1), Path::parse(q, "beta.alpha")});
  rho.terms.push_back({mpq_class(-1), Path::parse(q, "delta.gamma")});
  bq.relations.push_back(std::move(rho));
  bq.bound = 3;
  return bq;
}

}  // namespace repvar
