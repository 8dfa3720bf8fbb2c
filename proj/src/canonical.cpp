#include "repvar/canonical.hpp"

#include <algorithm>

namespace repvar {

std::string to_string(WeightType w) {
  switch (w) {
    case WeightType::domestic:
      return "domestic";
    case WeightType::tubular:
      return "tubular";
    case WeightType::wild:
      return "wild";
  }
  return "?";
}

std::string to_string(BisectionClass c) {
  switch (c) {
    case BisectionClass::left:
      return "L";
    case BisectionClass::right:
      return "R";
    case BisectionClass::mixed:
      return "mixed";
  }
  return "?";
}

std::vector<std::size_t> normalize_weights(const std::vector<std::size_t>& p) {
  std::vector<std::size_t> out = p;
  std::size_t ones = static_cast<std::size_t>(std::count(out.begin(), out.end(), std::size_t{1}));
  for (auto it = out.begin(); it != out.end() && ones > 0 && out.size() > 2;) {
    if (*it == 1) {
      it = out.erase(it);
      --ones;
    } else {
      ++it;
    }
  }
  return out;
}

WeightType classify_weights(const std::vector<std::size_t>& p) {
  std::vector<std::size_t> w = normalize_weights(p);
  std::sort(w.begin(), w.end());
  using V = std::vector<std::size_t>;
  if (w.size() <= 2) return WeightType::domestic;
  if (w.size() == 3) {
    if (w[0] == 2 && w[1] == 2) return WeightType::domestic;
    if (w == V{2, 3, 3} || w == V{2, 3, 4} || w == V{2, 3, 5}) return WeightType::domestic;
    if (w == V{3, 3, 3} || w == V{2, 4, 4} || w == V{2, 3, 6}) return WeightType::tubular;
    return WeightType::wild;
  }
  if (w == V{2, 2, 2, 2}) return WeightType::tubular;
  return WeightType::wild;
}

std::vector<std::size_t> parse_weights(const std::string& text) {
  std::vector<std::size_t> p;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = text.find(',', start);
    std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (item.empty() || item.size() > 6 || item.find_first_not_of("0123456789") != std::string::npos)
      throw BadParameters("bad weight list '" + text + "'");
    p.push_back(std::stoul(item));
    if (p.back() == 0) throw BadParameters("arm weights must be positive: '" + text + "'");
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return p;
}

std::vector<mpq_class> default_lambda(const std::vector<std::size_t>& p) {
  std::vector<mpq_class> lambda;
  const std::size_t t = normalize_weights(p).size();
  for (std::size_t i = 2; i < t; ++i) lambda.emplace_back(static_cast<long>(i - 1));
  return lambda;
}

namespace {

std::string arm_vertex(std::size_t i, std::size_t j) {
  return "a" + std::to_string(i + 1) + "_" + std::to_string(j);
}
std::string arm_arrow(std::size_t i, std::size_t j) {
  return "x" + std::to_string(i + 1) + "_" + std::to_string(j);
}

std::string format_weights(const std::vector<std::size_t>& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s;
}

}  // namespace

BoundQuiver canonical_bound_quiver(const std::vector<std::size_t>& p_in, const std::vector<mpq_class>& lambda) {
  const std::vector<std::size_t> p = normalize_weights(p_in);
  if (p.size() < 2) throw BadParameters("a canonical algebra needs at least two arms");
  for (std::size_t w : p)
    if (w == 0) throw BadParameters("arm weights must be positive");
  if (lambda.size() != p.size() - 2)
    throw BadParameters("expected " + std::to_string(p.size() - 2) + " parameters for weights (" + format_weights(p) +
                        "), got " + std::to_string(lambda.size()));

  BoundQuiver bq;
  bq.name = "canonical_" + format_weights(p);
  Quiver& q = bq.quiver;
  q.add_vertex("0");
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 1; j < p[i]; ++j) q.add_vertex(arm_vertex(i, j));
  q.add_vertex("w");

  std::vector<Path> arms;
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::vector<std::size_t> written;
    for (std::size_t j = 1; j <= p[i]; ++j) {
      std::string s = j == 1 ? "0" : arm_vertex(i, j - 1);
      std::string t = j == p[i] ? "w" : arm_vertex(i, j);
      written.insert(written.begin(), q.add_arrow(arm_arrow(i, j), s, t));
    }
    arms.push_back(Path::from_arrows(q, written));
  }
  for (std::size_t i = 2; i < p.size(); ++i) {
    Relation rho;
    rho.terms.push_back({mpq_class(1), arms[i]});
    rho.terms.push_back({mpq_class(-1), arms[1]});
    rho.terms.push_back({lambda[i - 2], arms[0]});
    bq.relations.push_back(std::move(rho));
  }
  bq.bound = *std::max_element(p.begin(), p.end()) + 1;
  return bq;
}

CanonicalAlgebra build_canonical(const std::vector<std::size_t>& p, const std::vector<mpq_class>& lambda, Field f) {
  CanonicalAlgebra ca;
  ca.weights = normalize_weights(p);
  ca.lambda = lambda;
  BoundQuiver bq = canonical_bound_quiver(ca.weights, lambda);
  std::vector<Scalar> seen;
  for (const auto& l : lambda) {
    Scalar s(f, l);
    if (s.is_zero()) throw BadParameters("parameter " + l.get_str() + " is zero in " + f.name());
    if (std::find(seen.begin(), seen.end(), s) != seen.end())
      throw BadParameters("parameters collide in " + f.name() + " at " + l.get_str());
    seen.push_back(s);
  }
  ca.algebra = Algebra::build(bq, f);
  ca.euler = euler_form(ca.algebra);
  const Quiver& q = ca.algebra->quiver();
  ca.source = q.vertex_index("0");
  ca.sink = q.vertex_index("w");
  for (std::size_t i = 0; i < ca.weights.size(); ++i) {
    std::vector<std::size_t> vs, as;
    for (std::size_t j = 1; j <= ca.weights[i]; ++j) {
      if (j < ca.weights[i]) vs.push_back(q.vertex_index(arm_vertex(i, j)));
      as.push_back(*q.find_arrow(arm_arrow(i, j)));
    }
    ca.arm_vertices.push_back(std::move(vs));
    ca.arm_arrows.push_back(std::move(as));
  }
  return ca;
}

DimVec h_vector(const CanonicalAlgebra& ca) {
  DimVec h(ca.algebra->vertex_count(), 1);
  ensure(ca.euler.chi(h) == 0, "chi(h) != 0 for a canonical algebra");
  return h;
}

bool is_exceptional_parameter(const CanonicalAlgebra& ca, const mpq_class& mu) {
  const Field f = ca.algebra->field();
  Scalar m(f, mu);
  if (m.is_zero()) return true;
  for (const auto& l : ca.lambda)
    if (m == Scalar(f, l)) return true;
  return false;
}

Representation homogeneous_module(const CanonicalAlgebra& ca, const mpq_class& mu) {
  if (is_exceptional_parameter(ca, mu)) throw BadParameters("parameter " + mu.get_str() + " is exceptional");
  const Field f = ca.algebra->field();
  DimVec h = h_vector(ca);
  Representation m(ca.algebra, h);
  for (std::size_t a = 0; a < ca.algebra->quiver().arrow_count(); ++a) m.set_map(a, Mat::identity(f, 1));
  for (std::size_t i = 1; i < ca.arms(); ++i) {
    Scalar c(f, i == 1 ? mu : mpq_class(mu - ca.lambda[i - 2]));
    Mat last(f, 1, 1);
    last.set(0, 0, c);
    m.set_map(ca.arm_arrows[i].back(), last);
  }
  ensure(validate(m), "homogeneous module violates a relation");
  return m;
}

std::vector<mpq_class> homogeneous_parameters(const CanonicalAlgebra& ca, std::size_t count) {
  std::vector<mpq_class> out;
  const std::uint32_t p = ca.algebra->field().characteristic();
  for (long mu = 1; out.size() < count; ++mu) {
    if (p != 0 && static_cast<std::uint64_t>(mu) >= p) throw BadParameters("field too small for homogeneous samples");
    if (!is_exceptional_parameter(ca, mpq_class(mu))) out.emplace_back(mu);
  }
  return out;
}

std::vector<Representation> exceptional_mouth(const CanonicalAlgebra& ca, std::size_t arm) {
  if (arm >= ca.arms()) throw BadParameters("arm index out of range");
  if (ca.arm_vertices[arm].empty()) throw BadParameters("arm of weight 1 has no exceptional tube");
  const Representation s = simple(ca.algebra, ca.arm_vertices[arm].front());
  std::vector<Representation> orbit{s};
  Representation cur = s;
  for (;;) {
    TauResult t = tau(cur);
    ensure(!t.dropped_any() && !t.module.is_zero(), "arm simple has a projective in its tau-orbit");
    cur = t.module;
    if (cur.dim() == s.dim() && iso(cur, s)) break;
    orbit.push_back(cur);
    ensure(orbit.size() <= ca.weights[arm], "arm simple orbit is longer than the arm weight");
  }
  ensure(orbit.size() == ca.weights[arm], "arm simple orbit is shorter than the arm weight");
  return orbit;
}

std::vector<NamedModule> tube_modules(const CanonicalAlgebra& ca, std::size_t homogeneous) {
  std::vector<NamedModule> out;
  for (std::size_t i = 0; i < ca.arms(); ++i) {
    if (ca.arm_vertices[i].empty()) continue;
    auto orbit = exceptional_mouth(ca, i);
    for (std::size_t k = 0; k < orbit.size(); ++k)
      out.push_back({"E" + std::to_string(i + 1) + "_" + std::to_string(k), std::move(orbit[k])});
  }
  for (const auto& mu : homogeneous_parameters(ca, homogeneous))
    out.push_back({"H_" + mu.get_str(), homogeneous_module(ca, mu)});
  return out;
}

Bisection bisection_classify(const CanonicalAlgebra& ca, const Representation& m, std::uint64_t seed) {
  require_same_algebra(m.algebra(), ca.algebra);
  require_valid(m);
  const DimVec h = h_vector(ca);
  Bisection b;
  bool any_left = false, any_right = false;
  for (auto& s : decompose(m, seed)) {
    long pairing = ca.euler.pair(h, s.module.dim());
    (pairing <= 0 ? any_left : any_right) = true;
    b.summands.push_back({std::move(s.module), s.multiplicity, pairing});
  }
  b.cls = any_right ? (any_left ? BisectionClass::mixed : BisectionClass::right) : BisectionClass::left;
  return b;
}

std::size_t ScanReport::periodic_count() const {
  return static_cast<std::size_t>(
      std::count_if(samples.begin(), samples.end(), [](const ScanSample& s) { return s.period.periodic; }));
}

bool ScanReport::consistent() const {
  return std::all_of(samples.begin(), samples.end(), [](const ScanSample& s) { return s.consistent; });
}

ScanReport tau_periodicity_scan(const CanonicalAlgebra& ca, const DimVec& d, std::size_t samples,
                                std::size_t max_period, std::uint64_t seed) {
  if (!ca.algebra->field().is_prime()) throw UnsupportedField("the periodicity scan needs a finite field");
  ScanReport rep;
  rep.d = d;
  rep.max_period = max_period;
  std::vector<Representation> extra;
  for (auto& t : tube_modules(ca)) extra.push_back(std::move(t.module));
  Rng seeder(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    ScanSample s;
    s.seed = seeder();
    Representation m = random_module(ca.algebra, d, s.seed, extra);
    s.period = tau_orbit(m, max_period, s.seed);
    s.bisection = bisection_classify(ca, m, s.seed);
    s.pdim = pdim(m);
    if (s.period.periodic) {
      bool zero_pairings = std::all_of(s.bisection.summands.begin(), s.bisection.summands.end(),
                                       [](const ClassifiedSummand& x) { return x.pairing == 0; });
      s.consistent = s.bisection.cls == BisectionClass::left && zero_pairings && s.pdim && *s.pdim <= 1;
    }
    rep.samples.push_back(std::move(s));
  }
  return rep;
}

}  // namespace repvar
