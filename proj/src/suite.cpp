#include "repvar/suite.hpp"

#include <algorithm>
#include <functional>

#include "repvar/text_format.hpp"

namespace repvar {

SuiteAlgebra suite_algebra(const std::string& name, Field f) {
  SuiteAlgebra sa;
  sa.name = name;
  if (name.rfind("canonical:", 0) == 0) {
    auto p = parse_weights(name.substr(std::string("canonical:").size()));
    sa.canonical = build_canonical(p, default_lambda(p), f);
    sa.algebra = sa.canonical->algebra;
    return sa;
  }
  auto bq = builtin_quiver(name);
  if (!bq) throw BadParameters("unknown algebra '" + name + "'; expected kronecker, square or canonical:P1,P2,...");
  sa.algebra = Algebra::build(*bq, f);
  return sa;
}

DimVec random_dim(const AlgebraPtr& alg, Rng& rng, std::size_t max_entry) {
  DimVec d(alg->vertex_count());
  do {
    for (auto& v : d) v = draw(rng, max_entry + 1);
  } while (std::all_of(d.begin(), d.end(), [](std::size_t v) { return v == 0; }));
  return d;
}

std::size_t default_max_entry(const SuiteAlgebra& sa) {
  if (sa.canonical) return sa.algebra->vertex_count() > 6 ? 2 : 3;
  return sa.algebra->vertex_count() > 2 ? 3 : 4;
}

Representation random_sample(const SuiteAlgebra& sa, Rng& rng, const std::vector<Representation>& extra) {
  DimVec d = random_dim(sa.algebra, rng, default_max_entry(sa));
  return random_module(sa.algebra, d, rng(), extra);
}

std::vector<std::vector<long>> coxeter_matrix(const EulerForm& e) {
  const std::size_t n = e.matrix.size();
  Field q = Field::rationals();
  Mat c(q, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c.set(i, j, e.matrix[i][j]);
  auto ci = inverse(c);
  ensure(ci.has_value(), "Euler matrix is not invertible");
  Mat phi = -(*ci * c.transpose());
  std::vector<std::vector<long>> out(n, std::vector<long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      mpq_class v = phi.at(i, j).rational();
      ensure(v.get_den() == 1, "Coxeter matrix is not integral");
      out[i][j] = v.get_num().get_si();
    }
  return out;
}

bool SuiteResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.passed(); });
}

namespace {

struct Runner {
  SuiteResult& result;
  std::uint64_t seed;

  // Runs `body` `samples` times; a false return or an exception counts as a failure.
  void check(const std::string& name, std::size_t samples, const std::function<std::string(Rng&)>& body) {
    SuiteCheck c;
    c.name = name;
    Rng rng(seed ^ fnv1a64(name));
    for (std::size_t i = 0; i < samples; ++i) {
      std::string failure;
      try {
        failure = body(rng);
      } catch (const Error& e) {
        failure = std::string("exception: ") + e.what();
      }
      ++c.samples;
      if (!failure.empty()) {
        if (c.failures++ == 0) c.first_failure = "sample " + std::to_string(i) + ": " + failure;
      }
    }
    result.checks.push_back(std::move(c));
  }
};

std::string expect_eq(long lhs, long rhs, const std::string& what) {
  if (lhs == rhs) return {};
  return what + ": " + std::to_string(lhs) + " != " + std::to_string(rhs);
}

std::vector<std::size_t> sorted_total_dims(const std::vector<Summand>& s) {
  std::vector<std::size_t> out;
  for (const auto& x : s)
    for (std::size_t k = 0; k < x.multiplicity; ++k) out.push_back(x.module.total_dim() * 1000 + x.module.dim(0));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SuiteResult run_suite(const std::string& algebra, std::uint64_t seed, std::size_t samples) {
  SuiteAlgebra sa = suite_algebra(algebra);
  const AlgebraPtr& alg = sa.algebra;
  SuiteResult res;
  res.algebra = algebra;
  res.seed = seed;
  res.samples = samples;
  Runner run{res, seed};

  std::vector<Representation> extra;
  if (sa.canonical)
    for (auto& t : tube_modules(*sa.canonical)) extra.push_back(std::move(t.module));
  auto sample = [&](Rng& rng) { return random_sample(sa, rng, extra); };

  std::optional<EulerForm> ef;
  try {
    ef = euler_form(alg);
  } catch (const FlagsRequired&) {
  }

  run.check("voigt", samples, [&](Rng& rng) {
    Representation m = sample(rng);
    CocycleSpace cs = cocycles(m, m);
    long ext1 = static_cast<long>(extn_dim(m, m, 1));
    long lhs = static_cast<long>(cs.z_dim());
    long rhs = static_cast<long>(vdim(m.dim(), m.dim())) - static_cast<long>(hom_dim(m, m)) + ext1;
    return expect_eq(lhs, rhs, "dim Z^{M,M} vs dim V - [M,M] + [M,M]^1");
  });

  run.check("cocycle_dimension", samples, [&](Rng& rng) {
    Representation n = sample(rng), m = sample(rng);
    long lhs = static_cast<long>(cocycles(n, m).z_dim());
    long rhs = static_cast<long>(vdim(n.dim(), m.dim())) - static_cast<long>(hom_dim(n, m)) +
               static_cast<long>(extn_dim(n, m, 1));
    return expect_eq(lhs, rhs, "dim Z^{N,M}");
  });

  if (ef && ef->flags_hold()) {
    run.check("euler_alternating_sum", samples, [&](Rng& rng) {
      Representation m = sample(rng), n = sample(rng);
      long lhs = ef->pair(m.dim(), n.dim());
      long rhs = static_cast<long>(hom_dim(m, n)) - static_cast<long>(extn_dim(m, n, 1)) +
                 static_cast<long>(extn_dim(m, n, 2));
      return expect_eq(lhs, rhs, "<dim M, dim N> vs [M,N] - [M,N]^1 + [M,N]^2");
    });
    run.check("a_coefficient", samples, [&](Rng& rng) {
      DimVec d = random_dim(alg, rng, default_max_entry(sa) + 1);
      return expect_eq(a_coeff(alg->bound_quiver(), d), static_cast<long>(vdim(d, d)) - ef->chi(d),
                       "a(d) vs dim V - chi(d)");
    });
  }

  run.check("middle_term", samples, [&](Rng& rng) {
    Representation u = sample(rng), v = sample(rng);
    CocycleSpace cs = cocycles(v, u);
    ExtClass xi = random_ext_class(cs, rng);
    if (draw(rng, 2) == 0) {
      // Half the samples are coboundaries.
      Morphism h;
      for (std::size_t x = 0; x < u.dim().size(); ++x) h.push_back(Mat::random(u.field(), u.dim(x), v.dim(x), rng));
      xi.z = coboundary(v, u, h);
    }
    Representation w = middle_term(xi);
    if (!validate(w)) return std::string("W^Z does not validate");
    bool split = iso(w, direct_sum(u, v), rng());
    bool cob = coboundary_preimage(v, u, xi.z).has_value();
    if (split != cob) return std::string("iso(W^Z, U+V) disagrees with the coboundary solve");
    return std::string();
  });

  run.check("projective_hom", samples, [&](Rng& rng) {
    Representation m = sample(rng);
    std::size_t x = draw(rng, alg->vertex_count());
    return expect_eq(static_cast<long>(hom_dim(projective(alg, x), m)), static_cast<long>(m.dim(x)), "[P_x, M] vs d_x");
  });

  run.check("decompose", samples, [&](Rng& rng) {
    Representation m = sample(rng);
    auto a = decompose(m, rng());
    auto b = decompose(m, rng());
    if (sorted_total_dims(a) != sorted_total_dims(b)) return std::string("summand dimensions depend on the seed");
    DimVec sum(m.dim().size(), 0);
    for (const auto& s : a) {
      for (std::size_t x = 0; x < sum.size(); ++x) sum[x] += s.multiplicity * s.module.dim(x);
      auto again = decompose(s.module, rng());
      if (again.size() != 1 || again[0].multiplicity != 1) return std::string("a summand splits further");
    }
    if (sum != m.dim()) return std::string("summand dimensions do not add up");
    return std::string();
  });

  run.check("iso_conjugate", samples, [&](Rng& rng) {
    Representation m = sample(rng);
    Representation g = conjugate(m, random_gl(alg, m.dim(), rng));
    if (!iso(m, g, rng())) return std::string("M and g*M not found isomorphic");
    for (std::size_t x = 0; x < alg->vertex_count(); ++x)
      if (hom_dim(simple(alg, x), m) != hom_dim(simple(alg, x), g)) return std::string("probe dimensions differ");
    return std::string();
  });

  run.check("phi_kernel", samples, [&](Rng& rng) {
    Representation h = sample(rng), w = sample(rng);
    Mat phi = phi_matrix(h, w);
    std::size_t q = vdim(h.dim(), w.dim());
    return expect_eq(static_cast<long>(q - rank(phi)), static_cast<long>(hom_dim(h, w)), "dim ker Phi vs [H,W]");
  });

  run.check("tangent_report", samples, [&](Rng& rng) {
    TangentReport t = tangent_report(sample(rng));
    return expect_eq(static_cast<long>(t.dim_t), static_cast<long>(t.orbit_dim + t.ext1), "dim T vs orbit + ext1");
  });

  if (alg->bound_quiver().relations.empty() && ef) {
    auto phi = coxeter_matrix(*ef);
    run.check("coxeter", samples, [&](Rng& rng) {
      Representation m = sample(rng);
      for (const auto& s : decompose(m, rng())) {
        bool proj = false;
        for (std::size_t x = 0; x < alg->vertex_count(); ++x)
          if (projective_multiplicity(s.module, x) > 0) proj = true;
        if (proj) continue;
        DimVec t = tau(s.module).module.dim();
        for (std::size_t i = 0; i < t.size(); ++i) {
          long v = 0;
          for (std::size_t j = 0; j < t.size(); ++j) v += phi[i][j] * static_cast<long>(s.module.dim(j));
          if (v != static_cast<long>(t[i])) return "dim tau X vs Coxeter transform at " + format_dim(s.module.dim());
        }
      }
      return std::string();
    });
  }

  if (sa.canonical) {
    const CanonicalAlgebra& ca = *sa.canonical;
    const DimVec h = h_vector(ca);
    run.check("chi_h", 1, [&](Rng&) { return expect_eq(ca.euler.chi(h), 0, "chi(h)"); });
    run.check("mouth_lengths", 1, [&](Rng&) {
      for (std::size_t i = 0; i < ca.arms(); ++i)
        if (!ca.arm_vertices[i].empty() && exceptional_mouth(ca, i).size() != ca.weights[i])
          return "arm " + std::to_string(i + 1);
      return std::string();
    });
    run.check("homogeneous_period", 3, [&](Rng& rng) {
      mpq_class mu(static_cast<long>(1 + draw(rng, 90)));
      if (is_exceptional_parameter(ca, mu)) return std::string();
      Representation hm = homogeneous_module(ca, mu);
      PeriodReport p = tau_orbit(hm, 2);
      if (!p.periodic || p.period != 1) return "H_" + mu.get_str() + " is not tau-fixed";
      return expect_eq(ca.euler.pair(h, hm.dim()), 0, "<h, h>");
    });

    std::vector<Representation> left, right;
    for (const auto& z : probe_zoo(alg, tube_modules(ca)))
      (ca.euler.pair(h, z.module.dim()) <= 0 ? left : right).push_back(z.module);
    run.check("bisection_axiom", samples, [&](Rng& rng) {
      if (left.empty() || right.empty()) return std::string();
      const Representation& u = left[draw(rng, left.size())];
      const Representation& v = right[draw(rng, right.size())];
      if (hom_dim(v, u) != 0) return "Hom(V,U) != 0 for V of dim " + format_dim(v.dim());
      if (ext1_dim(u, v) != 0) return "Ext^1(U,V) != 0 for U of dim " + format_dim(u.dim());
      return std::string();
    });
    run.check("periodic_in_left_class", 1, [&](Rng& rng) {
      ScanReport s = tau_periodicity_scan(ca, h, samples, 4, rng());
      return s.consistent() ? std::string() : std::string("a tau-periodic sample is not in the left class");
    });
  }
  return res;
}

Json to_json(const SuiteResult& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json j = {{"name", c.name}, {"samples", c.samples}, {"failures", c.failures}, {"passed", c.passed()}};
    if (!c.first_failure.empty()) j["first_failure"] = c.first_failure;
    checks.push_back(j);
  }
  return {{"algebra", r.algebra}, {"field", "GF(101)"}, {"samples", r.samples}, {"checks", checks},
          {"passed", r.passed()}};
}

}  // namespace repvar
