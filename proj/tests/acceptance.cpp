// Acceptance run: one PASS/FAIL line per criterion. All identities are exact
// integer equalities; the only tolerances are the wall-clock budgets.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "repvar/suite.hpp"

using namespace repvar;

namespace {

constexpr std::uint64_t kSeed = 20240601;
constexpr double kVoigtBudgetSeconds = 60.0;
constexpr double kPeriodicityBudgetSeconds = 30.0;

const std::vector<std::string> kAlgebras = {"kronecker", "square", "canonical:2,2,2", "canonical:2,3,7"};

struct Outcome {
  bool ok = true;
  std::size_t count = 0;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
  void expect(bool cond, const std::string& why) {
    ++count;
    if (!cond) fail(why);
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int id, const std::string& name, const Outcome& o, const std::string& extra = "") {
  std::cout << (o.ok ? "PASS" : "FAIL") << " " << id << " " << name << " (checks=" << o.count;
  if (!extra.empty()) std::cout << ", " << extra;
  std::cout << ")";
  if (!o.ok) std::cout << ": " << o.detail;
  std::cout << std::endl;
  if (!o.ok) ++failures;
}

void guarded(int id, const std::string& name, const std::function<std::string(Outcome&)>& body) {
  Outcome o;
  std::string extra;
  try {
    extra = body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  report(id, name, o, extra);
}

std::string timing(double s, double budget) {
  std::ostringstream os;
  os.precision(3);
  os << std::fixed << s << "s of " << budget << "s";
  return os.str();
}

std::vector<SuiteAlgebra>& algebras() {
  static std::vector<SuiteAlgebra> all = [] {
    std::vector<SuiteAlgebra> v;
    for (const auto& n : kAlgebras) v.push_back(suite_algebra(n));
    return v;
  }();
  return all;
}

// Random cocycle in Z^{N,M}; with probability 1/3 a coboundary.
Cochain random_cocycle(const CocycleSpace& cs, Rng& rng, bool& coboundary) {
  const auto& basis = draw(rng, 3) == 0 ? cs.b_basis : cs.z_basis;
  coboundary = &basis == &cs.b_basis;
  Cochain z = zero_cochain(cs.n, cs.m);
  Field f = cs.n.field();
  for (const auto& b : basis) z = add(z, scale(b, Scalar::residue(f, static_cast<std::uint32_t>(draw(rng, f.characteristic())))));
  return z;
}

// Criterion 7 families: [[U, t Z1 + t^2 Z2], [0, V]] moved by g = 1 + t X + t^2 Y.
TruncatedRepresentation build_family(const Representation& u, const Representation& v, const Cochain& z1,
                                     const Cochain& z2, Rng& rng) {
  const AlgebraPtr& alg = u.algebra();
  Field f = alg->field();
  const std::size_t order = 3;
  DimVec d(u.dim().size());
  for (std::size_t x = 0; x < d.size(); ++x) d[x] = u.dim(x) + v.dim(x);
  std::vector<TMat> maps;
  for (std::size_t a = 0; a < alg->quiver().arrow_count(); ++a) {
    const Arrow& ar = alg->quiver().arrow(a);
    TMat m(f, order, d[ar.target], d[ar.source]);
    m.coeff(0) = diag_sum(u.map(a), v.map(a));
    m.coeff(1).set_block(0, u.dim(ar.source), z1[a]);
    m.coeff(2).set_block(0, u.dim(ar.source), z2[a]);
    maps.push_back(m);
  }
  TruncatedRepresentation fam(alg, order, d, maps);
  std::vector<TMat> g;
  for (std::size_t x = 0; x < d.size(); ++x) {
    TMat gx = TMat::identity(f, order, d[x]);
    gx.coeff(1) = Mat::random(f, d[x], d[x], rng);
    gx.coeff(2) = Mat::random(f, d[x], d[x], rng);
    g.push_back(gx);
  }
  return conjugate(fam, g);
}

std::string run_cli(const std::string& args) {
  std::string cmd = std::string(REPVAR_CLI_PATH) + " " + args;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) throw std::runtime_error("cannot run " + cmd);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int rc = pclose(p);
  if (rc != 0) throw std::runtime_error(cmd + " exited with status " + std::to_string(rc));
  return out;
}

}  // namespace

int main() {
  guarded(1, "voigt: dim Z^{M,M} - dim B^{M,M} = [M,M]^1 (200 modules x 4 algebras)", [](Outcome& o) {
    auto t0 = Clock::now();
    for (auto& sa : algebras()) {
      Rng rng(kSeed ^ fnv1a64("voigt " + sa.name));
      for (int i = 0; i < 200; ++i) {
        Representation m = random_sample(sa, rng);
        CocycleSpace cs = cocycles(m, m);
        std::size_t ext1 = extn_dim(m, m, 1);
        o.expect(cs.z_dim() - cs.b_dim() == ext1, sa.name + " d=" + format_dim(m.dim()));
      }
    }
    double s = seconds_since(t0);
    if (s >= kVoigtBudgetSeconds) o.fail("runtime " + timing(s, kVoigtBudgetSeconds));
    return timing(s, kVoigtBudgetSeconds);
  });

  guarded(2, "dim Z^{N,M} = vdim - [N,M] + [N,M]^1 (200 pairs)", [](Outcome& o) {
    for (auto& sa : algebras()) {
      Rng rng(kSeed ^ fnv1a64("eqdimZ " + sa.name));
      for (int i = 0; i < 50; ++i) {
        Representation n = random_sample(sa, rng), m = random_sample(sa, rng);
        long lhs = static_cast<long>(cocycles(n, m).z_dim());
        long rhs = static_cast<long>(vdim(n.dim(), m.dim())) - static_cast<long>(hom_dim(n, m)) +
                   static_cast<long>(extn_dim(n, m, 1));
        o.expect(lhs == rhs, sa.name + " " + format_dim(n.dim()) + " / " + format_dim(m.dim()));
      }
    }
    return std::string();
  });

  guarded(3, "<dim M, dim N> = [M,N] - [M,N]^1 + [M,N]^2 (square, canonical; 150 pairs)", [](Outcome& o) {
    for (auto& sa : algebras()) {
      if (sa.name == "kronecker") continue;
      EulerForm e = euler_form(sa.algebra);
      Rng rng(kSeed ^ fnv1a64("euler " + sa.name));
      for (int i = 0; i < 50; ++i) {
        Representation m = random_sample(sa, rng), n = random_sample(sa, rng);
        long alt = static_cast<long>(extn_dim(m, n, 0)) - static_cast<long>(extn_dim(m, n, 1)) +
                   static_cast<long>(extn_dim(m, n, 2));
        o.expect(extn_dim(m, n, 3) == 0, sa.name + " Ext^3 nonzero");
        o.expect(alt == e.pair(m.dim(), n.dim()), sa.name + " " + format_dim(m.dim()) + " / " + format_dim(n.dim()));
      }
    }
    return std::string();
  });

  guarded(4, "a(d) = vdim(d,d) - chi(d) (50 d x 4 algebras)", [](Outcome& o) {
    for (auto& sa : algebras()) {
      EulerForm e = euler_form(sa.algebra);
      o.expect(e.flags_hold(), sa.name + " is not triangular of gldim <= 2");
      Rng rng(kSeed ^ fnv1a64("acoeff " + sa.name));
      for (int i = 0; i < 50; ++i) {
        DimVec d = random_dim(sa.algebra, rng, 4);
        long lhs = a_coeff(sa.algebra->bound_quiver(), d);
        o.expect(lhs == static_cast<long>(vdim(d, d)) - e.chi(d), sa.name + " d=" + format_dim(d));
      }
    }
    return std::string();
  });

  guarded(5, "middle term: W^Z valid, W^Z = U+V iff Z in B^{V,U} (120 cocycles)", [](Outcome& o) {
    std::size_t split = 0, nonsplit = 0;
    for (auto& sa : algebras()) {
      Rng rng(kSeed ^ fnv1a64("middle " + sa.name));
      for (int i = 0; i < 30; ++i) {
        Representation u = random_sample(sa, rng), v = random_sample(sa, rng);
        CocycleSpace cs = cocycles(v, u);
        bool built_as_coboundary = false;
        Cochain z = random_cocycle(cs, rng, built_as_coboundary);
        Representation w = middle_term({v, u, z});
        o.expect(validate(w), sa.name + " W^Z violates a relation");
        bool solvable = coboundary_preimage(v, u, z).has_value();
        bool isomorphic = iso(w, direct_sum(u, v), rng());
        o.expect(isomorphic == solvable, sa.name + " iso/coboundary disagree at " + format_dim(u.dim()) + " / " +
                                             format_dim(v.dim()));
        if (built_as_coboundary) o.expect(solvable, sa.name + " coboundary not recognised");
        (solvable ? split : nonsplit)++;
      }
    }
    o.expect(split > 0 && nonsplit > 0, "both outcomes should occur");
    return "split=" + std::to_string(split) + ", nonsplit=" + std::to_string(nonsplit);
  });

  guarded(6, "tau-periodicity: homogeneous period 1, mouth lengths = weights", [](Outcome& o) {
    auto t0 = Clock::now();
    for (auto& sa : algebras()) {
      if (!sa.canonical) continue;
      const CanonicalAlgebra& ca = *sa.canonical;
      for (const auto& mu : homogeneous_parameters(ca, 3)) {
        PeriodReport p = tau_orbit(homogeneous_module(ca, mu), 3);
        o.expect(p.periodic && p.period == 1, sa.name + " H_" + mu.get_str());
      }
      for (std::size_t i = 0; i < ca.arms(); ++i) {
        std::vector<Representation> mouth = exceptional_mouth(ca, i);
        o.expect(mouth.size() == ca.weights[i], sa.name + " arm " + std::to_string(i + 1));
        PeriodReport p = tau_orbit(mouth.front(), ca.weights[i] + 1);
        o.expect(p.periodic && p.period == ca.weights[i], sa.name + " arm " + std::to_string(i + 1) + " period");
      }
    }
    double s = seconds_since(t0);
    if (s >= kPeriodicityBudgetSeconds) o.fail("runtime " + timing(s, kPeriodicityBudgetSeconds));
    return timing(s, kPeriodicityBudgetSeconds);
  });

  guarded(7, "triangularization over GF(101)[t]/(t^3) with Ext^1(U,V) = 0 (50 families)", [](Outcome& o) {
    std::size_t families = 0, witnesses = 0, splits = 0;
    std::size_t attempts = 0;
    while (families < 50) {
      if (++attempts > 5000) {
        o.fail("could not construct 50 families");
        break;
      }
      auto& sa = algebras()[attempts % 3];  // kronecker, square, canonical:2,2,2
      Rng rng(kSeed ^ fnv1a64("family " + sa.name) ^ attempts);
      Representation u = random_sample(sa, rng), v = random_sample(sa, rng);
      if (u.total_dim() + v.total_dim() > 8) continue;
      if (ext1_dim(u, v) != 0) continue;
      CocycleSpace vu = cocycles(v, u);
      bool cb1 = false, cb2 = false;
      Cochain z1 = random_cocycle(vu, rng, cb1), z2 = random_cocycle(vu, rng, cb2);
      bool level1 = !coboundary_preimage(v, u, z1).has_value();
      bool level2 = !coboundary_preimage(v, u, z2).has_value();
      std::size_t expected = level1 ? 1 : level2 ? 2 : 0;
      TruncatedRepresentation fam = build_family(u, v, z1, z2, rng);
      ++families;
      SplitOrWitness r = triangularize_family(fam, u, v);
      if (auto* s = std::get_if<SplitResult>(&r)) {
        ++splits;
        o.expect(expected == 0, sa.name + " split although a level carries a non-coboundary");
        o.expect(validate(s->diagonal), sa.name + " split result is not a representation");
        continue;
      }
      const auto& w = std::get<WitnessResult>(r);
      ++witnesses;
      o.expect(w.level == expected, sa.name + " witness at level " + std::to_string(w.level) + ", expected " +
                                        std::to_string(expected));
      o.expect(!coboundary_preimage(v, u, w.z).has_value(), sa.name + " witness Z is a coboundary");
      o.expect(validate(w.middle), sa.name + " witness middle term invalid");
      auto probes = hom_order_probe(direct_sum(u, v), w.middle,
                                    probe_zoo(sa.algebra, {{"U", u}, {"V", v}}));
      bool strict = false;
      for (const auto& p : probes) {
        o.expect(p.difference() >= 0, sa.name + " probe " + p.name + " has [X,N] < [X,M]");
        strict = strict || p.difference() > 0;
      }
      o.expect(strict, sa.name + " no probe separates U+V from the witness middle term");
    }
    o.expect(witnesses > 0 && splits > 0, "both outcomes should occur");
    return "witness=" + std::to_string(witnesses) + ", split=" + std::to_string(splits);
  });

  guarded(8, "certificate on the Kronecker instance; refusal on the square", [](Outcome& o) {
    AlgebraPtr kr = algebras()[0].algebra;
    Representation s1 = simple(kr, 0), s2 = simple(kr, 1);
    Cochain z = zero_cochain(s1, s2);
    z[0] = Mat::from_ints(kr->field(), {{1}});
    SmoothnessCertificate c = certify_nonsingular(direct_sum(s2, s1), s2, s1, z);
    o.expect(static_cast<long>(c.z_nn) - static_cast<long>(c.ext2_nn_resolution) == 2, "dim Z^{N,N} - ext^2 != 2");
    o.expect(c.tangent_bound == 2, "tangent bound != 2");
    o.expect(c.a == 2 && a_coeff(kr->bound_quiver(), {1, 1}) == 2, "a((1,1)) != 2");

    AlgebraPtr sq = algebras()[1].algebra;
    Representation u = simple(sq, 1);
    Representation v = direct_sum(simple(sq, 0), simple(sq, 0));
    Cochain zs = zero_cochain(v, u);
    zs[0] = Mat::from_ints(sq->field(), {{1, 0}});
    Representation w = middle_term({v, u, zs});
    o.expect(pdim(w) == 2u, "constructed middle term should have pdim 2");
    try {
      certify_nonsingular(Representation(sq, {2, 1, 0, 0}), u, v, zs);
      o.expect(false, "square instance was certified");
    } catch (const CertificateRefused& e) {
      o.expect(e.item() == "pdim W <= 1", std::string("refused for another reason: ") + e.what());
    }
    return std::string();
  });

  guarded(9, "bisection: periodic => L with <h,.> = 0, chi(h) = 0, axiom on 100 pairs", [](Outcome& o) {
    std::size_t periodic = 0;
    for (auto& sa : algebras()) {
      if (!sa.canonical) continue;
      const CanonicalAlgebra& ca = *sa.canonical;
      DimVec h = h_vector(ca);
      o.expect(ca.euler.chi(h) == 0, sa.name + " chi(h) != 0");
      ScanReport scan = tau_periodicity_scan(ca, h, 20, 4, kSeed);
      periodic += scan.periodic_count();
      for (const auto& s : scan.samples) {
        if (!s.period.periodic) continue;
        o.expect(s.bisection.cls == BisectionClass::left, sa.name + " periodic sample not in L");
        for (const auto& x : s.bisection.summands) o.expect(x.pairing == 0, sa.name + " <h, X> != 0");
      }

      // Indecomposables from decomposed random modules, split by the sign of <h, X>.
      Rng rng(kSeed ^ fnv1a64("bisection " + sa.name));
      std::vector<Representation> left, right;
      for (int i = 0; i < 40; ++i)
        for (auto& x : bisection_classify(ca, random_sample(sa, rng), rng()).summands)
          (x.pairing <= 0 ? left : right).push_back(x.module);
      for (const auto& z : probe_zoo(ca.algebra, tube_modules(ca)))
        (ca.euler.pair(h, z.module.dim()) <= 0 ? left : right).push_back(z.module);
      for (int i = 0; i < 100; ++i) {
        const Representation& u = left[draw(rng, left.size())];
        const Representation& v = right[draw(rng, right.size())];
        o.expect(hom_dim(v, u) == 0, sa.name + " Hom(V,U) != 0, V=" + format_dim(v.dim()) + " U=" + format_dim(u.dim()));
        o.expect(ext1_dim(u, v) == 0, sa.name + " Ext^1(U,V) != 0, U=" + format_dim(u.dim()) + " V=" + format_dim(v.dim()));
      }
    }
    o.expect(periodic > 0, "no periodic sample found");
    return "periodic samples=" + std::to_string(periodic);
  });

  guarded(10, "determinism: repeated suite runs are byte-identical", [](Outcome& o) {
    for (const char* alg : {"kronecker", "canonical:2,2,2"}) {
      std::string args = std::string("--seed 11 suite --algebra ") + alg + " --samples 5";
      std::string a = run_cli(args), b = run_cli(args);
      o.expect(!a.empty(), std::string(alg) + " empty report");
      o.expect(a == b, std::string(alg) + " reports differ");
    }
    return std::string();
  });

  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
