// repvar: command-line front end. Reports are JSON on stdout; module files
// (middle, canonical emit-quiver) are plain text.
//
// Exit codes: 0 success, 1 bad input (parse errors, usage, bad parameters),
// 2 refusal (a hypothesis of the requested computation fails), 3 internal
// invariant violation.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "repvar/suite.hpp"
#include "repvar/text_format.hpp"

using namespace repvar;

namespace {

struct InputError : Error {
  using Error::Error;
};

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::uint64_t default_seed() {
  if (const char* s = std::getenv("REPVAR_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw InputError(std::string("REPVAR_SEED is not an integer: ") + s);
    }
  }
  return 1;
}

// "1,2,0" in vertex order, or "1=1,2=2" by name.
DimVec parse_dim(const std::string& text, const Quiver& q) {
  DimVec d(q.vertex_count(), 0);
  std::vector<std::string> items;
  std::stringstream in(text);
  for (std::string it; std::getline(in, it, ',');) items.push_back(it);
  bool named = text.find('=') != std::string::npos;
  if (!named && items.size() != q.vertex_count())
    throw InputError("dimension vector '" + text + "' needs " + std::to_string(q.vertex_count()) + " entries");
  for (std::size_t i = 0; i < items.size(); ++i) {
    std::string v = items[i], val = items[i];
    std::size_t x = i;
    if (named) {
      std::size_t eq = v.find('=');
      if (eq == std::string::npos) throw InputError("expected VERTEX=DIM in '" + text + "'");
      x = q.vertex_index(v.substr(0, eq));
      val = v.substr(eq + 1);
    }
    if (val.empty() || val.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("bad dimension entry '" + val + "'");
    d[x] = std::stoul(val);
  }
  return d;
}

std::vector<mpq_class> parse_lambda(const std::string& text) {
  std::vector<mpq_class> out;
  std::stringstream in(text);
  for (std::string it; std::getline(in, it, ',');) {
    if (it.empty()) continue;
    try {
      mpq_class q(it);
      q.canonicalize();
      out.push_back(q);
    } catch (const std::exception&) {
      throw InputError("bad parameter '" + it + "'");
    }
  }
  return out;
}

struct Context {
  std::uint64_t seed = 1;
  bool timing = false;
  std::vector<std::string> quiver_files;
  std::vector<BoundQuiver> known;
  Report report;

  void load_quivers() {
    for (const auto& f : quiver_files) {
      std::string text = read_input(f);
      report.inputs.emplace_back(f, text);
      for (auto& q : parse_quivers(text)) known.push_back(std::move(q));
    }
  }
  ModuleFile module(const std::string& path) {
    std::string text = read_input(path);
    report.inputs.emplace_back(path, text);
    return parse_module(text, known);
  }
  Representation field_module(const std::string& path) {
    ModuleFile mf = module(path);
    if (mf.truncated()) throw InputError("'" + path + "' is a family over a truncated ring; expected a module");
    return mf.module;
  }
  // A file path, or a builtin name when no such file exists.
  BoundQuiver quiver(const std::string& path) {
    if (path != "-" && !std::ifstream(path))
      if (auto b = builtin_quiver(path)) return *b;
    std::string text = read_input(path);
    report.inputs.emplace_back(path, text);
    return parse_quiver(text);
  }
};

Representation require_module(const Representation& m) {
  require_valid(m);
  return m;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homological and geometric invariants of bound quiver representations"};
  app.require_subcommand(1);
  // Global options (--seed, --timing, --quiver) may also follow the subcommand.
  app.fallthrough();
  Context ctx;
  std::optional<std::uint64_t> seed_opt;
  app.add_option("--seed", seed_opt, "Random seed (default: REPVAR_SEED or 1)");
  app.add_flag("--timing", ctx.timing, "Record the runtime in the report");
  app.add_option("--quiver", ctx.quiver_files, "Quiver file(s) defining names used by module files");

  std::function<void()> action;
  bool text_output = false;
  std::string text_result;

  // check
  auto* check = app.add_subcommand("check", "Validate a bound quiver");
  std::string check_path, check_field = "Q";
  check->add_option("quiver", check_path, "Quiver file or builtin name")->required();
  check->add_option("--field", check_field, "Field for the admissibility check (Q, GF P)");
  check->callback([&] {
    action = [&] {
      BoundQuiver bq = ctx.quiver(check_path);
      auto [f, order] = parse_field(check_field);
      (void)order;
      ValidationReport r = validate(bq, f);
      ctx.report.results = to_json(r, bq);
      ctx.report.results["name"] = bq.name;
      ctx.report.results["field"] = f.name();
    };
  });

  // hom / ext
  std::string a_path, b_path;
  bool with_basis = false;
  std::size_t degree = 1;
  auto* hom = app.add_subcommand("hom", "dim Hom(A, B)");
  hom->add_option("A", a_path)->required();
  hom->add_option("B", b_path)->required();
  hom->add_flag("--basis", with_basis, "Include a basis");
  hom->callback([&] {
    action = [&] {
      Representation a = ctx.field_module(a_path), b = ctx.field_module(b_path);
      require_same_algebra(a, b);
      HomBasis hb = hom_basis(require_module(a), require_module(b));
      ctx.report.results["hom"] = hb.dim();
      if (with_basis) {
        Json basis = Json::array();
        for (const auto& f : hb.basis) {
          Json fj = Json::object();
          for (std::size_t x = 0; x < f.size(); ++x) fj[a.quiver().vertex_name(x)] = to_json(f[x]);
          basis.push_back(fj);
        }
        ctx.report.results["basis"] = basis;
      }
    };
  });
  auto* ext = app.add_subcommand("ext", "dim Ext^n(A, B)");
  ext->add_option("A", a_path)->required();
  ext->add_option("B", b_path)->required();
  ext->add_option("--degree", degree, "Degree n")->capture_default_str();
  ext->add_flag("--basis", with_basis, "Include cocycle representatives (degree 1)");
  ext->callback([&] {
    action = [&] {
      Representation a = ctx.field_module(a_path), b = ctx.field_module(b_path);
      require_same_algebra(a, b);
      require_module(a);
      require_module(b);
      ctx.report.results["degree"] = degree;
      ctx.report.results["ext"] = extn_dim(a, b, degree);
      if (degree == 1) {
        CocycleSpace cs = cocycles(a, b);
        ctx.report.results["z"] = cs.z_dim();
        ctx.report.results["b"] = cs.b_dim();
        if (with_basis) {
          Json reps = Json::array();
          for (const auto& z : cs.ext_basis) reps.push_back(to_json(z, a.quiver()));
          ctx.report.results["representatives"] = reps;
        }
      }
    };
  });

  // euler / acoeff
  std::string q_path, d_text, e_text;
  bool trust = false;
  auto* euler = app.add_subcommand("euler", "Euler form <d, e>");
  euler->add_option("quiver", q_path)->required();
  euler->add_option("--d", d_text)->required();
  euler->add_option("--e", e_text);
  euler->add_flag("--trust", trust, "Skip the triangular / gldim <= 2 requirement");
  euler->callback([&] {
    action = [&] {
      AlgebraPtr alg = Algebra::build(ctx.quiver(q_path), Field::prime(101));
      EulerForm ef = euler_form(alg, trust);
      DimVec d = parse_dim(d_text, alg->quiver());
      DimVec e = e_text.empty() ? d : parse_dim(e_text, alg->quiver());
      ctx.report.results = {{"d", to_json(d, alg->quiver())},
                            {"e", to_json(e, alg->quiver())},
                            {"euler", ef.pair(d, e)},
                            {"chi_d", ef.chi(d)},
                            {"matrix", ef.matrix},
                            {"triangular", ef.triangular},
                            {"gldim", ef.gldim ? Json(*ef.gldim) : Json(nullptr)},
                            {"trusted", ef.trusted}};
    };
  });
  auto* acoeff = app.add_subcommand("acoeff", "a(d) = sum over arrows minus sum over relations");
  acoeff->add_option("quiver", q_path)->required();
  acoeff->add_option("--d", d_text)->required();
  acoeff->callback([&] {
    action = [&] {
      BoundQuiver bq = ctx.quiver(q_path);
      DimVec d = parse_dim(d_text, bq.quiver);
      ctx.report.results = {{"d", to_json(d, bq.quiver)}, {"a", a_coeff(bq, d)}, {"vdim", vdim(d, d)}};
    };
  });

  // tangent / tau / decompose
  std::string m_path;
  auto* tangent = app.add_subcommand("tangent", "Tangent space report at a module");
  tangent->add_option("M", m_path)->required();
  tangent->callback([&] {
    action = [&] {
      Representation m = require_module(ctx.field_module(m_path));
      ctx.report.results = to_json(tangent_report(m), m.quiver());
    };
  });
  std::size_t steps = 8;
  bool inverse_tau = false;
  auto* tau_cmd = app.add_subcommand("tau", "AR translate and tau-periodicity");
  tau_cmd->add_option("M", m_path)->required();
  tau_cmd->add_option("--steps", steps)->capture_default_str();
  tau_cmd->add_flag("--inverse", inverse_tau, "Report tau^-1 M instead of tau M");
  tau_cmd->callback([&] {
    action = [&] {
      Representation m = require_module(ctx.field_module(m_path));
      TauResult t = inverse_tau ? tau_inverse(m) : tau(m);
      Json dropped = Json::object();
      for (std::size_t x = 0; x < t.dropped.size(); ++x)
        if (t.dropped[x]) dropped[m.quiver().vertex_name(x)] = t.dropped[x];
      ctx.report.results[inverse_tau ? "tau_inverse" : "tau"] = {{"dim", to_json(t.module.dim(), m.quiver())},
                                                                 {"dropped", dropped}};
      ctx.report.results["orbit"] = to_json(tau_orbit(m, steps, ctx.seed), m.quiver());
    };
  });
  auto* dec = app.add_subcommand("decompose", "Krull-Schmidt decomposition (finite fields)");
  dec->add_option("M", m_path)->required();
  dec->callback([&] {
    action = [&] {
      Representation m = require_module(ctx.field_module(m_path));
      ctx.report.results["summands"] = to_json(decompose(m, ctx.seed));
    };
  });

  // middle
  std::string cocycle_path;
  std::optional<std::uint64_t> random_cocycle;
  auto* middle = app.add_subcommand("middle", "Middle term W^Z of 0 -> B -> W -> A -> 0");
  middle->add_option("A", a_path, "Quotient end N")->required();
  middle->add_option("B", b_path, "Submodule end M")->required();
  auto* cocycle_opt = middle->add_option("--cocycle", cocycle_path, "Cochain file or inline 'a=[[1]]; b=[[0]]'");
  auto* random_opt = middle->add_option("--random", random_cocycle, "Random cocycle with this seed");
  cocycle_opt->excludes(random_opt);
  middle->callback([&] {
    action = [&] {
      Representation n = require_module(ctx.field_module(a_path)), m = require_module(ctx.field_module(b_path));
      require_same_algebra(n, m);
      Cochain z;
      if (random_cocycle) {
        Rng rng(*random_cocycle);
        z = random_ext_class(cocycles(n, m), rng).z;
      } else if (!cocycle_path.empty()) {
        std::ifstream probe(cocycle_path);
        z = parse_cochain(probe ? read_input(cocycle_path) : cocycle_path, n, m);
      } else {
        throw InputError("middle needs --cocycle or --random");
      }
      text_output = true;
      text_result = emit_module(middle_term({n, m, z}), "W");
    };
  });

  // triangularize
  std::string f_path, split_text;
  auto* tri = app.add_subcommand("triangularize", "Split or find a witness for a family over GF(p)[t]/(t^n)");
  tri->add_option("F", f_path)->required();
  tri->add_option("--split", split_text, "Dimension vector of U (upper-left block)")->required();
  tri->callback([&] {
    action = [&] {
      ModuleFile mf = ctx.module(f_path);
      if (!mf.truncated()) throw InputError("'" + f_path + "' is not a family over GF(p) / t^N");
      const TruncatedRepresentation& a = mf.family;
      DimVec du = parse_dim(split_text, a.quiver()), dv(du.size());
      for (std::size_t x = 0; x < du.size(); ++x) {
        if (du[x] > a.dim(x)) throw InputError("split exceeds the family dimension at " + a.quiver().vertex_name(x));
        dv[x] = a.dim(x) - du[x];
      }
      Representation fiber = a.special_fiber();
      std::vector<Mat> um, vm;
      for (std::size_t k = 0; k < a.maps().size(); ++k) {
        const Arrow& ar = a.quiver().arrow(k);
        um.push_back(fiber.map(k).block(0, 0, du[ar.target], du[ar.source]));
        vm.push_back(fiber.map(k).block(du[ar.target], du[ar.source], dv[ar.target], dv[ar.source]));
      }
      Representation u(a.algebra(), du, um), v(a.algebra(), dv, vm);
      SplitOrWitness r = triangularize_family(a, u, v);
      ctx.report.results = to_json(r, a.quiver());
      Json profile = Json::array();
      if (const auto* w = std::get_if<WitnessResult>(&r))
        ctx.report.results["probes"] = to_json(hom_order_probe(fiber, w->middle, probe_zoo(a.algebra())));
      for (auto j : hom_rank_profile(fiber, a)) profile.push_back(j);
      ctx.report.results["hom_rank_profile"] = profile;
    };
  });

  // certify
  std::string u_path, v_path, witness;
  auto* cert = app.add_subcommand("certify", "Nonsingularity certificate at N = U + V");
  cert->add_option("N", m_path)->required();
  cert->add_option("--split-u", u_path)->required();
  cert->add_option("--split-v", v_path)->required();
  cert->add_option("--witness", witness, "Cochain Z in Z^{V,U}: file or inline text")->required();
  cert->callback([&] {
    action = [&] {
      Representation n = ctx.field_module(m_path), u = ctx.field_module(u_path), v = ctx.field_module(v_path);
      require_same_algebra(n, u);
      require_same_algebra(n, v);
      std::ifstream probe(witness);
      std::string ztext = probe ? read_input(witness) : witness;
      if (probe) ctx.report.inputs.emplace_back(witness, ztext);
      Cochain z = parse_cochain(ztext, v, u);
      SmoothnessCertificate c = certify_nonsingular(n, u, v, z);
      ctx.report.results = to_json(c, n.quiver());
      ctx.report.assumptions = c.assumptions;
    };
  });

  // canonical
  std::string weights, lambda_text, field_text = "gf101", scan_d;
  std::size_t samples = 20, max_period = 8;
  auto* canon = app.add_subcommand("canonical", "Canonical algebras C(p, lambda)");
  canon->add_option("--weights", weights, "Arm weights, e.g. 2,3,7")->required();
  canon->add_option("--lambda", lambda_text, "Parameters lambda_3, ..., lambda_t (default 1, 2, ...)");
  canon->add_option("--field", field_text)->capture_default_str();
  canon->require_subcommand(1);
  auto make_canonical = [&] {
    auto p = parse_weights(weights);
    auto lambda = lambda_text.empty() ? default_lambda(p) : parse_lambda(lambda_text);
    auto [f, order] = parse_field(field_text);
    if (order != 1) throw InputError("canonical algebras are built over a field");
    return build_canonical(p, lambda, f);
  };
  auto* emit = canon->add_subcommand("emit-quiver", "Write the bound quiver file");
  emit->callback([&] {
    action = [&] {
      CanonicalAlgebra ca = make_canonical();
      text_output = true;
      text_result = emit_quiver(ca.algebra->bound_quiver());
    };
  });
  auto* scan = canon->add_subcommand("scan", "tau-periodicity scan over random modules");
  scan->add_option("--d", scan_d, "Dimension vector (default h)");
  scan->add_option("--samples", samples)->capture_default_str();
  scan->add_option("--max-period", max_period)->capture_default_str();
  scan->callback([&] {
    action = [&] {
      CanonicalAlgebra ca = make_canonical();
      const Quiver& q = ca.algebra->quiver();
      DimVec d = scan_d.empty() ? h_vector(ca) : parse_dim(scan_d, q);
      ScanReport s = tau_periodicity_scan(ca, d, samples, max_period, ctx.seed);
      ctx.report.results = {{"weights", ca.weights},
                            {"type", to_string(ca.type())},
                            {"h", to_json(h_vector(ca), q)},
                            {"chi_h", ca.euler.chi(h_vector(ca))},
                            {"scan", to_json(s, q)}};
      if (!s.consistent()) throw InvariantViolation("a tau-periodic sample lies outside the left class");
    };
  });

  // suite
  std::string suite_algebra_name = "kronecker";
  std::size_t suite_samples = 20;
  auto* suite = app.add_subcommand("suite", "Run the invariant battery");
  suite->add_option("--algebra", suite_algebra_name, "kronecker | square | canonical:P1,P2,...")->capture_default_str();
  suite->add_option("--samples", suite_samples)->capture_default_str();
  bool suite_failed = false;
  suite->callback([&] {
    action = [&] {
      SuiteResult r = run_suite(suite_algebra_name, ctx.seed, suite_samples);
      ctx.report.results = to_json(r);
      suite_failed = !r.passed();
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  ctx.report.command = app.get_subcommands().front()->get_name();
  if (auto* sc = app.get_subcommands().front(); !sc->get_subcommands().empty())
    ctx.report.command += " " + sc->get_subcommands().front()->get_name();

  auto start = std::chrono::steady_clock::now();
  auto emit_error = [&](const std::string& kind, const std::string& item, const std::string& detail) {
    Json j;
    j["schema"] = kReportSchema;
    j["command"] = ctx.report.command;
    j[kind] = {{"item", item}, {"detail", detail}};
    std::cout << j.dump(2) << "\n";
  };
  try {
    ctx.seed = seed_opt ? *seed_opt : default_seed();
    ctx.report.seed = ctx.seed;
    ctx.load_quivers();
    if (action) action();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    emit_error("violation", "invariant", e.what());
    return 3;
  } catch (const HypothesisFailed& e) {
    emit_error("refused", e.item(), e.what());
    return 2;
  } catch (const FlagsRequired& e) {
    emit_error("refused", "triangular, gldim <= 2", e.what());
    return 2;
  } catch (const NotARepresentation& e) {
    emit_error("refused", "relations", e.what());
    return 2;
  } catch (const NotACocycle& e) {
    emit_error("refused", "cocycle", e.what());
    return 2;
  } catch (const NotAdmissible& e) {
    emit_error("refused", "admissible", e.what());
    return 2;
  } catch (const UnsupportedField& e) {
    emit_error("refused", "field", e.what());
    return 2;
  } catch (const QuiverMismatch& e) {
    emit_error("refused", "same algebra", e.what());
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (text_output) {
    std::cout << text_result;
    return 0;
  }
  if (ctx.timing)
    ctx.report.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << ctx.report.dump();
  return suite_failed ? 3 : 0;
}
