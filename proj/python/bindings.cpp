#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "repvar/suite.hpp"
#include "repvar/text_format.hpp"

namespace py = pybind11;
using namespace repvar;

namespace {

// pybind11 holders cannot be shared_ptr<const T>, so algebras cross the
// boundary in this wrapper.
struct PyAlgebra {
  AlgebraPtr ptr;
};

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Field field_of(const std::string& spec) {
  auto [f, order] = parse_field(spec);
  if (order != 1) throw BadParameters("expected a field, got '" + spec + "'");
  return f;
}

PyAlgebra make_algebra(const std::string& quiver, const std::string& field) {
  auto bq = builtin_quiver(quiver);
  return {Algebra::build(bq ? *bq : parse_quiver(quiver), field_of(field))};
}

std::size_t vertex(const AlgebraPtr& alg, const py::object& x) {
  if (py::isinstance<py::int_>(x)) {
    auto i = x.cast<std::size_t>();
    if (i >= alg->vertex_count()) throw UnknownVertex("vertex index " + std::to_string(i));
    return i;
  }
  return alg->quiver().vertex_index(x.cast<std::string>());
}

DimVec dim_of(const AlgebraPtr& alg, const std::vector<std::size_t>& d) {
  if (d.size() != alg->vertex_count()) throw ShapeError("dimension vector has the wrong length");
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Representations of bound quivers: Hom, Ext, tangent spaces, AR translates";

  // Translators run newest first, so the base class goes in first.
  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<HypothesisFailed>(m, "HypothesisFailed", base);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", base);

  py::class_<PyAlgebra>(m, "Algebra")
      .def_property_readonly("name", [](const PyAlgebra& a) { return a.ptr->bound_quiver().name; })
      .def_property_readonly("dimension", [](const PyAlgebra& a) { return a.ptr->dimension(); })
      .def_property_readonly("field", [](const PyAlgebra& a) { return field_spec(a.ptr->field()); })
      .def_property_readonly("vertices", [](const PyAlgebra& a) { return a.ptr->quiver().vertex_names(); })
      .def_property_readonly("arrows",
                             [](const PyAlgebra& a) {
                               std::vector<std::string> out;
                               for (const auto& ar : a.ptr->quiver().arrows()) out.push_back(ar.name);
                               return out;
                             })
      .def("quiver_text", [](const PyAlgebra& a) { return emit_quiver(a.ptr->bound_quiver()); })
      .def("__repr__", [](const PyAlgebra& a) { return "<Algebra " + a.ptr->bound_quiver().name + ">"; });

  m.def("algebra", &make_algebra, py::arg("quiver"), py::arg("field") = "GF 101",
        "Builtin name (kronecker, square, canonical:2,2,2) or quiver file text");

  py::class_<Representation>(m, "Module")
      .def_property_readonly("algebra", [](const Representation& r) { return PyAlgebra{r.algebra()}; })
      .def_property_readonly("dim", [](const Representation& r) { return r.dim(); })
      .def_property_readonly("total_dim", &Representation::total_dim)
      .def("map",
           [](const Representation& r, const std::string& arrow) {
             auto a = r.quiver().find_arrow(arrow);
             if (!a) throw UnknownVertex("unknown arrow " + arrow);
             return to_python(to_json(r.map(*a)));
           })
      .def("validate", [](const Representation& r) { return validate(r); })
      .def("to_text", [](const Representation& r, const std::string& name) { return emit_module(r, name); },
           py::arg("name") = "M")
      .def("__add__", [](const Representation& a, const Representation& b) { return direct_sum(a, b); })
      .def("__repr__", [](const Representation& r) { return "<Module dim " + format_dim(r.dim()) + ">"; });

  m.def(
      "parse_module",
      [](const std::string& text) {
        ModuleFile mf = parse_module(text);
        if (mf.truncated()) throw BadParameters("families over truncated rings are not exposed");
        return mf.module;
      },
      py::arg("text"));
  m.def("projective", [](const PyAlgebra& a, const py::object& x) { return projective(a.ptr, vertex(a.ptr, x)); });
  m.def("injective", [](const PyAlgebra& a, const py::object& x) { return injective(a.ptr, vertex(a.ptr, x)); });
  m.def("simple", [](const PyAlgebra& a, const py::object& x) { return simple(a.ptr, vertex(a.ptr, x)); });
  m.def(
      "random_module",
      [](const PyAlgebra& a, const std::vector<std::size_t>& d, std::uint64_t seed) {
        return random_module(a.ptr, dim_of(a.ptr, d), seed);
      },
      py::arg("algebra"), py::arg("d"), py::arg("seed") = 1);

  m.def("hom_dim", &hom_dim, py::arg("a"), py::arg("b"));
  m.def("ext_dim", &extn_dim, py::arg("a"), py::arg("b"), py::arg("degree") = 1);
  m.def(
      "cocycle_dims",
      [](const Representation& n, const Representation& mm) {
        CocycleSpace cs = cocycles(n, mm);
        py::dict d;
        d["z"] = cs.z_dim();
        d["b"] = cs.b_dim();
        d["ext1"] = cs.ext1_dim();
        d["vdim"] = cs.vdim;
        return d;
      },
      "Dimensions of Z^{N,M}, B^{N,M} and Ext^1(N, M)");
  m.def(
      "middle_term",
      [](const Representation& n, const Representation& mm, std::uint64_t seed) {
        Rng rng(seed);
        return middle_term(random_ext_class(cocycles(n, mm), rng));
      },
      py::arg("n"), py::arg("m"), py::arg("seed") = 1, "W^Z for a random Z in Z^{N,M}");
  m.def("pdim", [](const Representation& r) { return pdim(r); });
  m.def("idim", [](const Representation& r) { return idim(r); });

  m.def(
      "euler",
      [](const PyAlgebra& a, const std::vector<std::size_t>& d, const std::vector<std::size_t>& e) {
        return euler_form(a.ptr).pair(dim_of(a.ptr, d), dim_of(a.ptr, e));
      },
      py::arg("algebra"), py::arg("d"), py::arg("e"));
  m.def(
      "a_coeff",
      [](const PyAlgebra& a, const std::vector<std::size_t>& d) {
        return a_coeff(a.ptr->bound_quiver(), dim_of(a.ptr, d));
      },
      py::arg("algebra"), py::arg("d"));
  m.def("tangent_report", [](const Representation& r) { return to_python(to_json(tangent_report(r), r.quiver())); });

  m.def("tau", [](const Representation& r) { return tau(r).module; });
  m.def("tau_inverse", [](const Representation& r) { return tau_inverse(r).module; });
  m.def(
      "tau_orbit",
      [](const Representation& r, std::size_t steps) { return to_python(to_json(tau_orbit(r, steps), r.quiver())); },
      py::arg("m"), py::arg("max_steps") = 8);
  m.def(
      "decompose",
      [](const Representation& r, std::uint64_t seed) {
        std::vector<std::pair<Representation, std::size_t>> out;
        for (auto& s : decompose(r, seed)) out.emplace_back(std::move(s.module), s.multiplicity);
        return out;
      },
      py::arg("m"), py::arg("seed") = 1);
  m.def("iso", [](const Representation& a, const Representation& b) { return iso(a, b); });

  m.def(
      "certify",
      [](const Representation& n, const Representation& u, const Representation& v, const std::string& witness) {
        return to_python(to_json(certify_nonsingular(n, u, v, parse_cochain(witness, v, u)), n.quiver()));
      },
      py::arg("n"), py::arg("u"), py::arg("v"), py::arg("witness"),
      "Witness Z in Z^{V,U} as text, e.g. 'a=[[1]]; b=[[0]]'");

  py::class_<CanonicalAlgebra>(m, "CanonicalAlgebra")
      .def_readonly("weights", &CanonicalAlgebra::weights)
      .def_property_readonly("algebra", [](const CanonicalAlgebra& c) { return PyAlgebra{c.algebra}; })
      .def_property_readonly("type", [](const CanonicalAlgebra& c) { return to_string(c.type()); })
      .def_property_readonly("h", [](const CanonicalAlgebra& c) { return h_vector(c); })
      .def("homogeneous", [](const CanonicalAlgebra& c, long mu) { return homogeneous_module(c, mpq_class(mu)); })
      .def("mouth", &exceptional_mouth)
      .def("classify", [](const CanonicalAlgebra& c, const Representation& r) {
        return to_python(to_json(bisection_classify(c, r), r.quiver()));
      });
  m.def(
      "canonical",
      [](const std::vector<std::size_t>& p, std::optional<std::vector<long>> lambda, const std::string& field) {
        std::vector<mpq_class> l;
        if (lambda)
          for (long x : *lambda) l.emplace_back(x);
        else
          l = default_lambda(p);
        return build_canonical(p, l, field_of(field));
      },
      py::arg("weights"), py::arg("lambda_") = py::none(), py::arg("field") = "GF 101");

  m.def(
      "run_suite",
      [](const std::string& algebra, std::uint64_t seed, std::size_t samples) {
        return to_python(to_json(run_suite(algebra, seed, samples)));
      },
      py::arg("algebra"), py::arg("seed") = 1, py::arg("samples") = 10);
}
