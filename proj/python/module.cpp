#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "extatica/bounds.hpp"
#include "extatica/cli.hpp"
#include "extatica/corpus.hpp"
#include "extatica/errors.hpp"
#include "extatica/extactic.hpp"
#include "extatica/parser.hpp"

namespace py = pybind11;
using namespace extatica;

namespace {

// Rationals cross the boundary as fractions.Fraction.
py::object to_fraction(const Rational& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py::int_(py::str(q.get_num().get_str())),
                  py::int_(py::str(q.get_den().get_str())));
}

RingPtr ring_from(const std::vector<std::string>& names) { return make_ring(names); }

SystemKind kind_from(const std::string& kind) {
  if (kind == "affine") return SystemKind::kAffine;
  if (kind == "homogeneous") return SystemKind::kHomogeneous;
  throw InvalidInputError("system kind must be 'affine' or 'homogeneous'");
}

py::dict report_dict(const bounds::BoundReport& r) {
  py::dict d;
  d["formula"] = r.formula;
  d["lhs"] = to_fraction(r.lhs);
  d["rhs"] = to_fraction(r.rhs);
  d["holds"] = r.holds;
  d["verdict"] = bounds::to_string(r.verdict);
  d["threshold"] = r.threshold ? to_fraction(*r.threshold) : py::none();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact extactic divisors of polynomial foliations";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<HypothesisNotMetError>(m, "HypothesisNotMetError", base.ptr());
  py::register_exception<ResourceGuardError>(m, "ResourceGuardError", base.ptr());

  py::class_<Polynomial>(m, "Polynomial")
      .def(py::init([](const std::string& text, const std::vector<std::string>& vars) {
             return parse_polynomial(text, ring_from(vars));
           }),
           py::arg("text"), py::arg("vars"))
      .def_property_readonly("vars", [](const Polynomial& p) { return p.ring()->names(); })
      .def_property_readonly("total_degree", &Polynomial::total_degree)
      .def("is_zero", &Polynomial::is_zero)
      .def("derivative", [](const Polynomial& p, std::size_t v) { return partial_derivative(p, v); })
      .def("divide_exact", [](const Polynomial& p, const Polynomial& q) { return divide_exact(p, q); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__pow__", [](const Polynomial& p, unsigned e) { return power(p, e); })
      .def("__str__", &Polynomial::to_string)
      .def("__repr__", [](const Polynomial& p) { return "Polynomial('" + p.to_string() + "')"; });

  py::class_<VectorField>(m, "VectorField")
      .def(py::init([](const std::string& text, const std::vector<std::string>& vars,
                       const std::optional<std::string>& mode) {
             RingPtr ring = ring_from(vars);
             if (!mode) return parse_vector_field(text, ring);
             return parse_vector_field(text, ring, *mode == "homogeneous" ? FieldMode::kHomogeneous
                                                                           : FieldMode::kAffine);
           }),
           py::arg("text"), py::arg("vars"), py::arg("mode") = py::none())
      .def_property_readonly("mode", [](const VectorField& f) { return to_string(f.mode()); })
      .def_property_readonly("components", &VectorField::components)
      .def("apply", &apply_derivation)
      .def("degree", [](const VectorField& f) { return foliation_degree(f).degree; })
      .def(py::self == py::self)
      .def("__str__", &VectorField::to_string);

  m.def("check_invariance",
        [](const VectorField& f, const Polynomial& curve) -> std::optional<Polynomial> {
          auto k = check_invariance(f, curve);
          if (!k) return std::nullopt;
          return k->cofactor;
        },
        py::arg("field"), py::arg("curve"),
        "Cofactor K with X(f) = K*f, or None when f = 0 is not invariant.");

  m.def("extactic",
        [](const VectorField& f, int k, const std::string& kind, const std::string& engine,
           unsigned jobs) {
          ExtacticOptions opt;
          opt.engine = engine_from_string(engine);
          opt.jobs = jobs;
          ExtacticReport r = extactic(f, monomial_system(f.ring(), k, kind_from(kind)), opt);
          py::dict d;
          d["extactic"] = r.extactic;
          d["identically_zero"] = r.identically_zero;
          d["degree"] = r.identically_zero ? py::object(py::none()) : py::int_(r.degree);
          d["degree_bound"] = r.degree_bound;
          d["m"] = r.dimension;
          d["engine"] = to_string(r.engine_used);
          return d;
        },
        py::arg("field"), py::arg("k"), py::arg("system") = "affine",
        py::arg("engine") = "auto", py::arg("jobs") = 1);

  m.def("first_integral",
        [](const VectorField& f, int k, const std::string& kind) {
          FirstIntegral fi = extract_first_integral(f, monomial_system(f.ring(), k, kind_from(kind)));
          py::dict d;
          d["status"] = to_string(fi.status);
          d["numerator"] = fi.numerator ? py::cast(*fi.numerator) : py::none();
          d["denominator"] = fi.denominator ? py::cast(*fi.denominator) : py::none();
          d["rank"] = fi.rank;
          return d;
        },
        py::arg("field"), py::arg("k"), py::arg("system") = "affine");

  m.def("corpus",
        [](const std::string& spec) {
          corpus::CorpusEntry e = corpus::by_spec(spec);
          py::list facts;
          for (const auto& f : e.facts) {
            py::dict d;
            d["kind"] = f.kind;
            d["statement"] = f.statement;
            d["backing"] = corpus::to_string(f.backing);
            d["source"] = f.source;
            facts.append(d);
          }
          return py::make_tuple(e.field, facts);
        },
        py::arg("spec"));

  auto b = m.def_submodule("bounds", "Numerical bounds for invariant divisors");
  b.def("theorem1", [](long deg_d, long h0, long n, long deg_f, long deg_x) {
    bounds::BoundInput in;
    in.deg_d = deg_d;
    in.h0 = h0;
    in.n_invariant = n;
    in.deg_f = deg_f;
    in.deg_x = deg_x;
    return report_dict(bounds::theorem1_check(in));
  }, py::arg("deg_d"), py::arg("h0"), py::arg("count"), py::arg("deg_f"), py::arg("deg_x") = 1);
  b.def("pn_threshold", [](long d, long k, long n, long count) {
    return to_fraction(bounds::pn_threshold(d, k, n, count));
  }, py::arg("d"), py::arg("k"), py::arg("n"), py::arg("count"));
  b.def("genus_rhs", [](long d, long k, long count) {
    return to_fraction(bounds::genus_rhs(d, k, count));
  }, py::arg("d"), py::arg("k"), py::arg("count"));
  b.def("abelian_bound", [](long self_int, long n, long count, long deg_f, long deg_x) {
    return to_fraction(bounds::abelian_bound(self_int, n, count, deg_f, deg_x));
  }, py::arg("self_intersection"), py::arg("n"), py::arg("count"), py::arg("deg_f"),
     py::arg("deg_x") = 1);

  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          int code = cli::run(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs one CLI command; returns (exit code, stdout, stderr).");
}
