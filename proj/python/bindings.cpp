#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jordanaff/calabi.hpp"
#include "jordanaff/catalog.hpp"
#include "jordanaff/hypersurface.hpp"
#include "jordanaff/io.hpp"
#include "jordanaff/jordan.hpp"
#include "jordanaff/triple.hpp"
#include "jordanaff/verify.hpp"

namespace py = pybind11;
using namespace jordanaff;

namespace {

Vec<Rational> to_rational(const std::vector<std::string>& v) {
  Vec<Rational> out;
  out.reserve(v.size());
  for (const auto& s : v) out.push_back(Rational::parse(s));
  return out;
}

std::vector<std::string> to_strings(const Vec<Rational>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& r : v) out.push_back(r.str());
  return out;
}

FamilySpec make_spec(const std::string& family, std::size_t m, const std::vector<int>& gamma,
                     const std::vector<int>& q) {
  const auto f = parse_family(family);
  if (!f) throw AlgebraError(ErrorKind::kInvalidFamily, "unknown family '" + family + "'");
  FamilySpec s;
  s.family = *f;
  s.m = m;
  s.gamma_signs = gamma;
  s.q_signature = q;
  validate(s);
  return s;
}

std::string verify_json(const JordanAlgebra& J, const std::string& kind, std::size_t samples, std::uint64_t seed,
                        const std::string& L1) {
  std::vector<VerificationReport> reps;
  if (kind == "jordan") {
    reps.push_back(check_jordan(J, seed, samples));
  } else if (kind == "semisimple") {
    VerificationReport rep;
    rep.target = J.name();
    rep.checks.push_back({"semisimple", is_semisimple(J).semisimple, 0.0, 0, seed, ""});
    reps.push_back(rep);
  } else if (kind == "triple") {
    reps.push_back(check_triple(J, samples, seed));
    reps.push_back(check_operator_identities(J, samples, seed));
  } else if (kind == "pair") {
    const SymmetricPair pair = restricted_pair(J);
    reps.push_back(check_pair(pair, J, seed));
    reps.push_back(check_k_action(J, pair, samples, seed));
  } else if (kind == "gauss") {
    ModelOptions opts;
    opts.compute_pair = false;
    const HypersurfaceModel m = build_model(J, Rational::parse(L1), opts);
    VerificationReport rep;
    rep.target = J.name();
    for (const Check& c : {symmetry_check(m), apolarity_check(m), gauss_check(m), affine_normal_check(m),
                           trace_form_check(m)})
      rep.checks.push_back(c);
    reps.push_back(rep);
  } else {
    throw AlgebraError(ErrorKind::kInvalidArgument, "unknown check kind '" + kind + "'");
  }
  for (auto& r : reps) r.mode = J.mode();
  return reports_to_json(reps).dump();
}

}  // namespace

PYBIND11_MODULE(_jordanaff, m) {
  m.doc() = "Real Jordan algebras and their equiaffine symmetric hypersurfaces";

  py::register_exception<AlgebraError>(m, "AlgebraError", PyExc_ValueError);

  m.def("families", [] {
    std::vector<std::string> out;
    for (const auto& f : family_table()) out.emplace_back(f.cli_name);
    return out;
  });

  py::class_<JordanAlgebra>(m, "Algebra")
      .def_property_readonly("dim", &JordanAlgebra::dim)
      .def_property_readonly("name", &JordanAlgebra::name)
      .def_property_readonly("mode", [](const JordanAlgebra& J) { return std::string(to_string(J.mode())); })
      .def_property_readonly("unity",
                             [](const JordanAlgebra& J) -> py::object {
                               if (!J.unity()) return py::none();
                               return py::cast(to_strings(*J.unity()));
                             })
      .def("product",
           [](const JordanAlgebra& J, const std::vector<std::string>& u, const std::vector<std::string>& v) {
             return to_strings(product<Rational>(J, to_rational(u), to_rational(v)));
           })
      .def("product_float",
           [](const JordanAlgebra& J, const std::vector<double>& u, const std::vector<double>& v) {
             return product<double>(J, u, v);
           })
      .def("det_P", [](const JordanAlgebra& J,
                       const std::vector<std::string>& u) { return determinant(p_operator<Rational>(J, to_rational(u))).str(); })
      .def("to_json", &serialize_algebra)
      .def_static("from_json", [](const std::string& text) { return deserialize_algebra(text, "<python>"); });

  m.def("build_family", [](const std::string& family, std::size_t size, const std::vector<int>& gamma,
                           const std::vector<int>& q) { return build(make_spec(family, size, gamma, q)); },
        py::arg("family"), py::arg("m") = 0, py::arg("gamma") = std::vector<int>{}, py::arg("q") = std::vector<int>{});

  m.def("direct_sum", [](const std::vector<JordanAlgebra>& parts) { return direct_sum(parts); });

  m.def("verify", &verify_json, py::arg("algebra"), py::arg("kind"), py::arg("samples") = 100, py::arg("seed") = 1,
        py::arg("L1") = "-1");

  m.def("verify_det_formula",
        [](const std::string& family, std::size_t size, const std::vector<int>& gamma, const std::vector<int>& q,
           std::size_t samples, std::uint64_t seed) {
          return reports_to_json({verify_det_formula(make_spec(family, size, gamma, q), samples, seed)}).dump();
        },
        py::arg("family"), py::arg("m") = 0, py::arg("gamma") = std::vector<int>{}, py::arg("q") = std::vector<int>{},
        py::arg("samples") = 20, py::arg("seed") = 1);

  py::class_<HypersurfaceModel>(m, "Model")
      .def_property_readonly("n", &HypersurfaceModel::n)
      .def_property_readonly("C", [](const HypersurfaceModel& h) { return h.C; })
      .def_property_readonly("L1", [](const HypersurfaceModel& h) { return h.L1.str(); })
      .def_property_readonly("algebra", [](const HypersurfaceModel& h) { return h.algebra; })
      .def("summary_json", [](const HypersurfaceModel& h) { return model_to_json(h).dump(); })
      .def("metric_json", [](const HypersurfaceModel& h) { return metric_to_json(h).dump(); })
      .def("cubic_form_json", [](const HypersurfaceModel& h) { return cubic_form_to_json(h).dump(); })
      .def("sample", [](const HypersurfaceModel& h, std::size_t count,
                        std::uint64_t seed) { return sample_points(h, count, seed); },
           py::arg("count"), py::arg("seed") = 1)
      .def("level_residual",
           [](const HypersurfaceModel& h, const std::vector<double>& p) { return level_residual(h, p); });

  m.def("build_model", [](const JordanAlgebra& J, const std::string& L1) { return build_model(J, Rational::parse(L1)); },
        py::arg("algebra"), py::arg("L1"));

  m.def("compose", [](const std::string& spec_json) {
    return compose(calabi_spec_from_json(Json::parse(spec_json), "<python>")).model;
  });

  m.def("reconstruct", [](const std::string& g_json, const std::string& a_json, const std::string& L1) {
    const Matrix<Rational> g = metric_from_json(Json::parse(g_json), "<g>");
    const auto A = cubic_form_from_json(Json::parse(a_json), g.rows(), "<A>");
    const Reconstruction r = reconstruct_algebra(g.rows(), g, A, Rational::parse(L1));
    return py::make_tuple(r.algebra, r.jordan, r.semisimple);
  });
}
