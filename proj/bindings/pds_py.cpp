// Python bindings for the main operations: dimensions, mode construction,
// the fibration lift and twist ladder, invariance checking, evaluation, and
// JSON interchange. Exact objects (polynomials, configurations) cross the
// boundary as handles or as the same JSON text the CLI reads and writes;
// floating values appear only in evaluation and sampling.

#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pds/fastact.hpp"
#include "pds/harmonics.hpp"
#include "pds/hopf.hpp"
#include "pds/json_io.hpp"
#include "pds/maxwell.hpp"
#include "pds/modes.hpp"
#include "pds/orbifold.hpp"
#include "pds/sampling.hpp"

namespace py = pybind11;

namespace {

using pds::ModeFamily;
using pds::Poly;

nlohmann::json parse_or_throw(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw pds::FormatError(e.what());
  }
}

std::optional<std::string> twist_string(const Poly& p) {
  const auto t = pds::twist_of(p);
  if (!t) return std::nullopt;
  return pds::rational_to_string(*t);
}

pds::MultipoleSet multipole_from_ints(
    const std::vector<std::array<long, 3>>& dirs) {
  pds::MultipoleSet s;
  for (const auto& d : dirs) {
    s.directions.push_back(pds::Direction::from_ints(d[0], d[1], d[2]));
  }
  return s;
}

}  // namespace

PYBIND11_MODULE(pdsmodes, m) {
  m.doc() =
      "Exact invariant Laplace eigenmodes on the 2-sphere under the "
      "icosahedral group and on the 3-sphere under its binary cover";

  py::register_exception<pds::FormatError>(m, "FormatError");

  py::class_<Poly>(m, "Poly",
                   "Exact multivariate polynomial over Q(sqrt5, i); charts: "
                   "real3 (x,y,z), real4, cplx (a, conj a, b, conj b)")
      .def_property_readonly(
          "chart", [](const Poly& p) { return std::string(pds::chart_name(p.chart())); })
      .def_property_readonly("degree", &Poly::degree)
      .def_property_readonly("term_count", [](const Poly& p) { return p.terms().size(); })
      .def("is_zero", &Poly::is_zero)
      .def("is_homogeneous", &Poly::is_homogeneous)
      .def("is_harmonic", [](const Poly& p) { return p.laplacian().is_zero(); })
      .def("laplacian", &Poly::laplacian)
      .def("conjugate", &Poly::conjugate)
      .def("scaled", [](const Poly& p, long n) { return p.scaled(pds::Scalar::from_int(n)); },
           py::arg("n"), "The polynomial multiplied by an integer")
      .def("to_json", [](const Poly& p) { return pds::poly_to_json(p).dump(); })
      .def_static("from_json",
                  [](const std::string& s) { return pds::poly_from_json(parse_or_throw(s)); },
                  py::arg("text"))
      .def(py::self == py::self)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def("__str__", &Poly::to_string)
      .def("__repr__", [](const Poly& p) {
        return "<Poly " + std::string(pds::chart_name(p.chart())) + " degree " +
               std::to_string(p.degree()) + ", " + std::to_string(p.terms().size()) +
               " terms>";
      });

  py::class_<ModeFamily>(m, "ModeFamily",
                         "A verified invariant family at one even degree k")
      .def_readonly("k", &ModeFamily::k)
      .def_readonly("sphere_modes", &ModeFamily::sphere_modes)
      .def_readonly("vertical_modes", &ModeFamily::vertical_modes)
      .def_readonly("twisted", &ModeFamily::twisted)
      .def_property_readonly("rank",
                             [](const ModeFamily& f) { return f.report.rank; })
      .def_property_readonly("exact",
                             [](const ModeFamily& f) { return f.report.exact; })
      .def_property_readonly("configs_json",
                             [](const ModeFamily& f) {
                               std::vector<std::string> out;
                               for (const auto& c : f.configs)
                                 out.push_back(pds::config_to_json(c).dump());
                               return out;
                             })
      .def("basis", &ModeFamily::basis)
      .def("__repr__", [](const ModeFamily& f) {
        return "<ModeFamily k=" + std::to_string(f.k) + " rank=" +
               std::to_string(f.report.rank) + ">";
      });

  // Dimensions.
  m.def("dim_invariant_harmonics", &pds::dim_invariant_harmonics, py::arg("l"),
        "Invariant harmonics of degree l on the base sphere");
  m.def("dim_invariant_modes", &pds::dim_invariant_modes, py::arg("k"),
        "Invariant modes of degree k upstairs (0 for odd k)");
  m.def("reynolds_rank_oracle", &pds::reynolds_rank_oracle, py::arg("k"),
        py::arg("exact_cap") = 12,
        "Independent dimension count by group averaging the full lattice");

  // Construction.
  m.def("build_k_modes", &pds::build_k_modes, py::arg("k"),
        py::arg("exact_cap") = pds::kDefaultMaxExactK,
        "Build and verify the complete invariant family at degree k");
  m.def("enumerate_configs",
        [](int l) {
          std::vector<std::string> out;
          for (const auto& c : pds::enumerate_basis_configs(l))
            out.push_back(pds::config_to_json(c).dump());
          return out;
        },
        py::arg("l"), "Basis configurations at degree l, as JSON texts");
  m.def("config_mode",
        [](const std::string& text) {
          return pds::config_mode(pds::config_from_json(parse_or_throw(text)));
        },
        py::arg("config_json"), "The invariant harmonic of a configuration");
  m.def("maxwell_mode",
        [](const std::vector<std::array<long, 3>>& dirs) {
          return pds::maxwell_mode(multipole_from_ints(dirs));
        },
        py::arg("directions"),
        "Harmonic of a direction multiset given as integer (x, y, z) triples");
  m.def("solid_harmonics",
        [](int l) { return pds::solid_harmonics(l).polys; }, py::arg("l"),
        "The 2l+1 exact solid harmonics of degree l, orders -l..l");

  // Fibration operators.
  m.def("lift", &pds::lift, py::arg("f"),
        "Pull a homogeneous real3 polynomial back through the fibration");
  m.def("z_operator", &pds::z_operator, py::arg("f"), "Fiber rotation generator");
  m.def("twist_apply", &pds::twist_apply, py::arg("f"), py::arg("n"),
        "Apply the raising (n > 0) or lowering (n < 0) ladder |n| times");
  m.def("twist_of", &twist_string, py::arg("f"),
        "The twist as an exact rational string, or None if mixed");

  // Invariance checking.
  m.def("invariance_count_s2", &pds::invariance_count_s2_fast, py::arg("f"),
        "Rotations (of 60) fixing f, by exact substitution");
  m.def("invariance_count_s3", &pds::invariance_count_s3_fast, py::arg("f"),
        "Group elements (of 120) fixing f, by exact substitution");
  m.def("randomized_invariance_count_s2", &pds::randomized_invariance_count_s2,
        py::arg("f"), py::arg("trials") = 3, py::arg("seed") = 1,
        "Same count via exact identity testing mod a 62-bit prime");
  m.def("randomized_invariance_count_s3", &pds::randomized_invariance_count_s3,
        py::arg("f"), py::arg("trials") = 3, py::arg("seed") = 1);

  // Evaluation and sampling.
  m.def("evaluate_mode", &pds::evaluate_mode, py::arg("f"), py::arg("points"),
        "Evaluate a cplx mode at unit (a_re, a_im, b_re, b_im) points");
  m.def("evaluate_mode_s2", &pds::evaluate_mode_s2, py::arg("f"), py::arg("points"),
        "Evaluate a real3 mode at unit (x, y, z) points");
  m.def("sample_s2", &pds::sample_s2, py::arg("seed"), py::arg("i"),
        "Deterministic unit point on the 2-sphere");
  m.def("sample_s3", &pds::sample_s3, py::arg("seed"), py::arg("i"),
        "Deterministic unit point on the 3-sphere");

  // Group tables.
  m.def("group_tables_json", [] { return pds::group_tables_to_json().dump(); },
        "The 60 exact rotations and 120 exact quaternions, as JSON text");
}
