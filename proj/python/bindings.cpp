#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "knotpoly/alex.hpp"
#include "knotpoly/apoly.hpp"
#include "knotpoly/cli.hpp"
#include "knotpoly/detect.hpp"
#include "knotpoly/emknots.hpp"
#include "knotpoly/errors.hpp"
#include "knotpoly/format.hpp"
#include "knotpoly/newton.hpp"
#include "knotpoly/smallness.hpp"

namespace py = pybind11;
using namespace knotpoly;

namespace {

// Polynomials cross the boundary as text, same syntax the CLI reads.
std::string apoly_text(const APoly& a) { return to_text(a.poly); }

std::string slope_text(const SlopeValue& s) { return s.is_infinite() ? "inf" : s.str(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "A-polynomials of torus and cable knots, Newton polygons, and EM knot invariants";

  auto input_error = py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);
  (void)input_error;

  m.def("normalize", [](const std::string& p) { return to_text(normalize(parse_poly2(p))); }, py::arg("poly"));

  m.def("torus_apoly", [](long p, long q) { return apoly_text(torus_apoly(TorusParams::make(p, q))); }, py::arg("p"),
        py::arg("q"));
  m.def(
      "torus_factors",
      [](long p, long q) {
        std::vector<std::string> out;
        for (const auto& f : torus_apoly(TorusParams::make(p, q)).factors) out.push_back(to_text(f));
        return out;
      },
      py::arg("p"), py::arg("q"));
  m.def(
      "cable_apoly",
      [](const std::string& companion, long p, long q) {
        return apoly_text(cable_apoly(APoly::from_poly(parse_poly2(companion)), CableParams::make(p, q)));
      },
      py::arg("companion"), py::arg("p"), py::arg("q"));
  m.def(
      "iterated_apoly",
      [](const std::string& desc, bool recursive) {
        const auto d = IteratedTorusDesc::parse(desc);
        return apoly_text(recursive ? iterated_by_recursion(d) : iterated_torus_apoly(d));
      },
      py::arg("desc"), py::arg("recursive") = false);

  m.def("torus_alexander", [](long p, long q) { return to_text(torus_alexander(p, q).poly()); }, py::arg("p"),
        py::arg("q"));
  m.def(
      "identify_torus",
      [](const std::string& apoly, const std::string& alex) -> std::optional<std::pair<long, long>> {
        const auto t = identify_torus(InvariantPair::make(parse_poly2(apoly), IntPoly1(parse_upoly(alex))));
        if (!t) return std::nullopt;
        return std::make_pair(t->p, t->q);
      },
      py::arg("apoly"), py::arg("alex"));

  m.def(
      "boundary_slopes",
      [](const std::string& poly) {
        const auto b = boundary_slopes(parse_poly2(poly));
        std::vector<std::string> out;
        for (const auto& s : b.finite) out.push_back(slope_text(s));
        if (b.infinity) out.push_back("inf");
        return out;
      },
      py::arg("poly"));
  m.def(
      "width",
      [](const std::string& poly, const std::string& slope) {
        return width(newton_polygon(parse_poly2(poly)), SlopeValue::parse(slope));
      },
      py::arg("poly"), py::arg("slope"));

  m.def("em_genus", [](i64 l, i64 mm, i64 n, i64 p) { return genus(EMParams::validate(l, mm, n, p)); });
  m.def("em_slope", [](i64 l, i64 mm, i64 n, i64 p) { return toroidal_slope(EMParams::validate(l, mm, n, p)).str(); });
  m.def("em_sd", [](i64 l, i64 mm, i64 n, i64 p) {
    const SDPair c = sd_coordinates(EMParams::validate(l, mm, n, p));
    return py::dict(py::arg("s") = c.s, py::arg("d") = c.d, py::arg("g") = c.g, py::arg("r") = c.r.str());
  });
  m.def(
      "invert_sd",
      [](i64 s, i64 d) {
        std::vector<std::pair<i64, i64>> out;
        for (const auto& x : invert_sd(s, d)) out.emplace_back(x.l, x.m);
        return out;
      },
      py::arg("s"), py::arg("d"));
  m.def(
      "collision_search",
      [](i64 bound_l, i64 bound_m, bool negative_first) {
        std::vector<std::tuple<i64, i64, i64, i64>> out;
        py::gil_scoped_release nogil;
        for (const auto& c : collision_search(bound_l, bound_m, negative_first)) out.emplace_back(c.l, c.m, c.l_star, c.m_star);
        return out;
      },
      py::arg("bound_l"), py::arg("bound_m"), py::arg("negative_first") = false);

  m.def("cont_frac", [](i64 a1, i64 a2) { return cont_frac_expand(a1, a2).coefficients; }, py::arg("a1"), py::arg("a2"));
  m.def(
      "ess_solutions",
      [](std::vector<std::int64_t> b) {
        std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
        for (const auto& s : ess_surface_solutions(ContFrac{std::move(b)})) out.emplace_back(s.I, s.J);
        return out;
      },
      py::arg("coefficients"));
  m.def("is_small_candidate", &is_small_candidate, py::arg("a1"), py::arg("a2"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
