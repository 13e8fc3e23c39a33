#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hyperlaplace/gegenbauer.hpp"
#include "hyperlaplace/geometry.hpp"
#include "hyperlaplace/harmonics.hpp"
#include "hyperlaplace/io.hpp"
#include "hyperlaplace/quadrature.hpp"
#include "hyperlaplace/solver.hpp"
#include "hyperlaplace/verify.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace hyperlaplace;

namespace {

DomainKind parse_kind(const std::string& kind) {
  if (kind == "interior") return DomainKind::Interior;
  if (kind == "exterior") return DomainKind::Exterior;
  if (kind == "annulus") return DomainKind::Annulus;
  throw std::invalid_argument("kind must be 'interior', 'exterior' or 'annulus'");
}

// Python callables are sampled once on the grid; the GIL is held throughout.
HarmonicExpansion fit_callables(int d, const std::string& kind, int lmax,
                                const std::vector<std::pair<double, AngularFunction>>& boundaries,
                                std::optional<int> grid_lmax) {
  const auto grid = sphere_grid(d, grid_lmax.value_or(lmax));
  BoundaryProblem problem{d, parse_kind(kind), lmax, {}};
  for (const auto& [radius, f] : boundaries) problem.boundaries.push_back({radius, sample(grid, f)});
  return fit(problem);
}

}  // namespace

PYBIND11_MODULE(_hyperlaplace, m) {
  m.doc() = "Laplace equation in d dimensions: ultraspherical harmonics and boundary-value solver";

  py::register_exception<io::InputError>(m, "InputError", PyExc_ValueError);

  py::class_<Angles>(m, "Angles")
      .def(py::init([](std::vector<double> theta, double phi) { return Angles{std::move(theta), phi}; }),
           "theta"_a, "phi"_a)
      .def_readwrite("theta", &Angles::theta)
      .def_readwrite("phi", &Angles::phi)
      .def_property_readonly("dimension", &Angles::dimension)
      .def("__repr__", [](const Angles& a) {
        return "Angles(theta=" + py::repr(py::cast(a.theta)).cast<std::string>() + ", phi=" + std::to_string(a.phi) +
               ")";
      });

  m.def("to_cartesian",
        [](double r, const Angles& a) { return to_cartesian(UltrasphericalPoint{r, a}).x; },
        "r"_a, "angles"_a, "Cartesian coordinates (x_1, ..., x_d) of the point (r, angles).");
  m.def("to_ultraspherical",
        [](std::vector<double> x) {
          const auto p = to_ultraspherical(CartesianPoint{std::move(x)});
          return std::make_tuple(p.r, p.angles);
        },
        "x"_a, "Returns (r, angles). Undetermined angles on the axes are set to 0.");
  m.def("solid_angle", &solid_angle, "d"_a, "Surface area of the unit (d-1)-sphere.");
  m.def("cos_gamma", &cos_gamma, "a"_a, "b"_a, "Cosine of the angle between two directions.");

  m.def("poly", &poly, "l"_a, "d"_a, "x"_a, "Ultraspherical polynomial P_{l,d}(x).");
  m.def("poly_deriv", &poly_deriv, "l"_a, "m"_a, "d"_a, "x"_a, "m-th derivative of P_{l,d} at x.");
  m.def("deriv_at_one", &deriv_at_one, "l"_a, "n"_a, "d"_a, "n-th derivative of P_{l,d} at x = 1.");
  m.def("assoc", &assoc, "l"_a, "m"_a, "d"_a, "theta"_a, "Associated function P^m_{l,d}(cos theta).");
  m.def("norm_factor", &norm_factor, "l"_a, "n"_a, "d"_a, "Normalization factor N^{(d)}_{l n}.");

  py::class_<MultiIndex>(m, "MultiIndex")
      .def(py::init([](int l, std::vector<int> mm) {
             MultiIndex idx{l, std::move(mm)};
             validate(idx);
             return idx;
           }),
           "l"_a, "m"_a)
      .def_static("parse", &parse_multi_index, "text"_a)
      .def_readonly("l", &MultiIndex::l)
      .def_readonly("m", &MultiIndex::m)
      .def_property_readonly("dimension", &MultiIndex::dimension)
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def("__hash__", [](const MultiIndex& idx) { return py::hash(py::str(to_string(idx))); })
      .def("__str__", [](const MultiIndex& idx) { return to_string(idx); })
      .def("__repr__", [](const MultiIndex& idx) { return "MultiIndex" + to_string(idx); });

  m.def("count", &count, "d"_a, "l"_a, "Number of independent harmonics of level l.");
  m.def("enumerate", &enumerate, "d"_a, "l"_a, "Indices of level l in canonical order.");
  m.def("enumerate_up_to", &enumerate_up_to, "d"_a, "lmax"_a);
  m.def("eval_psi", &eval_psi, "idx"_a, "angles"_a);
  m.def("norm_coeff", &norm_coeff, "idx"_a);
  m.def("eval_harmonic", &eval_harmonic, "idx"_a, "angles"_a, "Orthonormal harmonic Y_idx(angles).");
  m.def("addition_sum", &addition_sum, "d"_a, "l"_a, "a"_a, "b"_a);
  m.def("addition_reduced", &addition_reduced, "d"_a, "l"_a, "theta_a"_a, "theta_b"_a, "cos_gamma_lower"_a);
  m.def("harmonicity_residual",
        [](const MultiIndex& idx, double r, const Angles& a, double h, bool exterior) {
          return harmonicity_residual(idx, r, a, h, exterior ? RadialBranch::Exterior : RadialBranch::Interior);
        },
        "idx"_a, "r"_a, "angles"_a, "h"_a = 1e-3, "exterior"_a = false);

  m.def("theta_rule",
        [](int alpha, int n) {
          auto rule = theta_rule(alpha, n);
          return std::make_tuple(rule.nodes, rule.weights);
        },
        "alpha"_a, "n"_a, "Gauss rule (nodes, weights) for the weight sin^alpha(theta) on [0, pi].");
  m.def("sphere_grid",
        [](int d, int lmax) {
          std::vector<Angles> nodes;
          std::vector<double> weights;
          sphere_grid(d, lmax).for_each_node([&](const Angles& a, double w) {
            nodes.push_back(a);
            weights.push_back(w);
          });
          return std::make_tuple(nodes, weights);
        },
        "d"_a, "lmax"_a, "Product quadrature (nodes, weights) on the (d-1)-sphere.");
  m.def("integrate",
        [](int d, int lmax, const AngularFunction& f) {
          return inner_product(f, [](const Angles&) { return std::complex<double>(1.0); }, sphere_grid(d, lmax));
        },
        "d"_a, "lmax"_a, "f"_a, "Integral of f over the sphere with the product rule for level lmax.");

  py::class_<HarmonicExpansion>(m, "HarmonicExpansion")
      .def(py::init<int, int>(), "d"_a, "lmax"_a)
      .def_property_readonly("d", &HarmonicExpansion::dimension)
      .def_property_readonly("lmax", &HarmonicExpansion::lmax)
      .def("set",
           [](HarmonicExpansion& e, const MultiIndex& idx, Complex a, Complex b) { e.set(idx, {a, b}); },
           "idx"_a, "A"_a = Complex{}, "B"_a = Complex{})
      .def("get",
           [](const HarmonicExpansion& e, const MultiIndex& idx) {
             const auto c = e.get(idx);
             return std::make_tuple(c.a, c.b);
           },
           "idx"_a)
      .def("items",
           [](const HarmonicExpansion& e) {
             std::vector<std::tuple<MultiIndex, Complex, Complex>> out;
             for (const auto& [idx, c] : e.coefficients()) out.emplace_back(idx, c.a, c.b);
             return out;
           })
      .def("__call__", [](const HarmonicExpansion& e, double r, const Angles& a) { return eval_expansion(e, r, a); },
           "r"_a, "angles"_a)
      .def("at",
           [](const HarmonicExpansion& e, std::vector<double> x) {
             return eval_expansion(e, CartesianPoint{std::move(x)});
           },
           "x"_a, "Value at a Cartesian point.")
      .def("to_json", &io::write_coefficients)
      .def_static("from_json", &io::read_coefficients, "text"_a);

  m.def("radial_eval", &radial_eval, "A"_a, "B"_a, "l"_a, "d"_a, "r"_a);
  m.def("fit", &fit_callables, "d"_a, "kind"_a, "lmax"_a, "boundaries"_a, "grid_lmax"_a = py::none(),
        "Fit a Dirichlet problem. boundaries is a list of (radius, f) with f(angles) -> complex.");
  m.def("solve_config",
        [](const std::string& text, const std::filesystem::path& base_dir) {
          return fit(io::read_config(text, base_dir));
        },
        "text"_a, "base_dir"_a = std::filesystem::path("."), "Fit the problem described by a JSON config.");

  m.def("green_expansion",
        [](std::vector<double> xa, std::vector<double> xb, int lmax) {
          return green_expansion(CartesianPoint{std::move(xa)}, CartesianPoint{std::move(xb)}, lmax);
        },
        "xa"_a, "xb"_a, "lmax"_a);
  m.def("green_kernel",
        [](std::vector<double> xa, std::vector<double> xb) {
          return green_kernel(CartesianPoint{std::move(xa)}, CartesianPoint{std::move(xb)});
        },
        "xa"_a, "xb"_a);

  py::class_<CheckResult>(m, "CheckResult")
      .def_readonly("name", &CheckResult::name)
      .def_readonly("d", &CheckResult::d)
      .def_readonly("lmax", &CheckResult::lmax)
      .def_readonly("max_residual", &CheckResult::max_residual)
      .def_readonly("tolerance", &CheckResult::tolerance)
      .def_readonly("passed", &CheckResult::pass);
  py::class_<VerifyReport>(m, "VerifyReport")
      .def_readonly("checks", &VerifyReport::checks)
      .def_property_readonly("passed", &VerifyReport::pass)
      .def("to_json", &VerifyReport::to_json)
      .def("to_text", &VerifyReport::to_text);
  m.def("verify",
        [](int d_min, int d_max, int lmax, double tol) { return run_verify({d_min, d_max, lmax, tol}); },
        "d_min"_a, "d_max"_a, "lmax"_a = 4, "tol"_a = 1e-8);
}
