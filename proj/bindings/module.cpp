#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tfac/caputo.hpp"
#include "tfac/constants.hpp"
#include "tfac/profile.hpp"
#include "tfac/residual.hpp"
#include "tfac/solver.hpp"
#include "tfac/sphere_flow.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

PYBIND11_MODULE(_core, m) {
    m.doc() = "time-fractional Allen-Cahn / power-of-mean-curvature toolkit";

    // profile
    m.def("gamma", &tfac::gamma_profile, "x"_a, "layer profile tanh(x/sqrt(2))");
    m.def("gamma_prime", &tfac::gamma_prime, "x"_a);
    m.def("gamma_second", &tfac::gamma_second, "x"_a);
    m.def("f", &tfac::bistable_f, "u"_a, "bistable nonlinearity u - u^3");

    // constants
    py::class_<tfac::StructuralConstants>(m, "StructuralConstants")
        .def_readonly("alpha", &tfac::StructuralConstants::alpha)
        .def_readonly("n", &tfac::StructuralConstants::n)
        .def_readonly("c_alpha", &tfac::StructuralConstants::c_alpha)
        .def_readonly("C_alpha", &tfac::StructuralConstants::C_alpha)
        .def_readonly("quadrature_error_estimate",
                      &tfac::StructuralConstants::quadrature_error_estimate);
    m.def("compute_c_alpha",
          [](double alpha, double tol) { return tfac::compute_c_alpha(alpha, tol); },
          "alpha"_a, "tol"_a = 1e-10);
    m.def("compute_C_alpha", &tfac::compute_C_alpha, "alpha"_a, "n"_a, "c_alpha"_a);
    m.def("structural_constants", &tfac::structural_constants,
          "alpha"_a, "n"_a, "tol"_a = 1e-10);

    // sphere flow
    m.def("extinction_time", &tfac::extinction_time, "alpha"_a, "C_alpha"_a);
    m.def("phi0", &tfac::phi0_closed_form, "t"_a, "alpha"_a, "C_alpha"_a);
    m.def("phi0_derivative", &tfac::phi0_derivative, "t"_a, "alpha"_a, "C_alpha"_a);
    m.def("psi0", &tfac::psi0, "r"_a, "alpha"_a, "C_alpha"_a);
    py::class_<tfac::FlowTrajectory>(m, "FlowTrajectory")
        .def_readonly("alpha", &tfac::FlowTrajectory::alpha)
        .def_readonly("C_alpha", &tfac::FlowTrajectory::C_alpha)
        .def_readonly("times", &tfac::FlowTrajectory::times)
        .def_readonly("radii", &tfac::FlowTrajectory::radii)
        .def_readonly("extinction_time", &tfac::FlowTrajectory::extinction_time);
    m.def("phi0_rk4", &tfac::phi0_rk4, "t_max"_a, "dt"_a, "alpha"_a, "C_alpha"_a);

    // caputo
    py::class_<tfac::L1Weights>(m, "L1Weights")
        .def_readonly("alpha", &tfac::L1Weights::alpha)
        .def_readonly("dt", &tfac::L1Weights::dt)
        .def_readonly("w", &tfac::L1Weights::w);
    m.def("l1_weights", &tfac::l1_weights, "m"_a, "dt"_a, "alpha"_a);
    m.def("l1_apply",
          [](const std::vector<double>& values, double dt, double alpha) {
              return tfac::l1_apply(values, dt, alpha);
          },
          "values"_a, "dt"_a, "alpha"_a);
    m.def("caputo_of_monomial", &tfac::caputo_of_monomial, "p"_a, "t"_a, "alpha"_a);
    m.def("caputo_direct",
          [](const std::function<double(double)>& du_dt, double t, double alpha, double tol) {
              return tfac::caputo_direct(du_dt, t, alpha, tol);
          },
          "du_dt"_a, "t"_a, "alpha"_a, "tol"_a = 1e-12);

    // residual
    py::class_<tfac::ModelParams>(m, "ModelParams")
        .def(py::init([](double alpha, int n, double eps) {
                 return tfac::ModelParams{alpha, n, eps};
             }),
             "alpha"_a, "n"_a, "eps"_a)
        .def_readonly("alpha", &tfac::ModelParams::alpha)
        .def_readonly("n", &tfac::ModelParams::n)
        .def_readonly("eps", &tfac::ModelParams::eps);
    py::class_<tfac::Ansatz>(m, "Ansatz")
        .def_readonly("params", &tfac::Ansatz::params)
        .def_readonly("constants", &tfac::Ansatz::constants)
        .def("phi0", &tfac::Ansatz::phi0, "t"_a)
        .def("extinction_time", &tfac::Ansatz::extinction_time);
    m.def("make_ansatz", &tfac::make_ansatz, "alpha"_a, "n"_a, "eps"_a,
          "constants_tol"_a = 1e-10);
    m.def("ansatz_value", &tfac::ansatz_value, "r"_a, "t"_a, "ansatz"_a);
    m.def("ansatz_time_derivative", &tfac::ansatz_time_derivative, "r"_a, "t"_a, "ansatz"_a);
    m.def("radial_laplacian_of_ansatz", &tfac::radial_laplacian_of_ansatz,
          "r"_a, "t"_a, "ansatz"_a);
    m.def("flow_kernel_integral", &tfac::flow_kernel_integral,
          "r"_a, "t"_a, "ansatz"_a, "tol"_a = 1e-12);
    m.def("caputo_of_ansatz", &tfac::caputo_of_ansatz, "r"_a, "t"_a, "ansatz"_a,
          "tol"_a = 1e-12);
    m.def("residual_E", &tfac::residual_E, "r"_a, "t"_a, "ansatz"_a, "tol"_a = 1e-12);
    m.def("fit_scaling_exponent",
          [](const std::vector<std::pair<double, double>>& samples) {
              const auto fit = tfac::fit_scaling_exponent(samples);
              return std::make_pair(fit.exponent, fit.fit_residual);
          },
          "samples"_a, "least-squares slope of log|E| vs log eps -> (exponent, rms)");

    // solver
    py::class_<tfac::RadialGrid>(m, "RadialGrid")
        .def(py::init([](double r_max, int nr) {
                 return tfac::RadialGrid{r_max, nr};
             }),
             "r_max"_a, "nr"_a)
        .def_readonly("r_max", &tfac::RadialGrid::r_max)
        .def_readonly("nr", &tfac::RadialGrid::nr)
        .def("dr", &tfac::RadialGrid::dr);
    py::class_<tfac::TrackingReport>(m, "TrackingReport")
        .def_readonly("times", &tfac::TrackingReport::times)
        .def_readonly("r_star", &tfac::TrackingReport::r_star)
        .def_readonly("phi0_values", &tfac::TrackingReport::phi0_values)
        .def_readonly("sup_error", &tfac::TrackingReport::sup_error);
    m.def("extract_zero_level",
          [](const std::vector<double>& values, const tfac::RadialGrid& grid)
              -> std::optional<double> {
              return tfac::extract_zero_level(values, grid);
          },
          "values"_a, "grid"_a);
    m.def("solve",
          [](double alpha, int n, double eps, double dr, double dt, double t_end) {
              const double r_max = 2.0;
              const int nr = static_cast<int>(std::llround(r_max / dr));
              const tfac::ModelParams params{alpha, n, eps};
              const auto sc = tfac::structural_constants(alpha, n, 1e-10);
              return tfac::solve(params, sc, tfac::RadialGrid{r_max, nr}, dt, t_end).report;
          },
          "alpha"_a, "n"_a, "eps"_a, "dr"_a, "dt"_a, "t_end"_a,
          "radial solve on [0,2]; returns the level-set tracking report");
}
