#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tfac/constants.hpp"

namespace tfac {

struct ModelParams {
    double alpha = 0.0;
    int n = 1;
    double eps = 0.0;
};

// Radial layer ansatz v_eps(r,t) = gamma((r - phi0(t)) / eps).
struct Ansatz {
    ModelParams params;
    StructuralConstants constants;

    double phi0(double t) const;
    double phi0_derivative(double t) const;
    double extinction_time() const;
    // safe evaluation window: t in [0, 0.9 T*]
    double t_max() const;
};

Ansatz make_ansatz(double alpha, int n, double eps, double constants_tol = 1e-10);

double ansatz_value(double r, double t, const Ansatz& a);

// dv/dt = -(phi0'(t)/eps) gamma'((r - phi0(t))/eps); positive for a shrinking sphere.
double ansatz_time_derivative(double r, double t, const Ansatz& a);

// (1/eps^2) gamma'' + ((n-1)/(eps r)) gamma'; singular formula, requires r > 0.
double radial_laplacian_of_ansatz(double r, double t, const Ansatz& a);

// J(r,t) = int_0^t phi0'(tau) (t-tau)^{-alpha} gamma'((r - phi0(tau))/eps) dtau,
// the kernel integral of the expansion. Nonpositive (phi0' <= 0, gamma' > 0).
double flow_kernel_integral(double r, double t, const Ansatz& a, double tol = 1e-12);

// Unnormalized Caputo derivative of the ansatz in time: -J/eps.
double caputo_of_ansatz(double r, double t, const Ansatz& a, double tol = 1e-12);

// E = eps^alpha d_t^alpha v - eps Lap v - f(v)/eps. The reduced form (after
// the profile equation cancels gamma'' against f) is
//   -eps^{alpha-1} J - ((n-1)/r) gamma'((r-phi0(t))/eps);
// both forms are assembled and must agree to tol/eps.
struct ResidualParts {
    double caputo_term = 0.0;     // -eps^{alpha-1} J
    double curvature_term = 0.0;  // -((n-1)/r) gamma'
    double reduced = 0.0;
    double unreduced = 0.0;
};

ResidualParts residual_parts(double r, double t, const Ansatz& a, double tol = 1e-12);
double residual_E(double r, double t, const Ansatz& a, double tol = 1e-12);

struct ScalingFit {
    double exponent = 0.0;
    double fit_residual = 0.0;   // rms of log-log fit residuals
};

// Least-squares slope of log|E| against log eps.
// Throws DegenerateFit on nonpositive/non-finite |E| or fewer than 2 samples.
ScalingFit fit_scaling_exponent(std::span<const std::pair<double, double>> samples);

enum class Regime { Interface, Outside, Inside };

struct ResidualSample {
    double eps = 0.0;
    double r = 0.0;
    double t = 0.0;
    double E = 0.0;
};

struct ResidualReport {
    Regime regime = Regime::Interface;
    std::vector<ResidualSample> samples;   // sorted by (eps, t, r)
    double mu = 0.0;                       // default (2-alpha)/2, in (1-alpha,1)
    double fitted_exponent = 0.0;
    double fit_residual = 0.0;
};

// Residual sweep over eps at fixed t. Interface samples compute r from t via
// the closed form (never by search); Outside/Inside default to phi0(t) +- 0.2
// unless r_override is given. Samples evaluate concurrently; output order is
// deterministic.
ResidualReport scan_residual(Regime regime, double alpha, int n, double t,
                             std::span<const double> eps_list,
                             std::optional<double> r_override = std::nullopt,
                             double tol = 1e-12);

} // namespace tfac
