#pragma once

namespace tfac {

// Structural constants of the layer expansion:
//   c_alpha = int_{-inf}^0 gamma'(sigma) |sigma|^{-alpha} dsigma
//   C_alpha = ((n-1) gamma'(0) / c_alpha)^{1/alpha}
struct StructuralConstants {
    double alpha = 0.0;
    int n = 1;
    double c_alpha = 0.0;
    double C_alpha = 0.0;
    double quadrature_error_estimate = 0.0;
};

// Splits the domain at sigma = -1: a Gauss-Jacobi rule adapted to the
// |sigma|^{-alpha} endpoint weight on (-1,0), panelwise Gauss-Legendre on the
// exponentially decaying tail truncated at -tail_cutoff (gamma'(-40) ~ 4e-25).
// Results are cached per (alpha, tol, cutoff) across the process.
// Throws NonConvergence if refinement cannot reach tol.
double compute_c_alpha(double alpha, double tol = 1e-10,
                       double* error_estimate = nullptr, double tail_cutoff = 40.0);

// Exact formula evaluation; zero iff n == 1.
double compute_C_alpha(double alpha, int n, double c_alpha);

StructuralConstants structural_constants(double alpha, int n, double tol = 1e-10);

} // namespace tfac
