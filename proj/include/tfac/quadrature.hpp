#pragma once

#include <functional>
#include <span>
#include <vector>

namespace tfac::quad {

// Quadrature rule on (0,1). For a Legendre rule the weights integrate
// int_0^1 g(v) dv; for a Jacobi rule they absorb the weight v^{-alpha}, so
// sum_i w_i g(v_i) ~ int_0^1 g(v) v^{-alpha} dv.
struct Rule01 {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Both built by Golub-Welsch from the monic Jacobi recurrence; rules are
// cached per (n, alpha) and safe to request concurrently.
Rule01 gauss_legendre_01(int n);
Rule01 gauss_jacobi_01(int n, double alpha);

// int_a^b f(x) dx with a Legendre rule mapped onto [a,b].
double apply_legendre(const Rule01& rule, const std::function<double(double)>& f,
                      double a, double b);

struct SingularOptions {
    double tol = 1e-12;                 // absolute error target
    int max_segments = 4000;            // refinement budget
    std::vector<double> split_points;   // known interior hotspots
};

// int_a^b f(x) (b-x)^{-alpha} dx with the weak singularity at x=b.
// Adaptive bisection; segments touching b use the Jacobi rule, interior
// segments plain Gauss-Legendre with the kernel folded into the integrand.
// Throws NonConvergence when the budget is exhausted above tol.
double weakly_singular_integral(const std::function<double(double)>& f,
                                double a, double b, double alpha,
                                const SingularOptions& opt = {});

} // namespace tfac::quad
