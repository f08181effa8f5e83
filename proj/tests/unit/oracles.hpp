#pragma once

// Independent oracles used across the test suites. Everything here avoids the
// library's production quadrature paths on purpose.

#include <cmath>
#include <functional>

#include "tfac/profile.hpp"

namespace oracles {

// Brute-force c_alpha: substitution sigma = -s^{1/(1-alpha)} removes the
// |sigma|^{-alpha} singularity exactly (for alpha = 1/2 it is sigma = -s^2),
// leaving c_alpha = p * int_0^{40^{1-alpha}} gamma'(s^p) ds with p = 1/(1-alpha).
// Composite midpoint over num_nodes cells.
inline double c_alpha_bruteforce(double alpha, long num_nodes = 10'000'000) {
    const double p = 1.0 / (1.0 - alpha);
    const double s_max = std::pow(40.0, 1.0 - alpha);
    const double h = s_max / static_cast<double>(num_nodes);
    double acc = 0.0;
    for (long i = 0; i < num_nodes; ++i) {
        const double s = (static_cast<double>(i) + 0.5) * h;
        acc += tfac::gamma_prime(std::pow(s, p));
    }
    return p * acc * h;
}

// Second singularity treatment: the same power substitution but integrated
// with composite Simpson on a fixed fine grid (distinct rule family from both
// the production Gauss-Jacobi path and the midpoint oracle above).
inline double c_alpha_power_substitution(double alpha, long cells = 200'000) {
    const double p = 1.0 / (1.0 - alpha);
    const double s_max = std::pow(40.0, 1.0 - alpha);
    const double h = s_max / static_cast<double>(cells);
    auto g = [p](double s) { return tfac::gamma_prime(std::pow(s, p)); };
    double acc = g(0.0) + g(s_max);
    for (long i = 1; i < cells; ++i) acc += 2.0 * (1.0 + (i & 1)) * g(i * h);
    return p * acc * h / 3.0;
}

inline double central_difference(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

// 5-point second-difference stencil for f'' with O(h^4) accuracy.
inline double second_difference_5pt(const std::function<double(double)>& f, double x, double h) {
    return (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) - f(x - 2 * h)) /
           (12.0 * h * h);
}

} // namespace oracles
