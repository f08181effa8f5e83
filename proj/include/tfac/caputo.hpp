#pragma once

#include <functional>
#include <span>
#include <vector>

namespace tfac {

// Unnormalized Caputo derivative (no 1/Gamma(1-alpha) factor):
//   d_t^alpha u(t) = int_0^t u'(tau) (t-tau)^{-alpha} dtau.
// This convention is used everywhere in the repo; multiply by
// 1/Gamma(1-alpha) to recover the textbook operator.

// Uniform-step sample history u^0..u^m at t_k = k dt.
struct TimeHistory {
    double dt = 0.0;
    double alpha = 0.0;
    std::vector<double> values;
};

// L1 weights w_j = (j^{1-alpha} - (j-1)^{1-alpha}) dt^{1-alpha} / (1-alpha),
// j = 1..m; positive, strictly decreasing, telescoping to (m dt)^{1-alpha}/(1-alpha).
struct L1Weights {
    double alpha = 0.0;
    double dt = 0.0;
    std::vector<double> w;   // w[j-1] holds w_j
};

L1Weights l1_weights(int m, double dt, double alpha);

// L1 value at t_m: sum_{k=0}^{m-1} w_{m-k} (u^{k+1} - u^k) / dt.
// Exact on histories sampled from linear u. Requires at least two levels.
double l1_apply(std::span<const double> values, double dt, double alpha);
double l1_apply(const TimeHistory& history);

// Monomial oracle: d_t^alpha t^p = Gamma(p+1) Gamma(1-alpha) / Gamma(p+1-alpha) t^{p-alpha}.
double caputo_of_monomial(double p, double t, double alpha);

// Quadrature route for analytically known du/dt; hotspots flag interior
// features (sharp peaks) for the adaptive engine.
double caputo_direct(const std::function<double(double)>& du_dt, double t, double alpha,
                     double tol = 1e-12, std::span<const double> hotspots = {});

} // namespace tfac
