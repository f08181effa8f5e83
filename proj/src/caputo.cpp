#include "tfac/caputo.hpp"

#include <cmath>

#include "tfac/errors.hpp"
#include "tfac/quadrature.hpp"

namespace tfac {

L1Weights l1_weights(int m, double dt, double alpha) {
    if (m < 1) throw OutOfRange("l1_weights requires m >= 1");
    if (!(dt > 0.0)) throw OutOfRange("dt must be positive");
    if (!(alpha > 0.0 && alpha < 1.0)) throw OutOfRange("alpha must lie in (0,1)");
    L1Weights lw;
    lw.alpha = alpha;
    lw.dt = dt;
    lw.w.resize(m);
    const double scale = std::pow(dt, 1.0 - alpha) / (1.0 - alpha);
    for (int j = 1; j <= m; ++j)
        lw.w[j - 1] = (std::pow(j, 1.0 - alpha) - std::pow(j - 1.0, 1.0 - alpha)) * scale;
    return lw;
}

double l1_apply(std::span<const double> values, double dt, double alpha) {
    if (values.size() < 2) throw OutOfRange("l1_apply requires at least two history levels");
    const int m = static_cast<int>(values.size()) - 1;
    const L1Weights lw = l1_weights(m, dt, alpha);
    double acc = 0.0;
    for (int k = 0; k < m; ++k)
        acc += lw.w[m - k - 1] * (values[k + 1] - values[k]);
    return acc / dt;
}

double l1_apply(const TimeHistory& history) {
    return l1_apply(std::span<const double>(history.values), history.dt, history.alpha);
}

double caputo_of_monomial(double p, double t, double alpha) {
    if (!(p > 0.0)) throw OutOfRange("monomial exponent must be positive");
    if (!(t > 0.0)) throw OutOfRange("t must be positive");
    if (!(alpha > 0.0 && alpha < 1.0)) throw OutOfRange("alpha must lie in (0,1)");
    return std::tgamma(p + 1.0) * std::tgamma(1.0 - alpha) / std::tgamma(p + 1.0 - alpha) *
           std::pow(t, p - alpha);
}

double caputo_direct(const std::function<double(double)>& du_dt, double t, double alpha,
                     double tol, std::span<const double> hotspots) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw OutOfRange("alpha must lie in (0,1)");
    if (!(t >= 0.0)) throw OutOfRange("t must be nonnegative");
    if (t == 0.0) return 0.0;   // empty history
    quad::SingularOptions opt;
    opt.tol = tol;
    opt.split_points.assign(hotspots.begin(), hotspots.end());
    return quad::weakly_singular_integral(du_dt, 0.0, t, alpha, opt);
}

} // namespace tfac
