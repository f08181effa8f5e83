#include "tfac/sphere_flow.hpp"

#include <cmath>

#include "tfac/errors.hpp"

namespace tfac {
namespace {

void check_params(double alpha, double C_alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw OutOfRange("alpha must lie in (0,1)");
    if (!(C_alpha >= 0.0)) throw OutOfRange("C_alpha must be nonnegative");
}

} // namespace

double extinction_time(double alpha, double C_alpha) {
    check_params(alpha, C_alpha);
    if (C_alpha == 0.0) return std::numeric_limits<double>::infinity();
    return alpha / ((alpha + 1.0) * C_alpha);
}

double phi0_closed_form(double t, double alpha, double C_alpha) {
    check_params(alpha, C_alpha);
    if (!(t >= 0.0)) throw OutOfRange("t must be nonnegative");
    if (C_alpha == 0.0) return 1.0;
    const double x = 1.0 - (alpha + 1.0) / alpha * C_alpha * t;
    if (x <= 0.0) throw PastExtinction("t is at or beyond the extinction time");
    return std::pow(x, alpha / (alpha + 1.0));
}

double phi0_derivative(double t, double alpha, double C_alpha) {
    if (C_alpha == 0.0) {
        check_params(alpha, C_alpha);
        return 0.0;
    }
    const double phi = phi0_closed_form(t, alpha, C_alpha);
    return -C_alpha / std::pow(phi, 1.0 / alpha);
}

double psi0(double r, double alpha, double C_alpha) {
    check_params(alpha, C_alpha);
    if (!(r > 0.0 && r <= 1.0)) throw OutOfRange("psi0 requires r in (0,1]");
    if (C_alpha == 0.0) throw OutOfRange("psi0 undefined for a static flow (C_alpha = 0)");
    return (1.0 - std::pow(r, (alpha + 1.0) / alpha)) * alpha / ((alpha + 1.0) * C_alpha);
}

FlowTrajectory phi0_rk4(double t_max, double dt, double alpha, double C_alpha) {
    check_params(alpha, C_alpha);
    if (!(dt > 0.0)) throw OutOfRange("dt must be positive");
    if (!(t_max >= 0.0)) throw OutOfRange("t_max must be nonnegative");
    const double t_star = extinction_time(alpha, C_alpha);
    if (!(t_max < t_star - 10.0 * dt))
        throw PastExtinction("t_max too close to the extinction time for RK4");

    FlowTrajectory traj;
    traj.alpha = alpha;
    traj.C_alpha = C_alpha;
    traj.extinction_time = t_star;

    auto rhs = [alpha, C_alpha](double phi) { return -C_alpha / std::pow(phi, 1.0 / alpha); };

    const auto steps = static_cast<long>(std::floor(t_max / dt + 1e-9));
    double phi = 1.0;
    traj.times.push_back(0.0);
    traj.radii.push_back(phi);
    for (long m = 1; m <= steps; ++m) {
        const double k1 = rhs(phi);
        const double k2 = rhs(phi + 0.5 * dt * k1);
        const double k3 = rhs(phi + 0.5 * dt * k2);
        const double k4 = rhs(phi + dt * k3);
        phi += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (!(phi > 0.0)) throw StepSizeTooLarge("RK4 radius became nonpositive");
        traj.times.push_back(static_cast<double>(m) * dt);
        traj.radii.push_back(phi);
    }
    return traj;
}

} // namespace tfac
