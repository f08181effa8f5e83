#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "tfac/constants.hpp"
#include "tfac/errors.hpp"
#include "tfac/sphere_flow.hpp"

using namespace tfac;

TEST_SUITE("sphere_flow") {

TEST_CASE("closed form: initial condition and static case") {
    CHECK(phi0_closed_form(0.0, 0.5, 0.2) == 1.0);
    for (double t : {0.0, 0.5, 3.0, 100.0})
        CHECK(phi0_closed_form(t, 0.5, 0.0) == 1.0);
}

TEST_CASE("extinction time") {
    CHECK(extinction_time(0.5, 0.0) == std::numeric_limits<double>::infinity());
    CHECK(extinction_time(0.5, 1.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    // radius positive arbitrarily close to T*, tending to 0
    const double ts = extinction_time(0.5, 1.0);
    const double near = phi0_closed_form(ts - 1e-9, 0.5, 1.0);
    CHECK(near > 0.0);
    CHECK(near < 1e-2);
    CHECK_THROWS_AS(phi0_closed_form(ts, 0.5, 1.0), PastExtinction);
}

TEST_CASE("closed form against RK4 (alpha = 0.5, n = 2)") {
    const StructuralConstants sc = structural_constants(0.5, 2);
    const double ts = extinction_time(0.5, sc.C_alpha);
    const double t_half = 0.5 * ts;
    const FlowTrajectory traj = phi0_rk4(t_half, t_half / 4096, 0.5, sc.C_alpha);
    const double closed = phi0_closed_form(traj.times.back(), 0.5, sc.C_alpha);
    CHECK(std::abs(closed - traj.radii.back()) < 1e-8);
}

TEST_CASE("rk4: slope at t = 0 equals -C_alpha") {
    const double C = 0.37;
    const double dt = 1e-6;
    const FlowTrajectory traj = phi0_rk4(5 * dt, dt, 0.5, C);
    const double slope = (traj.radii[1] - traj.radii[0]) / dt;
    CHECK(slope == doctest::Approx(-C).epsilon(1e-5));
}

TEST_CASE("rk4 is fourth order: halving dt shrinks the error ~16x") {
    const StructuralConstants sc = structural_constants(0.5, 2);
    const double t_end = 0.5 * extinction_time(0.5, sc.C_alpha);
    auto global_err = [&](double dt) {
        const FlowTrajectory traj = phi0_rk4(t_end, dt, 0.5, sc.C_alpha);
        return std::abs(traj.radii.back() -
                        phi0_closed_form(traj.times.back(), 0.5, sc.C_alpha));
    };
    const double e1 = global_err(t_end / 64);
    const double e2 = global_err(t_end / 128);
    const double order = std::log2(e1 / e2);
    CHECK(order == doctest::Approx(4.0).epsilon(0.15));
}

TEST_CASE("rk4: static flow stays constant") {
    const FlowTrajectory traj = phi0_rk4(1.0, 0.01, 0.4, 0.0);
    for (double r : traj.radii) CHECK(r == 1.0);
}

TEST_CASE("monotonicity chain on stored trajectories") {
    for (const auto& [alpha, n] : {std::pair{0.3, 3}, {0.5, 2}, {0.85, 2}}) {
        const StructuralConstants sc = structural_constants(alpha, n);
        const double t_end = 0.8 * extinction_time(alpha, sc.C_alpha);
        const FlowTrajectory traj = phi0_rk4(t_end, t_end / 200, alpha, sc.C_alpha);
        CHECK(traj.radii.front() == 1.0);
        for (std::size_t i = 1; i < traj.radii.size(); ++i) {
            CHECK(traj.radii[i] < traj.radii[i - 1]);
            CHECK(traj.times[i] < traj.extinction_time);
        }
    }
}

TEST_CASE("ODE residual and separable conservation of the closed form") {
    for (double alpha : {0.3, 0.5, 0.7}) {
        for (int n : {2, 3}) {
            const StructuralConstants sc = structural_constants(alpha, n);
            const double ts = extinction_time(alpha, sc.C_alpha);
            for (int i = 0; i <= 30; ++i) {
                const double t = 0.9 * ts * i / 30.0;
                const double phi = phi0_closed_form(t, alpha, sc.C_alpha);
                const double dphi = phi0_derivative(t, alpha, sc.C_alpha);
                CHECK(std::abs(dphi + sc.C_alpha / std::pow(phi, 1.0 / alpha)) < 1e-10);
                const double invariant =
                    std::pow(phi, (alpha + 1.0) / alpha) +
                    (alpha + 1.0) / alpha * sc.C_alpha * t;
                CHECK(std::abs(invariant - 1.0) < 1e-10);
            }
        }
    }
}

TEST_CASE("psi0: inverse roundtrip and derivative identity") {
    const StructuralConstants sc = structural_constants(0.5, 2);
    const double C = sc.C_alpha;
    CHECK(psi0(1.0, 0.5, C) == 0.0);

    const double ts = extinction_time(0.5, C);
    const double t = 0.1 * ts;
    CHECK(std::abs(psi0(phi0_closed_form(t, 0.5, C), 0.5, C) - t) < 1e-12);

    // d psi0 / dr at r = phi0(t) equals 1 / phi0'(t)
    const double r = phi0_closed_form(t, 0.5, C);
    const double fd = oracles::central_difference(
        [&](double x) { return psi0(x, 0.5, C); }, r, 1e-6);
    CHECK(std::abs(fd - 1.0 / phi0_derivative(t, 0.5, C)) < 1e-6);
}

TEST_CASE("preconditions") {
    CHECK_THROWS_AS(psi0(1.5, 0.5, 0.2), OutOfRange);
    CHECK_THROWS_AS(psi0(0.5, 0.5, 0.0), OutOfRange);
    CHECK_THROWS_AS(phi0_rk4(1.0, 0.01, 0.5, 1.0), PastExtinction);   // t_max > T* - 10 dt
    CHECK_THROWS_AS(phi0_closed_form(-1.0, 0.5, 0.2), OutOfRange);
}

} // TEST_SUITE
