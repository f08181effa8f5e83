#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "tfac/caputo.hpp"
#include "tfac/errors.hpp"
#include "tfac/residual.hpp"

using namespace tfac;

TEST_SUITE("caputo") {

TEST_CASE("l1 weights: single interval, telescoping, monotone decay") {
    const L1Weights single = l1_weights(1, 0.25, 0.5);
    CHECK(single.w.size() == 1);
    CHECK(single.w[0] == doctest::Approx(std::pow(0.25, 0.5) / 0.5).epsilon(1e-15));

    const L1Weights lw = l1_weights(17, 0.01, 0.4);
    double sum = 0.0;
    for (double w : lw.w) sum += w;
    const double telescoped = std::pow(17 * 0.01, 0.6) / 0.6;
    CHECK(std::abs(sum - telescoped) < 1e-14);

    const L1Weights many = l1_weights(100, 0.05, 0.7);
    for (std::size_t j = 1; j < many.w.size(); ++j) {
        CHECK(many.w[j] > 0.0);
        CHECK(many.w[j] < many.w[j - 1]);
    }
}

TEST_CASE("l1 on a constant history is zero") {
    std::vector<double> flat(24, 0.37);
    CHECK(l1_apply(flat, 0.05, 0.6) == 0.0);
}

TEST_CASE("l1 is exact on linear histories") {
    for (double alpha : {0.3, 0.5, 0.7}) {
        for (int m : {1, 7, 40}) {
            const double dt = 0.7 / m;
            std::vector<double> values(m + 1);
            for (int k = 0; k <= m; ++k) values[k] = k * dt;
            const double expected = std::pow(0.7, 1.0 - alpha) / (1.0 - alpha);
            CHECK(std::abs(l1_apply(values, dt, alpha) - expected) < 1e-13);
        }
    }
}

TEST_CASE("l1 on t^2 converges at order 2 - alpha") {
    const double alpha = 0.5, t = 1.0;
    const double oracle = caputo_of_monomial(2.0, t, alpha);
    std::vector<std::pair<double, double>> errs;
    for (int denom : {40, 80, 160, 320, 640}) {
        const double dt = 1.0 / denom;
        const int m = denom;
        std::vector<double> values(m + 1);
        for (int k = 0; k <= m; ++k) values[k] = (k * dt) * (k * dt);
        errs.emplace_back(dt, std::abs(l1_apply(values, dt, alpha) - oracle));
    }
    const double slope = fit_scaling_exponent(errs).exponent;
    CHECK(std::abs(slope - 1.5) < 0.1);
}

TEST_CASE("monomial oracle: special cases") {
    for (double alpha : {0.25, 0.5, 0.75})
        for (double t : {0.3, 1.0, 2.5})
            CHECK(caputo_of_monomial(1.0, t, alpha) ==
                  doctest::Approx(std::pow(t, 1.0 - alpha) / (1.0 - alpha)).epsilon(1e-14));
    // alpha -> 0 limit of the kernel: int_0^t u'(tau) dtau = u(t) - u(0)
    const double t = 0.8;
    CHECK(caputo_of_monomial(2.0, t, 1e-6) == doctest::Approx(t * t).epsilon(1e-4));
}

TEST_CASE("caputo_direct: constant, linear, quadratic") {
    auto zero = [](double) { return 0.0; };
    CHECK(caputo_direct(zero, 1.3, 0.4) == doctest::Approx(0.0));

    auto one = [](double) { return 1.0; };
    CHECK(caputo_direct(one, 1.0, 0.3) == doctest::Approx(10.0 / 7.0).epsilon(1e-13));

    auto lin = [](double tau) { return 2.0 * tau; };
    CHECK(caputo_direct(lin, 2.0, 0.5) ==
          doctest::Approx(7.5424723326565069).epsilon(1e-13));
}

TEST_CASE("caputo_direct cross-checks the monomial oracle") {
    // p = 1.5, t = 0.7, alpha = 0.6; du/dt = 1.5 tau^{0.5} (mildly singular at 0)
    auto du = [](double tau) { return 1.5 * std::sqrt(tau); };
    const double direct = caputo_direct(du, 0.7, 0.6, 1e-11);
    const double oracle = caputo_of_monomial(1.5, 0.7, 0.6);
    CHECK(oracle == doctest::Approx(2.2240670282881005).epsilon(1e-13));
    CHECK(std::abs(direct - oracle) < 1e-8);
}

TEST_CASE("linearity of l1_apply (random histories)") {
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    for (int trial = 0; trial < 20; ++trial) {
        const int m = 3 + static_cast<int>(rng() % 30);
        const double dt = 0.02;
        const double alpha = 0.55;
        std::vector<double> u(m + 1), v(m + 1), mix(m + 1);
        const double a = dist(rng), b = dist(rng);
        for (int k = 0; k <= m; ++k) {
            u[k] = dist(rng);
            v[k] = dist(rng);
            mix[k] = a * u[k] + b * v[k];
        }
        const double lhs = l1_apply(mix, dt, alpha);
        const double rhs = a * l1_apply(u, dt, alpha) + b * l1_apply(v, dt, alpha);
        CHECK(std::abs(lhs - rhs) < 1e-13 * (1.0 + std::abs(lhs)));
    }
}

TEST_CASE("kernel positivity: monotone histories give nonnegative values") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> inc(0.0, 0.5);
    for (int trial = 0; trial < 20; ++trial) {
        const int m = 2 + static_cast<int>(rng() % 40);
        std::vector<double> u(m + 1);
        u[0] = -1.0;
        for (int k = 1; k <= m; ++k) u[k] = u[k - 1] + inc(rng);
        CHECK(l1_apply(u, 0.01, 0.35) >= 0.0);
    }
}

TEST_CASE("unnormalized convention: dividing by Gamma(1-alpha) gives textbook values") {
    const double alpha = 0.4, t = 1.3, p = 2.0;
    const double ours = caputo_of_monomial(p, t, alpha);
    const double textbook = std::tgamma(p + 1.0) / std::tgamma(p + 1.0 - alpha) *
                            std::pow(t, p - alpha);
    CHECK(ours / std::tgamma(1.0 - alpha) == doctest::Approx(textbook).epsilon(1e-14));
}

TEST_CASE("preconditions") {
    CHECK_THROWS_AS(l1_weights(0, 0.1, 0.5), OutOfRange);
    std::vector<double> one_level{1.0};
    CHECK_THROWS_AS(l1_apply(one_level, 0.1, 0.5), OutOfRange);
    CHECK_THROWS_AS(caputo_of_monomial(-1.0, 1.0, 0.5), OutOfRange);
}

} // TEST_SUITE
