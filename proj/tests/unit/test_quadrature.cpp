#include <doctest.h>

#include <cmath>

#include "tfac/errors.hpp"
#include "tfac/profile.hpp"
#include "tfac/quadrature.hpp"

using namespace tfac;
using namespace tfac::quad;

TEST_SUITE("quadrature") {

TEST_CASE("legendre rule integrates monomials exactly") {
    for (int n : {4, 9, 16}) {
        const Rule01 rule = gauss_legendre_01(n);
        for (int k = 0; k <= 2 * n - 1; ++k) {
            double acc = 0.0;
            for (std::size_t i = 0; i < rule.nodes.size(); ++i)
                acc += rule.weights[i] * std::pow(rule.nodes[i], k);
            CHECK(acc == doctest::Approx(1.0 / (k + 1)).epsilon(1e-13));
        }
    }
}

TEST_CASE("jacobi rule integrates v^k v^{-alpha} exactly") {
    for (double alpha : {0.2, 0.5, 0.85}) {
        for (int n : {6, 12}) {
            const Rule01 rule = gauss_jacobi_01(n, alpha);
            for (int k = 0; k <= 2 * n - 1; ++k) {
                double acc = 0.0;
                for (std::size_t i = 0; i < rule.nodes.size(); ++i)
                    acc += rule.weights[i] * std::pow(rule.nodes[i], k);
                CHECK(acc == doctest::Approx(1.0 / (k + 1.0 - alpha)).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("weakly singular integral: beta-function cases") {
    // int_0^t (t-x)^{-a} dx = t^{1-a}/(1-a)
    auto one = [](double) { return 1.0; };
    CHECK(weakly_singular_integral(one, 0.0, 1.0, 0.3) ==
          doctest::Approx(1.0 / 0.7).epsilon(1e-13));
    // int_0^2 2x (2-x)^{-1/2} dx = 2 B(2, 1/2) 2^{3/2}
    auto lin = [](double x) { return 2.0 * x; };
    CHECK(weakly_singular_integral(lin, 0.0, 2.0, 0.5) ==
          doctest::Approx(7.5424723326565069).epsilon(1e-13));
}

TEST_CASE("weakly singular integral: sharp interior peak with and without hints") {
    // peak of width 1e-3 at x = 0.4, plus the kernel singularity at 1
    const double center = 0.4, width = 1e-3;
    auto peaked = [&](double x) { return gamma_prime((x - center) / width); };
    SingularOptions hinted;
    hinted.tol = 1e-12;
    hinted.split_points = {center - 5 * width, center, center + 5 * width};
    const double with_hint = weakly_singular_integral(peaked, 0.0, 1.0, 0.5, hinted);
    SingularOptions blind;
    blind.tol = 1e-12;
    blind.max_segments = 20000;
    const double no_hint = weakly_singular_integral(peaked, 0.0, 1.0, 0.5, blind);
    CHECK(with_hint == doctest::Approx(no_hint).epsilon(1e-10));
    // mass is roughly width * integral of gamma' against the kernel at 0.4
    CHECK(with_hint > 0.0);
    CHECK(with_hint < 10.0 * width);
}

TEST_CASE("weakly singular integral: budget exhaustion raises NonConvergence") {
    SingularOptions opt;
    opt.tol = 1e-30;   // unreachable
    opt.max_segments = 8;
    auto wiggle = [](double x) { return std::sin(40.0 * x) + x * x; };
    CHECK_THROWS_AS(weakly_singular_integral(wiggle, 0.0, 1.0, 0.5, opt), NonConvergence);
}

TEST_CASE("invalid arguments are rejected") {
    CHECK_THROWS_AS(gauss_jacobi_01(5, 1.5), OutOfRange);
    CHECK_THROWS_AS(gauss_legendre_01(0), OutOfRange);
    auto one = [](double) { return 1.0; };
    CHECK_THROWS_AS(weakly_singular_integral(one, 1.0, 0.5, 0.5), OutOfRange);
}

} // TEST_SUITE
