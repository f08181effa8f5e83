#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "tfac/constants.hpp"
#include "tfac/errors.hpp"
#include "tfac/profile.hpp"

using namespace tfac;

TEST_SUITE("constants") {

TEST_CASE("c_alpha against the brute-force substitution oracle") {
    // high-precision references, independently cross-checked to < 1e-12
    struct Ref { double alpha, value; };
    const Ref refs[] = {
        {0.1, 1.0556885446613431},
        {0.3, 1.2376047586279686},
        {0.5, 1.6023810463134875},
        {0.7, 2.5080642713498994},
        {0.9, 7.1860208767995463},
    };
    for (const auto& ref : refs) {
        const double c = compute_c_alpha(ref.alpha, 1e-10);
        CHECK(c == doctest::Approx(ref.value).epsilon(1e-10));
        const double oracle = oracles::c_alpha_bruteforce(ref.alpha, 2'000'000);
        CHECK(std::abs(c - oracle) < 1e-8);
    }
}

TEST_CASE("alpha -> 0 limit: c_alpha tends to the total gamma' mass") {
    const double c = compute_c_alpha(0.01, 1e-8);
    CHECK(c > 0.9);
    CHECK(c < 1.2);
}

TEST_CASE("two singularity treatments agree at alpha = 0.3") {
    const double weighted = compute_c_alpha(0.3, 1e-10);
    const double substituted = oracles::c_alpha_power_substitution(0.3);
    CHECK(std::abs(weighted - substituted) < 1e-8);
}

TEST_CASE("error estimate contract: halving tol moves the result less than the estimate") {
    for (double alpha : {0.25, 0.6, 0.85}) {
        double err = 0.0;
        const double coarse = compute_c_alpha(alpha, 1e-8, &err);
        const double fine = compute_c_alpha(alpha, 5e-9);
        CHECK(std::abs(coarse - fine) <= err);
        CHECK(err > 0.0);
    }
}

TEST_CASE("tail cutoff is immaterial: -40 vs -60 below 1e-12") {
    const double c40 = compute_c_alpha(0.4, 1e-12, nullptr, 40.0);
    const double c60 = compute_c_alpha(0.4, 1e-12, nullptr, 60.0);
    CHECK(std::abs(c40 - c60) < 1e-12);
}

TEST_CASE("C_alpha: formula, n = 1 degeneracy, monotonicity in n") {
    CHECK(compute_C_alpha(0.5, 1, 1.7) == 0.0);

    const double c = compute_c_alpha(0.5, 1e-10);
    const double expected = std::pow(2.0 * gamma_prime(0.0) / c, 2.0);
    CHECK(compute_C_alpha(0.5, 3, c) == doctest::Approx(expected).epsilon(1e-14));

    double prev = 0.0;
    for (int n = 1; n <= 6; ++n) {
        const double C = compute_C_alpha(0.35, n, c);
        CHECK(C >= prev);
        if (n > 1) CHECK(C > prev);
        prev = C;
    }
}

TEST_CASE("C_alpha is continuous in alpha on (0.05, 0.95)") {
    // no ground-truth number; adjacent samples must move by little
    double prev = 0.0;
    bool first = true;
    for (double a = 0.05; a <= 0.95 + 1e-12; a += 0.01) {
        const double c = compute_c_alpha(a, 1e-10);
        const double C = compute_C_alpha(a, 2, c);
        if (!first) CHECK(std::abs(C - prev) < 0.05);
        prev = C;
        first = false;
    }
}

TEST_CASE("structural_constants bundles the pieces") {
    const StructuralConstants sc = structural_constants(0.5, 2, 1e-10);
    CHECK(sc.alpha == 0.5);
    CHECK(sc.n == 2);
    CHECK(sc.c_alpha == doctest::Approx(1.6023810463134875).epsilon(1e-10));
    CHECK(sc.C_alpha == doctest::Approx(0.19473248491336793).epsilon(1e-9));
    CHECK(sc.quadrature_error_estimate >= 0.0);
    CHECK(sc.quadrature_error_estimate < 1e-8);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(compute_c_alpha(1.2, 1e-8), OutOfRange);
    CHECK_THROWS_AS(compute_c_alpha(0.5, -1.0), OutOfRange);
    CHECK_THROWS_AS(compute_C_alpha(0.5, 0, 1.0), OutOfRange);
    CHECK_THROWS_AS(compute_C_alpha(0.5, 2, -1.0), OutOfRange);
}

} // TEST_SUITE
