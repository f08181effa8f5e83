#include "tfac/constants.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <map>
#include <mutex>
#include <tuple>

#include "tfac/errors.hpp"
#include "tfac/profile.hpp"
#include "tfac/quadrature.hpp"

namespace tfac {
namespace {

std::uint64_t bits_of(double x) {
    std::uint64_t u;
    std::memcpy(&u, &x, sizeof u);
    return u;
}

using CacheKey = std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>;
std::mutex g_cache_mutex;
std::map<CacheKey, std::pair<double, double>> g_c_alpha_cache;

// int_0^1 gamma'(s) s^{-alpha} ds via the weighted rule, n and n+12 compared.
double singular_part(double alpha, double tol, double& err) {
    double prev = 0.0;
    bool have_prev = false;
    for (int n = 20; n <= 200; n += 12) {
        const auto rule = quad::gauss_jacobi_01(n, alpha);
        double acc = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            acc += rule.weights[i] * gamma_prime(rule.nodes[i]);
        if (have_prev && std::abs(acc - prev) <= 0.5 * tol) {
            err = std::abs(acc - prev);
            return acc;
        }
        prev = acc;
        have_prev = true;
    }
    throw NonConvergence("c_alpha singular part did not reach tolerance");
}

// int_1^cutoff gamma'(s) s^{-alpha} ds, unit panels with doubling refinement.
double tail_part(double alpha, double tol, double cutoff, double& err) {
    auto integrand = [alpha](double s) { return gamma_prime(s) * std::pow(s, -alpha); };
    auto evaluate = [&](int per_panel) {
        const auto rule = quad::gauss_legendre_01(per_panel);
        double acc = 0.0;
        for (double left = 1.0; left < cutoff; left += 1.0) {
            const double right = std::min(left + 1.0, cutoff);
            acc += quad::apply_legendre(rule, integrand, left, right);
        }
        return acc;
    };
    double prev = evaluate(12);
    for (int n = 18; n <= 60; n += 6) {
        const double cur = evaluate(n);
        if (std::abs(cur - prev) <= 0.5 * tol) {
            err = std::abs(cur - prev);
            return cur;
        }
        prev = cur;
    }
    throw NonConvergence("c_alpha tail part did not reach tolerance");
}

} // namespace

double compute_c_alpha(double alpha, double tol, double* error_estimate, double tail_cutoff) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw OutOfRange("alpha must lie in (0,1)");
    if (!(tol > 0.0)) throw OutOfRange("tol must be positive");
    const CacheKey key{bits_of(alpha), bits_of(tol), bits_of(tail_cutoff)};
    {
        std::lock_guard lock(g_cache_mutex);
        auto it = g_c_alpha_cache.find(key);
        if (it != g_c_alpha_cache.end()) {
            if (error_estimate) *error_estimate = it->second.second;
            return it->second.first;
        }
    }
    double err_sing = 0.0, err_tail = 0.0;
    const double sing = singular_part(alpha, tol, err_sing);
    const double tail = tail_part(alpha, tol, tail_cutoff, err_tail);
    // truncation beyond the cutoff: int_c^inf gamma' <= 1 - gamma(c) <= 2 exp(-sqrt2 c)
    const double truncation = 2.0 * std::exp(-kSqrt2 * tail_cutoff);
    const double value = sing + tail;
    const double err = err_sing + err_tail + truncation;
    if (error_estimate) *error_estimate = err;
    std::lock_guard lock(g_cache_mutex);
    g_c_alpha_cache.emplace(key, std::pair{value, err});
    return value;
}

double compute_C_alpha(double alpha, int n, double c_alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw OutOfRange("alpha must lie in (0,1)");
    if (n < 1) throw OutOfRange("n must be >= 1");
    if (!(c_alpha > 0.0)) throw OutOfRange("c_alpha must be positive");
    if (n == 1) return 0.0;
    return std::pow((n - 1) * gamma_prime(0.0) / c_alpha, 1.0 / alpha);
}

StructuralConstants structural_constants(double alpha, int n, double tol) {
    StructuralConstants sc;
    sc.alpha = alpha;
    sc.n = n;
    sc.c_alpha = compute_c_alpha(alpha, tol, &sc.quadrature_error_estimate);
    sc.C_alpha = compute_C_alpha(alpha, n, sc.c_alpha);
    return sc;
}

} // namespace tfac
