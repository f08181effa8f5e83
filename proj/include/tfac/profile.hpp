#pragma once

#include <cmath>

namespace tfac {

// One-dimensional layer profile gamma(x) = tanh(x/sqrt(2)) connecting the
// phases -1 and +1, and the bistable nonlinearity f(u) = u - u^3.
// gamma solves gamma'' + f(gamma) = 0 with gamma(0) = 0, gamma(+-inf) = +-1.

inline constexpr double kSqrt2 = 1.41421356237309504880168872;

inline double bistable_f(double u) { return u - u * u * u; }

inline double gamma_profile(double x) { return std::tanh(x / kSqrt2); }

// sech^2(y) without forming 1 - tanh^2(y), which cancels for |y| > ~15.
inline double sech_squared(double y) {
    const double e = std::exp(-2.0 * std::abs(y));
    const double d = 1.0 + e;
    return 4.0 * e / (d * d);
}

inline double gamma_prime(double x) { return sech_squared(x / kSqrt2) / kSqrt2; }

// gamma'' = -sqrt(2) * gamma * gamma' (equivalent to -f(gamma) through the
// profile equation, but free of the 1 - tanh^2 cancellation).
inline double gamma_second(double x) {
    return -kSqrt2 * gamma_profile(x) * gamma_prime(x);
}

} // namespace tfac
