#include "tfac/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <map>
#include <mutex>
#include <queue>
#include <stdexcept>

#include "tfac/errors.hpp"

namespace tfac::quad {
namespace {

// Symmetric tridiagonal eigensolver (QL with implicit shifts), tracking only
// the first row of the eigenvector matrix, which is all Golub-Welsch needs.
// d: diagonal, e: subdiagonal (e[0] unused), z: first-row components.
void ql_implicit(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z) {
    const int n = static_cast<int>(d.size());
    for (int i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= 1e-300 + 1e-16 * dd) break;
            }
            if (m != l) {
                if (iter++ == 50) throw NonConvergence("tridiagonal eigensolver stalled");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + (g >= 0 ? std::abs(r) : -std::abs(r)));
                double s = 1.0, c = 1.0, p = 0.0;
                bool underflow = false;
                for (int i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        underflow = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    f = z[i + 1];
                    z[i + 1] = s * z[i] + c * f;
                    z[i] = c * z[i] - s * f;
                }
                if (underflow) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

// Monic Jacobi recurrence for weight (1-x)^a (1+x)^b on [-1,1]:
// diagonal alpha_k, squared subdiagonal beta_k, zeroth moment mu0.
struct JacobiRecurrence {
    std::vector<double> diag;
    std::vector<double> beta;
    double mu0;
};

JacobiRecurrence jacobi_recurrence(int n, double a, double b, double mu0) {
    JacobiRecurrence rec;
    rec.diag.resize(n);
    rec.beta.resize(n);
    rec.mu0 = mu0;
    const double apb = a + b;
    rec.diag[0] = (b - a) / (apb + 2.0);
    rec.beta[0] = 0.0;
    for (int k = 1; k < n; ++k) {
        const double s = 2.0 * k + apb;
        rec.diag[k] = (b * b - a * a) / (s * (s + 2.0));
        if (k == 1) {
            rec.beta[k] = 4.0 * (1.0 + a) * (1.0 + b) / ((apb + 2.0) * (apb + 2.0) * (apb + 3.0));
        } else {
            rec.beta[k] = 4.0 * k * (k + a) * (k + b) * (k + apb) /
                          (s * s * (s + 1.0) * (s - 1.0));
        }
    }
    return rec;
}

Rule01 golub_welsch_01(const JacobiRecurrence& rec, double weight_fold) {
    const int n = static_cast<int>(rec.diag.size());
    std::vector<double> d = rec.diag;
    std::vector<double> e(n, 0.0);
    for (int k = 1; k < n; ++k) e[k] = std::sqrt(rec.beta[k]);
    std::vector<double> z(n, 0.0);
    z[0] = 1.0;
    ql_implicit(d, e, z);
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int i, int j) { return d[i] < d[j]; });
    Rule01 rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        const int j = order[i];
        rule.nodes[i] = 0.5 * (1.0 + d[j]);                       // [-1,1] -> (0,1)
        rule.weights[i] = rec.mu0 * z[j] * z[j] * weight_fold;
    }
    return rule;
}

struct RuleKey {
    int n;
    std::uint64_t alpha_bits;
    bool operator<(const RuleKey& o) const {
        return n != o.n ? n < o.n : alpha_bits < o.alpha_bits;
    }
};

std::uint64_t bits_of(double x) {
    std::uint64_t u;
    std::memcpy(&u, &x, sizeof u);
    return u;
}

std::mutex g_cache_mutex;
std::map<RuleKey, Rule01> g_legendre_cache;
std::map<RuleKey, Rule01> g_jacobi_cache;

} // namespace

Rule01 gauss_legendre_01(int n) {
    if (n < 1) throw OutOfRange("quadrature order must be >= 1");
    const RuleKey key{n, 0};
    {
        std::lock_guard lock(g_cache_mutex);
        auto it = g_legendre_cache.find(key);
        if (it != g_legendre_cache.end()) return it->second;
    }
    // int_0^1 g(v) dv = 1/2 int_{-1}^1 g((1+x)/2) dx
    Rule01 rule = golub_welsch_01(jacobi_recurrence(n, 0.0, 0.0, 2.0), 0.5);
    std::lock_guard lock(g_cache_mutex);
    return g_legendre_cache.emplace(key, std::move(rule)).first->second;
}

Rule01 gauss_jacobi_01(int n, double alpha) {
    if (n < 1) throw OutOfRange("quadrature order must be >= 1");
    if (!(alpha > 0.0 && alpha < 1.0)) throw OutOfRange("alpha must lie in (0,1)");
    const RuleKey key{n, bits_of(alpha)};
    {
        std::lock_guard lock(g_cache_mutex);
        auto it = g_jacobi_cache.find(key);
        if (it != g_jacobi_cache.end()) return it->second;
    }
    // int_0^1 g(v) v^{-alpha} dv = 2^{alpha-1} int_{-1}^1 (1+x)^{-alpha} g((1+x)/2) dx
    const double mu0 = std::pow(2.0, 1.0 - alpha) / (1.0 - alpha);
    Rule01 rule = golub_welsch_01(jacobi_recurrence(n, 0.0, -alpha, mu0),
                                  std::pow(2.0, alpha - 1.0));
    std::lock_guard lock(g_cache_mutex);
    return g_jacobi_cache.emplace(key, std::move(rule)).first->second;
}

double apply_legendre(const Rule01& rule, const std::function<double(double)>& f,
                      double a, double b) {
    const double h = b - a;
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        acc += rule.weights[i] * f(a + h * rule.nodes[i]);
    return acc * h;
}

namespace {

struct Segment {
    double a, b;
    bool singular;   // right endpoint is the kernel singularity
    double value;
    double err;
};

// int_c^b f(x)(b-x)^{-alpha} dx = (b-c)^{1-alpha} int_0^1 f(b-(b-c)v) v^{-alpha} dv
double jacobi_segment(const std::function<double(double)>& f, double c, double b,
                      double alpha, const Rule01& rule) {
    const double h = b - c;
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        acc += rule.weights[i] * f(b - h * rule.nodes[i]);
    return acc * std::pow(h, 1.0 - alpha);
}

} // namespace

double weakly_singular_integral(const std::function<double(double)>& f,
                                double a, double b, double alpha,
                                const SingularOptions& opt) {
    if (!(b > a)) throw OutOfRange("integration interval must have b > a");
    if (!(alpha > 0.0 && alpha < 1.0)) throw OutOfRange("alpha must lie in (0,1)");

    const Rule01 gj_lo = gauss_jacobi_01(12, alpha);
    const Rule01 gj_hi = gauss_jacobi_01(24, alpha);
    const Rule01 gl_lo = gauss_legendre_01(15);
    const Rule01 gl_hi = gauss_legendre_01(31);

    auto kernel = [&](double x) { return f(x) * std::pow(b - x, -alpha); };

    auto evaluate = [&](Segment& s) {
        if (s.singular) {
            const double lo = jacobi_segment(f, s.a, s.b, alpha, gj_lo);
            const double hi = jacobi_segment(f, s.a, s.b, alpha, gj_hi);
            s.value = hi;
            s.err = std::abs(hi - lo);
        } else {
            const double lo = apply_legendre(gl_lo, kernel, s.a, s.b);
            const double hi = apply_legendre(gl_hi, kernel, s.a, s.b);
            s.value = hi;
            s.err = std::abs(hi - lo);
        }
    };

    std::vector<double> cuts{a};
    for (double p : opt.split_points)
        if (p > a && p < b) cuts.push_back(p);
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<Segment> segs;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        Segment s{cuts[i], cuts[i + 1], cuts[i + 1] == b, 0.0, 0.0};
        evaluate(s);
        segs.push_back(s);
    }

    const double min_width = (b - a) * 1e-15;
    auto total_err = [&] {
        double e = 0.0;
        for (const auto& s : segs) e += s.err;
        return e;
    };

    while (total_err() > opt.tol) {
        if (static_cast<int>(segs.size()) >= opt.max_segments)
            throw NonConvergence("weakly singular quadrature: refinement budget exhausted");
        std::size_t worst = 0;
        for (std::size_t i = 1; i < segs.size(); ++i)
            if (segs[i].err > segs[worst].err) worst = i;
        Segment& s = segs[worst];
        if (s.b - s.a <= min_width) {
            // cannot subdivide further; accept the current estimate for it
            s.err = 0.0;
            continue;
        }
        const double mid = 0.5 * (s.a + s.b);
        Segment left{s.a, mid, false, 0.0, 0.0};
        Segment right{mid, s.b, s.singular, 0.0, 0.0};
        evaluate(left);
        evaluate(right);
        s = left;
        segs.push_back(right);
    }

    std::sort(segs.begin(), segs.end(),
              [](const Segment& x, const Segment& y) { return x.a < y.a; });
    double acc = 0.0;
    for (const auto& s : segs) acc += s.value;
    return acc;
}

} // namespace tfac::quad
