#include "tfac/solver.hpp"

#include <cmath>
#include <iostream>
#include <limits>

#include "tfac/caputo.hpp"
#include "tfac/errors.hpp"
#include "tfac/profile.hpp"
#include "tfac/sphere_flow.hpp"

namespace tfac {
namespace {

constexpr double kOvershootBudget = 0.1;
constexpr int kNewtonMaxIter = 25;
constexpr double kNewtonTol = 1e-12;

// Thomas algorithm; the systems here are strictly diagonally dominant except
// for the reaction contribution, so guard the pivots anyway.
void solve_tridiagonal(std::span<const double> lo, std::span<const double> di,
                       std::span<const double> up, std::vector<double>& rhs,
                       std::vector<double>& scratch_c, std::vector<double>& out) {
    const std::size_t n = rhs.size();
    scratch_c.resize(n);
    out.resize(n);
    double pivot = di[0];
    if (pivot == 0.0) throw LinearSolveFailure("zero pivot in tridiagonal solve");
    scratch_c[0] = up[0] / pivot;
    out[0] = rhs[0] / pivot;
    for (std::size_t i = 1; i < n; ++i) {
        pivot = di[i] - lo[i] * scratch_c[i - 1];
        if (pivot == 0.0) throw LinearSolveFailure("zero pivot in tridiagonal solve");
        scratch_c[i] = up[i] / pivot;
        out[i] = (rhs[i] - lo[i] * out[i - 1]) / pivot;
    }
    for (std::size_t i = n - 1; i-- > 0;)
        out[i] -= scratch_c[i] * out[i + 1];
}

} // namespace

std::optional<double> extract_zero_level(std::span<const double> values,
                                         const RadialGrid& grid, int* crossing_count) {
    int count = 0;
    std::optional<double> outermost;
    for (int i = 0; i + 1 < grid.size(); ++i) {
        const double a = values[i];
        const double b = values[i + 1];
        if (a == 0.0) {
            ++count;
            outermost = grid.node(i);
        } else if (a * b < 0.0) {
            ++count;
            outermost = grid.node(i) + grid.dr() * (0.0 - a) / (b - a);
        }
    }
    if (values.back() == 0.0) {
        ++count;
        outermost = grid.node(grid.nr);
    }
    if (crossing_count) *crossing_count = count;
    return outermost;
}

RadialSolver::RadialSolver(const ModelParams& params, const StructuralConstants& constants,
                           const RadialGrid& grid, double dt, bool enforce_dt_rule,
                           std::optional<std::vector<double>> initial_values)
    : params_(params), constants_(constants), grid_(grid), dt_(dt) {
    if (!(params.alpha > 0.0 && params.alpha < 1.0))
        throw OutOfRange("alpha must lie in (0,1)");
    if (params.n < 1) throw OutOfRange("n must be >= 1");
    if (grid.nr < 16) throw OutOfRange("grid must have nr >= 16");
    if (!(dt > 0.0)) throw OutOfRange("dt must be positive");
    const double dr = grid.dr();
    if (!(params.eps >= 3.0 * dr))
        throw UnderResolved("interface width eps must span at least 3 grid cells");
    if (!(grid.r_max >= 1.0 + 10.0 * params.eps))
        throw UnderResolved("r_max must be at least 1 + 10 eps");
    if (enforce_dt_rule && dt > std::pow(params.eps, 1.0 + params.alpha))
        throw ValidationError("dt exceeds the default cap eps^(1+alpha)");

    const int N = grid.size();
    std::vector<double> u0;
    if (initial_values) {
        if (static_cast<int>(initial_values->size()) != N)
            throw OutOfRange("initial state size does not match the grid");
        u0 = std::move(*initial_values);
    } else {
        u0.resize(N);
        for (int i = 0; i < N; ++i)
            u0[i] = gamma_profile((grid.node(i) - 1.0) / params.eps);
    }
    history_.push_back(std::move(u0));
    last_caputo_.assign(N, 0.0);

    lap_lo_.assign(N, 0.0);
    lap_di_.assign(N, 0.0);
    lap_up_.assign(N, 0.0);
    const int n = params.n;
    lap_di_[0] = -2.0 * n / (dr * dr);
    lap_up_[0] = 2.0 * n / (dr * dr);
    for (int i = 1; i < N - 1; ++i) {
        const double r = grid.node(i);
        lap_lo_[i] = 1.0 / (dr * dr) - (n - 1) / (2.0 * r * dr);
        lap_di_[i] = -2.0 / (dr * dr);
        lap_up_[i] = 1.0 / (dr * dr) + (n - 1) / (2.0 * r * dr);
    }
    lap_lo_[N - 1] = 2.0 / (dr * dr);
    lap_di_[N - 1] = -2.0 / (dr * dr);
}

void RadialSolver::ensure_weights(int m) {
    const double scale = std::pow(dt_, 1.0 - params_.alpha) / (1.0 - params_.alpha);
    while (static_cast<int>(weights_.size()) < m) {
        const auto j = static_cast<double>(weights_.size()) + 1.0;
        weights_.push_back((std::pow(j, 1.0 - params_.alpha) -
                            std::pow(j - 1.0, 1.0 - params_.alpha)) * scale);
    }
}

void RadialSolver::step() {
    const int m = levels();   // computing u^m from u^0..u^{m-1}
    ensure_weights(m);
    const int N = grid_.size();
    const double eps = params_.eps;
    const double alpha = params_.alpha;
    const double eps_a = std::pow(eps, alpha);
    const double w1 = weights_[0];

    // memory accumulator: sum_{k=0}^{m-2} w_{m-k} (u^{k+1} - u^k), ascending k
    // so the bookkeeping matches l1_apply term for term
    std::vector<double> mem(N, 0.0);
    for (int k = 0; k + 1 < m; ++k) {
        const double w = weights_[m - k - 1];
        const auto& lower = history_[k];
        const auto& upper = history_[k + 1];
        for (int i = 0; i < N; ++i) mem[i] += w * (upper[i] - lower[i]);
    }

    const std::vector<double>& u_prev = history_.back();
    auto lap_at = [&](const std::vector<double>& v, int i) {
        const double left = (i > 0) ? v[i - 1] : 0.0;
        const double right = (i < N - 1) ? v[i + 1] : 0.0;
        return lap_lo_[i] * left + lap_di_[i] * v[i] + lap_up_[i] * right;
    };

    // Newton on F(v) = eps^a (w1 (v - u_prev) + mem)/dt - eps Lap v - f(v)/eps
    std::vector<double> v = u_prev;
    std::vector<double> jac_lo(N), jac_up(N);
    for (int i = 0; i < N; ++i) {
        jac_lo[i] = -eps * lap_lo_[i];
        jac_up[i] = -eps * lap_up_[i];
    }
    std::vector<double> jac_di(N), rhs(N), scratch(N), dv(N);
    bool converged = false;
    for (int it = 0; it < kNewtonMaxIter; ++it) {
        for (int i = 0; i < N; ++i) {
            const double F = eps_a * (w1 * (v[i] - u_prev[i]) + mem[i]) / dt_ -
                             eps * lap_at(v, i) - bistable_f(v[i]) / eps;
            jac_di[i] = eps_a * w1 / dt_ - eps * lap_di_[i] -
                        (1.0 - 3.0 * v[i] * v[i]) / eps;
            rhs[i] = -F;
        }
        solve_tridiagonal(jac_lo, jac_di, jac_up, rhs, scratch, dv);
        double max_dv = 0.0;
        for (int i = 0; i < N; ++i) {
            v[i] += dv[i];
            max_dv = std::max(max_dv, std::abs(dv[i]));
        }
        if (max_dv <= kNewtonTol) {
            converged = true;
            break;
        }
    }
    if (!converged) throw NonConvergence("Newton iteration for the implicit step stalled");

    for (int i = 0; i < N; ++i)
        if (!(std::abs(v[i]) <= 1.0 + kOvershootBudget))
            throw BlowUp("node value left the [-1.1, 1.1] sanity band");

    history_.push_back(std::move(v));
    const auto& stored = history_[history_.size() - 1];
    const auto& prev = history_[history_.size() - 2];
    for (int i = 0; i < N; ++i)
        last_caputo_[i] = (mem[i] + w1 * (stored[i] - prev[i])) / dt_;
}

SolveResult solve(const ModelParams& params, const StructuralConstants& constants,
                  const RadialGrid& grid, double dt, double t_end, bool enforce_dt_rule) {
    const double t_star = extinction_time(params.alpha, constants.C_alpha);
    if (std::isfinite(t_star) && !(t_end <= 0.5 * t_star))
        throw OutOfRange("t_end must stay at or below 0.5 T*");
    if (!(t_end >= dt)) throw OutOfRange("t_end must cover at least one step");

    SolveResult result{RadialSolver(params, constants, grid, dt, enforce_dt_rule), {}};
    auto& solver = result.solver;
    auto& report = result.report;

    const auto steps = static_cast<long>(std::floor(t_end / dt + 1e-9));
    bool warned_multi = false;
    double sup = 0.0;
    for (long s = 1; s <= steps; ++s) {
        solver.step();
        const double t = solver.current_time();
        int crossings = 0;
        const auto r_star = extract_zero_level(solver.current(), grid, &crossings);
        if (crossings > 1 && !warned_multi) {
            std::cerr << "solve: multiple zero crossings; tracking the outermost\n";
            warned_multi = true;
        }
        const double phi = phi0_closed_form(t, params.alpha, constants.C_alpha);
        report.times.push_back(t);
        report.phi0_values.push_back(phi);
        if (r_star) {
            report.r_star.push_back(*r_star);
            sup = std::max(sup, std::abs(*r_star - phi));
        } else {
            report.r_star.push_back(std::numeric_limits<double>::quiet_NaN());
        }
    }
    report.sup_error = sup;
    return result;
}

} // namespace tfac
