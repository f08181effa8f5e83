#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tfac/constants.hpp"
#include "tfac/residual.hpp"

namespace tfac {

// Uniform radial grid r_i = i dr, i = 0..nr, including r = 0 and r = r_max.
struct RadialGrid {
    double r_max = 2.0;
    int nr = 16;

    double dr() const { return r_max / nr; }
    double node(int i) const { return i * dr(); }
    int size() const { return nr + 1; }
};

struct TrackingReport {
    std::vector<double> times;
    std::vector<double> r_star;       // NaN where no sign change exists
    std::vector<double> phi0_values;
    double sup_error = 0.0;
};

// Linear interpolation of the outermost sign change; std::nullopt when the
// values do not change sign. multiple_crossings reports how many were seen.
std::optional<double> extract_zero_level(std::span<const double> values,
                                         const RadialGrid& grid,
                                         int* crossing_count = nullptr);

// Time stepper for eps^alpha d_t^alpha u = eps Lap u + f(u)/eps in radial
// coordinates, u(.,0) = gamma((r-1)/eps).
//
// Discretization: L1 for the Caputo term (newest increment implicit),
// implicit Laplacian, and Newton iteration on the implicit cubic; each Newton
// iterate is one tridiagonal solve. The spec'd explicit-reaction splitting is
// unstable at dt near eps^{1+alpha}, so the reaction is solved implicitly;
// the dt <= eps^{1+alpha} default cap is kept and can be lifted explicitly.
//
// Symmetry at the origin gives the regularized operator n d_rr at r = 0;
// homogeneous Neumann at r = r_max. Node values must stay inside
// [-1.1, 1.1]; a violation aborts with BlowUp.
class RadialSolver {
  public:
    // The default initial state is the layer profile gamma((r-1)/eps);
    // initial_values overrides it (used for equilibrium and symmetry checks).
    RadialSolver(const ModelParams& params, const StructuralConstants& constants,
                 const RadialGrid& grid, double dt, bool enforce_dt_rule = true,
                 std::optional<std::vector<double>> initial_values = std::nullopt);

    void step();

    double current_time() const { return static_cast<double>(levels() - 1) * dt_; }
    int levels() const { return static_cast<int>(history_.size()); }
    std::span<const double> current() const { return history_.back(); }
    const std::vector<std::vector<double>>& history() const { return history_; }
    // Caputo value the last step used, per node; bitwise equal to l1_apply
    // on the stored per-node history.
    std::span<const double> last_caputo() const { return last_caputo_; }

    const RadialGrid& grid() const { return grid_; }
    const ModelParams& params() const { return params_; }
    double dt() const { return dt_; }

  private:
    ModelParams params_;
    StructuralConstants constants_;
    RadialGrid grid_;
    double dt_;
    std::vector<double> weights_;   // w_j, grown as steps accumulate
    std::vector<std::vector<double>> history_;
    std::vector<double> last_caputo_;
    // Laplacian diagonals
    std::vector<double> lap_lo_, lap_di_, lap_up_;

    void ensure_weights(int m);
};

// initialize + repeated step up to t_end, tracking the zero level set against
// the closed-form phi0. Requires t_end <= 0.5 T*.
struct SolveResult {
    RadialSolver solver;
    TrackingReport report;
};

SolveResult solve(const ModelParams& params, const StructuralConstants& constants,
                  const RadialGrid& grid, double dt, double t_end,
                  bool enforce_dt_rule = true);

} // namespace tfac
