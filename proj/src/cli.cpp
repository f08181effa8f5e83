#include "tfac/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "tfac/caputo.hpp"
#include "tfac/constants.hpp"
#include "tfac/csv.hpp"
#include "tfac/residual.hpp"
#include "tfac/solver.hpp"
#include "tfac/sphere_flow.hpp"

namespace tfac::cli {
namespace {

std::vector<double> parse_list(const std::string& text, const std::string& flag) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw ValidationError(flag + " contains an empty entry");
        try {
            std::size_t used = 0;
            const double v = std::stod(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            values.push_back(v);
        } catch (const std::exception&) {
            throw ValidationError(flag + " entry is not a number: " + item);
        }
    }
    if (values.empty()) throw ValidationError(flag + " must be a nonempty comma-separated list");
    for (std::size_t i = 0; i + 1 < values.size(); ++i)
        if (!(values[i] > values[i + 1]))
            throw ValidationError(flag + " must be strictly decreasing");
    for (double v : values)
        if (!(v > 0.0)) throw ValidationError(flag + " entries must be positive");
    return values;
}

void validate_common(const RunConfig& cfg) {
    if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0))
        throw ValidationError("alpha must lie in (0,1)");
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

// `key = value` lines with `#` comments; keys become --key flags appended to
// the argument list unless the flag was already given (command line wins).
std::vector<std::string> apply_config_file(const std::vector<std::string>& args) {
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) throw UsageError("--config expects a file path");
            path = args[i + 1];
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(std::string("--config=").size());
        }
    }
    if (path.empty()) return args;

    std::ifstream file(path);
    if (!file) throw UsageError("config file not found: " + path);

    std::vector<std::string> out = args;
    std::string line;
    while (std::getline(file, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw UsageError("config line is not `key = value`: " + line);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw UsageError("config line is not `key = value`: " + line);
        const std::string flag = "--" + key;
        const bool given = std::any_of(args.begin(), args.end(), [&](const std::string& a) {
            return a == flag || a.rfind(flag + "=", 0) == 0;
        });
        if (!given) {
            out.push_back(flag);
            out.push_back(value);
        }
    }
    return out;
}

} // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
    RunConfig cfg;
    std::string eps_list_text, dt_list_text, config_path;

    CLI::App app{"time-fractional Allen-Cahn / power mean curvature toolkit", "tfac"};
    app.require_subcommand(1);

    auto add_config = [&config_path](CLI::App* sub) {
        sub->add_option("--config", config_path,
                        "key = value configuration file (# comments); flags take precedence");
    };

    auto* constants = app.add_subcommand("constants", "structural constants c_alpha, C_alpha");
    constants->add_option("--alpha", cfg.alpha)->required();
    constants->add_option("--n", cfg.n)->required();
    cfg.tol = 1e-10;
    constants->add_option("--tol", cfg.tol);
    constants->add_option("--out", cfg.out);
    add_config(constants);

    auto* flow = app.add_subcommand("flow", "sphere radius: closed form vs RK4");
    flow->add_option("--alpha", cfg.alpha)->required();
    flow->add_option("--n", cfg.n)->required();
    flow->add_option("--t-max", cfg.t_max)->required();
    flow->add_option("--dt", cfg.dt)->required();
    flow->add_option("--out", cfg.out);
    add_config(flow);

    auto* residual = app.add_subcommand("residual", "layer-ansatz residual sweep over eps");
    residual->add_option("--alpha", cfg.alpha)->required();
    residual->add_option("--n", cfg.n)->required();
    residual->add_option("--t", cfg.t)->required();
    residual->add_option("--eps-list", eps_list_text)->required();
    residual->add_option("--regime", cfg.regime)->required();
    auto* r_opt = residual->add_option("--r", cfg.r);
    auto* res_tol = residual->add_option("--tol", cfg.tol);
    residual->add_option("--out", cfg.out);
    add_config(residual);

    auto* simulate = app.add_subcommand("simulate", "full radial PDE solve with level tracking");
    simulate->add_option("--alpha", cfg.alpha)->required();
    simulate->add_option("--n", cfg.n)->required();
    simulate->add_option("--eps", cfg.eps)->required();
    simulate->add_option("--dr", cfg.dr)->required();
    simulate->add_option("--dt", cfg.dt)->required();
    simulate->add_option("--t-end", cfg.t_end)->required();
    simulate->add_option("--out", cfg.out);
    add_config(simulate);

    auto* convergence = app.add_subcommand("convergence", "L1 operator order on monomials");
    convergence->add_option("--alpha", cfg.alpha)->required();
    convergence->add_option("--p", cfg.p)->required();
    convergence->add_option("--t", cfg.t)->required();
    convergence->add_option("--dt-list", dt_list_text)->required();
    convergence->add_option("--out", cfg.out);
    add_config(convergence);

    const std::vector<std::string> effective = apply_config_file(args);
    std::vector<std::string> reversed(effective.rbegin(), effective.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        std::ostringstream help;
        help << app.help();
        throw HelpRequested{help.str()};
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    if (constants->parsed()) cfg.subcommand = Subcommand::Constants;
    else if (flow->parsed()) cfg.subcommand = Subcommand::Flow;
    else if (residual->parsed()) cfg.subcommand = Subcommand::Residual;
    else if (simulate->parsed()) cfg.subcommand = Subcommand::Simulate;
    else cfg.subcommand = Subcommand::Convergence;

    validate_common(cfg);
    if (cfg.n < 1) throw ValidationError("n must be an integer >= 1");

    switch (cfg.subcommand) {
    case Subcommand::Constants:
        if (!(cfg.tol > 0.0)) throw ValidationError("tol must be positive");
        break;
    case Subcommand::Flow:
        if (!(cfg.dt > 0.0)) throw ValidationError("dt must be positive");
        if (!(cfg.t_max >= 0.0)) throw ValidationError("t-max must be nonnegative");
        break;
    case Subcommand::Residual:
        cfg.eps_list = parse_list(eps_list_text, "--eps-list");
        if (res_tol->count() == 0) cfg.tol = 1e-12;
        if (!(cfg.t >= 0.0)) throw ValidationError("t must be nonnegative");
        if (!(cfg.tol > 0.0)) throw ValidationError("tol must be positive");
        if (cfg.regime != "interface" && cfg.regime != "outside" && cfg.regime != "inside")
            throw ValidationError("regime must be one of interface|outside|inside");
        cfg.has_r = r_opt->count() > 0;
        if (cfg.has_r && cfg.regime == "interface")
            throw ValidationError("interface regime computes r from t; --r is not accepted");
        break;
    case Subcommand::Simulate:
        if (!(cfg.eps > 0.0)) throw ValidationError("eps must be positive");
        if (!(cfg.dr > 0.0)) throw ValidationError("dr must be positive");
        if (!(cfg.dt > 0.0)) throw ValidationError("dt must be positive");
        if (!(cfg.t_end > 0.0)) throw ValidationError("t-end must be positive");
        break;
    case Subcommand::Convergence:
        cfg.dt_list = parse_list(dt_list_text, "--dt-list");
        if (!(cfg.p > 0.0)) throw ValidationError("p must be positive");
        if (!(cfg.t > 0.0)) throw ValidationError("t must be positive");
        break;
    }
    return cfg;
}

namespace {

std::string run_constants(const RunConfig& cfg) {
    const StructuralConstants sc = structural_constants(cfg.alpha, cfg.n, cfg.tol);
    CsvTable table;
    table.header = {"alpha", "n", "c_alpha", "C_alpha", "err_estimate"};
    table.rows.push_back({sc.alpha, static_cast<double>(sc.n), sc.c_alpha, sc.C_alpha,
                          sc.quadrature_error_estimate});
    return render_csv(table);
}

std::string run_flow(const RunConfig& cfg) {
    const StructuralConstants sc = structural_constants(cfg.alpha, cfg.n, 1e-10);
    const FlowTrajectory traj = phi0_rk4(cfg.t_max, cfg.dt, cfg.alpha, sc.C_alpha);
    CsvTable table;
    table.header = {"t", "phi0_closed", "phi0_rk4", "abs_diff"};
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        const double closed = phi0_closed_form(traj.times[i], cfg.alpha, sc.C_alpha);
        table.rows.push_back({traj.times[i], closed, traj.radii[i],
                              std::abs(closed - traj.radii[i])});
    }
    return render_csv(table);
}

std::string run_residual(const RunConfig& cfg) {
    Regime regime = Regime::Interface;
    if (cfg.regime == "outside") regime = Regime::Outside;
    else if (cfg.regime == "inside") regime = Regime::Inside;
    std::optional<double> r_override;
    if (cfg.has_r) r_override = cfg.r;

    const ResidualReport report =
        scan_residual(regime, cfg.alpha, cfg.n, cfg.t, cfg.eps_list, r_override, cfg.tol);

    CsvTable samples;
    samples.header = {"eps", "r", "t", "E", "abs_E"};
    for (const auto& s : report.samples)
        samples.rows.push_back({s.eps, s.r, s.t, s.E, std::abs(s.E)});
    CsvTable summary;
    summary.header = {"fitted_exponent", "fit_residual"};
    summary.rows.push_back({report.fitted_exponent, report.fit_residual});
    return render_csv(samples) + render_csv(summary);
}

std::string run_simulate(const RunConfig& cfg) {
    const double r_max = 2.0;
    const double cells = r_max / cfg.dr;
    const int nr = static_cast<int>(std::llround(cells));
    if (std::abs(cells - nr) > 1e-9)
        throw ValidationError("dr must divide the domain radius 2.0 evenly");
    const ModelParams params{cfg.alpha, cfg.n, cfg.eps};
    const StructuralConstants sc = structural_constants(cfg.alpha, cfg.n, 1e-10);
    const SolveResult result =
        solve(params, sc, RadialGrid{r_max, nr}, cfg.dt, cfg.t_end);

    CsvTable table;
    table.header = {"t", "r_star", "phi0", "abs_err"};
    const auto& rep = result.report;
    for (std::size_t i = 0; i < rep.times.size(); ++i)
        table.rows.push_back({rep.times[i], rep.r_star[i], rep.phi0_values[i],
                              std::abs(rep.r_star[i] - rep.phi0_values[i])});
    CsvTable summary;
    summary.header = {"sup_error"};
    summary.rows.push_back({rep.sup_error});
    return render_csv(table) + render_csv(summary);
}

std::string run_convergence(const RunConfig& cfg) {
    CsvTable table;
    table.header = {"dt", "l1_value", "oracle_value", "abs_err"};
    std::vector<std::pair<double, double>> errs;
    const double oracle = caputo_of_monomial(cfg.p, cfg.t, cfg.alpha);
    for (double dt : cfg.dt_list) {
        const double steps = cfg.t / dt;
        const auto m = static_cast<long>(std::llround(steps));
        if (m < 1 || std::abs(steps - m) > 1e-9)
            throw ValidationError("t must be an integer multiple of every dt in dt-list");
        std::vector<double> values(m + 1);
        for (long k = 0; k <= m; ++k)
            values[k] = std::pow(k * dt, cfg.p);
        const double l1 = l1_apply(values, dt, cfg.alpha);
        const double err = std::abs(l1 - oracle);
        table.rows.push_back({dt, l1, oracle, err});
        errs.emplace_back(dt, err);
    }
    CsvTable summary;
    summary.header = {"fitted_order"};
    summary.rows.push_back({fit_scaling_exponent(errs).exponent});
    return render_csv(table) + render_csv(summary);
}

} // namespace

std::string run_command(const RunConfig& cfg) {
    switch (cfg.subcommand) {
    case Subcommand::Constants: return run_constants(cfg);
    case Subcommand::Flow: return run_flow(cfg);
    case Subcommand::Residual: return run_residual(cfg);
    case Subcommand::Simulate: return run_simulate(cfg);
    case Subcommand::Convergence: return run_convergence(cfg);
    }
    throw UsageError("unknown subcommand");
}

int main_entry(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        const RunConfig cfg = parse_args(args);
        const std::string output = run_command(cfg);
        if (cfg.out.empty()) {
            std::cout << output;
        } else {
            write_text_file(cfg.out, output);
        }
        return 0;
    } catch (const HelpRequested& h) {
        std::cout << h.text;
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "parameter error: " << e.what() << '\n';
        return 2;
    } catch (const NumericError& e) {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return 3;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return 4;
    }
}

} // namespace tfac::cli
