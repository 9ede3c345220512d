#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "specstep/dynamics.hpp"
#include "specstep/io.hpp"
#include "specstep/problem.hpp"
#include "specstep/solver.hpp"

namespace {

using namespace specstep;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMaxIterations = 2;
constexpr int kExitBreakdown = 3;

struct ProblemSource {
    std::string file;
    int n = 0;
    double ncond = 0.0;
};

void add_problem_options(CLI::App* cmd, ProblemSource* src) {
    auto* file = cmd->add_option("--problem", src->file, "Problem JSON file");
    auto* n = cmd->add_option("--n", src->n, "Generate: dimension");
    cmd->add_option("--ncond", src->ncond,
                    "Generate: log10 of the condition number (default 0)");
    file->excludes(n);
}

/// n = 1 has no log-spaced ladder (the exponent divides by n-1); the single
/// eigenvalue is 10^ncond.
QuadraticProblem generate_problem(int n, double ncond) {
    if (n < 1) {
        throw std::invalid_argument("--n must be >= 1");
    }
    if (n == 1) {
        return QuadraticProblem::from_spectrum({std::pow(10.0, ncond)}, {1.0});
    }
    return QuadraticProblem::log_spectrum(n, ncond);
}

QuadraticProblem resolve_problem(const ProblemSource& src) {
    if (!src.file.empty()) {
        return read_problem_json(src.file);
    }
    if (src.n == 0) {
        throw std::invalid_argument("either --problem or --n is required");
    }
    return generate_problem(src.n, src.ncond);
}

/// Reproducible start: x1 = x* + u with u_i drawn from mt19937_64(seed),
/// mapped to [-1, 1) via the top 53 bits.
std::vector<double> starting_point(const QuadraticProblem& problem,
                                   std::optional<std::uint64_t> seed) {
    if (!seed) {
        return std::vector<double>(problem.dimension(), 0.0);
    }
    std::mt19937_64 rng(*seed);
    std::vector<double> x = problem.minimizer();
    for (double& xi : x) {
        const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        xi += 2.0 * unit - 1.0;
    }
    return x;
}

StepPolicy make_policy(const std::string& method_name, std::optional<double> m,
                       std::optional<double> p) {
    StepPolicy policy;
    policy.method = parse_method(method_name);
    if (policy.method == StepMethod::VBB) {
        if (!m) throw std::invalid_argument("VBB requires --m");
        policy.m = *m;
    }
    if (policy.method == StepMethod::CONST_P_LEFT ||
        policy.method == StepMethod::CONST_P_RIGHT) {
        if (!p) throw std::invalid_argument("CONST_P methods require --p");
        policy.p = *p;
    }
    validate(policy);
    return policy;
}

void write_trace(const std::string& path, const std::string& format,
                 const SolveTrace& trace, const std::string& method_name) {
    if (format == "csv") {
        write_trace_csv(path, trace);
    } else if (format == "json") {
        write_trace_json(path, trace, method_name);
    } else {
        throw std::invalid_argument("unknown format: " + format);
    }
}

int status_exit_code(SolveStatus status) {
    switch (status) {
        case SolveStatus::Converged: return kExitOk;
        case SolveStatus::MaxIterations: return kExitMaxIterations;
        case SolveStatus::NumericalBreakdown: return kExitBreakdown;
    }
    return kExitUsage;
}

std::string trace_path_for_p(const std::string& summary_path, double p,
                             const std::string& format) {
    const std::filesystem::path base(summary_path);
    std::filesystem::path dir = base.parent_path();
    std::string stem = base.stem().string();
    char short_p[32];
    std::snprintf(short_p, sizeof(short_p), "%.12g", p);
    const std::string name = stem + "_p" + short_p + "." + format;
    return (dir / name).string();
}

int run_gen_problem(const ProblemSource& src, const std::string& out) {
    const QuadraticProblem problem = generate_problem(src.n, src.ncond);
    write_problem_json(out, problem);
    std::cout << "n=" << problem.dimension()
              << " kappa=" << format_double(problem.condition_number())
              << " written to " << out << "\n";
    return kExitOk;
}

int run_solve(const ProblemSource& src, const std::string& method_name,
              std::optional<double> m, std::optional<double> p, double tol,
              int maxit, const std::string& out, const std::string& format,
              std::optional<std::uint64_t> seed) {
    const QuadraticProblem problem = resolve_problem(src);
    const StepPolicy policy = make_policy(method_name, m, p);
    SolveOptions options;
    options.tol = tol;
    options.max_iterations = maxit;
    const SolveTrace trace =
        solve(problem, policy, starting_point(problem, seed), options);
    if (!out.empty()) {
        write_trace(out, format, trace, method_name);
    }
    std::cout << "method=" << method_name << " status=" << to_string(trace.status)
              << " iterations=" << trace.iterations
              << " final_gnorm=" << format_double(trace.records.back().gnorm)
              << "\n";
    return status_exit_code(trace.status);
}

int run_sweep_p(const ProblemSource& src, const std::string& method_name,
                const std::vector<double>& p_values, double tol, int maxit,
                const std::string& out, const std::string& format,
                std::optional<std::uint64_t> seed) {
    const QuadraticProblem problem = resolve_problem(src);
    if (problem.dimension() != 2) {
        throw std::invalid_argument("sweep-p requires a 2-D problem");
    }
    const StepMethod method = parse_method(method_name);
    if (method != StepMethod::CONST_P_LEFT && method != StepMethod::CONST_P_RIGHT) {
        throw std::invalid_argument("sweep-p sweeps CONST_P_LEFT or CONST_P_RIGHT");
    }
    if (p_values.empty()) {
        throw std::invalid_argument("sweep-p requires a nonempty --p list");
    }
    std::ofstream summary(out, std::ios::binary);
    if (!summary) {
        throw std::runtime_error("cannot open for writing: " + out);
    }
    summary << "p,status,iterations,final_gnorm\n";
    for (double p : p_values) {
        StepPolicy policy;
        policy.method = method;
        policy.p = p;
        validate(policy);
        SolveOptions options;
        options.tol = tol;
        options.max_iterations = maxit;
        const SolveTrace trace =
            solve(problem, policy, starting_point(problem, seed), options);
        const double final_gnorm = trace.records.back().gnorm;
        write_trace(trace_path_for_p(out, p, format), format, trace, method_name);
        summary << format_double(p) << ',' << to_string(trace.status) << ','
                << trace.iterations << ',' << format_double(final_gnorm) << '\n';
        std::cout << "p=" << format_double(p) << " status=" << to_string(trace.status)
                  << " iterations=" << trace.iterations
                  << " final_gnorm=" << format_double(final_gnorm) << "\n";
    }
    return kExitOk;
}

int run_analyze(const std::string& kind_name, const std::vector<double>& lambdas,
                const std::vector<double>& ps, int steps, const std::string& out) {
    if (lambdas.empty() || ps.empty()) {
        throw std::invalid_argument("analyze requires nonempty --lambda and --p grids");
    }
    for (double lambda : lambdas) {
        if (!(lambda > 1.0)) {
            throw std::invalid_argument("analyze: every lambda must be > 1");
        }
    }
    for (double p : ps) {
        if (!(p > 1.0 && p < 2.0)) {
            throw std::invalid_argument("analyze: every p must lie in (1, 2)");
        }
    }
    const RecurrenceKind kind = parse_kind(kind_name);
    const std::vector<StabilityCell> cells = analyze_grid(kind, lambdas, ps, steps);
    write_stability_grid_json(out, cells);
    int agree = 0;
    for (const StabilityCell& cell : cells) {
        if (cell.agreement) ++agree;
    }
    std::cout << "kind=" << kind_name << " cells=" << cells.size()
              << " agreement=" << agree << "/" << cells.size() << " written to "
              << out << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral step-size toolkit for strictly convex quadratics"};
    app.require_subcommand(1);

    // gen-problem
    auto* gen = app.add_subcommand("gen-problem", "Generate a problem JSON file");
    ProblemSource gen_src;
    std::string gen_out;
    gen->add_option("--n", gen_src.n, "Dimension")->required();
    gen->add_option("--ncond", gen_src.ncond, "log10 of the condition number")
        ->required();
    gen->add_option("--out", gen_out, "Output path")->required();

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "Run one gradient solve");
    ProblemSource solve_src;
    std::string solve_method, solve_out, solve_format = "csv";
    std::optional<double> solve_m, solve_p;
    double solve_tol = 1e-9;
    int solve_maxit = 10000;
    std::optional<std::uint64_t> solve_seed;
    add_problem_options(solve_cmd, &solve_src);
    solve_cmd->add_option("--method", solve_method,
                          "BB1|BB2|VBB|LEFT|RIGHT|ML|MR|CONST_P_LEFT|CONST_P_RIGHT")
        ->required();
    solve_cmd->add_option("--m", solve_m, "VBB weight in [0,1]");
    solve_cmd->add_option("--p", solve_p, "Constant p for CONST_P methods");
    solve_cmd->add_option("--tol", solve_tol, "Relative gradient tolerance");
    solve_cmd->add_option("--maxit", solve_maxit, "Maximum gradient steps");
    solve_cmd->add_option("--out", solve_out, "Trace output path");
    solve_cmd->add_option("--format", solve_format, "csv|json");
    solve_cmd->add_option("--random-start", solve_seed,
                          "Perturb x1 = x* + uniform[-1,1) from this mt19937_64 seed");

    // sweep-p
    auto* sweep = app.add_subcommand("sweep-p", "Sweep constant p on a 2-D problem");
    ProblemSource sweep_src;
    std::string sweep_method, sweep_out, sweep_format = "csv";
    std::vector<double> sweep_ps;
    double sweep_tol = 1e-9;
    int sweep_maxit = 10000;
    std::optional<std::uint64_t> sweep_seed;
    add_problem_options(sweep, &sweep_src);
    sweep->add_option("--method", sweep_method, "CONST_P_LEFT|CONST_P_RIGHT")
        ->required();
    sweep->add_option("--p", sweep_ps, "p values (repeatable)")->required();
    sweep->add_option("--tol", sweep_tol, "Relative gradient tolerance");
    sweep->add_option("--maxit", sweep_maxit, "Maximum gradient steps");
    sweep->add_option("--out", sweep_out, "Summary CSV path")->required();
    sweep->add_option("--format", sweep_format, "Per-p trace format, csv|json");
    sweep->add_option("--random-start", sweep_seed,
                      "Perturb x1 = x* + uniform[-1,1) from this mt19937_64 seed");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Stability grid analysis");
    std::string analyze_kind, analyze_out;
    std::vector<double> analyze_lambdas, analyze_ps;
    int analyze_steps = 5000;
    analyze->add_option("--kind", analyze_kind, "LEFT|RIGHT")->required();
    analyze->add_option("--lambda", analyze_lambdas, "lambda grid (repeatable)")
        ->required();
    analyze->add_option("--p", analyze_ps, "p grid (repeatable)")->required();
    analyze->add_option("--steps", analyze_steps, "Simulation steps per cell");
    analyze->add_option("--out", analyze_out, "Grid JSON path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen->parsed()) {
            return run_gen_problem(gen_src, gen_out);
        }
        if (solve_cmd->parsed()) {
            return run_solve(solve_src, solve_method, solve_m, solve_p, solve_tol,
                             solve_maxit, solve_out, solve_format, solve_seed);
        }
        if (sweep->parsed()) {
            return run_sweep_p(sweep_src, sweep_method, sweep_ps, sweep_tol,
                               sweep_maxit, sweep_out, sweep_format, sweep_seed);
        }
        if (analyze->parsed()) {
            return run_analyze(analyze_kind, analyze_lambdas, analyze_ps,
                               analyze_steps, analyze_out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
