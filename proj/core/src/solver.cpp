#include "specstep/solver.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "specstep/errors.hpp"
#include "specstep/stepsize.hpp"

namespace specstep {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double norm2(std::span<const double> v) {
    double acc = 0.0;
    for (double x : v) acc += x * x;
    return std::sqrt(acc);
}

bool all_finite(std::span<const double> v) {
    for (double x : v) {
        if (!std::isfinite(x)) return false;
    }
    return true;
}

/// Scalar for iterate k >= 2 given the fresh memory and the previous
/// iteration's bookkeeping. CONST_P variants use the quotient forms of the
/// previous gradient, 1/p * g'Ag/g'g and p * g'A^2g/g'Ag.
double policy_scalar(const QuadraticProblem& problem, const StepPolicy& policy,
                     const StepMemory& mem, std::span<const double> g_prev,
                     double prev_bb1, double prev_bb2) {
    switch (policy.method) {
        case StepMethod::BB1:
            return bb_scalars(mem).bb1;
        case StepMethod::BB2:
            return bb_scalars(mem).bb2;
        case StepMethod::VBB:
            return vbb_scalar(mem, policy.m);
        case StepMethod::LEFT:
            return left_right_scalars(mem).left;
        case StepMethod::RIGHT:
            return left_right_scalars(mem).right;
        case StepMethod::ML:
            return ml_mr_scalars(mem, prev_bb1, prev_bb2).ml;
        case StepMethod::MR:
            return ml_mr_scalars(mem, prev_bb1, prev_bb2).mr;
        case StepMethod::CONST_P_LEFT:
            return problem.rayleigh_quotient(g_prev) / policy.p;
        case StepMethod::CONST_P_RIGHT:
            return policy.p * problem.squared_rayleigh_quotient(g_prev);
    }
    throw std::invalid_argument("unknown step method");
}

}  // namespace

const char* to_string(StepMethod method) {
    switch (method) {
        case StepMethod::BB1: return "BB1";
        case StepMethod::BB2: return "BB2";
        case StepMethod::VBB: return "VBB";
        case StepMethod::LEFT: return "LEFT";
        case StepMethod::RIGHT: return "RIGHT";
        case StepMethod::ML: return "ML";
        case StepMethod::MR: return "MR";
        case StepMethod::CONST_P_LEFT: return "CONST_P_LEFT";
        case StepMethod::CONST_P_RIGHT: return "CONST_P_RIGHT";
    }
    return "UNKNOWN";
}

StepMethod parse_method(const std::string& name) {
    for (StepMethod m : {StepMethod::BB1, StepMethod::BB2, StepMethod::VBB,
                         StepMethod::LEFT, StepMethod::RIGHT, StepMethod::ML,
                         StepMethod::MR, StepMethod::CONST_P_LEFT,
                         StepMethod::CONST_P_RIGHT}) {
        if (name == to_string(m)) return m;
    }
    throw std::invalid_argument("unknown method name: " + name);
}

const char* to_string(SolveStatus status) {
    switch (status) {
        case SolveStatus::Converged: return "Converged";
        case SolveStatus::MaxIterations: return "MaxIterations";
        case SolveStatus::NumericalBreakdown: return "NumericalBreakdown";
    }
    return "Unknown";
}

void validate(const StepPolicy& policy) {
    if (policy.method == StepMethod::VBB && !(policy.m >= 0.0 && policy.m <= 1.0)) {
        throw std::invalid_argument("VBB weight m must lie in [0, 1]");
    }
    if ((policy.method == StepMethod::CONST_P_LEFT ||
         policy.method == StepMethod::CONST_P_RIGHT) &&
        !(policy.p >= 1.0 && policy.p <= 2.0)) {
        throw std::invalid_argument("constant p must lie in [1, 2]");
    }
}

double initial_scalar(const QuadraticProblem& problem, std::span<const double> g1) {
    if (norm2(g1) == 0.0) {
        throw std::invalid_argument("initial_scalar: zero gradient (already converged)");
    }
    return problem.rayleigh_quotient(g1);
}

SolveTrace solve(const QuadraticProblem& problem, const StepPolicy& policy,
                 std::vector<double> x1, const SolveOptions& options) {
    validate(policy);
    if (!(options.tol > 0.0 && options.tol < 1.0)) {
        throw std::invalid_argument("solve: tol must lie in (0, 1)");
    }
    if (options.max_iterations < 1) {
        throw std::invalid_argument("solve: max_iterations must be >= 1");
    }
    if ((policy.method == StepMethod::CONST_P_LEFT ||
         policy.method == StepMethod::CONST_P_RIGHT) &&
        problem.dimension() != 2) {
        throw std::invalid_argument("CONST_P policies are defined for 2-D problems only");
    }
    if (static_cast<int>(x1.size()) != problem.dimension()) {
        throw std::invalid_argument("solve: x1 length must match problem dimension");
    }

    SolveTrace trace;
    std::vector<double> x = std::move(x1);
    std::vector<double> g = problem.gradient(x);
    std::vector<double> x_prev, g_prev;
    const double gnorm1 = norm2(g);
    const double lambda_min = problem.lambda_min();

    double prev_bb1 = 0.0;
    double prev_bb2 = 0.0;

    for (int k = 1;; ++k) {
        const double f = problem.objective(x);
        const double gnorm = norm2(g);
        if (options.observer) options.observer(k, x, g);

        if (!std::isfinite(f) || !std::isfinite(gnorm) || !all_finite(x)) {
            trace.records.push_back({k, f, gnorm, kNaN, kNaN, kNaN});
            trace.status = SolveStatus::NumericalBreakdown;
            trace.iterations = k - 1;
            return trace;
        }
        if (gnorm <= options.tol * gnorm1) {
            trace.records.push_back({k, f, gnorm, kNaN, kNaN, kNaN});
            trace.status = SolveStatus::Converged;
            trace.iterations = k - 1;
            return trace;
        }
        if (k - 1 == options.max_iterations) {
            trace.records.push_back({k, f, gnorm, kNaN, kNaN, kNaN});
            trace.status = SolveStatus::MaxIterations;
            trace.iterations = options.max_iterations;
            return trace;
        }

        double alpha;
        if (k == 1) {
            alpha = initial_scalar(problem, g);
            prev_bb1 = alpha;  // seeds the k = 2 ML/MR truncation
            prev_bb2 = alpha;
        } else {
            StepMemory mem;
            try {
                mem = build_memory(x_prev, x, g_prev, g);
                alpha = policy_scalar(problem, policy, mem, g_prev, prev_bb1, prev_bb2);
            } catch (const CurvatureError&) {
                trace.records.push_back({k, f, gnorm, kNaN, kNaN, kNaN});
                trace.status = SolveStatus::NumericalBreakdown;
                trace.iterations = k - 1;
                return trace;
            } catch (const DegenerateMemoryError&) {
                trace.records.push_back({k, f, gnorm, kNaN, kNaN, kNaN});
                trace.status = SolveStatus::NumericalBreakdown;
                trace.iterations = k - 1;
                return trace;
            }
            const BBScalars bb = bb_scalars(mem);
            prev_bb1 = bb.bb1;
            prev_bb2 = bb.bb2;
        }
        if (!std::isfinite(alpha) || alpha <= 0.0) {
            trace.records.push_back({k, f, gnorm, kNaN, kNaN, kNaN});
            trace.status = SolveStatus::NumericalBreakdown;
            trace.iterations = k - 1;
            return trace;
        }

        trace.records.push_back({k, f, gnorm, alpha,
                                 1.0 - problem.rayleigh_quotient(g) / alpha,
                                 1.0 - lambda_min / alpha});

        x_prev = x;
        g_prev = g;
        for (int i = 0; i < problem.dimension(); ++i) {
            x[i] = x[i] - g[i] / alpha;
        }
        g = problem.gradient(x);
    }
}

SolveTrace solve(const QuadraticProblem& problem, const StepPolicy& policy,
                 std::vector<double> x1, double tol, int max_iterations) {
    SolveOptions options;
    options.tol = tol;
    options.max_iterations = max_iterations;
    return solve(problem, policy, std::move(x1), options);
}

}  // namespace specstep
