#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "specstep/problem.hpp"

namespace specstep {

enum class StepMethod {
    BB1,
    BB2,
    VBB,
    LEFT,
    RIGHT,
    ML,
    MR,
    CONST_P_LEFT,
    CONST_P_RIGHT,
};

const char* to_string(StepMethod method);
StepMethod parse_method(const std::string& name);

/// Step selection rule. `m` is the VBB weight in [0, 1]; `p` the constant
/// for the CONST_P variants. The analyzed regime is p in (1, 2); the
/// endpoints p = 1 (BB limit) and p = 2 (divergence boundary) are accepted
/// for boundary demonstrations.
struct StepPolicy {
    StepMethod method = StepMethod::BB1;
    double m = 1.0;
    double p = 1.5;

    static StepPolicy bb1() { return {StepMethod::BB1}; }
    static StepPolicy bb2() { return {StepMethod::BB2}; }
    static StepPolicy vbb(double m) { return {StepMethod::VBB, m}; }
    static StepPolicy left() { return {StepMethod::LEFT}; }
    static StepPolicy right() { return {StepMethod::RIGHT}; }
    static StepPolicy ml() { return {StepMethod::ML}; }
    static StepPolicy mr() { return {StepMethod::MR}; }
    static StepPolicy const_p_left(double p) { return {StepMethod::CONST_P_LEFT, 1.0, p}; }
    static StepPolicy const_p_right(double p) { return {StepMethod::CONST_P_RIGHT, 1.0, p}; }
};

/// Throws std::invalid_argument when policy parameters leave their domains.
void validate(const StepPolicy& policy);

enum class SolveStatus {
    Converged,
    MaxIterations,
    NumericalBreakdown,
};

const char* to_string(SolveStatus status);

/// One row per iterate. `alpha` is the scalar used to step away from x_k
/// (the step length is 1/alpha); the terminal row carries NaN since no step
/// is taken from it. `contraction` is 1 - rayleigh(g_k)/alpha and
/// `min_eig_contraction` is 1 - lambda_min/alpha, the damping factor of the
/// slowest gradient mode (the xi/eta diagnostic of the LEFT/RIGHT methods).
struct TraceRecord {
    int k = 0;
    double f = 0.0;
    double gnorm = 0.0;
    double alpha = 0.0;
    double contraction = 0.0;
    double min_eig_contraction = 0.0;
};

struct SolveTrace {
    std::vector<TraceRecord> records;
    SolveStatus status = SolveStatus::MaxIterations;
    int iterations = 0;  // gradient steps taken
};

struct SolveOptions {
    double tol = 1e-9;        // relative: stop when ||g_k|| <= tol ||g_1||
    int max_iterations = 10000;
    /// Called once per iterate with (k, x_k, g_k), terminal iterate included.
    std::function<void(int, std::span<const double>, std::span<const double>)> observer;
};

/// The first iteration's scalar: the Rayleigh quotient g'Ag/g'g of the
/// initial gradient. Throws std::invalid_argument on a zero gradient (the
/// iteration is already converged).
double initial_scalar(const QuadraticProblem& problem, std::span<const double> g1);

/// Run x_{k+1} = x_k - alpha_k^{-1} g_k from x1 under the policy, recording
/// a full trace. Running BB1/BB2 values are maintained every iteration so
/// the ML/MR truncations can consume them; the k = 2 truncation seeds both
/// with the initial Rayleigh quotient. CONST_P policies require a
/// 2-dimensional problem.
SolveTrace solve(const QuadraticProblem& problem, const StepPolicy& policy,
                 std::vector<double> x1, const SolveOptions& options = {});

SolveTrace solve(const QuadraticProblem& problem, const StepPolicy& policy,
                 std::vector<double> x1, double tol, int max_iterations);

}  // namespace specstep
