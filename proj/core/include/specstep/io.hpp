#pragma once

#include <span>
#include <string>
#include <vector>

#include "specstep/dynamics.hpp"
#include "specstep/problem.hpp"
#include "specstep/solver.hpp"

namespace specstep {

/// Shortest text that re-parses to the same double (%.17g).
std::string format_double(double v);

/// Problem files: {"n": int, "spectrum": [reals], "x_star": [reals]}.
void write_problem_json(const std::string& path, const QuadraticProblem& problem);
QuadraticProblem read_problem_json(const std::string& path);

/// Trace CSV: header `k,f,gnorm,alpha,contraction`, one row per iterate,
/// full round-trip precision. The terminal row has alpha = nan (no step is
/// taken from the terminal iterate).
void write_trace_csv(const std::string& path, const SolveTrace& trace);

/// Re-parse a trace CSV. min_eig_contraction is not part of the CSV schema
/// and comes back NaN.
std::vector<TraceRecord> read_trace_csv(const std::string& path);

/// Trace JSON with the full record fields plus method/status metadata.
/// Nonfinite values serialize as null.
void write_trace_json(const std::string& path, const SolveTrace& trace,
                      const std::string& method_name);

/// Stability grid export: JSON array of
/// {lambda, p, kind, eps_star, criterion, mu_abs, label, empirical_label,
///  empirical_limit, pole, agreement}.
void write_stability_grid_json(const std::string& path,
                               std::span<const StabilityCell> cells);

}  // namespace specstep
