#pragma once

// Shared helpers for the test binaries: seeded generators for random
// problems/memories and the independent root oracle used against the
// closed-form scalars.

#include <cmath>
#include <random>
#include <vector>

#include "specstep/problem.hpp"
#include "specstep/stepsize.hpp"

namespace testsupport {

/// Uniform double in [0, 1) from the top 53 bits (portable across stdlibs).
inline double unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * unit_double(rng);
}

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// Random diagonal SPD problem with condition number up to 10^max_ncond.
/// The extreme eigenvalues 1 and 10^ncond are always present.
inline specstep::QuadraticProblem random_problem(std::mt19937_64& rng,
                                                 int max_n = 50,
                                                 double max_ncond = 6.0) {
    const int n = uniform_int(rng, 2, max_n);
    const double ncond = uniform(rng, 0.0, max_ncond);
    std::vector<double> spectrum(n);
    spectrum[0] = std::pow(10.0, ncond);
    spectrum[n - 1] = 1.0;
    for (int i = 1; i + 1 < n; ++i) {
        spectrum[i] = std::pow(10.0, uniform(rng, 0.0, ncond));
    }
    std::vector<double> x_star(n);
    for (double& v : x_star) v = uniform(rng, -2.0, 2.0);
    return specstep::QuadraticProblem::from_spectrum(std::move(spectrum),
                                                     std::move(x_star));
}

/// Random dense SPD problem: a diagonal spectrum conjugated by a handful of
/// Givens rotations, so the eigenvalues stay exactly known.
inline specstep::QuadraticProblem random_dense_problem(std::mt19937_64& rng,
                                                       int max_n = 12,
                                                       double max_ncond = 4.0) {
    const int n = uniform_int(rng, 2, max_n);
    const double ncond = uniform(rng, 0.0, max_ncond);
    std::vector<double> spectrum(n);
    spectrum[0] = std::pow(10.0, ncond);
    spectrum[n - 1] = 1.0;
    for (int i = 1; i + 1 < n; ++i) {
        spectrum[i] = std::pow(10.0, uniform(rng, 0.0, ncond));
    }
    std::vector<double> a(n * n, 0.0);
    for (int i = 0; i < n; ++i) a[i * n + i] = spectrum[i];

    const int rotations = 2 * n;
    for (int r = 0; r < rotations; ++r) {
        const int i = uniform_int(rng, 0, n - 2);
        const int j = uniform_int(rng, i + 1, n - 1);
        const double theta = uniform(rng, 0.0, 2.0 * 3.14159265358979323846);
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        // A <- G' A G with G the (i, j) rotation.
        for (int k = 0; k < n; ++k) {  // rows
            const double ai = a[i * n + k];
            const double aj = a[j * n + k];
            a[i * n + k] = c * ai - s * aj;
            a[j * n + k] = s * ai + c * aj;
        }
        for (int k = 0; k < n; ++k) {  // columns
            const double ai = a[k * n + i];
            const double aj = a[k * n + j];
            a[k * n + i] = c * ai - s * aj;
            a[k * n + j] = s * ai + c * aj;
        }
    }
    // Rounding leaves the matrix symmetric only to machine precision.
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double sym = 0.5 * (a[i * n + j] + a[j * n + i]);
            a[i * n + j] = sym;
            a[j * n + i] = sym;
        }
    }
    std::vector<double> x_star(n);
    for (double& v : x_star) v = uniform(rng, -2.0, 2.0);
    return specstep::QuadraticProblem::from_dense(std::move(a), std::move(spectrum),
                                                  std::move(x_star));
}

/// Random valid step memory sampled through its inner products with a
/// uniformly drawn angle cosine in (0, 1].
inline specstep::StepMemory random_memory(std::mt19937_64& rng) {
    const double ss = std::pow(10.0, uniform(rng, -3.0, 3.0));
    const double yy = std::pow(10.0, uniform(rng, -3.0, 3.0));
    const double cos = uniform(rng, 0.01, 1.0);
    const double sy = cos * std::sqrt(ss * yy);
    return specstep::memory_from_products(ss, sy, yy);
}

/// Independent oracle: the unique positive root of the step-selection
/// quadratic located by bisection (uses only phi_residual evaluations).
/// Valid for m in (0, 1]: phi(0+) < 0 and phi(bb2) >= 0.
inline double phi_positive_root_bisect(const specstep::StepMemory& mem, double m) {
    double lo = 1e-300;
    double hi = mem.yy / mem.sy;  // bb2
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (specstep::phi_residual(mem, m, mid) < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

/// Central difference of a scalar function.
template <typename F>
double central_difference(F&& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace testsupport
