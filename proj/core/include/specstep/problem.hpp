#pragma once

#include <span>
#include <vector>

namespace specstep {

/// Strictly convex quadratic instance f(x) = 1/2 (x - x*)' A (x - x*).
///
/// The canonical backing is the spectrum of A with the Hessian understood as
/// diag(lambda_1, ..., lambda_n), lambda_1 >= ... >= lambda_n > 0. A dense
/// symmetric positive definite Hessian can be attached instead (the spectrum
/// must still be supplied, so that spectral bounds stay exact); it is used
/// for rotated-problem property checks.
class QuadraticProblem {
public:
    /// Diagonal problem from a spectrum (sorted nonincreasing on construction).
    static QuadraticProblem from_spectrum(std::vector<double> spectrum,
                                          std::vector<double> x_star);

    /// The log-spaced benchmark spectrum lambda_i = 10^{(ncond/(n-1))(n-i)}
    /// with minimizer x* = 1. Requires n >= 2 (the exponent divides by n-1).
    static QuadraticProblem log_spectrum(int n, double ncond);

    /// Dense SPD problem. `hessian` is row-major n x n, checked symmetric to
    /// 1e-12 relative and symmetrized; `spectrum` are its known eigenvalues.
    static QuadraticProblem from_dense(std::vector<double> hessian,
                                       std::vector<double> spectrum,
                                       std::vector<double> x_star);

    int dimension() const { return n_; }
    const std::vector<double>& spectrum() const { return spectrum_; }
    const std::vector<double>& minimizer() const { return x_star_; }
    bool has_dense_hessian() const { return !hessian_.empty(); }

    double lambda_max() const { return spectrum_.front(); }
    double lambda_min() const { return spectrum_.back(); }
    double condition_number() const { return spectrum_.front() / spectrum_.back(); }

    /// g(x) = A (x - x*).
    std::vector<double> gradient(std::span<const double> x) const;

    /// f(x) = 1/2 (x - x*)' A (x - x*).
    double objective(std::span<const double> x) const;

    std::vector<double> apply_hessian(std::span<const double> v) const;

    /// v'Av / v'v, always inside [lambda_min, lambda_max]. Throws on v = 0.
    double rayleigh_quotient(std::span<const double> v) const;

    /// v'A^2v / v'Av = ||Av||^2 / v'Av. Throws on v = 0.
    double squared_rayleigh_quotient(std::span<const double> v) const;

private:
    QuadraticProblem() = default;

    int n_ = 0;
    std::vector<double> spectrum_;  // nonincreasing
    std::vector<double> x_star_;
    std::vector<double> hessian_;   // row-major, empty for diagonal problems
};

}  // namespace specstep
