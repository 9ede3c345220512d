#include "specstep/problem.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace specstep {
namespace {

void check_dimension(std::span<const double> x, int n, const char* what) {
    if (static_cast<int>(x.size()) != n) {
        throw std::invalid_argument(std::string(what) + ": expected length " +
                                    std::to_string(n) + ", got " +
                                    std::to_string(x.size()));
    }
}

void check_spectrum(const std::vector<double>& spectrum) {
    if (spectrum.empty()) {
        throw std::invalid_argument("spectrum must be nonempty");
    }
    for (double lam : spectrum) {
        if (!(lam > 0.0) || !std::isfinite(lam)) {
            throw std::invalid_argument("spectrum entries must be finite and positive");
        }
    }
}

double dot(std::span<const double> a, std::span<const double> b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

}  // namespace

QuadraticProblem QuadraticProblem::from_spectrum(std::vector<double> spectrum,
                                                 std::vector<double> x_star) {
    check_spectrum(spectrum);
    if (x_star.size() != spectrum.size()) {
        throw std::invalid_argument("x_star length must match spectrum length");
    }
    std::sort(spectrum.begin(), spectrum.end(), std::greater<>());
    QuadraticProblem p;
    p.n_ = static_cast<int>(spectrum.size());
    p.spectrum_ = std::move(spectrum);
    p.x_star_ = std::move(x_star);
    return p;
}

QuadraticProblem QuadraticProblem::log_spectrum(int n, double ncond) {
    if (n < 2) {
        throw std::invalid_argument("log_spectrum requires n >= 2");
    }
    if (!(ncond >= 0.0) || !std::isfinite(ncond)) {
        throw std::invalid_argument("ncond must be finite and nonnegative");
    }
    std::vector<double> spectrum(n);
    for (int i = 1; i <= n; ++i) {
        spectrum[i - 1] = std::pow(10.0, ncond / (n - 1) * (n - i));
    }
    return from_spectrum(std::move(spectrum), std::vector<double>(n, 1.0));
}

QuadraticProblem QuadraticProblem::from_dense(std::vector<double> hessian,
                                              std::vector<double> spectrum,
                                              std::vector<double> x_star) {
    check_spectrum(spectrum);
    const int n = static_cast<int>(spectrum.size());
    if (static_cast<int>(hessian.size()) != n * n) {
        throw std::invalid_argument("dense Hessian must be n x n");
    }
    if (static_cast<int>(x_star.size()) != n) {
        throw std::invalid_argument("x_star length must match spectrum length");
    }
    double max_abs = 0.0;
    for (double v : hessian) max_abs = std::max(max_abs, std::abs(v));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double a = hessian[i * n + j];
            const double b = hessian[j * n + i];
            if (std::abs(a - b) > 1e-12 * std::max(1.0, max_abs)) {
                throw std::invalid_argument("dense Hessian is not symmetric");
            }
            const double sym = 0.5 * (a + b);
            hessian[i * n + j] = sym;
            hessian[j * n + i] = sym;
        }
    }
    std::sort(spectrum.begin(), spectrum.end(), std::greater<>());
    // Diagonal entries of an SPD matrix lie inside its spectral interval;
    // a violation means the supplied eigenvalues do not belong to this matrix.
    for (int i = 0; i < n; ++i) {
        const double d = hessian[i * n + i];
        if (d < spectrum.back() * (1.0 - 1e-10) ||
            d > spectrum.front() * (1.0 + 1e-10)) {
            throw std::invalid_argument(
                "dense Hessian diagonal leaves the supplied spectral interval");
        }
    }
    QuadraticProblem p;
    p.n_ = n;
    p.spectrum_ = std::move(spectrum);
    p.x_star_ = std::move(x_star);
    p.hessian_ = std::move(hessian);
    return p;
}

std::vector<double> QuadraticProblem::gradient(std::span<const double> x) const {
    check_dimension(x, n_, "gradient");
    std::vector<double> g(n_);
    if (hessian_.empty()) {
        for (int i = 0; i < n_; ++i) g[i] = spectrum_[i] * (x[i] - x_star_[i]);
        return g;
    }
    std::vector<double> d(n_);
    for (int i = 0; i < n_; ++i) d[i] = x[i] - x_star_[i];
    for (int i = 0; i < n_; ++i) {
        double acc = 0.0;
        for (int j = 0; j < n_; ++j) acc += hessian_[i * n_ + j] * d[j];
        g[i] = acc;
    }
    return g;
}

double QuadraticProblem::objective(std::span<const double> x) const {
    check_dimension(x, n_, "objective");
    if (hessian_.empty()) {
        double acc = 0.0;
        for (int i = 0; i < n_; ++i) {
            const double d = x[i] - x_star_[i];
            acc += spectrum_[i] * d * d;
        }
        return 0.5 * acc;
    }
    std::vector<double> d(n_);
    for (int i = 0; i < n_; ++i) d[i] = x[i] - x_star_[i];
    const std::vector<double> ad = apply_hessian(d);
    return 0.5 * dot(d, ad);
}

std::vector<double> QuadraticProblem::apply_hessian(std::span<const double> v) const {
    check_dimension(v, n_, "apply_hessian");
    std::vector<double> out(n_);
    if (hessian_.empty()) {
        for (int i = 0; i < n_; ++i) out[i] = spectrum_[i] * v[i];
        return out;
    }
    for (int i = 0; i < n_; ++i) {
        double acc = 0.0;
        for (int j = 0; j < n_; ++j) acc += hessian_[i * n_ + j] * v[j];
        out[i] = acc;
    }
    return out;
}

double QuadraticProblem::rayleigh_quotient(std::span<const double> v) const {
    check_dimension(v, n_, "rayleigh_quotient");
    const std::vector<double> av = apply_hessian(v);
    const double vv = dot(v, v);
    if (vv == 0.0) {
        throw std::invalid_argument("rayleigh_quotient of the zero vector");
    }
    return dot(v, av) / vv;
}

double QuadraticProblem::squared_rayleigh_quotient(std::span<const double> v) const {
    check_dimension(v, n_, "squared_rayleigh_quotient");
    const std::vector<double> av = apply_hessian(v);
    const double vav = dot(v, av);
    if (vav == 0.0) {
        throw std::invalid_argument("squared_rayleigh_quotient of the zero vector");
    }
    return dot(av, av) / vav;
}

}  // namespace specstep
