#include "specstep/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "specstep/errors.hpp"

namespace specstep {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

/// Roots of mu^2 - mu + c = 0.
std::array<std::complex<double>, 2> characteristic_roots(double c) {
    const double disc = 1.0 - 4.0 * c;
    if (disc >= 0.0) {
        const double r = std::sqrt(disc);
        return {std::complex<double>((1.0 - r) / 2.0, 0.0),
                std::complex<double>((1.0 + r) / 2.0, 0.0)};
    }
    const double im = std::sqrt(-disc) / 2.0;
    return {std::complex<double>(0.5, -im), std::complex<double>(0.5, im)};
}

FixedPoint positive_fixed_point(const RecurrenceConfig& cfg) {
    FixedPoint fp;
    if (cfg.kind == RecurrenceKind::Left) {
        const double num = cfg.p * (cfg.lambda + 1.0) - 2.0;
        const double den = cfg.lambda * (2.0 - cfg.p) - cfg.p;
        fp.at_threshold = (den == 0.0);
        fp.exists = den > 0.0;
        fp.value = fp.exists ? num / den : kNaN;
    } else {
        const double num = cfg.lambda + 1.0 - 2.0 * cfg.p;
        const double den = cfg.lambda * (cfg.lambda * (2.0 * cfg.p - 1.0) - 1.0);
        fp.at_threshold = (num == 0.0);
        fp.exists = num > 0.0;
        fp.value = fp.exists ? num / den : kNaN;
    }
    return fp;
}

}  // namespace

const char* to_string(RecurrenceKind kind) {
    return kind == RecurrenceKind::Left ? "LEFT" : "RIGHT";
}

RecurrenceKind parse_kind(const std::string& name) {
    if (name == "LEFT") return RecurrenceKind::Left;
    if (name == "RIGHT") return RecurrenceKind::Right;
    throw std::invalid_argument("unknown recurrence kind: " + name);
}

const char* to_string(StabilityLabel label) {
    switch (label) {
        case StabilityLabel::Stable: return "Stable";
        case StabilityLabel::Unstable: return "Unstable";
        case StabilityLabel::Boundary: return "Boundary";
        case StabilityLabel::NotApplicable: return "NotApplicable";
    }
    return "Unknown";
}

const char* to_string(SimBehavior behavior) {
    switch (behavior) {
        case SimBehavior::Converged: return "ConvergedTo";
        case SimBehavior::Oscillating: return "Oscillating";
        case SimBehavior::Diverging: return "Diverging";
    }
    return "Unknown";
}

void validate(const RecurrenceConfig& cfg) {
    if (!(cfg.lambda > 1.0) || !std::isfinite(cfg.lambda)) {
        throw std::invalid_argument("recurrence lambda must be finite and > 1");
    }
    if (!(cfg.p >= 1.0 && cfg.p < 2.0)) {
        throw std::invalid_argument("recurrence p must lie in [1, 2)");
    }
}

double map_factor(const RecurrenceConfig& cfg, double eps) {
    double num, den;
    if (cfg.kind == RecurrenceKind::Left) {
        num = 1.0 - cfg.lambda * (cfg.p * (eps + 1.0) - eps);
        den = eps * (cfg.lambda - cfg.p) - (cfg.p - 1.0);
    } else {
        num = cfg.lambda * cfg.lambda * eps * (cfg.p - 1.0) + cfg.p - cfg.lambda;
        den = cfg.lambda * eps * (cfg.p * cfg.lambda - 1.0) + cfg.p - 1.0;
    }
    if (std::abs(den) < 1e-14) {
        throw SingularMapError("map_factor: pole of the rational map");
    }
    return num / den;
}

double iterate_map(const RecurrenceConfig& cfg, double eps_k, double eps_k1) {
    if (eps_k < 0.0 || eps_k1 < 0.0) {
        throw std::invalid_argument("iterate_map: eps values must be nonnegative");
    }
    const double u = map_factor(cfg, eps_k);
    return u * u * eps_k1;
}

std::vector<FixedPoint> fixed_points(const RecurrenceConfig& cfg) {
    validate(cfg);
    std::vector<FixedPoint> out;
    out.push_back({0.0, true, false});
    out.push_back(positive_fixed_point(cfg));
    return out;
}

double q_criterion(double lambda, double p) {
    return 2.0 * (p * (lambda + 1.0) - 2.0) * (lambda * (2.0 - p) - p) /
           (p * (lambda - 1.0) * (lambda - 1.0));
}

double gamma_criterion(double lambda, double p) {
    return (lambda + 1.0 - 2.0 * p) * (lambda * (2.0 * p - 1.0) - 1.0) /
           (p * (lambda - 1.0) * (lambda - 1.0));
}

FixedPointReport classify_stability(const RecurrenceConfig& cfg) {
    validate(cfg);
    FixedPointReport report;
    report.config = cfg;

    // Zero point: linearization eigenvalues {0, factor(0)^2}.
    report.zero_point.point = {0.0, true, false};
    report.zero_point.mu1 = 0.0;
    double factor0;
    if (cfg.kind == RecurrenceKind::Left) {
        factor0 = (cfg.lambda * cfg.p - 1.0) / (cfg.p - 1.0);
    } else {
        factor0 = (cfg.p - cfg.lambda) / (cfg.p - 1.0);
    }
    const double g0 = factor0 * factor0;
    report.zero_point.mu2 = g0;
    if (cfg.kind == RecurrenceKind::Left) {
        report.zero_point.label = StabilityLabel::Unstable;
    } else {
        report.zero_point.label = (cfg.lambda < 2.0 * cfg.p - 1.0)
                                      ? StabilityLabel::Stable
                                      : StabilityLabel::Unstable;
    }

    // Positive point: characteristic equation mu^2 - mu + c = 0.
    const FixedPoint fp = positive_fixed_point(cfg);
    report.positive_point.point = fp;
    if (!fp.exists) {
        report.criterion = kNaN;
        report.positive_point.mu1 = kNaN;
        report.positive_point.mu2 = kNaN;
        report.positive_point.label = fp.at_threshold ? StabilityLabel::Boundary
                                                      : StabilityLabel::NotApplicable;
        return report;
    }
    double c;
    if (cfg.kind == RecurrenceKind::Left) {
        report.criterion = q_criterion(cfg.lambda, cfg.p);
        c = report.criterion;
        if (report.criterion < 1.0) {
            report.positive_point.label = StabilityLabel::Stable;
        } else if (report.criterion == 1.0) {
            report.positive_point.label = StabilityLabel::Boundary;
        } else {
            report.positive_point.label = StabilityLabel::Unstable;
        }
    } else {
        report.criterion = gamma_criterion(cfg.lambda, cfg.p);
        c = 2.0 * report.criterion;
        report.positive_point.label = (report.criterion < 0.5)
                                          ? StabilityLabel::Stable
                                          : StabilityLabel::Unstable;
    }
    const auto mu = characteristic_roots(c);
    report.positive_point.mu1 = mu[0];
    report.positive_point.mu2 = mu[1];
    return report;
}

Matrix2 numerical_jacobian(const RecurrenceConfig& cfg, std::array<double, 2> point,
                           double rel_step, double scale_floor) {
    const auto map = [&cfg](double a, double b) -> std::array<double, 2> {
        const double u = map_factor(cfg, a);
        return {b, u * u * b};
    };
    Matrix2 jac{};
    try {
        for (int j = 0; j < 2; ++j) {
            const double h = rel_step * std::max(scale_floor, std::abs(point[j]));
            std::array<double, 2> hi = point;
            std::array<double, 2> lo = point;
            hi[j] += h;
            lo[j] -= h;
            const auto fhi = map(hi[0], hi[1]);
            const auto flo = map(lo[0], lo[1]);
            for (int i = 0; i < 2; ++i) {
                jac[i][j] = (fhi[i] - flo[i]) / (2.0 * h);
            }
        }
    } catch (const SingularMapError&) {
        throw SingularMapError("numerical_jacobian: stencil crossed a pole");
    }
    return jac;
}

std::array<std::complex<double>, 2> eigenvalues_2x2(const Matrix2& m) {
    const double tr = m[0][0] + m[1][1];
    const double det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    const double disc = tr * tr - 4.0 * det;
    if (disc >= 0.0) {
        const double r = std::sqrt(disc);
        return {std::complex<double>((tr - r) / 2.0, 0.0),
                std::complex<double>((tr + r) / 2.0, 0.0)};
    }
    const double im = std::sqrt(-disc) / 2.0;
    return {std::complex<double>(tr / 2.0, -im), std::complex<double>(tr / 2.0, im)};
}

SimulationResult simulate(const RecurrenceConfig& cfg, double eps0, double eps1,
                          int steps, const SimulateOptions& options) {
    validate(cfg);
    if (!(eps0 > 0.0) || !(eps1 > 0.0)) {
        throw std::invalid_argument("simulate: starting values must be positive");
    }
    if (steps < 2) {
        throw std::invalid_argument("simulate: steps must be >= 2");
    }
    SimulationResult result;
    result.values.reserve(static_cast<std::size_t>(steps) + 2);
    result.values.push_back(eps0);
    result.values.push_back(eps1);
    result.limit = kNaN;

    for (int k = 0; k < steps; ++k) {
        const std::size_t m = result.values.size();
        double next;
        try {
            next = iterate_map(cfg, result.values[m - 2], result.values[m - 1]);
        } catch (const SingularMapError&) {
            result.behavior = SimBehavior::Diverging;
            result.hit_pole = true;
            return result;
        }
        result.values.push_back(next);
        if (!std::isfinite(next) || next > options.divergence_cap) {
            result.behavior = SimBehavior::Diverging;
            return result;
        }
    }

    const int w = std::min<int>(options.settle_window,
                                static_cast<int>(result.values.size()));
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (std::size_t i = result.values.size() - w; i < result.values.size(); ++i) {
        lo = std::min(lo, result.values[i]);
        hi = std::max(hi, result.values[i]);
    }
    const double last = result.values.back();
    if (hi - lo <= options.settle_tol * std::max(1.0, std::abs(last))) {
        result.behavior = SimBehavior::Converged;
        result.limit = last;
    } else {
        result.behavior = SimBehavior::Oscillating;
    }
    return result;
}

AgreementResult corroborate_classification(const RecurrenceConfig& cfg, int steps) {
    AgreementResult out;
    const FixedPoint fp = positive_fixed_point(cfg);
    if (!fp.exists) {
        return out;  // nothing to corroborate
    }
    out.applicable = true;

    const FixedPointReport report = classify_stability(cfg);
    const SimulationResult sim = simulate(cfg, 1.1 * fp.value, 0.9 * fp.value, steps);
    out.behavior = sim.behavior;
    out.limit = sim.limit;
    out.hit_pole = sim.hit_pole;

    const bool settled_to_fp =
        sim.behavior == SimBehavior::Converged &&
        std::abs(sim.limit - fp.value) <= 1e-6 * std::max(1.0, fp.value);

    if (report.positive_point.label == StabilityLabel::Stable) {
        // Near-marginal spectral radii (|mu| -> 1) need far more than a few
        // thousand steps to settle; a decaying distance envelope corroborates
        // the verdict in bounded time.
        const std::size_t w = std::max<std::size_t>(50, sim.values.size() / 10);
        double head = 0.0;
        double tail = 0.0;
        for (std::size_t i = 0; i < sim.values.size(); ++i) {
            const double d = std::abs(sim.values[i] - fp.value);
            if (i < w) head = std::max(head, d);
            if (i + w >= sim.values.size()) tail = std::max(tail, d);
        }
        const bool envelope_decayed = tail <= 0.95 * head;
        out.agrees = sim.behavior != SimBehavior::Diverging &&
                     (settled_to_fp || envelope_decayed);
    } else if (report.positive_point.label == StabilityLabel::Unstable) {
        out.agrees = !settled_to_fp;
    } else {
        out.agrees = true;
    }
    return out;
}

std::vector<StabilityCell> analyze_grid(RecurrenceKind kind,
                                        std::span<const double> lambdas,
                                        std::span<const double> ps,
                                        int sim_steps) {
    std::vector<StabilityCell> cells;
    cells.reserve(lambdas.size() * ps.size());
    for (double lambda : lambdas) {
        for (double p : ps) {
            const RecurrenceConfig cfg{lambda, p, kind};
            const FixedPointReport report = classify_stability(cfg);
            StabilityCell cell;
            cell.lambda = lambda;
            cell.p = p;
            cell.kind = kind;
            cell.positive = report.positive_point.point;
            cell.criterion = report.criterion;
            cell.mu_abs = std::max(std::abs(report.positive_point.mu1),
                                   std::abs(report.positive_point.mu2));
            cell.label = report.positive_point.label;
            if (cell.positive.exists) {
                const AgreementResult check = corroborate_classification(cfg, sim_steps);
                cell.empirical = check.behavior;
                cell.empirical_limit = check.limit;
                cell.hit_pole = check.hit_pole;
                cell.agreement = check.agrees;
            } else {
                const SimulationResult sim = simulate(cfg, 1.0, 1.0, sim_steps);
                cell.empirical = sim.behavior;
                cell.empirical_limit = sim.limit;
                cell.hit_pole = sim.hit_pole;
                cell.agreement = true;
            }
            cells.push_back(cell);
        }
    }
    return cells;
}

}  // namespace specstep
