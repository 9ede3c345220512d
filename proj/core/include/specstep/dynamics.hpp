#pragma once

#include <array>
#include <complex>
#include <span>
#include <string>
#include <vector>

namespace specstep {

/// Which extreme-scalar recurrence is analyzed.
enum class RecurrenceKind { Left, Right };

const char* to_string(RecurrenceKind kind);
RecurrenceKind parse_kind(const std::string& name);

/// 2-D model configuration: Hessian diag(lambda, 1) with lambda > 1 and a
/// constant p. The analyzed regime is p in (1, 2); p = 1 is accepted as the
/// BB limit for oracle checks.
struct RecurrenceConfig {
    double lambda = 2.0;
    double p = 1.5;
    RecurrenceKind kind = RecurrenceKind::Left;
};

void validate(const RecurrenceConfig& cfg);

struct FixedPoint {
    double value = 0.0;
    bool exists = false;
    bool at_threshold = false;  // existence threshold hit exactly
};

enum class StabilityLabel { Stable, Unstable, Boundary, NotApplicable };

const char* to_string(StabilityLabel label);

struct ClassifiedFixedPoint {
    FixedPoint point;
    std::complex<double> mu1;
    std::complex<double> mu2;
    StabilityLabel label = StabilityLabel::NotApplicable;
};

/// Stability report for both fixed points of a configuration. `criterion`
/// is q (Left) or gamma (Right); the positive point is stable iff q is in
/// (0,1), respectively gamma in (0,1/2). Its characteristic roots satisfy
/// mu^2 - mu + c = 0 with c = q (Left) or c = 2 gamma (Right).
struct FixedPointReport {
    RecurrenceConfig config;
    double criterion = 0.0;  // NaN when the positive point does not exist
    ClassifiedFixedPoint zero_point;
    ClassifiedFixedPoint positive_point;
};

/// The rational per-step gradient-ratio factor:
///   Left:  u(e) = (1 - lambda (p (e+1) - e)) / (e (lambda - p) - (p - 1))
///   Right: v(e) = (lambda^2 e (p-1) + p - lambda) / (lambda e (p lambda - 1) + p - 1)
/// Throws SingularMapError when the denominator is within 1e-14 of zero.
double map_factor(const RecurrenceConfig& cfg, double eps);

/// The second-order recurrence step: eps_{k+2} = factor(eps_k)^2 * eps_{k+1}.
double iterate_map(const RecurrenceConfig& cfg, double eps_k, double eps_k1);

/// Fixed points: always {0}, plus the positive candidate
///   Left:  (p (lambda+1) - 2) / (lambda (2-p) - p),  exists iff lambda > p/(2-p)
///   Right: (lambda+1-2p) / (lambda (lambda (2p-1) - 1)),  exists iff lambda > 2p-1
/// Existence is strict; hitting the threshold exactly sets at_threshold.
std::vector<FixedPoint> fixed_points(const RecurrenceConfig& cfg);

/// q = 2 (p(lambda+1) - 2)(lambda(2-p) - p) / (p (lambda-1)^2).
double q_criterion(double lambda, double p);

/// gamma = (lambda+1-2p)(lambda(2p-1) - 1) / (p (lambda-1)^2).
double gamma_criterion(double lambda, double p);

FixedPointReport classify_stability(const RecurrenceConfig& cfg);

using Matrix2 = std::array<std::array<double, 2>, 2>;

/// Central-difference Jacobian of the two-component map
/// (a, b) -> (b, factor(a)^2 b) with per-coordinate step
/// h = rel_step * max(scale_floor, |coordinate|). The default matches the
/// O(1)-coordinate regime; pass a smaller scale_floor when differentiating
/// near a fixed point much smaller than 1. Throws SingularMapError when the
/// stencil crosses a pole.
Matrix2 numerical_jacobian(const RecurrenceConfig& cfg, std::array<double, 2> point,
                           double rel_step = 1e-6, double scale_floor = 1.0);

std::array<std::complex<double>, 2> eigenvalues_2x2(const Matrix2& m);

enum class SimBehavior { Converged, Oscillating, Diverging };

const char* to_string(SimBehavior behavior);

struct SimulationResult {
    std::vector<double> values;  // eps_0, eps_1, then the generated sequence
    SimBehavior behavior = SimBehavior::Oscillating;
    double limit = 0.0;          // settled value when Converged, else NaN
    bool hit_pole = false;
};

struct SimulateOptions {
    int settle_window = 50;      // trailing terms inspected for settling
    double settle_tol = 1e-6;    // window spread <= tol * max(1, |last|)
    double divergence_cap = 1e12;
};

/// Brute-force iteration of the recurrence from (eps0, eps1) for `steps`
/// applications. Diverging covers both the cap and a pole hit (see
/// hit_pole).
SimulationResult simulate(const RecurrenceConfig& cfg, double eps0, double eps1,
                          int steps, const SimulateOptions& options = {});

/// Empirical corroboration of the classifier verdict for the positive fixed
/// point: one simulation from the perturbed start (1.1 eps*, 0.9 eps*).
/// A Stable verdict is corroborated when the trajectory settles onto eps*
/// or its distance envelope decays (tail-window max <= 0.95 head-window
/// max); an Unstable verdict is contradicted only by settling onto eps*.
struct AgreementResult {
    bool applicable = false;  // positive fixed point exists
    bool agrees = true;
    SimBehavior behavior = SimBehavior::Oscillating;
    double limit = 0.0;
    bool hit_pole = false;
};

AgreementResult corroborate_classification(const RecurrenceConfig& cfg, int steps = 5000);

/// One grid cell of the stability analysis export.
struct StabilityCell {
    double lambda = 0.0;
    double p = 0.0;
    RecurrenceKind kind = RecurrenceKind::Left;
    FixedPoint positive;
    double criterion = 0.0;
    double mu_abs = 0.0;  // spectral radius of the positive-point linearization
    StabilityLabel label = StabilityLabel::NotApplicable;
    SimBehavior empirical = SimBehavior::Oscillating;
    double empirical_limit = 0.0;
    bool hit_pole = false;
    bool agreement = true;
};

std::vector<StabilityCell> analyze_grid(RecurrenceKind kind,
                                        std::span<const double> lambdas,
                                        std::span<const double> ps,
                                        int sim_steps = 5000);

}  // namespace specstep
