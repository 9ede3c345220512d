#pragma once

#include <span>
#include <vector>

namespace specstep {

/// One-step history of the gradient iteration: s = x_k - x_{k-1},
/// y = g_k - g_{k-1}, with cached inner products and angle statistics.
///
/// Invariants: ss, yy, sy > 0 (positive curvature), cos_theta in [0, 1]
/// (clamped against rounding), sin_theta = sqrt(1 - cos_theta^2),
/// n_ratio = cos^2/(1 - cos^2) with +inf when sin_theta == 0.
/// The s and y vectors are empty when the memory was built directly from
/// inner products; every scalar below depends only on the products.
struct StepMemory {
    std::vector<double> s;
    std::vector<double> y;
    double ss = 0.0;
    double sy = 0.0;
    double yy = 0.0;
    double cos_theta = 0.0;
    double sin_theta = 0.0;
    double n_ratio = 0.0;
};

/// The two classical scalars: bb1 = s'y/s's <= bb2 = y'y/s'y.
struct BBScalars {
    double bb1;
    double bb2;
};

/// Parameter values at which the step-selection quadratic has a double root:
/// m_upper > 1 and m_lower < 0.
struct ExtremeM {
    double m_upper;
    double m_lower;
};

/// The extreme-root scalars bracketing [bb1, bb2] from outside:
/// left = s'y/(s's (1+sin)) <= bb1, right = s'y/(s's (1-sin)) >= bb2,
/// with left * right == bb1 * bb2.
struct LeftRightScalars {
    double left;
    double right;
};

/// Truncated scalars ml = max(prev_bb1, left), mr = min(prev_bb2, right),
/// confined to the Hessian's spectral interval.
struct MlMrScalars {
    double ml;
    double mr;
};

/// Full per-iteration scalar bundle.
struct StepScalars {
    double bb1;
    double bb2;
    double vbb;
    double alpha_left;
    double alpha_right;
    double alpha_ml;
    double alpha_mr;
};

/// Assemble a StepMemory from consecutive iterates and gradients.
/// Throws DegenerateMemoryError when s or y is zero and CurvatureError when
/// s'y <= 0.
StepMemory build_memory(std::span<const double> x_prev,
                        std::span<const double> x_cur,
                        std::span<const double> g_prev,
                        std::span<const double> g_cur);

/// Assemble a StepMemory directly from the inner products (s and y left
/// empty). The products must be positive and satisfy Cauchy-Schwarz.
StepMemory memory_from_products(double ss, double sy, double yy);

BBScalars bb_scalars(const StepMemory& mem);

/// Positive root of the weighted least-squares quadratic for m in (0, 1];
/// m = 1 gives bb1 exactly and m = 0 maps to bb2 by convention (the m = 0
/// residual is linear with zero at bb2). Throws std::invalid_argument for
/// m outside [0, 1]. The result lies in [bb1, bb2].
double vbb_scalar(const StepMemory& mem, double m);

/// The two m values with vanishing discriminant, (1 +- sqrt(1+n))/2.
/// Throws DegenerateAngleError when sin_theta == 0 (n infinite; all four
/// scalars coincide and no extreme m exists).
ExtremeM extreme_m(const StepMemory& mem);

/// Left/right extreme scalars. When sin_theta == 0 both reduce to bb1
/// (= bb2). Throws DegenerateAngleError if sin_theta >= 1 after clamping.
LeftRightScalars left_right_scalars(const StepMemory& mem);

/// phi(alpha) = m ss alpha^2 - (2m-1) sy alpha + (m-1) yy, the residual of
/// the step-selection quadratic; root oracle for vbb_scalar and
/// left_right_scalars.
double phi_residual(const StepMemory& mem, double m, double alpha);

/// Truncations against the previous iteration's BB values:
/// ml = max(prev_bb1, left), mr = min(prev_bb2, right).
/// Throws std::invalid_argument for nonpositive prev values.
MlMrScalars ml_mr_scalars(const StepMemory& mem, double prev_bb1, double prev_bb2);

/// Convenience bundle of every scalar for one memory.
StepScalars step_scalars(const StepMemory& mem, double m,
                         double prev_bb1, double prev_bb2);

}  // namespace specstep
