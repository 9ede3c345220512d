#include "specstep/stepsize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "specstep/errors.hpp"

namespace specstep {
namespace {

StepMemory finish_memory(StepMemory mem) {
    if (!std::isfinite(mem.ss) || !std::isfinite(mem.sy) || !std::isfinite(mem.yy)) {
        throw DegenerateMemoryError("step memory has nonfinite inner products");
    }
    if (mem.ss <= 0.0 || mem.yy <= 0.0) {
        throw DegenerateMemoryError("step memory has zero s or y");
    }
    if (mem.sy <= 0.0) {
        throw CurvatureError("nonpositive curvature s'y <= 0");
    }
    const double cos = mem.sy / std::sqrt(mem.ss * mem.yy);
    mem.cos_theta = std::clamp(cos, 0.0, 1.0);
    mem.sin_theta = std::sqrt(1.0 - mem.cos_theta * mem.cos_theta);
    if (mem.sin_theta == 0.0) {
        mem.n_ratio = std::numeric_limits<double>::infinity();
    } else {
        mem.n_ratio = (mem.cos_theta * mem.cos_theta) / (mem.sin_theta * mem.sin_theta);
    }
    return mem;
}

}  // namespace

StepMemory build_memory(std::span<const double> x_prev,
                        std::span<const double> x_cur,
                        std::span<const double> g_prev,
                        std::span<const double> g_cur) {
    const std::size_t n = x_prev.size();
    if (x_cur.size() != n || g_prev.size() != n || g_cur.size() != n) {
        throw std::invalid_argument("build_memory: vector lengths differ");
    }
    if (n == 0) {
        throw std::invalid_argument("build_memory: empty vectors");
    }
    StepMemory mem;
    mem.s.resize(n);
    mem.y.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        mem.s[i] = x_cur[i] - x_prev[i];
        mem.y[i] = g_cur[i] - g_prev[i];
        mem.ss += mem.s[i] * mem.s[i];
        mem.sy += mem.s[i] * mem.y[i];
        mem.yy += mem.y[i] * mem.y[i];
    }
    return finish_memory(std::move(mem));
}

StepMemory memory_from_products(double ss, double sy, double yy) {
    StepMemory mem;
    mem.ss = ss;
    mem.sy = sy;
    mem.yy = yy;
    if (!std::isfinite(ss) || !std::isfinite(sy) || !std::isfinite(yy)) {
        throw DegenerateMemoryError("memory_from_products: nonfinite inner products");
    }
    if (ss <= 0.0 || yy <= 0.0) {
        throw DegenerateMemoryError("memory_from_products: zero s or y");
    }
    if (sy <= 0.0) {
        throw CurvatureError("memory_from_products: nonpositive curvature");
    }
    if (sy * sy > ss * yy * (1.0 + 1e-12)) {
        throw std::invalid_argument("memory_from_products: Cauchy-Schwarz violated");
    }
    return finish_memory(std::move(mem));
}

BBScalars bb_scalars(const StepMemory& mem) {
    return {mem.sy / mem.ss, mem.yy / mem.sy};
}

double vbb_scalar(const StepMemory& mem, double m) {
    if (!(m >= 0.0 && m <= 1.0)) {
        throw std::invalid_argument("vbb_scalar: m must lie in [0, 1]");
    }
    if (m == 0.0) {
        return mem.yy / mem.sy;
    }
    const double b = (2.0 * m - 1.0) * mem.sy;
    const double disc = b * b - 4.0 * m * (m - 1.0) * mem.ss * mem.yy;
    const double root = std::sqrt(disc);
    if (b > 0.0) {
        return (b + root) / (2.0 * m * mem.ss);
    }
    // b <= 0: the conjugate form avoids the cancellation b + root.
    return 2.0 * (1.0 - m) * mem.yy / (root - b);
}

ExtremeM extreme_m(const StepMemory& mem) {
    if (mem.sin_theta == 0.0) {
        throw DegenerateAngleError("extreme_m: parallel s, y (n infinite)");
    }
    const double root = std::sqrt(1.0 + mem.n_ratio);
    return {(1.0 + root) / 2.0, (1.0 - root) / 2.0};
}

LeftRightScalars left_right_scalars(const StepMemory& mem) {
    if (mem.sin_theta >= 1.0) {
        throw DegenerateAngleError("left_right_scalars: angle clamped to pi/2");
    }
    const double bb1 = mem.sy / mem.ss;
    return {bb1 / (1.0 + mem.sin_theta), bb1 / (1.0 - mem.sin_theta)};
}

double phi_residual(const StepMemory& mem, double m, double alpha) {
    return m * mem.ss * alpha * alpha - (2.0 * m - 1.0) * mem.sy * alpha +
           (m - 1.0) * mem.yy;
}

MlMrScalars ml_mr_scalars(const StepMemory& mem, double prev_bb1, double prev_bb2) {
    if (!(prev_bb1 > 0.0) || !(prev_bb2 > 0.0) ||
        !std::isfinite(prev_bb1) || !std::isfinite(prev_bb2)) {
        throw std::invalid_argument("ml_mr_scalars: previous BB values must be positive");
    }
    const LeftRightScalars lr = left_right_scalars(mem);
    return {std::max(prev_bb1, lr.left), std::min(prev_bb2, lr.right)};
}

StepScalars step_scalars(const StepMemory& mem, double m,
                         double prev_bb1, double prev_bb2) {
    const BBScalars bb = bb_scalars(mem);
    const LeftRightScalars lr = left_right_scalars(mem);
    const MlMrScalars mlmr = ml_mr_scalars(mem, prev_bb1, prev_bb2);
    return {bb.bb1, bb.bb2, vbb_scalar(mem, m),
            lr.left, lr.right, mlmr.ml, mlmr.mr};
}

}  // namespace specstep
