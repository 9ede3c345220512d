#pragma once

#include <stdexcept>
#include <string>

namespace specstep {

/// Raised when a step memory has nonpositive curvature (s'y <= 0), which
/// cannot happen for a strictly convex quadratic unless the inputs are
/// degenerate or non-convex.
class CurvatureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when s or y is (numerically) the zero vector.
class DegenerateMemoryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an operation needs sin(theta) strictly inside (0, 1) and the
/// memory angle is degenerate (parallel s, y or a cosine that clamped to 0).
class DegenerateAngleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a rational recurrence map is evaluated at (or across) a pole.
class SingularMapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace specstep
