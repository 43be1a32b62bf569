#ifndef BILLIARDS_CORE_HPP
#define BILLIARDS_CORE_HPP

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <string>

namespace billiards {

using Vec2 = Eigen::Vector2d;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 6.28318530717958647692;

// Scalar cross product of planar vectors.
inline double cross2(const Vec2& a, const Vec2& b) {
    return a.x() * b.y() - a.y() * b.x();
}

inline Vec2 unit_from_angle(double theta) {
    return {std::cos(theta), std::sin(theta)};
}

// Wrap into [0, period).
inline double wrap_period(double x, double period) {
    double r = std::fmod(x, period);
    if (r < 0) r += period;
    if (r >= period) r = 0;  // guard against fmod rounding up to period
    return r;
}

inline double wrap_two_pi(double a) { return wrap_period(a, kTwoPi); }

// Signed difference a - b reduced to (-period/2, period/2].
inline double periodic_diff(double a, double b, double period) {
    double d = std::fmod(a - b, period);
    if (d <= -period / 2) d += period;
    if (d > period / 2) d -= period;
    return d;
}

enum class ErrorCode {
    TangentialRay,
    NoConvergence,
    PointInside,
    DegenerateChord,
    VertexHit,
    NotTransverse,
    FixedPointCountMismatch,
    DegenerateFamily,
    UnresolvedCusp,
    NotNested,
    NotInvariant,
    InsufficientData,
    ParallelDegenerate,
    Degenerate,
    InvalidCurve,
    ConfigError,
};

const char* error_code_name(ErrorCode code);

// All recoverable numerical/geometric failures carry a code so callers can
// branch on the failure kind instead of parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace billiards

#endif
