#ifndef BILLIARDS_PARABOLA_TRAP_HPP
#define BILLIARDS_PARABOLA_TRAP_HPP

#include "billiards/phase.hpp"

#include <vector>

namespace billiards {

/// Two confocal coaxial parabolic mirrors opening along +x with the shared
/// focus at the origin: x = y^2 / (4 p) - p. The inner arc (smaller focal
/// parameter) is truncated at |y| <= inner_halfheight, leaving an aperture
/// between its endpoints and the outer arc through which an axis-parallel
/// ray can enter the channel.
struct ParabolaTrap {
    double p_inner = 1.9;
    double p_outer = 2.0;
    double inner_halfheight = 4.0;
    double outer_halfheight = 16.0;

    double x_on_inner(double y) const { return y * y / (4 * p_inner) - p_inner; }
    double x_on_outer(double y) const { return y * y / (4 * p_outer) - p_outer; }
};

struct TrapTrace {
    std::vector<Vec2> points;      // entry point followed by each reflection point
    std::vector<int> mirror;       // 0 = outer, 1 = inner, aligned with reflections
    bool crossed_axis = false;
    bool escaped = false;
    int bounces = 0;
    double min_abs_y = 0;
};

/// Trace an axis-parallel ray (direction pi, i.e. toward the mirrors) for up
/// to n_max optical reflections alternating between the two arcs. Exit and
/// axis crossing are recorded as data, not errors; a ray along the axis
/// itself is rejected as degenerate.
TrapTrace trap_trace(const ParabolaTrap& trap, const Ray& ray, int n_max);

}  // namespace billiards

#endif
