#ifndef BILLIARDS_ORIENTED_LINE_HPP
#define BILLIARDS_ORIENTED_LINE_HPP

#include "billiards/core.hpp"

#include <optional>

namespace billiards {

/// Oriented line {x : <x, n(phi)> = p} with direction angle phi in [0, 2*pi)
/// and left normal n(phi) = (-sin phi, cos phi). (phi + pi, -p) is the same
/// unoriented line traversed the other way.
struct OrientedLine {
    double phi = 0;
    double p = 0;

    static OrientedLine through(const Vec2& point, double direction_angle) {
        const double d = wrap_two_pi(direction_angle);
        return {d, cross2(unit_from_angle(d), point)};
    }

    static OrientedLine through_points(const Vec2& a, const Vec2& b) {
        return through(a, std::atan2(b.y() - a.y(), b.x() - a.x()));
    }

    Vec2 direction() const { return unit_from_angle(phi); }
    Vec2 normal() const { return {-std::sin(phi), std::cos(phi)}; }
    Vec2 closest_point() const { return p * normal(); }
    OrientedLine reversed() const { return {wrap_two_pi(phi + kPi), -p}; }

    double signed_distance(const Vec2& x) const { return x.dot(normal()) - p; }

    Vec2 reflect(const Vec2& x) const {
        return x - 2 * signed_distance(x) * normal();
    }
};

inline std::optional<Vec2> intersect(const OrientedLine& a, const OrientedLine& b) {
    const Vec2 na = a.normal(), nb = b.normal();
    const double det = cross2(na, nb);
    if (std::abs(det) < 1e-14) return std::nullopt;
    // solve na.x = a.p, nb.x = b.p
    return Vec2{(a.p * nb.y() - b.p * na.y()) / det, (b.p * na.x() - a.p * nb.x()) / det};
}

/// Mirror direction angle across the line direction `axis_angle`.
inline double reflect_direction(double incoming, double axis_angle) {
    return wrap_two_pi(2 * axis_angle - incoming);
}

}  // namespace billiards

#endif
