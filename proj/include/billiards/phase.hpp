#ifndef BILLIARDS_PHASE_HPP
#define BILLIARDS_PHASE_HPP

#include "billiards/core.hpp"

namespace billiards {

/// Birkhoff coordinates on the phase cylinder: s is the arclength of impact
/// kept canonical in [0, total_length), alpha in (0, pi) is the angle from
/// the positive tangent to the outgoing chord. `winding` counts full turns of
/// the lift, so s + winding * total_length is the lifted coordinate.
struct PhasePoint {
    double s = 0;
    double alpha = kPi / 2;
    long winding = 0;

    double lifted(double total_length) const { return s + winding * total_length; }
};

/// Oriented chord of an oval given by the curve parameters of its endpoints;
/// the orientation runs from x to y.
struct ChordState {
    double x = 0;
    double y = 0;
};

/// Chord of a polygon table in boundary arclength coordinates.
struct PolygonChord {
    double sigma_x = 0;
    double sigma_y = 0;
};

struct Ray {
    Vec2 origin = Vec2::Zero();
    double direction = 0;  // angle, normalized to [0, 2*pi)

    Vec2 dir_vec() const { return unit_from_angle(direction); }
};

}  // namespace billiards

#endif
