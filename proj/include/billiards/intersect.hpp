#ifndef BILLIARDS_INTERSECT_HPP
#define BILLIARDS_INTERSECT_HPP

#include "billiards/oval.hpp"

#include <utility>

namespace billiards {

/// Chords whose incidence sine falls below this are treated as grazing.
inline constexpr double kGrazingTol = 1e-9;

/// Parameter of the second boundary intersection of the chord leaving
/// position(t_from) in the given direction. The ray must point strictly into
/// the enclosed domain. Returns t_hit in (t_from, t_from + 2*pi).
///
/// Throws TangentialRay for grazing chords and NoConvergence if the root
/// cannot be isolated (an invalid curve).
double second_intersection(const Oval& oval, double t_from, double direction);

/// First boundary parameter hit by the ray from `origin` (interior or
/// boundary point) along `direction`; hits closer than ~1e-10 * scale along
/// the ray are ignored so a boundary origin does not shadow the real hit.
double ray_hit(const Oval& oval, const Vec2& origin, double direction);

/// Parameters of the two tangency points of lines through an external point,
/// ordered (forward, backward) for counterclockwise outer-billiard motion:
/// the forward tangency satisfies (gamma(t) - A) . gamma'(t) > 0.
std::pair<double, double> tangent_points_from_external(const Oval& oval, const Vec2& external_point);

bool oval_contains(const Oval& oval, const Vec2& point);

}  // namespace billiards

#endif
