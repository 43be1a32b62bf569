#include "billiards/intersect.hpp"
#include "billiards/maps.hpp"

namespace billiards {

Vec2 outer_map(const Oval& oval, const Vec2& A) {
    const auto [t_fwd, t_bwd] = tangent_points_from_external(oval, A);
    (void)t_bwd;
    return 2 * oval.position(t_fwd) - A;
}

}  // namespace billiards
