#include "billiards/parabola_trap.hpp"

#include <cmath>
#include <optional>

namespace billiards {

namespace {

// First intersection of the ray with the arc x = y^2/(4p) - p, |y| <= ymax.
std::optional<std::pair<double, Vec2>> hit_arc(const Vec2& o, const Vec2& d, double p,
                                               double ymax, double min_lam) {
    // quadratic in lam: dy^2/(4p) lam^2 + (y0 dy/(2p) - dx) lam + (y0^2/(4p) - p - x0) = 0
    const double a = d.y() * d.y() / (4 * p);
    const double b = o.y() * d.y() / (2 * p) - d.x();
    const double c = o.y() * o.y() / (4 * p) - p - o.x();
    std::optional<std::pair<double, Vec2>> best;
    auto consider = [&](double lam) {
        if (!(lam > min_lam)) return;
        const Vec2 q = o + lam * d;
        if (std::abs(q.y()) > ymax) return;
        if (!best || lam < best->first) best = {lam, q};
    };
    if (std::abs(a) < 1e-300) {
        if (std::abs(b) > 0) consider(-c / b);
    } else {
        const double disc = b * b - 4 * a * c;
        if (disc >= 0) {
            const double root = std::sqrt(disc);
            // stable quadratic roots
            const double q = -0.5 * (b + (b >= 0 ? root : -root));
            consider(q / a);
            if (q != 0) consider(c / q);
        }
    }
    return best;
}

}  // namespace

TrapTrace trap_trace(const ParabolaTrap& trap, const Ray& ray, int n_max) {
    if (!(trap.p_inner > 0) || !(trap.p_outer > trap.p_inner))
        raise(ErrorCode::Degenerate, "trap needs 0 < p_inner < p_outer");
    if (std::abs(periodic_diff(ray.direction, kPi, kTwoPi)) > 1e-9)
        raise(ErrorCode::Degenerate, "entry ray must be axis-parallel (direction pi)");
    if (ray.origin.y() == 0)
        raise(ErrorCode::Degenerate, "entry along the axis itself is degenerate");

    TrapTrace trace;
    trace.points.push_back(ray.origin);
    trace.min_abs_y = std::abs(ray.origin.y());
    Vec2 pos = ray.origin;
    Vec2 dir = ray.dir_vec();
    const double min_lam = 1e-12 * (trap.p_outer + std::abs(ray.origin.y()));

    for (int k = 0; k < n_max; ++k) {
        const auto outer = hit_arc(pos, dir, trap.p_outer, trap.outer_halfheight, min_lam);
        const auto inner = hit_arc(pos, dir, trap.p_inner, trap.inner_halfheight, min_lam);
        const bool use_inner = inner && (!outer || inner->first < outer->first);
        const auto& hit = use_inner ? inner : outer;
        if (!hit) {
            trace.escaped = true;
            // does the departing ray cross the axis on its way out?
            if (dir.y() != 0 && pos.y() * dir.y() < 0) trace.crossed_axis = true;
            return trace;
        }
        const Vec2 q = hit->second;
        if (pos.y() * q.y() < 0) trace.crossed_axis = true;
        const double p = use_inner ? trap.p_inner : trap.p_outer;
        const Vec2 tangent = Vec2(q.y() / (2 * p), 1.0).normalized();
        dir = 2 * dir.dot(tangent) * tangent - dir;
        pos = q;
        trace.points.push_back(pos);
        trace.mirror.push_back(use_inner ? 1 : 0);
        trace.bounces = k + 1;
        trace.min_abs_y = std::min(trace.min_abs_y, std::abs(pos.y()));
    }
    return trace;
}

}  // namespace billiards
