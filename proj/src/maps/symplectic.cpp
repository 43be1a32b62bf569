#include "billiards/maps.hpp"
#include "billiards/numeric.hpp"

#include <vector>

namespace billiards {

ChordState symplectic_map_oval(const Oval& oval, const ChordState& c) {
    const Vec2 Px = oval.position(c.x);
    const Vec2 Ty = oval.derivative(c.y).normalized();

    // roots of g(t) = det(T_y, gamma(t) - gamma(x)): t = x plus the sought z
    auto g = [&](double t) { return cross2(Ty, oval.position(t) - Px); };
    auto dg = [&](double t) { return cross2(Ty, oval.derivative(t)); };

    const double t0 = c.x;
    std::vector<double> roots;
    for (int grid = 256; grid <= 8192; grid *= 2) {
        roots.clear();
        const double h = kTwoPi / grid;
        double prev_t = t0, prev_g = g(prev_t);
        for (int j = 1; j <= grid; ++j) {
            const double t = t0 + j * h;
            const double gt = g(t);
            if ((prev_g <= 0 && gt > 0) || (prev_g >= 0 && gt < 0))
                roots.push_back(newton_bisect(g, dg, prev_t, t, prev_g, gt, 1e-15 * kTwoPi));
            prev_t = t;
            prev_g = gt;
        }
        // discard the trivial root at x (and wrapped copies of it)
        const double pos_tol = 1e-9 * oval.total_length();
        std::vector<double> nontrivial;
        for (double r : roots) {
            if ((oval.position(r) - Px).norm() > pos_tol) nontrivial.push_back(r);
        }
        for (std::size_t i = 1; i < nontrivial.size();) {
            if (std::abs(periodic_diff(nontrivial[i], nontrivial[i - 1], kTwoPi)) < 1e-10)
                nontrivial.erase(nontrivial.begin() + i);
            else
                ++i;
        }
        if (nontrivial.size() == 1) {
            const double z = wrap_two_pi(nontrivial[0]);
            if ((oval.position(z) - oval.position(c.y)).norm() < pos_tol)
                raise(ErrorCode::DegenerateChord, "chord is parallel to the tangent at y");
            return ChordState{c.y, z};
        }
        if (nontrivial.size() > 1) {
            // near-tangent pair: keep the root continuing the orbit, i.e. the
            // smallest positive parameter gap from y
            double best = nontrivial[0];
            double best_gap = wrap_two_pi(best - c.y);
            for (double r : nontrivial) {
                const double gap = wrap_two_pi(r - c.y);
                if (gap < best_gap) { best = r; best_gap = gap; }
            }
            return ChordState{c.y, wrap_two_pi(best)};
        }
    }
    raise(ErrorCode::DegenerateChord, "no reflected chord: tangent at y is parallel to the chord at x");
}

Eigen::Matrix2d symplectic_map_oval_jacobian(const Oval& oval, const ChordState& c,
                                             const ChordState& next) {
    const double z = next.y;
    const Vec2 dy = oval.derivative(c.y);
    const Vec2 denom_v = oval.derivative(z);
    const double denom = cross2(dy, denom_v);
    const Vec2 chord = oval.position(z) - oval.position(c.x);
    Eigen::Matrix2d J;
    J(0, 0) = 0;
    J(0, 1) = 1;
    J(1, 0) = cross2(dy, oval.derivative(c.x)) / denom;
    J(1, 1) = -cross2(oval.second_derivative(c.y), chord) / denom;
    return J;
}

PolygonChord symplectic_map_polygon(const PolygonTable& table, const PolygonChord& c) {
    const auto [ex, offx] = table.edge_coord(c.sigma_x);
    const auto [ey, offy] = table.edge_coord(c.sigma_y);
    const double vtol = 1e-12 * table.diameter();
    if (table.vertex_distance(ex, offx) < vtol || table.vertex_distance(ey, offy) < vtol)
        raise(ErrorCode::VertexHit, "chord endpoint sits on a vertex");

    const Vec2 X = table.point_at(c.sigma_x);
    const Vec2 ei = table.edge_vec(ex).normalized();
    const Vec2 ej = table.edge_vec(ey).normalized();
    // direction along y's edge that enters the polygon from x (interior lies
    // left of each edge of a counterclockwise polygon)
    const double side = cross2(ei, ej);
    if (std::abs(side) < 1e-14)
        raise(ErrorCode::DegenerateChord, "edges of x and y are parallel");
    const Vec2 d = side > 0 ? ej : Vec2(-ej);

    const auto hit = table.ray_hit(X, d, 1e-12 * table.diameter());
    if (!hit) raise(ErrorCode::DegenerateChord, "reflected ray misses the boundary");
    if (table.vertex_distance(hit->edge, hit->offset) < vtol)
        raise(ErrorCode::VertexHit, "reflected chord lands on a vertex");
    return PolygonChord{c.sigma_y, table.sigma_of(hit->edge, hit->offset)};
}

}  // namespace billiards
