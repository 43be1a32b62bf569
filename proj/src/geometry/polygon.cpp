#include "billiards/polygon.hpp"

#include <algorithm>

namespace billiards {

namespace {

// Proper segment intersection test for the simplicity check; shared endpoints
// of adjacent edges are excluded by the caller.
bool segments_cross(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
    auto orient = [](const Vec2& p, const Vec2& q, const Vec2& r) {
        return cross2(q - p, r - p);
    };
    const double o1 = orient(a, b, c), o2 = orient(a, b, d);
    const double o3 = orient(c, d, a), o4 = orient(c, d, b);
    return ((o1 > 0) != (o2 > 0)) && ((o3 > 0) != (o4 > 0));
}

}  // namespace

PolygonTable::PolygonTable(std::vector<Vec2> vertices) : verts_(std::move(vertices)) {
    const int n = size();
    if (n < 3) raise(ErrorCode::InvalidCurve, "polygon needs at least 3 vertices");
    double area2 = 0;
    for (int i = 0; i < n; ++i) area2 += cross2(verts_[i], verts_[(i + 1) % n]);
    if (!(area2 > 0)) raise(ErrorCode::InvalidCurve, "polygon must be counterclockwise with positive area");
    len_.resize(n);
    cum_.resize(n + 1);
    cum_[0] = 0;
    for (int i = 0; i < n; ++i) {
        len_[i] = edge_vec(i).norm();
        if (len_[i] <= 0) raise(ErrorCode::InvalidCurve, "degenerate polygon edge");
        cum_[i + 1] = cum_[i] + len_[i];
    }
    perimeter_ = cum_[n];
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            diameter_ = std::max(diameter_, (verts_[i] - verts_[j]).norm());
    // simplicity: non-adjacent edges must not cross
    for (int i = 0; i < n; ++i) {
        for (int j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;
            if (segments_cross(verts_[i], verts_[(i + 1) % n], verts_[j], verts_[(j + 1) % n]))
                raise(ErrorCode::InvalidCurve, "polygon is self-intersecting");
        }
    }
}

std::pair<int, double> PolygonTable::edge_coord(double sigma) const {
    const double s = wrap_period(sigma, perimeter_);
    const auto it = std::upper_bound(cum_.begin(), cum_.end(), s);
    int i = std::max(0, static_cast<int>(it - cum_.begin()) - 1);
    i = std::min(i, size() - 1);
    return {i, s - cum_[i]};
}

Vec2 PolygonTable::point_at(double sigma) const {
    const auto [i, off] = edge_coord(sigma);
    return verts_[i] + (off / len_[i]) * edge_vec(i);
}

double PolygonTable::sigma_of(int edge, double offset) const {
    return wrap_period(cum_[index(edge)] + offset, perimeter_);
}

bool PolygonTable::contains(const Vec2& p) const {
    // even-odd crossing test
    bool inside = false;
    const int n = size();
    for (int i = 0; i < n; ++i) {
        const Vec2& a = verts_[i];
        const Vec2& b = verts_[(i + 1) % n];
        if ((a.y() > p.y()) != (b.y() > p.y())) {
            const double x = a.x() + (p.y() - a.y()) / (b.y() - a.y()) * (b.x() - a.x());
            if (p.x() < x) inside = !inside;
        }
    }
    return inside;
}

std::optional<PolygonTable::Hit> PolygonTable::ray_hit(const Vec2& from, const Vec2& dir,
                                                       double min_param) const {
    std::optional<Hit> best;
    const int n = size();
    for (int i = 0; i < n; ++i) {
        const Vec2 a = verts_[i];
        const Vec2 e = edge_vec(i);
        const double denom = cross2(dir, e);
        if (std::abs(denom) < 1e-15 * diameter_) continue;  // parallel to the edge
        // from + lam*dir = a + u*e
        const Vec2 w = a - from;
        const double lam = cross2(w, e) / denom;
        const double u = cross2(w, dir) / denom;
        if (lam <= min_param) continue;
        if (u < -1e-12 || u > 1 + 1e-12) continue;
        if (!best || lam < best->ray_param) {
            const double uu = std::clamp(u, 0.0, 1.0);
            best = Hit{i, uu * len_[i], lam, a + uu * e};
        }
    }
    return best;
}

double PolygonTable::vertex_distance(int edge, double offset) const {
    return std::min(offset, len_[index(edge)] - offset);
}

}  // namespace billiards
