#include "billiards/intersect.hpp"

#include "billiards/numeric.hpp"

#include <vector>

namespace billiards {

namespace {

// Collect the parameter roots of f(t) = cross(d, gamma(t) - P) over one
// period starting at t0, i.e. the intersections of the curve with the line
// through P of direction d. A convex curve has at most two.
std::vector<double> line_curve_roots(const Oval& oval, const Vec2& P, const Vec2& d,
                                     double t0, int grid) {
    auto f = [&](double t) { return cross2(d, oval.position(t) - P); };
    auto df = [&](double t) { return cross2(d, oval.derivative(t)); };
    std::vector<double> roots;
    const double h = kTwoPi / grid;
    double prev_t = t0;
    double prev_f = f(prev_t);
    for (int j = 1; j <= grid; ++j) {
        const double t = t0 + j * h;
        const double ft = f(t);
        if ((prev_f <= 0 && ft > 0) || (prev_f >= 0 && ft < 0)) {
            roots.push_back(newton_bisect(f, df, prev_t, t, prev_f, ft, 1e-15 * kTwoPi));
        }
        prev_t = t;
        prev_f = ft;
    }
    return roots;
}

}  // namespace

double second_intersection(const Oval& oval, double t_from, double direction) {
    const Vec2 P = oval.position(t_from);
    const Vec2 d = unit_from_angle(direction);
    const Vec2 tp = oval.derivative(t_from);
    const double sin_inc = cross2(tp.normalized(), d);
    if (sin_inc <= kGrazingTol)
        raise(ErrorCode::TangentialRay,
              "chord does not enter the domain (sin incidence = " + std::to_string(sin_inc) + ")");

    auto f = [&](double t) { return cross2(d, oval.position(t) - P); };
    auto df = [&](double t) { return cross2(d, oval.derivative(t)); };

    // f(t_from) = 0 with f' = -|gamma'| sin_inc < 0, so f is negative on
    // (t_from, t_hit) and positive on (t_hit, t_from + 2*pi). We look for the
    // single minus-to-plus crossing.
    const double eps = 1e-12;
    for (int grid = 256; grid <= 16384; grid *= 2) {
        const double h = kTwoPi / grid;
        double prev_t = t_from + eps * h;
        double prev_f = f(prev_t);
        const double t_end = t_from + kTwoPi - eps * h;
        for (int j = 1; j <= grid; ++j) {
            const double t = std::min(t_from + j * h, t_end);
            const double ft = f(t);
            if (prev_f < 0 && ft >= 0)
                return newton_bisect(f, df, prev_t, t, prev_f, ft, 1e-15 * kTwoPi);
            prev_t = t;
            prev_f = ft;
        }
        // Root hides inside the first or last cell: try a curvature-based
        // local estimate before refining the grid.
        const double fpp = std::abs(cross2(d, oval.second_derivative(t_from)));
        if (fpp > 0) {
            const double dt = 2 * sin_inc * tp.norm() / fpp;
            for (double guess : {t_from + dt, t_from + kTwoPi - dt}) {
                double t = guess;
                bool ok = false;
                for (int it = 0; it < 60; ++it) {
                    const double ft = f(t);
                    const double dft = df(t);
                    if (dft == 0) break;
                    const double tn = t - ft / dft;
                    if (std::abs(tn - t) < 1e-15 * kTwoPi) { t = tn; ok = true; break; }
                    t = tn;
                }
                if (ok && t > t_from + eps && t < t_from + kTwoPi - eps &&
                    std::abs(f(t)) < 1e-10 * oval.total_length() &&
                    (oval.position(t) - P).dot(d) > 0)
                    return t;
            }
        }
    }
    raise(ErrorCode::NoConvergence, "second_intersection failed to isolate the chord endpoint");
}

double ray_hit(const Oval& oval, const Vec2& origin, double direction) {
    const Vec2 d = unit_from_angle(direction);
    const double skip = 1e-10 * oval.total_length();
    for (int grid = 256; grid <= 16384; grid *= 2) {
        const auto roots = line_curve_roots(oval, origin, d, 0.0, grid);
        double best = -1, best_t = 0;
        for (double r : roots) {
            const double fwd = (oval.position(r) - origin).dot(d);
            if (fwd > skip && (best < 0 || fwd < best)) { best = fwd; best_t = r; }
        }
        if (best > 0) return wrap_two_pi(best_t);
    }
    raise(ErrorCode::NoConvergence, "ray does not meet the curve ahead of its origin");
}

std::pair<double, double> tangent_points_from_external(const Oval& oval, const Vec2& A) {
    auto g = [&](double t) { return cross2(oval.derivative(t), A - oval.position(t)); };
    auto dg = [&](double t) { return cross2(oval.second_derivative(t), A - oval.position(t)); };

    std::vector<double> roots;
    for (int grid = 256; grid <= 16384; grid *= 2) {
        roots.clear();
        const double h = kTwoPi / grid;
        double prev_t = 0, prev_g = g(0);
        for (int j = 1; j <= grid; ++j) {
            const double t = j * h;
            const double gt = g(t);
            if ((prev_g <= 0 && gt > 0) || (prev_g >= 0 && gt < 0))
                roots.push_back(newton_bisect(g, dg, prev_t, t, prev_g, gt, 1e-15 * kTwoPi));
            prev_t = t;
            prev_g = gt;
        }
        // merge near-duplicates produced by a sign change straddling a node
        for (std::size_t i = 1; i < roots.size();) {
            if (std::abs(periodic_diff(roots[i], roots[i - 1], kTwoPi)) < 1e-9) roots.erase(roots.begin() + i);
            else ++i;
        }
        if (roots.size() == 2) {
            const bool first_forward = (oval.position(roots[0]) - A).dot(oval.derivative(roots[0])) > 0;
            return first_forward ? std::make_pair(roots[0], roots[1])
                                 : std::make_pair(roots[1], roots[0]);
        }
    }
    if (roots.empty())
        // g keeps one sign: A sees no tangent line, so it is inside or on the curve.
        raise(ErrorCode::PointInside, "point is not strictly outside the curve");
    raise(ErrorCode::NoConvergence, "tangency solver failed");
}

bool oval_contains(const Oval& oval, const Vec2& p) {
    // Inside iff p lies left of every tangent line.
    auto g = [&](double t) { return cross2(oval.derivative(t), p - oval.position(t)); };
    const int grid = 512;
    for (int j = 0; j < grid; ++j)
        if (g(kTwoPi * j / grid) <= 0) return false;
    return true;
}

}  // namespace billiards
