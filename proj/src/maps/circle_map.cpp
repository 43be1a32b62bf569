#include "billiards/maps.hpp"
#include "billiards/numeric.hpp"

#include <vector>

namespace billiards {

namespace {

// Second parameter where the line through gamma(t0) with direction d meets
// the curve. A convex curve admits no second intersection exactly when the
// line is tangent at t0, where the chord involution has a fixed point; the
// continuous extension returns t0 itself there.
double chord_involution(const Oval& oval, double t0, const Vec2& d) {
    const Vec2 P = oval.position(t0);
    auto f = [&](double t) { return cross2(d, oval.position(t) - P); };
    auto df = [&](double t) { return cross2(d, oval.derivative(t)); };
    const double pos_tol = 1e-9 * oval.total_length();
    for (int grid = 512; grid <= 8192; grid *= 2) {
        std::vector<double> roots;
        const double h = kTwoPi / grid;
        double prev_t = t0, prev_f = f(prev_t);
        for (int j = 1; j <= grid; ++j) {
            const double t = t0 + j * h;
            const double ft = f(t);
            if ((prev_f <= 0 && ft > 0) || (prev_f >= 0 && ft < 0))
                roots.push_back(newton_bisect(f, df, prev_t, t, prev_f, ft, 1e-15 * kTwoPi));
            prev_t = t;
            prev_f = ft;
        }
        for (double r : roots) {
            if ((oval.position(r) - P).norm() > pos_tol) return wrap_two_pi(r);
        }
        if (!roots.empty()) break;  // only the trivial root: tangency at t0
    }
    return wrap_two_pi(t0);
}

}  // namespace

double circle_map_f(const Oval& oval, const CircleMapMode& mode, double x) {
    if (const auto* par = std::get_if<CircleMapParallel>(&mode)) {
        if (std::abs(std::sin(par->psi1 - par->psi2)) < 1e-12)
            raise(ErrorCode::Degenerate, "parallel-mode directions must differ mod pi");
        const double t1 = chord_involution(oval, x, unit_from_angle(par->psi1));
        return chord_involution(oval, t1, unit_from_angle(par->psi2));
    }
    const auto& pen = std::get<CircleMapPencil>(mode);
    if ((pen.P - pen.Q).norm() < 1e-14)
        raise(ErrorCode::Degenerate, "pencil points must be distinct");
    const Vec2 g0 = oval.position(x);
    const Vec2 d1 = g0 - pen.P;
    if (d1.norm() < 1e-14) raise(ErrorCode::Degenerate, "pencil point lies on the curve at x");
    const double t1 = chord_involution(oval, x, d1.normalized());
    const Vec2 g1 = oval.position(t1);
    const Vec2 d2 = g1 - pen.Q;
    if (d2.norm() < 1e-14) raise(ErrorCode::Degenerate, "pencil point lies on the curve at F1(x)");
    return chord_involution(oval, t1, d2.normalized());
}

}  // namespace billiards
