#include "billiards/intersect.hpp"
#include "billiards/maps.hpp"

namespace billiards {

PhasePoint birkhoff_map(const Oval& oval, const PhasePoint& p) {
    const double L = oval.total_length();
    const double t0 = oval.param_of_arclength(p.s);
    const double dir = oval.tangent_angle(t0) + p.alpha;
    const double t1 = second_intersection(oval, t0, dir);

    // angle of the reflected chord at the hit point; equals the incidence
    // angle of the incoming chord by the optical law
    const double theta1 = oval.tangent_angle(t1);
    const double alpha1 = wrap_two_pi(theta1 - dir);

    const double s1_raw = oval.arclength(wrap_two_pi(t1));
    double ds = s1_raw - p.s;
    if (ds <= 0) ds += L;
    const double s_lift = p.s + ds;
    PhasePoint out;
    out.s = wrap_period(s_lift, L);
    out.alpha = alpha1;
    out.winding = p.winding + (s_lift >= L ? 1 : 0);
    return out;
}

PhasePoint puck_map(const Oval& oval, double height, const PhasePoint& p) {
    if (height < 0) raise(ErrorCode::Degenerate, "puck height must be nonnegative");
    PhasePoint q = birkhoff_map(oval, p);
    const double sa = std::sin(q.alpha);
    if (sa < kGrazingTol)
        raise(ErrorCode::TangentialRay, "puck shift d*cot(alpha) overflows at grazing incidence");
    const double L = oval.total_length();
    const double shifted = q.lifted(L) + height * std::cos(q.alpha) / sa;
    q.winding = static_cast<long>(std::floor(shifted / L));
    q.s = shifted - q.winding * L;
    return q;
}

double gutkin_defect(const Oval& oval, double delta, int n_samples) {
    if (!(delta > 0 && delta < kPi / 2))
        raise(ErrorCode::Degenerate, "gutkin delta must lie in (0, pi/2)");
    if (n_samples < 1) raise(ErrorCode::InsufficientData, "gutkin_defect needs samples");
    const double L = oval.total_length();
    double worst = 0;
    for (int i = 0; i < n_samples; ++i) {
        PhasePoint p{L * i / n_samples, delta, 0};
        const PhasePoint q = birkhoff_map(oval, p);
        worst = std::max(worst, std::abs(q.alpha - delta));
    }
    return worst;
}

}  // namespace billiards
