#include "billiards/oval.hpp"

#include "billiards/numeric.hpp"

#include <algorithm>

namespace billiards {

namespace {
constexpr int kArcCells = 1024;
}

double Oval::Support::h(double phi) const {
    double v = ac[0];
    for (int k = 1; k < ac.size(); ++k) v += ac[k] * std::cos(k * phi);
    for (int k = 1; k <= as.size(); ++k) v += as[k - 1] * std::sin(k * phi);
    return v;
}

double Oval::Support::dh(double phi, int order) const {
    double v = 0;
    for (int k = 1; k < ac.size(); ++k) {
        const double p = std::pow(double(k), order);
        switch (order % 4) {
            case 1: v += -ac[k] * p * std::sin(k * phi); break;
            case 2: v += -ac[k] * p * std::cos(k * phi); break;
            case 3: v += ac[k] * p * std::sin(k * phi); break;
            default: v += ac[k] * p * std::cos(k * phi); break;
        }
    }
    for (int k = 1; k <= as.size(); ++k) {
        const double p = std::pow(double(k), order);
        switch (order % 4) {
            case 1: v += as[k - 1] * p * std::cos(k * phi); break;
            case 2: v += -as[k - 1] * p * std::sin(k * phi); break;
            case 3: v += -as[k - 1] * p * std::cos(k * phi); break;
            default: v += as[k - 1] * p * std::sin(k * phi); break;
        }
    }
    return v;
}

Oval Oval::circle(double radius) {
    if (!(radius > 0)) raise(ErrorCode::InvalidCurve, "circle radius must be positive");
    return Oval(Rep{Circle{radius}});
}

Oval Oval::ellipse(double a, double b) {
    if (!(a > 0) || !(b > 0)) raise(ErrorCode::InvalidCurve, "ellipse semi-axes must be positive");
    return Oval(Rep{Ellipse{a, b}});
}

Oval Oval::stadium(double half_straight, double cap_radius) {
    if (!(half_straight > 0) || !(cap_radius > 0))
        raise(ErrorCode::InvalidCurve, "stadium parameters must be positive");
    return Oval(Rep{Stadium{half_straight, cap_radius, 4 * half_straight + kTwoPi * cap_radius}});
}

Oval Oval::support_fourier(Eigen::VectorXd cos_coeffs, Eigen::VectorXd sin_coeffs) {
    if (cos_coeffs.size() < 1) raise(ErrorCode::InvalidCurve, "support_fourier needs a constant term");
    return Oval(Rep{Support{std::move(cos_coeffs), std::move(sin_coeffs)}});
}

Oval Oval::parametric(Fn position, Fn derivative, Fn second_derivative) {
    if (!position || !derivative || !second_derivative)
        raise(ErrorCode::InvalidCurve, "parametric oval needs position and two derivatives");
    return Oval(Rep{Parametric{std::move(position), std::move(derivative), std::move(second_derivative)}});
}

Oval::Oval(Rep rep) : rep_(std::move(rep)) {
    build_tables();
    validate();
}

CurveKind Oval::kind() const {
    struct V {
        CurveKind operator()(const Circle&) const { return CurveKind::Circle; }
        CurveKind operator()(const Ellipse&) const { return CurveKind::Ellipse; }
        CurveKind operator()(const Stadium&) const { return CurveKind::Stadium; }
        CurveKind operator()(const Support&) const { return CurveKind::SupportFourier; }
        CurveKind operator()(const Parametric&) const { return CurveKind::Parametric; }
    };
    return std::visit(V{}, rep_);
}

Vec2 Oval::position(double t) const {
    return std::visit(
        [&](const auto& r) -> Vec2 {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, Circle>) {
                return {r.r * std::cos(t), r.r * std::sin(t)};
            } else if constexpr (std::is_same_v<T, Ellipse>) {
                return {r.a * std::cos(t), r.b * std::sin(t)};
            } else if constexpr (std::is_same_v<T, Stadium>) {
                const double L = r.length;
                double s = wrap_period(t, kTwoPi) * L / kTwoPi;
                const double qc = kPi * r.r / 2;  // arclength of half a cap
                if (s < qc) {
                    const double th = s / r.r;
                    return {r.l + r.r * std::cos(th), r.r * std::sin(th)};
                }
                s -= qc;
                if (s < 2 * r.l) return {r.l - s, r.r};
                s -= 2 * r.l;
                if (s < 2 * qc) {
                    const double th = kPi / 2 + s / r.r;
                    return {-r.l + r.r * std::cos(th), r.r * std::sin(th)};
                }
                s -= 2 * qc;
                if (s < 2 * r.l) return {-r.l + s, -r.r};
                s -= 2 * r.l;
                const double th = 3 * kPi / 2 + s / r.r;
                return {r.l + r.r * std::cos(th), r.r * std::sin(th)};
            } else if constexpr (std::is_same_v<T, Support>) {
                const double h = r.h(t);
                const double dh = r.dh(t, 1);
                return {h * std::cos(t) - dh * std::sin(t), h * std::sin(t) + dh * std::cos(t)};
            } else {
                return r.pos(t);
            }
        },
        rep_);
}

Vec2 Oval::derivative(double t) const {
    return std::visit(
        [&](const auto& r) -> Vec2 {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, Circle>) {
                return {-r.r * std::sin(t), r.r * std::cos(t)};
            } else if constexpr (std::is_same_v<T, Ellipse>) {
                return {-r.a * std::sin(t), r.b * std::cos(t)};
            } else if constexpr (std::is_same_v<T, Stadium>) {
                const double L = r.length;
                const double speed = L / kTwoPi;  // |gamma'| is constant for this parametrization
                double s = wrap_period(t, kTwoPi) * L / kTwoPi;
                const double qc = kPi * r.r / 2;
                double th;  // tangent direction angle
                if (s < qc) th = s / r.r + kPi / 2;
                else if (s < qc + 2 * r.l) th = kPi;
                else if (s < 3 * qc + 2 * r.l) th = (s - 2 * r.l) / r.r + kPi / 2;
                else if (s < 3 * qc + 4 * r.l) th = 0;
                else th = (s - 4 * r.l) / r.r + kPi / 2;
                return speed * unit_from_angle(th);
            } else if constexpr (std::is_same_v<T, Support>) {
                const double rho = r.h(t) + r.dh(t, 2);
                return rho * Vec2{-std::sin(t), std::cos(t)};
            } else {
                return r.d1(t);
            }
        },
        rep_);
}

Vec2 Oval::second_derivative(double t) const {
    return std::visit(
        [&](const auto& r) -> Vec2 {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, Circle>) {
                return {-r.r * std::cos(t), -r.r * std::sin(t)};
            } else if constexpr (std::is_same_v<T, Ellipse>) {
                return {-r.a * std::cos(t), -r.b * std::sin(t)};
            } else if constexpr (std::is_same_v<T, Stadium>) {
                const double L = r.length;
                const double speed = L / kTwoPi;
                double s = wrap_period(t, kTwoPi) * L / kTwoPi;
                const double qc = kPi * r.r / 2;
                const double kap = curvature(t) == 0 ? 0.0 : 1.0 / r.r;
                double th;
                if (s < qc) th = s / r.r + kPi / 2;
                else if (s < qc + 2 * r.l) th = kPi;
                else if (s < 3 * qc + 2 * r.l) th = (s - 2 * r.l) / r.r + kPi / 2;
                else if (s < 3 * qc + 4 * r.l) th = 0;
                else th = (s - 4 * r.l) / r.r + kPi / 2;
                // gamma'' = speed^2 * kappa * n, with n the left normal of the tangent
                return speed * speed * kap * Vec2{-std::sin(th), std::cos(th)};
            } else if constexpr (std::is_same_v<T, Support>) {
                const double rho = r.h(t) + r.dh(t, 2);
                const double drho = r.dh(t, 1) + r.dh(t, 3);
                return drho * Vec2{-std::sin(t), std::cos(t)} - rho * Vec2{std::cos(t), std::sin(t)};
            } else {
                return r.d2(t);
            }
        },
        rep_);
}

double Oval::tangent_angle(double t) const {
    const Vec2 d = derivative(t);
    return wrap_two_pi(std::atan2(d.y(), d.x()));
}

double Oval::curvature(double t) const {
    if (const auto* st = std::get_if<Stadium>(&rep_)) {
        const double L = st->length;
        double s = wrap_period(t, kTwoPi) * L / kTwoPi;
        const double qc = kPi * st->r / 2;
        // closed caps, open straights: junction samples take the cap value
        const bool on_straight = (s > qc && s < qc + 2 * st->l) ||
                                 (s > 3 * qc + 2 * st->l && s < 3 * qc + 4 * st->l);
        return on_straight ? 0.0 : 1.0 / st->r;
    }
    const Vec2 d = derivative(t);
    const Vec2 dd = second_derivative(t);
    const double sp = d.norm();
    return cross2(d, dd) / (sp * sp * sp);
}

void Oval::build_tables() {
    // centroid + scale from a coarse sample
    Vec2 c = Vec2::Zero();
    const int m = 256;
    for (int i = 0; i < m; ++i) c += position(kTwoPi * i / m);
    center_ = c / m;
    double sc = 0;
    for (int i = 0; i < m; ++i) sc = std::max(sc, (position(kTwoPi * i / m) - center_).norm());
    scale_ = sc;

    if (const auto* ci = std::get_if<Circle>(&rep_)) {
        total_length_ = kTwoPi * ci->r;
        return;
    }
    if (const auto* st = std::get_if<Stadium>(&rep_)) {
        total_length_ = st->length;
        return;
    }
    arc_cum_.resize(kArcCells + 1);
    arc_cum_[0] = 0;
    const double h = kTwoPi / kArcCells;
    auto speed = [&](double t) { return derivative(t).norm(); };
    for (int i = 0; i < kArcCells; ++i)
        arc_cum_[i + 1] = arc_cum_[i] + gauss8(speed, i * h, (i + 1) * h);
    total_length_ = arc_cum_[kArcCells];
}

double Oval::arclength(double t) const {
    if (const auto* ci = std::get_if<Circle>(&rep_)) return ci->r * t;
    if (std::get_if<Stadium>(&rep_)) return t * total_length_ / kTwoPi;
    const double k = std::floor(t / kTwoPi);
    const double tr = t - k * kTwoPi;
    const double h = kTwoPi / kArcCells;
    int i = std::min(static_cast<int>(tr / h), kArcCells - 1);
    auto speed = [&](double u) { return derivative(u).norm(); };
    return k * total_length_ + arc_cum_[i] + gauss8(speed, i * h, tr);
}

double Oval::param_of_arclength(double s) const {
    if (const auto* ci = std::get_if<Circle>(&rep_)) return s / ci->r;
    if (std::get_if<Stadium>(&rep_)) return s * kTwoPi / total_length_;
    const double k = std::floor(s / total_length_);
    const double sr = s - k * total_length_;
    const auto* begin = arc_cum_.data();
    const auto* it = std::upper_bound(begin, begin + arc_cum_.size(), sr);
    int i = std::max(0, static_cast<int>(it - begin) - 1);
    i = std::min(i, kArcCells - 1);
    const double h = kTwoPi / kArcCells;
    double lo = i * h, hi = (i + 1) * h;
    // Newton on arclength(t) - sr within the cell; the integrand is the speed.
    double t = lo + (sr - arc_cum_[i]) / std::max(arc_cum_[i + 1] - arc_cum_[i], 1e-300) * h;
    for (int it2 = 0; it2 < 60; ++it2) {
        const double g = arclength(t) - sr;
        if (g > 0) hi = t; else lo = t;
        const double sp = derivative(t).norm();
        double tn = t - g / sp;
        if (!(tn > lo && tn < hi)) tn = 0.5 * (lo + hi);
        if (std::abs(tn - t) < 1e-15 * kTwoPi) { t = tn; break; }
        t = tn;
    }
    return t + k * kTwoPi;
}

void Oval::validate() const {
    if (!(total_length_ > 0) || !std::isfinite(total_length_))
        raise(ErrorCode::InvalidCurve, "total length must be positive and finite");
    const bool is_stadium = std::holds_alternative<Stadium>(rep_);
    const int m = 512;
    for (int i = 0; i < m; ++i) {
        const double t = kTwoPi * i / m;
        const double kap = curvature(t);
        if (!std::isfinite(kap) || (is_stadium ? kap < 0 : kap <= 0))
            raise(ErrorCode::InvalidCurve, "curve is not strictly convex at t=" + std::to_string(t));
    }
    // The curvature formula is sign-blind where a support parametrization
    // reverses; check the radius of curvature rho = h + h'' directly.
    if (std::holds_alternative<Support>(rep_)) {
        for (int i = 0; i < m; ++i) {
            const double t = kTwoPi * i / m;
            const double rho = derivative(t).dot(Vec2{-std::sin(t), std::cos(t)});
            if (!(rho > 0))
                raise(ErrorCode::InvalidCurve, "support function has h + h'' <= 0 at phi=" + std::to_string(t));
        }
    }
    // closure, meaningful only for caller-supplied parametrizations
    if (std::holds_alternative<Parametric>(rep_)) {
        for (double t : {0.0, 1.1, 2.7}) {
            if ((position(t + kTwoPi) - position(t)).norm() > 1e-12 * std::max(1.0, scale_))
                raise(ErrorCode::InvalidCurve, "parametric curve is not 2*pi-periodic");
        }
    }
}

}  // namespace billiards
