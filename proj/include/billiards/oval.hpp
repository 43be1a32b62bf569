#ifndef BILLIARDS_OVAL_HPP
#define BILLIARDS_OVAL_HPP

#include "billiards/core.hpp"

#include <functional>
#include <memory>
#include <variant>

namespace billiards {

enum class CurveKind { Circle, Ellipse, Stadium, SupportFourier, Parametric };

/// Smooth closed strictly convex planar curve, traversed counterclockwise and
/// 2*pi-periodic in its parameter t.
///
/// Representations:
///  - circle(r), ellipse(a, b): trigonometric parametrization;
///  - stadium(l, r): two straights of length 2*l joined by radius-r caps,
///    parametrized proportionally to arclength (kappa >= 0, flat on straights);
///  - support_fourier: h(phi) = c0 + sum a_k cos(k phi) + b_k sin(k phi),
///    parametrized by the outward normal angle phi, so gamma = h*n + h'*t and
///    |gamma'| = h + h'' (the radius of curvature);
///  - parametric: caller-supplied position and derivatives.
///
/// Immutable after construction; all queries are pure and thread-safe. The
/// arclength map is a strictly increasing lift: arclength(t + 2*pi) =
/// arclength(t) + total_length().
class Oval {
public:
    using Fn = std::function<Vec2(double)>;

    static Oval circle(double radius);
    static Oval ellipse(double a, double b);
    static Oval stadium(double half_straight, double cap_radius);
    static Oval support_fourier(Eigen::VectorXd cos_coeffs, Eigen::VectorXd sin_coeffs);
    static Oval parametric(Fn position, Fn derivative, Fn second_derivative);

    Vec2 position(double t) const;
    Vec2 derivative(double t) const;
    Vec2 second_derivative(double t) const;

    /// Direction angle of the positively oriented tangent, in [0, 2*pi).
    double tangent_angle(double t) const;

    /// Signed curvature; strictly positive except on stadium straights.
    double curvature(double t) const;

    double total_length() const { return total_length_; }
    double arclength(double t) const;
    double param_of_arclength(double s) const;

    CurveKind kind() const;

    /// Loose bounding radius about the centroid of the parameter grid;
    /// used to scale tolerances.
    double scale() const { return scale_; }
    Vec2 center() const { return center_; }

private:
    struct Circle { double r; };
    struct Ellipse { double a, b; };
    struct Stadium { double l, r, length; };
    struct Support {
        Eigen::VectorXd ac, as;  // cosine / sine coefficients, ac[0] is the constant term
        double h(double phi) const;
        double dh(double phi, int order) const;
    };
    struct Parametric { Fn pos, d1, d2; };
    using Rep = std::variant<Circle, Ellipse, Stadium, Support, Parametric>;

    explicit Oval(Rep rep);
    void build_tables();
    void validate() const;

    Rep rep_;
    double total_length_ = 0;
    double scale_ = 1;
    Vec2 center_ = Vec2::Zero();
    // Cumulative arclength at t_i = i * 2*pi / n; empty for closed-form kinds.
    Eigen::VectorXd arc_cum_;
};

}  // namespace billiards

#endif
