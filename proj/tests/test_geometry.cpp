#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "billiards/intersect.hpp"
#include "billiards/numeric.hpp"
#include "billiards/oriented_line.hpp"
#include "billiards/polygon.hpp"

#include <random>

using namespace billiards;

namespace {

// Independent oracle: bisection on the ellipse implicit form along a ray.
double ellipse_ray_oracle(double a, double b, const Vec2& P, const Vec2& d) {
    auto impl = [&](double u) {
        const Vec2 x = P + u * d;
        return x.x() * x.x() / (a * a) + x.y() * x.y() / (b * b) - 1.0;
    };
    // walk forward until the implicit form goes positive, then bisect
    double lo = 1e-9, hi = 1e-9;
    double step = 1e-3;
    while (impl(hi) < 0) { lo = hi; hi += step; step *= 1.5; }
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (impl(mid) < 0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

Oval random_support_oval(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Eigen::VectorXd ac(5), as(4);
    ac << 1.0, 0.0, 0.04 * u(rng), 0.03 * u(rng), 0.02 * u(rng);
    as << 0.0, 0.04 * u(rng), 0.03 * u(rng), 0.02 * u(rng);
    return Oval::support_fourier(ac, as);
}

}  // namespace

TEST_CASE("position closed forms") {
    const Oval c = Oval::circle(1.0);
    CHECK((c.position(0.0) - Vec2(1, 0)).norm() < 1e-15);
    const Oval e = Oval::ellipse(2.0, 1.0);
    CHECK((e.position(kPi / 2) - Vec2(0, 1)).norm() < 1e-15);
    // h == 1 is the unit circle
    Eigen::VectorXd ac(1), as(0);
    ac << 1.0;
    const Oval s = Oval::support_fourier(ac, as);
    CHECK((s.position(kPi) - Vec2(-1, 0)).norm() < 1e-14);
}

TEST_CASE("tangent angles") {
    const Oval c = Oval::circle(1.0);
    CHECK(c.tangent_angle(0.0) == doctest::Approx(kPi / 2));
    const Oval e = Oval::ellipse(2.0, 1.0);
    CHECK(e.tangent_angle(0.0) == doctest::Approx(kPi / 2));
    const Oval st = Oval::stadium(1.0, 1.0);
    // middle of the top straight: tangent points leftward
    const double L = st.total_length();
    CHECK(L == doctest::Approx(4.0 + kTwoPi));
    const double s_top = kPi / 2 + 1.0;  // half cap + half straight
    CHECK(st.tangent_angle(s_top * kTwoPi / L) == doctest::Approx(kPi));
    CHECK(st.curvature(s_top * kTwoPi / L) == 0.0);
    CHECK(st.curvature(0.0) == doctest::Approx(1.0));
}

TEST_CASE("stadium junction takes the cap curvature") {
    const Oval st = Oval::stadium(1.0, 0.5);
    const double L = st.total_length();
    const double t_junction = (kPi * 0.5 / 2) * kTwoPi / L;  // end of the first half-cap
    CHECK(st.curvature(t_junction) == doctest::Approx(2.0));
}

TEST_CASE("second_intersection on the circle: diameter and inscribed angle") {
    const Oval c = Oval::circle(1.0);
    CHECK(second_intersection(c, 0.0, kPi) == doctest::Approx(kPi).epsilon(1e-12));
    // chord at incidence pi/3 from t=0: direction = tangent + pi/3
    const double t1 = second_intersection(c, 0.0, kPi / 2 + kPi / 3);
    CHECK(t1 == doctest::Approx(2 * kPi / 3).epsilon(1e-12));
}

TEST_CASE("second_intersection on the ellipse matches the implicit-form bisection oracle") {
    const Oval e = Oval::ellipse(2.0, 1.0);
    const double dir = 3 * kPi / 4;
    const double t_hit = second_intersection(e, 0.0, dir);
    const double u = ellipse_ray_oracle(2.0, 1.0, e.position(0.0), unit_from_angle(dir));
    const Vec2 expected = e.position(0.0) + u * unit_from_angle(dir);
    CHECK((e.position(t_hit) - expected).norm() < 1e-10);
}

TEST_CASE("second_intersection is an involution on unoriented chords") {
    std::mt19937_64 rng = task_rng(7, 1);
    const Oval shapes[] = {Oval::circle(1.0), Oval::ellipse(2.0, 1.0), random_support_oval(rng)};
    std::uniform_real_distribution<double> ut(0.0, kTwoPi), ua(0.05, kPi - 0.05);
    for (const Oval& oval : shapes) {
        for (int i = 0; i < 50; ++i) {
            const double t0 = ut(rng);
            const double dir = oval.tangent_angle(t0) + ua(rng);
            const double t1 = second_intersection(oval, t0, dir);
            const Vec2 back = oval.position(t0) - oval.position(t1);
            const double t0b = second_intersection(oval, t1, std::atan2(back.y(), back.x()));
            CHECK(std::abs(periodic_diff(t0b, t0, kTwoPi)) < 1e-9);
        }
    }
}

TEST_CASE("grazing chords raise TangentialRay") {
    const Oval c = Oval::circle(1.0);
    CHECK_THROWS_WITH_AS((void)second_intersection(c, 0.0, c.tangent_angle(0.0) + 1e-12),
                         doctest::Contains("TangentialRay"), Error);
    CHECK_THROWS_AS((void)second_intersection(c, 0.0, c.tangent_angle(0.0) - 0.3), Error);
}

TEST_CASE("tangent points from an external point, circle closed forms") {
    const Oval c = Oval::circle(1.0);
    const auto [tf, tb] = tangent_points_from_external(c, Vec2(2.0, 0.0));
    CHECK(wrap_two_pi(tf) == doctest::Approx(kPi / 3).epsilon(1e-10));
    CHECK(wrap_two_pi(tb) == doctest::Approx(kTwoPi - kPi / 3).epsilon(1e-10));

    // A on the diagonal: tangency parameters symmetric about pi/4
    const auto [uf, ub] = tangent_points_from_external(c, Vec2(std::sqrt(2.0), std::sqrt(2.0)));
    CHECK(wrap_two_pi(uf + ub) / 2 == doctest::Approx(kPi / 4).epsilon(1e-9));

    CHECK_THROWS_AS((void)tangent_points_from_external(c, Vec2(0.2, 0.1)), Error);
}

TEST_CASE("ellipse tangency matches the support-form oracle") {
    const Oval e = Oval::ellipse(2.0, 1.0);
    const Vec2 A(3.0, 0.0);
    // oracle: tangency normals phi solve h(phi) = <A, n(phi)> with
    // h(phi) = sqrt(a^2 cos^2 + b^2 sin^2) for the ellipse
    auto f = [&](double phi) {
        const double h = std::sqrt(4 * std::cos(phi) * std::cos(phi) + std::sin(phi) * std::sin(phi));
        return h - A.x() * std::cos(phi) - A.y() * std::sin(phi);
    };
    std::vector<double> oracle;
    const int grid = 4096;
    for (int j = 0; j < grid; ++j) {
        double lo = kTwoPi * j / grid, hi = kTwoPi * (j + 1) / grid;
        double flo = f(lo), fhi = f(hi);
        if ((flo <= 0) != (fhi <= 0)) {
            for (int i = 0; i < 100; ++i) {
                const double mid = 0.5 * (lo + hi);
                ((f(mid) <= 0) == (flo <= 0) ? lo : hi) = mid;
            }
            oracle.push_back(0.5 * (lo + hi));
        }
    }
    REQUIRE(oracle.size() == 2);
    const auto [tf, tb] = tangent_points_from_external(e, A);
    // convert oracle normal angles to tangency points and compare positions
    for (double t : {tf, tb}) {
        const Vec2 pt = e.position(t);
        bool matched = false;
        for (double phi : oracle) {
            const Vec2 n = {std::cos(phi), std::sin(phi)};
            const double h = std::sqrt(4 * n.x() * n.x() + n.y() * n.y());
            const Vec2 q = {4 * n.x() / h, n.y() / h};  // tangency point of the support line
            if ((pt - q).norm() < 1e-10) matched = true;
        }
        CHECK(matched);
    }
}

TEST_CASE("tangent lines touch with second-order contact") {
    const Oval e = Oval::ellipse(2.0, 1.0);
    const Vec2 A(2.5, 1.5);
    const auto [tf, tb] = tangent_points_from_external(e, A);
    for (double t : {tf, tb}) {
        const OrientedLine line = OrientedLine::through_points(A, e.position(t));
        CHECK(std::abs(line.signed_distance(A)) < 1e-10);
        CHECK(std::abs(line.signed_distance(e.position(t))) < 1e-10);
        const double d_plus = line.signed_distance(e.position(t + 1e-4));
        const double d_minus = line.signed_distance(e.position(t - 1e-4));
        CHECK(d_plus * d_minus > 0);  // curve stays on one side: tangency
    }
}

TEST_CASE("arclength closed forms and frozen ellipse perimeter") {
    const Oval c = Oval::circle(1.0);
    CHECK(c.arclength(1.3) == doctest::Approx(1.3));
    const Oval c2 = Oval::circle(2.0);
    CHECK(c2.arclength(kPi) == doctest::Approx(kTwoPi));
    const Oval e = Oval::ellipse(2.0, 1.0);
    // adaptive-quadrature oracle value computed ahead of time (mpmath, 30 digits)
    CHECK(e.total_length() == doctest::Approx(9.68844822054767619842850319639).epsilon(1e-9));
}

TEST_CASE("arclength round-trips through param_of_arclength") {
    std::mt19937_64 rng = task_rng(7, 2);
    const Oval shapes[] = {Oval::ellipse(2.0, 1.0), Oval::stadium(1.0, 1.0), random_support_oval(rng)};
    std::uniform_real_distribution<double> us(0.0, 1.0);
    for (const Oval& oval : shapes) {
        const double L = oval.total_length();
        for (int i = 0; i < 1000; ++i) {
            const double s = us(rng) * L;
            const double t = oval.param_of_arclength(s);
            CHECK(std::abs(oval.arclength(t) - s) < 1e-10 * L);
        }
        // lift consistency
        CHECK(oval.arclength(1.0 + kTwoPi) == doctest::Approx(oval.arclength(1.0) + L).epsilon(1e-12));
        CHECK(oval.param_of_arclength(0.3 * L + L) == doctest::Approx(oval.param_of_arclength(0.3 * L) + kTwoPi));
    }
}

TEST_CASE("support representation: curvature radius positive, h'' matches finite differences") {
    std::mt19937_64 rng = task_rng(7, 3);
    const Oval oval = random_support_oval(rng);
    // h(phi) is recoverable from the embedding: h = <gamma(phi), n(phi)>,
    // and the analytic h'' equals |gamma'| - h since rho = h + h''.
    auto h_of = [&](double phi) {
        return oval.position(phi).dot(Vec2{std::cos(phi), std::sin(phi)});
    };
    for (int j = 0; j < 256; ++j) {
        const double t = kTwoPi * j / 256;
        const double rho = 1.0 / oval.curvature(t);
        CHECK(rho > 0);
        const double step = 1e-4;
        const double fd_h2 = (h_of(t + step) - 2 * h_of(t) + h_of(t - step)) / (step * step);
        const double analytic_h2 = oval.derivative(t).norm() - h_of(t);
        CHECK(std::abs(fd_h2 - analytic_h2) < 1e-6);
    }
    Eigen::VectorXd bad(3), none(0);
    bad << 1.0, 0.0, 0.8;  // rho = h + h'' dips negative
    CHECK_THROWS_AS((void)Oval::support_fourier(bad, none), Error);
}

TEST_CASE("oval_contains agrees with geometry") {
    const Oval e = Oval::ellipse(2.0, 1.0);
    CHECK(oval_contains(e, Vec2(0.5, 0.5)));
    CHECK(!oval_contains(e, Vec2(2.5, 0.0)));
    CHECK(!oval_contains(e, Vec2(0.0, 1.5)));
}

TEST_CASE("ray_hit from the interior picks the forward intersection") {
    const Oval c = Oval::circle(1.0);
    const double t = ray_hit(c, Vec2(0.2, 0.0), kPi / 2);
    CHECK((c.position(t) - Vec2(0.2, std::sqrt(1 - 0.04))).norm() < 1e-10);
}

TEST_CASE("oriented lines: representation invariants") {
    const OrientedLine l = OrientedLine::through(Vec2(1.0, 1.0), 0.0);
    CHECK(l.p == doctest::Approx(1.0));  // horizontal line y=1 oriented +x
    CHECK(std::abs(l.signed_distance(Vec2(5.0, 1.0))) < 1e-15);
    const OrientedLine r = l.reversed();
    CHECK(r.phi == doctest::Approx(kPi));
    CHECK(r.p == doctest::Approx(-1.0));
    CHECK(std::abs(r.signed_distance(Vec2(-3.0, 1.0))) < 1e-15);
    const auto x = intersect(l, OrientedLine::through(Vec2(2.0, 0.0), kPi / 2));
    REQUIRE(x.has_value());
    CHECK((*x - Vec2(2.0, 1.0)).norm() < 1e-14);
    CHECK(!intersect(l, OrientedLine::through(Vec2(0.0, 5.0), 0.0)).has_value());
    CHECK((l.reflect(Vec2(0.0, 3.0)) - Vec2(0.0, -1.0)).norm() < 1e-14);
}

TEST_CASE("polygon validation and queries") {
    CHECK_THROWS_AS(PolygonTable({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, -0.5}}), Error);  // self-crossing
    CHECK_THROWS_AS(PolygonTable({{0, 0}, {0, 1}, {1, 1}, {1, 0}}), Error);               // clockwise
    const PolygonTable sq({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    CHECK(sq.perimeter() == doctest::Approx(4.0));
    CHECK(sq.diameter() == doctest::Approx(std::sqrt(2.0)));
    CHECK(sq.contains(Vec2(0.5, 0.5)));
    CHECK(!sq.contains(Vec2(1.5, 0.5)));
    CHECK((sq.point_at(2.5) - Vec2(0.5, 1.0)).norm() < 1e-15);
    const auto hit = sq.ray_hit(Vec2(0.3, 0.0), Vec2(0, 1), 1e-12);
    REQUIRE(hit.has_value());
    CHECK(hit->edge == 2);
    CHECK((hit->point - Vec2(0.3, 1.0)).norm() < 1e-14);
}
