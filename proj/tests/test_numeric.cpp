#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "billiards/numeric.hpp"

#include <cmath>

using namespace billiards;

TEST_CASE("gauss8 integrates smooth functions to near machine precision") {
    auto f = [](double x) { return std::sin(x); };
    CHECK(gauss8(f, 0.0, kPi / 2) == doctest::Approx(1.0).epsilon(1e-14));
    auto g = [](double x) { return x * x * x * x * x * x * x; };  // degree 7, exact for GL-8
    CHECK(gauss8(g, 0.0, 2.0) == doctest::Approx(256.0 / 8.0).epsilon(1e-14));
}

TEST_CASE("newton_bisect finds bracketed roots") {
    auto f = [](double x) { return std::cos(x) - x; };
    auto df = [](double x) { return -std::sin(x) - 1; };
    const double r = newton_bisect(f, df, 0.0, 1.0, f(0.0), f(1.0), 1e-15);
    CHECK(std::abs(f(r)) < 1e-14);
}

TEST_CASE("spectral derivative is exact on band-limited samples") {
    const int n = 32;
    Eigen::VectorXd v(n);
    for (int j = 0; j < n; ++j) v[j] = std::sin(3 * kTwoPi * j / n) + 0.5 * std::cos(kTwoPi * j / n);
    const Eigen::VectorXd d = spectral_derivative(v, kTwoPi);
    for (int j = 0; j < n; ++j) {
        const double t = kTwoPi * j / n;
        CHECK(d[j] == doctest::Approx(3 * std::cos(3 * t) - 0.5 * std::sin(t)).epsilon(1e-12));
    }
}

TEST_CASE("central_derivative6 converges at 6th order") {
    auto max_err = [](int n) {
        Eigen::VectorXd v(n);
        for (int j = 0; j < n; ++j) v[j] = std::exp(std::sin(kTwoPi * j / n));
        const Eigen::VectorXd d = central_derivative6(v, kTwoPi);
        double err = 0;
        for (int j = 0; j < n; ++j) {
            const double t = kTwoPi * j / n;
            err = std::max(err, std::abs(d[j] - std::cos(t) * std::exp(std::sin(t))));
        }
        return err;
    };
    const double e128 = max_err(128), e256 = max_err(256);
    CHECK(e256 < 1e-9);
    CHECK(e128 / e256 > 40);  // ~2^6 for a 6th-order scheme
}

TEST_CASE("central_derivative with Richardson step") {
    auto f = [](double x) { return std::sin(x); };
    CHECK(central_derivative(f, 1.0, 1e-4) == doctest::Approx(std::cos(1.0)).epsilon(1e-12));
}

TEST_CASE("task_rng streams are deterministic and independent per index") {
    auto a1 = task_rng(42, 0);
    auto a2 = task_rng(42, 0);
    auto b = task_rng(42, 1);
    CHECK(a1() == a2());
    CHECK(a1() != b());
}

TEST_CASE("angle wrapping helpers") {
    CHECK(wrap_two_pi(-0.1) == doctest::Approx(kTwoPi - 0.1));
    CHECK(wrap_period(7.5, 2.0) == doctest::Approx(1.5));
    CHECK(periodic_diff(0.1, kTwoPi - 0.1, kTwoPi) == doctest::Approx(0.2));
    CHECK(periodic_diff(6.0, 0.5, kTwoPi) == doctest::Approx(6.0 - 0.5 - kTwoPi));
}
