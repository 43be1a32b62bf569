#ifndef BILLIARDS_NUMERIC_HPP
#define BILLIARDS_NUMERIC_HPP

#include "billiards/core.hpp"

#include <cstdint>
#include <random>

namespace billiards {

// 8-point Gauss-Legendre quadrature over [a, b].
template <class F>
double gauss8(F&& f, double a, double b) {
    static constexpr double x[4] = {0.1834346424956498049394761, 0.5255324099163289858177390,
                                    0.7966664774136267395915539, 0.9602898564975362316835609};
    static constexpr double w[4] = {0.3626837833783619829651504, 0.3137066458778872873379622,
                                    0.2223810344533744705443560, 0.1012285362903762591525314};
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < 4; ++i)
        sum += w[i] * (f(c + h * x[i]) + f(c - h * x[i]));
    return h * sum;
}

// Safeguarded Newton inside a sign-change bracket [lo, hi]; falls back to
// bisection whenever the Newton step leaves the bracket or stalls.
template <class F, class DF>
double newton_bisect(F&& f, DF&& df, double lo, double hi, double flo, double fhi,
                     double xtol, int max_iter = 100) {
    if (flo == 0) return lo;
    if (fhi == 0) return hi;
    if ((flo > 0) == (fhi > 0)) raise(ErrorCode::NoConvergence, "newton_bisect: no sign change");
    double x = 0.5 * (lo + hi);
    double fx = f(x);
    for (int it = 0; it < max_iter; ++it) {
        if ((fx > 0) == (fhi > 0)) { hi = x; fhi = fx; } else { lo = x; flo = fx; }
        if (hi - lo < xtol) return 0.5 * (lo + hi);
        const double d = df(x);
        double xn = x - fx / d;
        if (!(xn > lo && xn < hi) || d == 0) xn = 0.5 * (lo + hi);
        if (std::abs(xn - x) < 0.25 * xtol) return xn;
        x = xn;
        fx = f(x);
        if (fx == 0) return x;
    }
    return 0.5 * (lo + hi);
}

// Central difference with one Richardson extrapolation step.
template <class F>
double central_derivative(F&& f, double x, double h) {
    const double d1 = (f(x + h) - f(x - h)) / (2 * h);
    const double d2 = (f(x + h / 2) - f(x - h / 2)) / h;
    return (4 * d2 - d1) / 3;
}

// Derivative of samples of a smooth periodic function on the uniform grid
// t_j = j * period / n. Fourier differentiation; exact for band-limited data.
Eigen::VectorXd spectral_derivative(const Eigen::VectorXd& values, double period);

// 6th-order centered finite difference on the same periodic grid (fallback
// for families with flagged gaps).
Eigen::VectorXd central_derivative6(const Eigen::VectorXd& values, double period);

// Deterministic splitting of one global seed into independent task streams.
// Scheduling cannot reorder results because each task derives its stream from
// (seed, index) alone.
std::mt19937_64 task_rng(std::uint64_t global_seed, std::uint64_t task_index);

}  // namespace billiards

#endif
