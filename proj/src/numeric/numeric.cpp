#include "billiards/numeric.hpp"

#include <unsupported/Eigen/FFT>

#include <complex>
#include <vector>

namespace billiards {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::TangentialRay: return "TangentialRay";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::PointInside: return "PointInside";
        case ErrorCode::DegenerateChord: return "DegenerateChord";
        case ErrorCode::VertexHit: return "VertexHit";
        case ErrorCode::NotTransverse: return "NotTransverse";
        case ErrorCode::FixedPointCountMismatch: return "FixedPointCountMismatch";
        case ErrorCode::DegenerateFamily: return "DegenerateFamily";
        case ErrorCode::UnresolvedCusp: return "UnresolvedCusp";
        case ErrorCode::NotNested: return "NotNested";
        case ErrorCode::NotInvariant: return "NotInvariant";
        case ErrorCode::InsufficientData: return "InsufficientData";
        case ErrorCode::ParallelDegenerate: return "ParallelDegenerate";
        case ErrorCode::Degenerate: return "Degenerate";
        case ErrorCode::InvalidCurve: return "InvalidCurve";
        case ErrorCode::ConfigError: return "ConfigError";
    }
    return "Unknown";
}

Eigen::VectorXd spectral_derivative(const Eigen::VectorXd& values, double period) {
    const int n = static_cast<int>(values.size());
    if (n < 2) raise(ErrorCode::InsufficientData, "spectral_derivative needs >= 2 samples");
    Eigen::FFT<double> fft;
    std::vector<std::complex<double>> time(n), freq;
    for (int j = 0; j < n; ++j) time[j] = values[j];
    fft.fwd(freq, time);
    const double base = kTwoPi / period;
    for (int k = 0; k < n; ++k) {
        int m = (k <= n / 2) ? k : k - n;
        if (2 * k == n) m = 0;  // drop the Nyquist mode (its derivative is not representable)
        freq[k] *= std::complex<double>(0.0, m * base);
    }
    std::vector<std::complex<double>> dtime;
    fft.inv(dtime, freq);
    Eigen::VectorXd out(n);
    for (int j = 0; j < n; ++j) out[j] = dtime[j].real();
    return out;
}

Eigen::VectorXd central_derivative6(const Eigen::VectorXd& values, double period) {
    const int n = static_cast<int>(values.size());
    if (n < 7) raise(ErrorCode::InsufficientData, "central_derivative6 needs >= 7 samples");
    const double h = period / n;
    Eigen::VectorXd out(n);
    auto at = [&](int j) { return values[(j % n + n) % n]; };
    for (int j = 0; j < n; ++j) {
        out[j] = (at(j - 3) - 9 * at(j - 2) + 45 * at(j - 1)
                  - 45 * at(j + 1) + 9 * at(j + 2) - at(j + 3)) / (-60.0 * h);
    }
    return out;
}

namespace {
std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}
}  // namespace

std::mt19937_64 task_rng(std::uint64_t global_seed, std::uint64_t task_index) {
    const std::uint64_t s = splitmix64(splitmix64(global_seed) ^ splitmix64(task_index * 0x9e3779b97f4a7c15ULL + 1));
    return std::mt19937_64(s);
}

}  // namespace billiards
