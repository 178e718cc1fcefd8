#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "modq/qseries.hpp"

namespace modq::numeric {

using Complex = std::complex<double>;

/// Element of PSL2(Z); construction checks ad - bc = 1.
class Moebius {
public:
    Moebius(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

    static Moebius identity() { return {1, 0, 0, 1}; }
    static Moebius S() { return {0, -1, 1, 0}; }
    static Moebius T() { return {1, 1, 0, 1}; }

    std::int64_t a() const noexcept { return a_; }
    std::int64_t b() const noexcept { return b_; }
    std::int64_t c() const noexcept { return c_; }
    std::int64_t d() const noexcept { return d_; }

    /// Projective equality: g == -g.
    friend bool operator==(const Moebius& x, const Moebius& y);

private:
    std::int64_t a_, b_, c_, d_;
};

/// Point of the upper half-plane; construction checks im > 0.
class HalfPlanePoint {
public:
    explicit HalfPlanePoint(Complex tau);
    HalfPlanePoint(double x, double y) : HalfPlanePoint(Complex(x, y)) {}
    Complex tau() const noexcept { return tau_; }

private:
    Complex tau_;
};

/// c tau + d
Complex automorphy_factor(const Moebius& g, const HalfPlanePoint& p);

HalfPlanePoint moebius_act(const Moebius& g, const HalfPlanePoint& p);

struct Evaluation {
    Complex value;
    /// Geometric estimate of the dropped tail: |c_max| |q|^{T/N} / (1 - |q|^{1/N}).
    double tail = 0.0;
};

/// sum c_k exp(2 pi i tau k/N) over the stored terms.
Evaluation eval_series(const QSeries& f, const HalfPlanePoint& p);

/// |(c tau + d)^{-k} f(g tau) - f(tau)|
double modularity_residual(const QSeries& f, int weight, const Moebius& g, const HalfPlanePoint& p);

/// 12 c / (2 pi i (c tau + d)), the E2 transformation defect.
Complex e2_anomaly(const Moebius& g, const HalfPlanePoint& p);

/// |(c tau + d)^{-2} E2(g tau) - E2(tau) - 12c/(2 pi i (c tau + d))|
double e2_anomaly_residual(const Moebius& g, const HalfPlanePoint& p, std::int64_t order = 300);

/// Weight-2 modularity residual of E2*(tau) = E2(tau) - 3/(pi im tau).
double e2_star_residual(const Moebius& g, const HalfPlanePoint& p, std::int64_t order = 300);

struct Sample {
    Moebius gamma;
    HalfPlanePoint tau;
};

/// Reproducible (g, tau) draws: |c|, |d| <= max_entry, re tau in [-1/2, 1/2],
/// im tau in [min_im, 2 min_im], and im(g tau) >= min_image_im.
std::vector<Sample> random_samples(std::size_t count, std::uint64_t seed, int max_entry = 5,
                                   double min_im = 1.0, double min_image_im = 0.03);

/// Smoke test for holomorphy at the cusp: no negative exponents, and
/// f(x + iy) approaches the constant term as y grows.
bool bounded_at_infinity(const QSeries& f);

} // namespace modq::numeric
