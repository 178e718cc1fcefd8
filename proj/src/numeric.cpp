#include "modq/numeric.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "modq/forms.hpp"

namespace modq::numeric {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
    if (b == 0) {
        x = a >= 0 ? 1 : -1;
        y = 0;
        return std::abs(a);
    }
    std::int64_t x1 = 0, y1 = 0;
    const std::int64_t g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

// Evaluation runs in long double: at im(g tau) ~ 0.03 the weight-10 sums
// cancel by a factor ~1e6, which eats most of a double's mantissa.
using Wide = long double;
using WComplex = std::complex<Wide>;
constexpr Wide kTwoPiL = 2.0L * std::numbers::pi_v<long double>;

Wide to_wide(const Integer& z) {
    const double hi = z.get_d();
    const Integer rest = z - Integer(hi);
    return static_cast<Wide>(hi) + static_cast<Wide>(rest.get_d());
}

Wide to_wide(const Rational& r) { return to_wide(r.get_num()) / to_wide(r.get_den()); }

WComplex wide_eval(const QSeries& f, WComplex tau) {
    const Wide x = tau.real();
    const Wide y = tau.imag();
    const Wide n = static_cast<Wide>(f.granularity());
    WComplex sum(0.0L, 0.0L);
    for (const auto& [k, c] : f.terms()) {
        const Wide e = static_cast<Wide>(k) / n;
        // reduce the phase x k / n modulo 1 before scaling by 2 pi
        const Wide turns = std::fmod(x * static_cast<Wide>(k), n) / n;
        sum += to_wide(c) * std::exp(-kTwoPiL * y * e) *
               WComplex(std::cos(kTwoPiL * turns), std::sin(kTwoPiL * turns));
    }
    return sum;
}

WComplex wide_factor(const Moebius& g, WComplex tau) {
    return static_cast<Wide>(g.c()) * tau + static_cast<Wide>(g.d());
}

WComplex wide_image(const Moebius& g, WComplex tau) {
    const WComplex j = wide_factor(g, tau);
    const WComplex image = (static_cast<Wide>(g.a()) * tau + static_cast<Wide>(g.b())) / j;
    return {image.real(), tau.imag() / std::norm(j)};
}

WComplex widen(const HalfPlanePoint& p) { return {p.tau().real(), p.tau().imag()}; }

Complex narrow(WComplex z) { return {static_cast<double>(z.real()), static_cast<double>(z.imag())}; }

} // namespace

Moebius::Moebius(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
    : a_(a), b_(b), c_(c), d_(d) {
    if (a * d - b * c != 1) {
        throw Error("Moebius element needs ad - bc = 1, got " + std::to_string(a * d - b * c));
    }
}

bool operator==(const Moebius& x, const Moebius& y) {
    const bool same = x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
    const bool negated = x.a_ == -y.a_ && x.b_ == -y.b_ && x.c_ == -y.c_ && x.d_ == -y.d_;
    return same || negated;
}

HalfPlanePoint::HalfPlanePoint(Complex tau) : tau_(tau) {
    if (!(tau.imag() > 0.0)) throw Error("point is not in the upper half-plane");
}

Complex automorphy_factor(const Moebius& g, const HalfPlanePoint& p) {
    return static_cast<double>(g.c()) * p.tau() + static_cast<double>(g.d());
}

HalfPlanePoint moebius_act(const Moebius& g, const HalfPlanePoint& p) {
    const Complex num = static_cast<double>(g.a()) * p.tau() + static_cast<double>(g.b());
    const Complex image = num / automorphy_factor(g, p);
    // Im(g tau) = Im(tau) / |c tau + d|^2 exactly; use it to keep the sign robust.
    return HalfPlanePoint(Complex(image.real(), p.tau().imag() / std::norm(automorphy_factor(g, p))));
}

Evaluation eval_series(const QSeries& f, const HalfPlanePoint& p) {
    Evaluation out{narrow(wide_eval(f, widen(p))), 0.0};
    if (!f.is_exact()) {
        double c_max = 0.0;
        for (const auto& [k, c] : f.terms()) c_max = std::max(c_max, std::abs(c.get_d()));
        const double n = static_cast<double>(f.granularity());
        const double abs_q = std::exp(-kTwoPi * p.tau().imag());
        const double t = static_cast<double>(f.trunc()) / n;
        out.tail = c_max * std::pow(abs_q, t) / (1.0 - std::pow(abs_q, 1.0 / n));
    }
    return out;
}

double modularity_residual(const QSeries& f, int weight, const Moebius& g, const HalfPlanePoint& p) {
    const WComplex tau = widen(p);
    const WComplex lhs = std::pow(wide_factor(g, tau), -weight) * wide_eval(f, wide_image(g, tau));
    return static_cast<double>(std::abs(lhs - wide_eval(f, tau)));
}

Complex e2_anomaly(const Moebius& g, const HalfPlanePoint& p) {
    const Complex two_pi_i(0.0, kTwoPi);
    return 12.0 * static_cast<double>(g.c()) / (two_pi_i * automorphy_factor(g, p));
}

double e2_anomaly_residual(const Moebius& g, const HalfPlanePoint& p, std::int64_t order) {
    const QSeries e2 = forms::eisenstein(2, forms::Normalization::E, order);
    const WComplex tau = widen(p);
    const Complex anomaly = e2_anomaly(g, p);
    const WComplex lhs = std::pow(wide_factor(g, tau), -2) * wide_eval(e2, wide_image(g, tau));
    return static_cast<double>(std::abs(lhs - wide_eval(e2, tau) - WComplex(anomaly.real(), anomaly.imag())));
}

double e2_star_residual(const Moebius& g, const HalfPlanePoint& p, std::int64_t order) {
    const QSeries e2 = forms::eisenstein(2, forms::Normalization::E, order);
    auto e2_star = [&](WComplex z) {
        return wide_eval(e2, z) - 3.0L / (std::numbers::pi_v<long double> * z.imag());
    };
    const WComplex tau = widen(p);
    const WComplex lhs = std::pow(wide_factor(g, tau), -2) * e2_star(wide_image(g, tau));
    return static_cast<double>(std::abs(lhs - e2_star(tau)));
}

std::vector<Sample> random_samples(std::size_t count, std::uint64_t seed, int max_entry,
                                   double min_im, double min_image_im) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(-max_entry, max_entry);
    std::uniform_real_distribution<double> re(-0.5, 0.5);
    std::uniform_real_distribution<double> im(min_im, 2.0 * min_im);
    std::vector<Sample> out;
    while (out.size() < count) {
        const std::int64_t c = entry(rng);
        const std::int64_t d = entry(rng);
        std::int64_t x = 0, y = 0;
        if (ext_gcd(c, d, x, y) != 1) continue;
        // a d - b c = 1 with (a, b) = (y, -x) since c x + d y = 1
        const Moebius g(y, -x, c, d);
        const HalfPlanePoint tau(re(rng), im(rng));
        if (moebius_act(g, tau).tau().imag() < min_image_im) continue;
        out.push_back({g, tau});
    }
    return out;
}

bool bounded_at_infinity(const QSeries& f) {
    if (f.lowest() && *f.lowest() < 0) return false;
    const double a0 = f.is_exact() || f.trunc() > 0 ? f.coeff(0).get_d() : 0.0;
    double previous = std::numeric_limits<double>::infinity();
    for (double y : {1.0, 2.0, 4.0, 8.0, 16.0}) {
        const double dev = std::abs(eval_series(f, HalfPlanePoint(0.123, y)).value - a0);
        if (dev > previous * (1.0 + 1e-12) + 1e-300) return false;
        previous = dev;
    }
    return previous < 1e-12 * std::max(1.0, std::abs(a0)) + 1e-30;
}

} // namespace modq::numeric
