#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "modq/forms.hpp"
#include "modq/numeric.hpp"

using namespace modq;
using namespace modq::numeric;
using forms::Normalization;

TEST_CASE("PSL2 elements") {
    CHECK_THROWS_AS(Moebius(1, 1, 1, 1), Error);
    CHECK(Moebius(-1, 0, 0, -1) == Moebius::identity());
    CHECK_FALSE(Moebius::S() == Moebius::T());
    CHECK_THROWS_AS(HalfPlanePoint(0.0, -1.0), Error);
}

TEST_CASE("action on the upper half-plane") {
    const HalfPlanePoint i(0.0, 1.0);
    CHECK(std::abs(moebius_act(Moebius::S(), i).tau() - Complex(0.0, 1.0)) < 1e-15);
    CHECK(std::abs(moebius_act(Moebius::T(), i).tau() - Complex(1.0, 1.0)) < 1e-15);
    const HalfPlanePoint z(0.3, 0.7);
    const Complex w = moebius_act(Moebius(2, 1, 1, 1), z).tau();
    CHECK(std::abs(w - (2.0 * z.tau() + 1.0) / (z.tau() + 1.0)) < 1e-14);
}

TEST_CASE("identity gives zero residual") {
    const QSeries e4 = forms::eisenstein(4, Normalization::E, 50);
    CHECK(modularity_residual(e4, 4, Moebius::identity(), HalfPlanePoint(0.1, 1.2)) == 0.0);
    CHECK(e2_anomaly(Moebius::identity(), HalfPlanePoint(0.1, 1.2)) == Complex(0.0, 0.0));
}

TEST_CASE("E2 anomaly at S") {
    const HalfPlanePoint p(0.05, 1.5);
    CHECK(e2_anomaly_residual(Moebius::S(), p, 300) < 1e-8);
    CHECK(e2_star_residual(Moebius::S(), p, 300) < 1e-8);
    // without the correction E2 is visibly not modular
    const QSeries e2 = forms::eisenstein(2, Normalization::E, 300);
    CHECK(modularity_residual(e2, 2, Moebius::S(), p) > 1e-3);
}

TEST_CASE("modularity at seeded points") {
    const auto samples = random_samples(20, 123);
    const QSeries e4 = forms::eisenstein(4, Normalization::E, 300);
    const QSeries e6 = forms::eisenstein(6, Normalization::E, 300);
    const QSeries d = forms::delta(300);
    for (const auto& s : samples) {
        CHECK(modularity_residual(e4, 4, s.gamma, s.tau) < 1e-8);
        CHECK(modularity_residual(e6, 6, s.gamma, s.tau) < 1e-8);
        CHECK(modularity_residual(d, 12, s.gamma, s.tau) < 1e-8);
        // weight is detected
        CHECK((s.gamma.c() == 0 || modularity_residual(e4, 6, s.gamma, s.tau) > 1e-6));
    }
}

TEST_CASE("samples are reproducible and respect the bounds") {
    const auto a = random_samples(30, 42), b = random_samples(30, 42);
    REQUIRE(a.size() == 30);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].gamma == b[i].gamma);
        CHECK(a[i].tau.tau() == b[i].tau.tau());
        CHECK(std::abs(a[i].gamma.c()) <= 5);
        CHECK(std::abs(a[i].gamma.d()) <= 5);
        CHECK(a[i].tau.tau().imag() >= 1.0);
        CHECK(moebius_act(a[i].gamma, a[i].tau).tau().imag() >= 0.03);
    }
}

TEST_CASE("evaluation respects products within the tail bounds") {
    const QSeries a = forms::eisenstein(4, Normalization::E, 20);
    const QSeries b = forms::delta(20);
    for (double y : {0.5, 1.0, 2.0}) {
        const HalfPlanePoint p(0.2, y);
        const Evaluation ea = eval_series(a, p), eb = eval_series(b, p), eab = eval_series(a * b, p);
        const double bound = eab.tail + ea.tail * std::abs(eb.value) + eb.tail * std::abs(ea.value) + ea.tail * eb.tail;
        CHECK(std::abs(eab.value - ea.value * eb.value) <= bound + 1e-12 * std::abs(eab.value));
    }
    CHECK(eval_series(QSeries::constant(3), HalfPlanePoint(0.0, 1.0)).tail == 0.0);
}

TEST_CASE("boundedness at infinity") {
    CHECK(bounded_at_infinity(forms::eisenstein(6, Normalization::E, 30)));
    CHECK(bounded_at_infinity(forms::delta(30)));
    CHECK_FALSE(bounded_at_infinity(inv(forms::delta(30))));
}
