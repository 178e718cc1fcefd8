#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modq/forms.hpp"

using namespace modq;
using namespace modq::forms;

TEST_CASE("Bernoulli numbers") {
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == make_rational(-1, 2));
    CHECK(bernoulli(2) == make_rational(1, 6));
    CHECK(bernoulli(3) == 0);
    CHECK(bernoulli(4) == make_rational(-1, 30));
    CHECK(bernoulli(6) == make_rational(1, 42));
    CHECK(bernoulli(10) == make_rational(5, 66));
    CHECK(bernoulli(12) == make_rational(-691, 2730));
}

TEST_CASE("divisor sums") {
    CHECK(sigma(1, 12) == 28);
    CHECK(sigma(3, 2) == 9);
    CHECK(sigma(0, 36) == 9);
    const auto t = sigma_table(5, 50);
    for (int d = 1; d < 50; ++d) CHECK(t[static_cast<std::size_t>(d)] == sigma(5, d));
}

TEST_CASE("Eisenstein coefficients") {
    const QSeries e2 = eisenstein(2, Normalization::E, 4);
    const QSeries e4 = eisenstein(4, Normalization::E, 4);
    const QSeries e6 = eisenstein(6, Normalization::E, 4);
    CHECK(e2.coeff(1) == -24);
    CHECK(e2.coeff(3) == -96);
    CHECK(e4.coeff(1) == 240);
    CHECK(e4.coeff(2) == 2160);
    CHECK(e4.coeff(3) == 6720);
    CHECK(e6.coeff(1) == -504);
    CHECK(e6.coeff(2) == -16632);
    CHECK(e6.trunc() == 4);
}

TEST_CASE("Ehat normalization") {
    const QSeries h2 = eisenstein(2, Normalization::Ehat, 5);
    CHECK(h2.coeff(0) == make_rational(-1, 24));
    CHECK(h2.coeff(1) == 1);
    const QSeries h4 = eisenstein(4, Normalization::Ehat, 5);
    CHECK(h4.coeff(0) == make_rational(1, 240));
    CHECK(h4.coeff(2) == sigma(3, 2));
}

TEST_CASE("Eisenstein errors") {
    CHECK_THROWS_AS(eisenstein(4, Normalization::G, 5), NormalizationNotExact);
    CHECK_THROWS_AS(eisenstein(5, Normalization::E, 5), Error);
    CHECK_THROWS_AS(eisenstein(0, Normalization::E, 5), Error);
}

TEST_CASE("Delta is Ramanujan's tau series") {
    // tau(n) from prod (1 - q^n)^24, computed independently
    const std::int64_t tau[] = {1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920, 534612};
    const QSeries d = delta(12);
    CHECK(d.coeff(0) == 0);
    for (int n = 1; n <= 11; ++n) CHECK(d.coeff(n) == tau[n - 1]);
}

TEST_CASE("tau is multiplicative") {
    const QSeries d = delta(40);
    for (auto [m, n] : {std::pair{2, 3}, {3, 5}, {4, 9}, {5, 7}, {3, 13}}) {
        CHECK(d.coeff(m * n) == d.coeff(m) * d.coeff(n));
    }
    // Hecke at a prime: tau(p^2) = tau(p)^2 - p^11
    CHECK(d.coeff(4) == d.coeff(2) * d.coeff(2) - 2048);
}

TEST_CASE("eta and its powers") {
    const QSeries e = eta(10);
    CHECK(e.granularity() == 24);
    CHECK(*e.lowest_exponent() == make_rational(1, 24));
    CHECK(e.coeff(make_rational(1, 24)) == 1);
    CHECK(e.coeff(make_rational(25, 24)) == -1);
    CHECK(e.coeff(make_rational(49, 24)) == -1);
    CHECK(e.coeff(make_rational(73, 24)) == 0);
    CHECK(eta_pow(12, 5).granularity() == 2);
    CHECK(eq(eta_pow(24, 20), delta(20), 19));
    CHECK(eq(eta_pow(3, 10) * eta_pow(5, 10), eta_pow(8, 10), 9));
}

TEST_CASE("Jacobi theta of Z") {
    const QSeries t = jacobi_theta_z(6);
    CHECK(t.granularity() == 2);
    CHECK(t.coeff(0) == 1);
    CHECK(t.coeff(make_rational(1, 2)) == 2);
    CHECK(t.coeff(1) == 0);
    CHECK(t.coeff(2) == 2);
    CHECK(t.coeff(make_rational(9, 2)) == 2);
    CHECK(t.trunc() == 12);
}

TEST_CASE("Ramanujan relations at a small order") {
    const QSeries e2 = eisenstein(2, Normalization::E, 25);
    const QSeries e4 = eisenstein(4, Normalization::E, 25);
    const QSeries e6 = eisenstein(6, Normalization::E, 25);
    CHECK(eq(derivative(e2), make_rational(1, 12) * (e2 * e2 - e4), 24));
    CHECK(eq(derivative(e4), make_rational(1, 3) * (e2 * e4 - e6), 24));
    CHECK(eq(derivative(e6), make_rational(1, 2) * (e2 * e6 - e4 * e4), 24));
}
