#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "modq/qseries.hpp"

using namespace modq;

namespace {

// Random integer-exponent series with small rational coefficients.
QSeries random_series(std::mt19937_64& rng, std::int64_t trunc, std::int64_t lowest = 0, std::int64_t n = 1) {
    std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
    std::map<std::int64_t, Rational> terms;
    for (std::int64_t k = lowest; k < trunc; ++k) {
        Rational c(num(rng), den(rng));
        c.canonicalize();
        terms[k] = c;
    }
    return QSeries(n, terms, trunc);
}

QSeries one() { return QSeries::constant(1); }

} // namespace

TEST_CASE("construction drops zeros and out-of-window keys") {
    const QSeries s(1, {{0, 1}, {1, 0}, {2, 3}, {5, 7}}, 4);
    CHECK(s.terms().size() == 2);
    CHECK(s.trunc() == 4);
    CHECK(s.coeff(1) == 0);
    CHECK(s.coeff(2) == 3);
    CHECK_THROWS_AS(s.coeff(4), OutOfWindow);
    CHECK(*s.valid_below() == 4);
}

TEST_CASE("monomial uses the exponent denominator as granularity") {
    const QSeries m = QSeries::monomial(3, make_rational(1, 2));
    CHECK(m.granularity() == 2);
    CHECK(m.is_exact());
    CHECK(m.coeff(make_rational(1, 2)) == 3);
    CHECK(m.coeff(make_rational(1, 3)) == 0);
}

TEST_CASE("to_string") {
    const QSeries s(1, {{1, 1}, {2, -24}}, 3);
    CHECK(to_string(s) == "q - 24*q^2 + O(q^3)");
    CHECK(to_string(QSeries()) == "0");
}

TEST_CASE("multiplication window is min(T_a + v_b, T_b + v_a)") {
    const QSeries a(1, {{-1, 1}, {0, 2}}, 3);
    const QSeries b(1, {{2, 1}}, 10);
    const QSeries p = a * b;
    CHECK(p.trunc() == std::min(3 + 2, 10 - 1));
    CHECK(p.coeff(1) == 1);
    CHECK(p.coeff(2) == 2);
}

TEST_CASE("ring axioms on random truncated series") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const QSeries a = random_series(rng, 12), b = random_series(rng, 9, -1), c = random_series(rng, 10, 1);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(eq((a * b) * c, a * (b * c), 7));
        CHECK(eq(a * (b + c), a * b + a * c, 7));
        CHECK((a - a).is_zero());
        CHECK(a * one() == a);
    }
}

TEST_CASE("inverse and powers") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        QSeries a = random_series(rng, 10, 0);
        if (a.coeff(0) == 0) a = a + one();
        const QSeries ai = inv(a);
        CHECK(eq(a * ai, one(), 9));
        CHECK(pow(a, 3) == a * a * a);
        CHECK(eq(pow(a, -2) * pow(a, 2), one(), 9));
        CHECK(pow(a, 0) == one());
    }
}

TEST_CASE("inverse of a series with valuation v loses 2v of window") {
    const QSeries a(1, {{2, 1}, {3, 1}}, 10);
    const QSeries ai = inv(a);
    CHECK(*ai.lowest() == -2);
    CHECK(ai.trunc() == 10 - 4);
    CHECK(eq(a * ai, one(), 5));
}

TEST_CASE("inverse errors") {
    CHECK_THROWS_AS(inv(QSeries()), ZeroSeries);
    const QSeries exact(1, {{0, 1}, {1, 1}});
    CHECK_THROWS_AS(inv(exact), InfinitePrecision);
    const QSeries mono = QSeries::monomial(2, 3);
    CHECK(inv(mono) == QSeries::monomial(make_rational(1, 2), -3));
}

TEST_CASE("1/(1-q) = sum q^n") {
    const QSeries a(1, {{0, 1}, {1, -1}}, 20);
    const QSeries ai = inv(a);
    for (int k = 0; k < 20; ++k) CHECK(ai.coeff(k) == 1);
}

TEST_CASE("q d/dq is a derivation") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const QSeries a = random_series(rng, 9, -2), b = random_series(rng, 11, 1);
        CHECK(eq(derivative(a * b), derivative(a) * b + a * derivative(b), 8));
    }
    const QSeries half = QSeries::monomial(1, make_rational(1, 2));
    CHECK(derivative(half) == QSeries::monomial(make_rational(1, 2), make_rational(1, 2)));
}

TEST_CASE("align and granularity") {
    const QSeries a = QSeries::monomial(1, make_rational(1, 2));
    const QSeries b = QSeries::monomial(1, make_rational(1, 3));
    const auto [x, y] = align(a, b);
    CHECK(x.granularity() == 6);
    CHECK(y.granularity() == 6);
    CHECK((a * b).granularity() == 6);
    CHECK((a * b).coeff(make_rational(5, 6)) == 1);
    CHECK((a * a).reduced().granularity() == 1);
    CHECK(a.with_granularity(4).coeff(make_rational(2, 4)) == 1);
}

TEST_CASE("truncation never widens") {
    const QSeries s(1, {{0, 1}, {3, 1}}, 5);
    CHECK(s.truncated(3).trunc() == 3);
    CHECK(s.truncated(9).trunc() == 5);
    CHECK(QSeries::constant(1).truncated(4).trunc() == 4);
}

TEST_CASE("product expansion of prod (1 - q^k) is Euler's pentagonal series") {
    const QSeries p = product_expansion([](std::int64_t) { return 1; }, 30, 0);
    std::map<std::int64_t, int> expected;
    for (int m = -5; m <= 5; ++m) expected[m * (3 * m - 1) / 2] = m % 2 == 0 ? 1 : -1;
    for (int k = 0; k < 30; ++k) CHECK(p.coeff(k) == (expected.count(k) ? expected[k] : 0));
}

TEST_CASE("eq requires both windows") {
    const QSeries a(1, {{0, 1}}, 3);
    CHECK(eq(a, QSeries::constant(1), 2));
    CHECK_THROWS_AS(eq(a, a, 3), OutOfWindow);
}
