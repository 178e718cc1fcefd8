#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "modq/enumgeo.hpp"
#include "modq/forms.hpp"

using namespace modq;
using namespace modq::enumgeo;

TEST_CASE("trivalent graphs and automorphisms") {
    CHECK(validate_trivalent(theta_graph(), 2));
    CHECK(validate_trivalent(genus3_gamma1(), 3));
    CHECK(validate_trivalent(genus3_gamma2(), 3));
    CHECK_FALSE(validate_trivalent(theta_graph(), 3));
    CHECK(multigraph_automorphisms(theta_graph()) == 12);
    CHECK(multigraph_automorphisms(genus3_gamma1()) == 16);
    CHECK(multigraph_automorphisms(genus3_gamma2()) == 24);
    // a single vertex with a loop: one loop flip
    CHECK(multigraph_automorphisms(Multigraph{1, {{0, 0}}}) == 2);
}

TEST_CASE("propagator coefficients") {
    const Propagator p = propagator_coeffs(3, 10);
    CHECK(p.principal == -1);
    REQUIRE(p.terms.size() == 3);
    CHECK(p.terms[0].first == 0);
    CHECK(p.terms[0].second.coeff(0) == make_rational(1, 12));
    CHECK(p.terms[1].first == 2);
    CHECK(p.terms[1].second.coeff(0) == make_rational(-1, 240));
}

TEST_CASE("genus-2 mirror coefficients") {
    // (10 E2^3 - 6 E2 E4 - 4 E6) / (103680 * 12), computed independently
    const QSeries f = mirror_F(2, 6);
    CHECK(f.coeff(0) == 0);
    CHECK(f.coeff(1) == 0);
    CHECK(f.coeff(2) == make_rational(1, 12));
    CHECK(f.coeff(3) == make_rational(2, 3));
    CHECK(f.coeff(4) == make_rational(5, 2));
    CHECK(f.coeff(5) == make_rational(20, 3));
}

TEST_CASE("amplitudes are weight 6g - 6 polynomials") {
    for (auto which : {Amplitude::Theta, Amplitude::Gamma1, Amplitude::Gamma2}) {
        const auto p = amplitude_polynomial(which);
        CHECK(p.weight == (which == Amplitude::Theta ? 6 : 12));
        CHECK(eq(p.to_series(12), graph_amplitude(which, 12), 11));
    }
    CHECK(amplitude_polynomial(Amplitude::Gamma1, Gamma1Reading::AsPrinted) !=
          amplitude_polynomial(Amplitude::Gamma1, Gamma1Reading::E2FourthPower));
}

TEST_CASE("Hurwitz oracle against independent brute force") {
    // reference values from a separate permutation enumeration
    CHECK(hurwitz_oracle(2, 2).count == 2);
    CHECK(hurwitz_oracle(2, 2).tuples == 4);
    CHECK(hurwitz_oracle(3, 2).count == 16);
    CHECK(hurwitz_oracle(3, 2).tuples == 96);
    CHECK(hurwitz_oracle(4, 2).count == 60);
    CHECK(hurwitz_oracle(2, 3).count == 2);
    CHECK(hurwitz_oracle(3, 3).count == 160);
}

TEST_CASE("Hurwitz budget guard") {
    CHECK(hurwitz_cost_estimate(5, 2) > hurwitz_cost_estimate(4, 2));
    CHECK_THROWS_AS(hurwitz_oracle(5, 3, 1e3), BudgetExceeded);
    try {
        hurwitz_oracle(6, 3, 1e6);
        FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded& e) {
        CHECK(e.estimated_steps() > 1e6);
    }
}

TEST_CASE("tuple validity is invariant under simultaneous conjugation") {
    std::mt19937_64 rng(5);
    const int d = 4;
    auto random_perm = [&] {
        Permutation p(d);
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        return p;
    };
    auto compose = [](const Permutation& a, const Permutation& b) {
        Permutation r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[static_cast<std::size_t>(b[i])];
        return r;
    };
    auto inverse = [](const Permutation& a) {
        Permutation r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[static_cast<std::size_t>(a[i])] = static_cast<int>(i);
        return r;
    };
    std::uniform_int_distribution<int> pick(0, d - 1);
    int valid = 0;
    for (int trial = 0; trial < 3000; ++trial) {
        const Permutation a = random_perm(), b = random_perm();
        std::vector<Permutation> ts;
        for (int i = 0; i < 2; ++i) {
            int x = pick(rng), y = pick(rng);
            while (y == x) y = pick(rng);
            Permutation t(d);
            std::iota(t.begin(), t.end(), 0);
            std::swap(t[static_cast<std::size_t>(x)], t[static_cast<std::size_t>(y)]);
            ts.push_back(t);
        }
        const Permutation s = random_perm(), si = inverse(s);
        auto conj = [&](const Permutation& p) { return compose(compose(s, p), si); };
        std::vector<Permutation> cts;
        for (const auto& t : ts) cts.push_back(conj(t));
        const bool v = hurwitz_tuple_valid(a, b, ts);
        CHECK(v == hurwitz_tuple_valid(conj(a), conj(b), cts));
        valid += v;
    }
    CHECK(valid > 0);
}

TEST_CASE("K3 series") {
    const QSeries k0 = k3_series(0, 4);
    CHECK(*k0.lowest_exponent() == -1);
    CHECK(k0.coeff(-1) == 1);
    CHECK(k0.coeff(0) == 24);
    CHECK(k0.coeff(1) == 324);
    CHECK(k0.coeff(2) == 3200);
    CHECK(k0.coeff(3) == 25650);
    const QSeries k1 = k3_series(1, 4);
    CHECK(k1.coeff(0) == 1);
    CHECK(k1.coeff(1) == 30);
    CHECK(k1.coeff(2) == 480);
    CHECK(k1.coeff(3) == 5460);
    const QSeries k2 = k3_series(2, 4);
    CHECK(k2.coeff(0) == 0);
    CHECK(k2.coeff(1) == 1);
    CHECK(k2.coeff(2) == 36);
    CHECK(k2.coeff(3) == 672);
}

TEST_CASE("abelian surface series") {
    const QSeries a2 = abelian_series(2, 5);
    CHECK(a2.coeff(1) == 1);
    CHECK(a2.coeff(2) == 12);
    CHECK(a2.coeff(3) == 36);
    CHECK(a2.coeff(4) == 112);
    CHECK_THROWS_AS(abelian_series(1, 5), Error);
}

TEST_CASE("Hirzebruch series") {
    const QSeries fc = hirzebruch_series(HirzebruchClass::C, 4);
    CHECK(fc.coeff(0) == 1);
    CHECK(fc.coeff(1) == 252);
    CHECK(fc.coeff(2) == 5130);
    CHECK(fc.coeff(3) == 54760);
    const QSeries ff = hirzebruch_series(HirzebruchClass::F, 3);
    CHECK(ff.coeff(-1) == -2);
    CHECK(ff.coeff(0) == 480);
    CHECK(ff.coeff(1) == 282888);
    CHECK(ff.coeff(2) == 17058560);
}
