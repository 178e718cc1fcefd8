#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modq/forms.hpp"
#include "modq/lattice.hpp"

using namespace modq;
using namespace modq::lattice;

TEST_CASE("construction checks") {
    CHECK_THROWS_AS(Lattice({{1, 2}, {2, 1}}), NotPositiveDefinite);
    CHECK_THROWS_AS(Lattice({{1, 0}, {1, 1}}), Error);
    CHECK_THROWS_AS(Lattice({{1, 0}}), Error);
    CHECK(Lattice::e8().rank() == 8);
    CHECK(Lattice::e8().determinant() == 1);
    CHECK(Lattice::zn(3).determinant() == 1);
}

TEST_CASE("E8 Gram matrix is even") {
    const auto g = Lattice::e8().gram();
    for (std::size_t i = 0; i < 8; ++i) CHECK(g[i][i] == 2);
}

TEST_CASE("builtin names") {
    CHECK(builtin_lattice("e8").gram() == Lattice::e8().gram());
    CHECK(builtin_lattice("E8").gram() == Lattice::e8().gram());
    CHECK(builtin_lattice("zn:3").rank() == 3);
    CHECK(builtin_lattice("Zn(5)").rank() == 5);
    CHECK_THROWS_AS(builtin_lattice("d4"), UnknownLattice);
    CHECK_THROWS_AS(builtin_lattice("zn:x"), UnknownLattice);
}

TEST_CASE("JSON round trip") {
    const Lattice l({{2, -1}, {-1, 2}});
    const Lattice back = Lattice::from_json(l.to_json());
    CHECK(back.gram() == l.gram());
    CHECK_THROWS_AS(Lattice::from_json(R"({"rank": 2, "gram": [[1, 0]]})"), Error);
}

TEST_CASE("Z^2 norm counts match brute force") {
    // r_2(n) by direct enumeration over |x|, |y| <= 4
    const int r2[] = {1, 4, 4, 0, 4, 8, 0, 0, 4, 4, 8};
    const auto counts = norm_counts(Lattice::zn(2), 10);
    for (int n = 0; n <= 10; ++n) CHECK(counts[static_cast<std::size_t>(n)] == r2[n]);
}

TEST_CASE("Z^4 counts follow Jacobi's four-square formula") {
    const auto counts = norm_counts(Lattice::zn(4), 40);
    for (std::int64_t n = 1; n <= 40; ++n) {
        const Integer expected = 8 * forms::sigma(1, n) - (n % 4 == 0 ? 32 * forms::sigma(1, n / 4) : Integer(0));
        CHECK(counts[static_cast<std::size_t>(n)] == expected);
    }
}

TEST_CASE("theta series of an orthogonal sum is the product") {
    const QSeries t1 = theta_series(Lattice::zn(1), 6);
    const QSeries t2 = theta_series(direct_sum(Lattice::zn(1), Lattice::zn(1)), 6);
    CHECK(eq(t2, t1 * t1, 6));
    CHECK(eq(t1, forms::jacobi_theta_z(7), 6));
    const Lattice a2({{2, -1}, {-1, 2}});
    CHECK(eq(theta_series(direct_sum(a2, Lattice::zn(1)), 5), theta_series(a2, 5) * t1, 5));
}

TEST_CASE("theta series window") {
    const QSeries t = theta_series(Lattice::zn(2), make_rational(5, 2));
    CHECK(t.granularity() == 2);
    CHECK(t.trunc() == 6);
    CHECK(t.coeff(make_rational(5, 2)) == 8);
}

TEST_CASE("E8 theta is E4") {
    const QSeries t = theta_series(Lattice::e8(), 6);
    CHECK(eq(t, forms::eisenstein(4, forms::Normalization::E, 7), 6));
    CHECK(vector_count(Lattice::e8(), 2) == 240);
    CHECK(vector_count(Lattice::e8(), 3) == 0);
    CHECK(vector_count(Lattice::e8(), 4) == 2160);
}
