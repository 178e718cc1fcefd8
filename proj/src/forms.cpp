#include "modq/forms.hpp"

#include <numeric>
#include <string>

namespace modq::forms {

Rational bernoulli(std::int64_t n) {
    if (n < 0) throw Error("bernoulli: negative index");
    // sum_{j=0}^{m} C(m+1, j) B_j = 0
    std::vector<Rational> b(static_cast<std::size_t>(n + 1));
    b[0] = 1;
    for (std::int64_t m = 1; m <= n; ++m) {
        Rational acc = 0;
        Integer binom = 1; // C(m+1, 0)
        for (std::int64_t j = 0; j < m; ++j) {
            acc += Rational(binom) * b[static_cast<std::size_t>(j)];
            binom = binom * (m + 1 - j) / (j + 1);
        }
        // binom is now C(m+1, m) = m+1
        b[static_cast<std::size_t>(m)] = -acc / Rational(binom);
    }
    return b[static_cast<std::size_t>(n)];
}

Integer sigma(std::int64_t r, std::int64_t d) {
    if (d < 1) throw Error("sigma: d must be positive");
    Integer total = 0;
    Integer term;
    for (std::int64_t k = 1; k * k <= d; ++k) {
        if (d % k != 0) continue;
        mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(r));
        total += term;
        const std::int64_t other = d / k;
        if (other != k) {
            mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(other),
                          static_cast<unsigned long>(r));
            total += term;
        }
    }
    return total;
}

std::vector<Integer> sigma_table(std::int64_t r, std::int64_t n) {
    std::vector<Integer> table(static_cast<std::size_t>(std::max<std::int64_t>(n, 0)));
    Integer power;
    for (std::int64_t k = 1; k < n; ++k) {
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(r));
        for (std::int64_t m = k; m < n; m += k) table[static_cast<std::size_t>(m)] += power;
    }
    return table;
}

QSeries eisenstein(std::int64_t weight, Normalization norm, std::int64_t order) {
    if (weight < 2 || weight % 2 != 0) {
        throw Error("eisenstein: weight must be even and >= 2, got " + std::to_string(weight));
    }
    if (norm == Normalization::G) {
        throw NormalizationNotExact("G normalization has a transcendental constant term 2*zeta(" +
                                    std::to_string(weight) + ")");
    }
    const Rational b = bernoulli(weight);
    // E_{2k} = 1 - (4k / B_{2k}) sum sigma_{2k-1}(d) q^d, with 2k = weight
    const Rational factor = -Rational(2 * weight) / b;
    const auto sig = sigma_table(weight - 1, order);
    std::vector<Rational> coeffs(static_cast<std::size_t>(std::max<std::int64_t>(order, 0)));
    if (order > 0) coeffs[0] = 1;
    for (std::int64_t d = 1; d < order; ++d) {
        coeffs[static_cast<std::size_t>(d)] = factor * Rational(sig[static_cast<std::size_t>(d)]);
    }
    QSeries e = QSeries::from_dense(coeffs);
    if (norm == Normalization::Ehat) return (-b / Rational(2 * weight)) * e;
    return e;
}

QSeries delta(std::int64_t order) {
    const QSeries e4 = eisenstein(4, Normalization::E, order);
    const QSeries e6 = eisenstein(6, Normalization::E, order);
    return make_rational(1, 1728) * (e4 * e4 * e4 - e6 * e6);
}

QSeries eta(std::int64_t order) {
    return product_expansion([](std::int64_t) { return 1; }, order, make_rational(1, 24));
}

QSeries eta_pow(std::int64_t m, std::int64_t order) {
    return product_expansion([m](std::int64_t) { return m; }, order, make_rational(m, 24));
}

QSeries jacobi_theta_z(std::int64_t order) {
    // exponent n^2/2 -> numerator n^2 at granularity 2
    std::map<std::int64_t, Rational> terms;
    const std::int64_t trunc = 2 * order;
    for (std::int64_t n = 0; n * n < trunc; ++n) {
        terms.emplace(n * n, n == 0 ? Rational(1) : Rational(2));
    }
    return QSeries(2, std::move(terms), std::max<std::int64_t>(trunc, 0));
}

} // namespace modq::forms
