#pragma once

#include <cstdint>

#include "modq/qseries.hpp"

namespace modq::forms {

/// Eisenstein normalizations.
///   E        constant term 1
///   Ehat     constant term -B_{2k}/4k (E scaled by -B_{2k}/4k)
///   G        lattice-sum normalization, E scaled by 2 zeta(2k); the factor
///            2 zeta(2k) = (-1)^{k+1} B_{2k} (2 pi)^{2k} / (2k)! is transcendental,
///            so G is never produced as an exact series.
enum class Normalization { E, Ehat, G };

/// Bernoulli number B_n with B_1 = -1/2.
Rational bernoulli(std::int64_t n);

/// Sum of the r-th powers of the positive divisors of d.
Integer sigma(std::int64_t r, std::int64_t d);

/// sigma_r(d) for d = 0..n-1 (entry 0 is 0), by divisor sieve.
std::vector<Integer> sigma_table(std::int64_t r, std::int64_t n);

/// Weight-`weight` Eisenstein series, known below q^order.
QSeries eisenstein(std::int64_t weight, Normalization norm, std::int64_t order);

/// Delta = (E4^3 - E6^2)/1728.
QSeries delta(std::int64_t order);

/// Dedekind eta = q^{1/24} prod (1 - q^k), granularity 24.
QSeries eta(std::int64_t order);

/// eta^m, at granularity 24/gcd(m, 24). Known below q^{order + m/24}.
QSeries eta_pow(std::int64_t m, std::int64_t order);

/// sum_{n in Z} q^{n^2/2}, granularity 2, known below q^order.
QSeries jacobi_theta_z(std::int64_t order);

} // namespace modq::forms
