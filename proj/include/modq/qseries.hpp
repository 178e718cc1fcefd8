#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "modq/errors.hpp"

namespace modq {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Truncated Laurent series in q^{1/N} with exact rational coefficients.
///
/// A term c * q^{k/N} is stored under the key k. The series is known for
/// every exponent numerator k < trunc(); coefficients at or beyond trunc()
/// are unknown. Polynomials built from literals carry the sentinel
/// truncation kExact and are known everywhere.
///
/// Values are immutable after construction; every operation returns a new
/// series.
class QSeries {
public:
    static constexpr std::int64_t kExact = std::numeric_limits<std::int64_t>::max();

    /// Exact zero series.
    QSeries() = default;

    /// Builds a series from explicit terms; zero coefficients and keys at or
    /// beyond `trunc` are dropped.
    QSeries(std::int64_t granularity, std::map<std::int64_t, Rational> terms,
            std::int64_t trunc = kExact);

    static QSeries constant(const Rational& c);
    /// c * q^exponent, exact. The granularity is the denominator of exponent.
    static QSeries monomial(const Rational& c, const Rational& exponent);
    /// Integer-exponent series sum coeffs[i] q^i known below q^{coeffs.size()}.
    static QSeries from_dense(const std::vector<Rational>& coeffs);

    std::int64_t granularity() const noexcept { return granularity_; }
    std::int64_t trunc() const noexcept { return trunc_; }
    bool is_exact() const noexcept { return trunc_ == kExact; }
    const std::map<std::int64_t, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Lowest stored exponent numerator, if any term is stored.
    std::optional<std::int64_t> lowest() const;
    /// Lowest exponent as a rational power of q.
    std::optional<Rational> lowest_exponent() const;
    /// Exclusive upper bound of the known window as a power of q; empty for exact series.
    std::optional<Rational> valid_below() const;

    /// Coefficient of q^exponent; throws OutOfWindow beyond the known window.
    Rational coeff(const Rational& exponent) const;
    Rational coeff(std::int64_t exponent) const { return coeff(make_rational(exponent)); }

    /// Drops everything with exponent >= order (a power of q); never widens the window.
    QSeries truncated(const Rational& order) const;
    QSeries truncated(std::int64_t order) const { return truncated(make_rational(order)); }
    /// Same series at granularity `granularity` (a multiple of the current one).
    QSeries with_granularity(std::int64_t granularity) const;
    /// Same series at the smallest granularity that represents it.
    QSeries reduced() const;

    QSeries operator-() const;
    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const Rational& c, const QSeries& a);
    friend QSeries operator*(const QSeries& a, const Rational& c) { return c * a; }

    /// Structural equality: same granularity, truncation and terms.
    friend bool operator==(const QSeries& a, const QSeries& b);

private:
    std::int64_t granularity_ = 1;
    std::int64_t trunc_ = kExact;
    std::map<std::int64_t, Rational> terms_;
};

/// Rewrites both series over the common granularity lcm(N_a, N_b).
std::pair<QSeries, QSeries> align(const QSeries& a, const QSeries& b);

QSeries scale(const QSeries& a, const Rational& c);

/// Multiplicative inverse. Requires a nonzero stored term; a non-monomial
/// exact series must be truncated first (InfinitePrecision otherwise).
QSeries inv(const QSeries& a);

/// Binary powering; negative n goes through inv.
QSeries pow(const QSeries& a, std::int64_t n);

/// The derivation q d/dq: c q^{k/N} -> c (k/N) q^{k/N}.
QSeries derivative(const QSeries& a);

/// q^prefactor * prod_{k=1}^{order} (1 - q^k)^{e_k}, known below q^{order + prefactor}.
QSeries product_expansion(const std::function<std::int64_t(std::int64_t)>& exponent_of,
                          std::int64_t order, const Rational& prefactor);

/// Coefficient-wise comparison for all exponents <= through. Both series
/// must be known through that exponent (OutOfWindow otherwise).
bool eq(const QSeries& a, const QSeries& b, const Rational& through);
inline bool eq(const QSeries& a, const QSeries& b, std::int64_t through) {
    return eq(a, b, make_rational(through));
}

/// Human-readable form, e.g. "q - 24*q^2 + O(q^3)".
std::string to_string(const QSeries& a);

} // namespace modq
