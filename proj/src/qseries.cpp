#include "modq/qseries.hpp"

#include <numeric>
#include <sstream>

namespace modq {

namespace {

constexpr std::int64_t kExact = QSeries::kExact;

std::int64_t sat_add(std::int64_t a, std::int64_t b) {
    if (a == kExact || b == kExact) return kExact;
    return a + b;
}

std::int64_t sat_mul(std::int64_t t, std::int64_t factor) {
    if (t == kExact) return kExact;
    return t * factor;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    // b > 0
    std::int64_t q = a / b;
    if (a % b != 0 && a > 0) ++q;
    return q;
}

std::int64_t to_int64(const Integer& z) {
    if (!z.fits_slong_p()) throw Error("exponent out of range");
    return z.get_si();
}

// Exponent numerator at granularity n for a rational exponent; nullopt if off-grid.
std::optional<std::int64_t> numerator_at(const Rational& exponent, std::int64_t n) {
    Rational scaled = exponent * make_rational(n);
    if (scaled.get_den() != 1) return std::nullopt;
    return to_int64(scaled.get_num());
}

} // namespace

Rational make_rational(std::int64_t num, std::int64_t den) {
    Rational r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}

QSeries::QSeries(std::int64_t granularity, std::map<std::int64_t, Rational> terms,
                 std::int64_t trunc)
    : granularity_(granularity), trunc_(trunc) {
    if (granularity < 1) throw Error("granularity must be positive");
    for (auto& [k, c] : terms) {
        if (k >= trunc || c == 0) continue;
        c.canonicalize();
        terms_.emplace(k, std::move(c));
    }
}

QSeries QSeries::constant(const Rational& c) {
    return QSeries(1, {{0, c}});
}

QSeries QSeries::monomial(const Rational& c, const Rational& exponent) {
    Rational e = exponent;
    e.canonicalize();
    const std::int64_t n = to_int64(e.get_den());
    return QSeries(n, {{to_int64(e.get_num()), c}});
}

QSeries QSeries::from_dense(const std::vector<Rational>& coeffs) {
    std::map<std::int64_t, Rational> terms;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] != 0) terms.emplace(static_cast<std::int64_t>(i), coeffs[i]);
    }
    return QSeries(1, std::move(terms), static_cast<std::int64_t>(coeffs.size()));
}

std::optional<std::int64_t> QSeries::lowest() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
}

std::optional<Rational> QSeries::lowest_exponent() const {
    if (terms_.empty()) return std::nullopt;
    return make_rational(terms_.begin()->first, granularity_);
}

std::optional<Rational> QSeries::valid_below() const {
    if (is_exact()) return std::nullopt;
    return make_rational(trunc_, granularity_);
}

Rational QSeries::coeff(const Rational& exponent) const {
    if (!is_exact() && exponent >= make_rational(trunc_, granularity_)) {
        std::ostringstream msg;
        msg << "coefficient of q^" << exponent.get_str() << " requested, series known only below q^"
            << make_rational(trunc_, granularity_).get_str();
        throw OutOfWindow(msg.str());
    }
    auto k = numerator_at(exponent, granularity_);
    if (!k) return 0;
    auto it = terms_.find(*k);
    return it == terms_.end() ? Rational(0) : it->second;
}

QSeries QSeries::truncated(const Rational& order) const {
    Rational scaled = order * make_rational(granularity_);
    Integer bound;
    mpz_cdiv_q(bound.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    const std::int64_t t = std::min(trunc_, to_int64(bound));
    return QSeries(granularity_, terms_, t);
}

QSeries QSeries::with_granularity(std::int64_t granularity) const {
    if (granularity % granularity_ != 0) throw Error("granularity must be a multiple of the current one");
    const std::int64_t f = granularity / granularity_;
    if (f == 1) return *this;
    std::map<std::int64_t, Rational> terms;
    for (const auto& [k, c] : terms_) terms.emplace(k * f, c);
    return QSeries(granularity, std::move(terms), sat_mul(trunc_, f));
}

QSeries QSeries::reduced() const {
    std::int64_t g = granularity_;
    for (const auto& [k, c] : terms_) g = std::gcd(g, k);
    if (g <= 1) return *this;
    std::map<std::int64_t, Rational> terms;
    for (const auto& [k, c] : terms_) terms.emplace(k / g, c);
    const std::int64_t t = is_exact() ? kExact : ceil_div(trunc_, g);
    return QSeries(granularity_ / g, std::move(terms), t);
}

QSeries QSeries::operator-() const {
    std::map<std::int64_t, Rational> terms;
    for (const auto& [k, c] : terms_) terms.emplace(k, -c);
    return QSeries(granularity_, std::move(terms), trunc_);
}

std::pair<QSeries, QSeries> align(const QSeries& a, const QSeries& b) {
    const std::int64_t n = std::lcm(a.granularity(), b.granularity());
    return {a.with_granularity(n), b.with_granularity(n)};
}

QSeries operator+(const QSeries& lhs, const QSeries& rhs) {
    auto [a, b] = align(lhs, rhs);
    const std::int64_t t = std::min(a.trunc(), b.trunc());
    std::map<std::int64_t, Rational> terms = a.terms();
    for (const auto& [k, c] : b.terms()) {
        auto [it, inserted] = terms.emplace(k, c);
        if (!inserted) it->second += c;
    }
    return QSeries(a.granularity(), std::move(terms), t);
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries operator*(const Rational& c, const QSeries& a) {
    if (c == 0) return QSeries(a.granularity(), {}, a.trunc());
    std::map<std::int64_t, Rational> terms;
    for (const auto& [k, x] : a.terms()) terms.emplace(k, c * x);
    return QSeries(a.granularity(), std::move(terms), a.trunc());
}

QSeries scale(const QSeries& a, const Rational& c) { return c * a; }

QSeries operator*(const QSeries& lhs, const QSeries& rhs) {
    auto [a, b] = align(lhs, rhs);
    const std::int64_t n = a.granularity();
    // A zero series known below T behaves like O(q^T) for window purposes.
    const std::int64_t va = a.lowest().value_or(a.trunc());
    const std::int64_t vb = b.lowest().value_or(b.trunc());
    const std::int64_t bound = std::min(sat_add(a.trunc(), vb), sat_add(b.trunc(), va));
    if (a.is_zero() || b.is_zero()) return QSeries(n, {}, bound);

    const std::int64_t lo = va + vb;
    const std::int64_t hi = bound == kExact
        ? a.terms().rbegin()->first + b.terms().rbegin()->first + 1
        : bound;
    if (hi <= lo) return QSeries(n, {}, bound);

    std::vector<Rational> acc(static_cast<std::size_t>(hi - lo));
    Rational prod;
    for (const auto& [i, x] : a.terms()) {
        if (i + vb >= hi) break;
        for (const auto& [j, y] : b.terms()) {
            if (i + j >= hi) break;
            mpq_mul(prod.get_mpq_t(), x.get_mpq_t(), y.get_mpq_t());
            Rational& slot = acc[static_cast<std::size_t>(i + j - lo)];
            mpq_add(slot.get_mpq_t(), slot.get_mpq_t(), prod.get_mpq_t());
        }
    }
    std::map<std::int64_t, Rational> terms;
    for (std::size_t idx = 0; idx < acc.size(); ++idx) {
        if (acc[idx] != 0) terms.emplace(lo + static_cast<std::int64_t>(idx), std::move(acc[idx]));
    }
    return QSeries(n, std::move(terms), bound);
}

bool operator==(const QSeries& a, const QSeries& b) {
    return a.granularity_ == b.granularity_ && a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
}

QSeries inv(const QSeries& a) {
    if (a.is_zero()) throw ZeroSeries("cannot invert a series with no nonzero coefficient");
    const std::int64_t v = *a.lowest();
    const Rational lead = a.terms().begin()->second;
    const std::int64_t n = a.granularity();
    if (a.is_exact()) {
        if (a.terms().size() != 1) {
            throw InfinitePrecision("inverse of an exact non-monomial series needs a truncation");
        }
        return QSeries(n, {{-v, 1 / lead}});
    }
    // a = lead q^v (1 + u), u known for relative exponents < len.
    const std::int64_t len = a.trunc() - v;
    std::vector<Rational> u(static_cast<std::size_t>(len));
    for (const auto& [k, c] : a.terms()) u[static_cast<std::size_t>(k - v)] = c / lead;
    // Only the nonzero positions of u contribute to the recurrence.
    std::vector<std::int64_t> support;
    for (std::int64_t k = 1; k < len; ++k) {
        if (u[static_cast<std::size_t>(k)] != 0) support.push_back(k);
    }
    std::vector<Rational> b(static_cast<std::size_t>(len));
    b[0] = 1;
    Rational prod;
    for (std::int64_t m = 1; m < len; ++m) {
        Rational& bm = b[static_cast<std::size_t>(m)];
        for (std::int64_t k : support) {
            if (k > m) break;
            mpq_mul(prod.get_mpq_t(), u[static_cast<std::size_t>(k)].get_mpq_t(),
                    b[static_cast<std::size_t>(m - k)].get_mpq_t());
            mpq_sub(bm.get_mpq_t(), bm.get_mpq_t(), prod.get_mpq_t());
        }
    }
    const Rational scale_by = 1 / lead;
    std::map<std::int64_t, Rational> terms;
    for (std::int64_t m = 0; m < len; ++m) {
        if (b[static_cast<std::size_t>(m)] != 0) {
            terms.emplace(m - v, scale_by * b[static_cast<std::size_t>(m)]);
        }
    }
    return QSeries(n, std::move(terms), a.trunc() - 2 * v);
}

QSeries pow(const QSeries& a, std::int64_t n) {
    if (n < 0) return pow(inv(a), -n);
    QSeries result = QSeries::constant(1);
    QSeries base = a;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return result;
}

QSeries derivative(const QSeries& a) {
    std::map<std::int64_t, Rational> terms;
    const Rational inv_n = make_rational(1, a.granularity());
    for (const auto& [k, c] : a.terms()) terms.emplace(k, c * make_rational(k) * inv_n);
    return QSeries(a.granularity(), std::move(terms), a.trunc());
}

QSeries product_expansion(const std::function<std::int64_t(std::int64_t)>& exponent_of,
                          std::int64_t order, const Rational& prefactor) {
    if (order < 0) order = 0;
    std::vector<Integer> p(static_cast<std::size_t>(order));
    if (order > 0) p[0] = 1;
    for (std::int64_t k = 1; k < order; ++k) {
        const std::int64_t e = exponent_of(k);
        for (std::int64_t rep = 0; rep < std::abs(e); ++rep) {
            if (e > 0) {
                // multiply by (1 - q^k)
                for (std::int64_t m = order - 1; m >= k; --m) {
                    p[static_cast<std::size_t>(m)] -= p[static_cast<std::size_t>(m - k)];
                }
            } else {
                // divide by (1 - q^k)
                for (std::int64_t m = k; m < order; ++m) {
                    p[static_cast<std::size_t>(m)] += p[static_cast<std::size_t>(m - k)];
                }
            }
        }
    }
    Rational pre = prefactor;
    pre.canonicalize();
    const std::int64_t n = to_int64(pre.get_den());
    const std::int64_t shift = to_int64(pre.get_num());
    std::map<std::int64_t, Rational> terms;
    for (std::int64_t m = 0; m < order; ++m) {
        if (p[static_cast<std::size_t>(m)] != 0) {
            terms.emplace(m * n + shift, Rational(p[static_cast<std::size_t>(m)]));
        }
    }
    return QSeries(n, std::move(terms), order * n + shift);
}

bool eq(const QSeries& lhs, const QSeries& rhs, const Rational& through) {
    auto [a, b] = align(lhs, rhs);
    const Rational n = make_rational(a.granularity());
    Rational scaled = through * n;
    Integer bound_z;
    mpz_fdiv_q(bound_z.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    const std::int64_t bound = to_int64(bound_z);
    for (const QSeries* s : {&a, &b}) {
        if (!s->is_exact() && bound >= s->trunc()) {
            throw OutOfWindow("series not known through q^" + through.get_str());
        }
    }
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    const auto ea = a.terms().upper_bound(bound);
    const auto eb = b.terms().upper_bound(bound);
    while (ia != ea || ib != eb) {
        if (ia == ea || ib == eb) return false;
        if (ia->first != ib->first || ia->second != ib->second) return false;
        ++ia;
        ++ib;
    }
    return true;
}

std::string to_string(const QSeries& a) {
    std::ostringstream out;
    bool first = true;
    auto exponent_text = [&](std::int64_t k) {
        Rational e = make_rational(k, a.granularity());
        if (e.get_den() == 1) return e.get_str();
        return "(" + e.get_str() + ")";
    };
    for (const auto& [k, c] : a.terms()) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            out << mag.get_str();
            continue;
        }
        if (mag != 1) out << mag.get_str() << "*";
        out << "q";
        if (k != a.granularity()) out << "^" << exponent_text(k);
    }
    if (!a.is_exact()) {
        if (!first) out << " + ";
        out << "O(q^" << exponent_text(a.trunc()) << ")";
    } else if (first) {
        out << "0";
    }
    return out.str();
}

} // namespace modq
