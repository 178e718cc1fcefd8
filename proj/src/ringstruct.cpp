#include "modq/ringstruct.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "linalg.hpp"
#include "modq/forms.hpp"

namespace modq::ringstruct {

namespace {

using forms::Normalization;

// Window of a decomposition input: integer exponents, nothing negative.
struct PreparedInput {
    QSeries series;
    std::int64_t window; // coefficients q^0 .. q^{window-1}
};

template <typename Err>
PreparedInput prepare(const QSeries& f, std::int64_t dim) {
    QSeries g = f.reduced();
    if (g.granularity() != 1) throw Err("input has fractional exponents");
    if (g.lowest() && *g.lowest() < 0) throw Err("input has a pole at infinity");
    std::int64_t window = g.is_exact() ? dim + kVerificationMargin : g.trunc();
    if (window < dim + kVerificationMargin) {
        throw InsufficientOrder("decomposition needs " + std::to_string(dim + kVerificationMargin) +
                                " coefficients, input has " + std::to_string(std::max<std::int64_t>(window, 0)));
    }
    return {g.truncated(window), window};
}

// Coefficients of `basis` such that sum c_j basis_j matches f on the leading
// rows; rows are added past dim only if the leading block is singular.
template <typename Err>
std::vector<Rational> solve_against(const PreparedInput& in, const std::vector<QSeries>& basis) {
    const std::size_t dim = basis.size();
    if (dim == 0) return {};
    const std::int64_t max_rows = in.window - kVerificationMargin;
    detail::RationalMatrix m;
    std::vector<Rational> rhs;
    for (std::int64_t i = 0; i < max_rows; ++i) {
        std::vector<Rational> row(dim);
        for (std::size_t j = 0; j < dim; ++j) row[j] = basis[j].coeff(i);
        m.push_back(std::move(row));
        rhs.push_back(in.series.coeff(i));
        if (m.size() < dim) continue;
        if (detail::rank(m) < dim) continue;
        auto x = detail::solve_unique(m, rhs);
        if (!x) throw Err("leading coefficients are not in the span of the weight monomials");
        return *x;
    }
    throw Err("monomial basis is degenerate within the available window");
}

template <typename Err>
void verify_residual(const PreparedInput& in, const QSeries& reconstruction) {
    const QSeries residual = in.series - reconstruction.truncated(in.window);
    if (!residual.is_zero()) {
        const auto k = *residual.lowest_exponent();
        throw Err("residual is nonzero at q^" + k.get_str() + " (coefficient " +
                  residual.terms().begin()->second.get_str() + ")");
    }
}

ModularPoly delta_poly() {
    ModularPoly p;
    p.weight = 12;
    p.terms[{3, 0}] = make_rational(1, 1728);
    p.terms[{0, 2}] = make_rational(-1, 1728);
    return p;
}

void drop_zeros(auto& terms) {
    std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
}

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

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

} // namespace

QSeries ModularPoly::to_series(std::int64_t order) const {
    EisensteinPowers powers(order);
    QSeries total = QSeries(1, {}, order);
    for (const auto& [ab, c] : terms) total = total + c * powers.monomial(0, ab.first, ab.second);
    return total;
}

ModularPoly operator*(const ModularPoly& a, const ModularPoly& b) {
    ModularPoly out;
    out.weight = a.weight + b.weight;
    for (const auto& [ka, ca] : a.terms) {
        for (const auto& [kb, cb] : b.terms) {
            out.terms[{ka.first + kb.first, ka.second + kb.second}] += ca * cb;
        }
    }
    drop_zeros(out.terms);
    return out;
}

ModularPoly operator+(const ModularPoly& a, const ModularPoly& b) {
    ModularPoly out = a;
    for (const auto& [k, c] : b.terms) out.terms[k] += c;
    drop_zeros(out.terms);
    return out;
}

int QuasiModularPoly::depth() const {
    int d = 0;
    for (const auto& [k, c] : terms) d = std::max(d, k[0]);
    return d;
}

QSeries QuasiModularPoly::to_series(std::int64_t order) const {
    EisensteinPowers powers(order);
    QSeries total = QSeries(1, {}, order);
    for (const auto& [abc, c] : terms) total = total + c * powers.monomial(abc[0], abc[1], abc[2]);
    return total;
}

QuasiModularPoly operator*(const QuasiModularPoly& a, const QuasiModularPoly& b) {
    QuasiModularPoly out;
    out.weight = a.weight + b.weight;
    for (const auto& [ka, ca] : a.terms) {
        for (const auto& [kb, cb] : b.terms) {
            out.terms[{ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]}] += ca * cb;
        }
    }
    drop_zeros(out.terms);
    return out;
}

QuasiModularPoly operator+(const QuasiModularPoly& a, const QuasiModularPoly& b) {
    QuasiModularPoly out = a;
    for (const auto& [k, c] : b.terms) out.terms[k] += c;
    drop_zeros(out.terms);
    return out;
}

QuasiModularPoly to_quasimodular(const ModularPoly& p) {
    QuasiModularPoly out;
    out.weight = p.weight;
    for (const auto& [ab, c] : p.terms) out.terms[{0, ab.first, ab.second}] = c;
    return out;
}

std::int64_t dim_mk(std::int64_t k) {
    if (k < 0 || k % 2 != 0) return 0;
    return k % 12 == 2 ? k / 12 : k / 12 + 1;
}

std::int64_t dim_qmk(std::int64_t k) {
    if (k < 0 || k % 2 != 0) return 0;
    std::int64_t total = 0;
    for (std::int64_t r = 0; 2 * r <= k; ++r) total += dim_mk(k - 2 * r);
    return total;
}

std::vector<std::pair<int, int>> weight_monomials(std::int64_t k) {
    std::vector<std::pair<int, int>> out;
    if (k < 0) return out;
    for (std::int64_t a = 0; 4 * a <= k; ++a) {
        const std::int64_t rest = k - 4 * a;
        if (rest % 6 == 0) out.emplace_back(static_cast<int>(a), static_cast<int>(rest / 6));
    }
    return out;
}

std::vector<std::array<int, 3>> qm_weight_monomials(std::int64_t k) {
    std::vector<std::array<int, 3>> out;
    if (k < 0) return out;
    for (std::int64_t a = 0; 2 * a <= k; ++a) {
        for (const auto& [b, c] : weight_monomials(k - 2 * a)) {
            out.push_back({static_cast<int>(a), b, c});
        }
    }
    return out;
}

EisensteinPowers::EisensteinPowers(std::int64_t order) : order_(order) {
    powers_[0].push_back(QSeries::constant(1).truncated(order));
    powers_[0].push_back(forms::eisenstein(2, Normalization::E, order));
    powers_[1].push_back(powers_[0][0]);
    powers_[1].push_back(forms::eisenstein(4, Normalization::E, order));
    powers_[2].push_back(powers_[0][0]);
    powers_[2].push_back(forms::eisenstein(6, Normalization::E, order));
}

const QSeries& EisensteinPowers::power(int which, int n) {
    auto& list = powers_[static_cast<std::size_t>(which)];
    while (static_cast<int>(list.size()) <= n) list.push_back(list.back() * list[1]);
    return list[static_cast<std::size_t>(n)];
}

QSeries EisensteinPowers::monomial(int a, int b, int c) {
    return power(0, a) * power(1, b) * power(2, c);
}

ModularPoly decompose_modular(const QSeries& f, std::int64_t k) {
    const auto monomials = weight_monomials(k);
    const auto in = prepare<NotModular>(f, static_cast<std::int64_t>(monomials.size()));
    EisensteinPowers powers(in.window);
    std::vector<QSeries> basis;
    for (const auto& [a, b] : monomials) basis.push_back(powers.monomial(0, a, b));
    const auto x = solve_against<NotModular>(in, basis);

    ModularPoly out;
    out.weight = k;
    QSeries recon = QSeries(1, {}, in.window);
    for (std::size_t j = 0; j < basis.size(); ++j) {
        if (x[j] == 0) continue;
        out.terms[monomials[j]] = x[j];
        recon = recon + x[j] * basis[j];
    }
    verify_residual<NotModular>(in, recon);
    return out;
}

ModularPoly decompose_modular_inductive(const QSeries& f, std::int64_t k) {
    QSeries g = f.reduced();
    if (g.granularity() != 1) throw NotModular("input has fractional exponents");
    if (g.lowest() && *g.lowest() < 0) throw NotModular("input has a pole at infinity");
    if (g.is_exact()) g = g.truncated(dim_mk(k) + kVerificationMargin);
    const std::int64_t window = g.trunc();

    ModularPoly out;
    out.weight = k;
    if (g.is_zero()) return out;
    if (window < 1) throw InsufficientOrder("no coefficients available");
    const auto monomials = weight_monomials(k);
    if (monomials.empty()) throw NotModular("no modular forms of weight " + std::to_string(k));

    const auto [alpha, beta] = monomials.front();
    const Rational a0 = g.coeff(0);
    EisensteinPowers powers(window);
    const QSeries rest = g - a0 * powers.monomial(0, alpha, beta);
    if (a0 != 0) out.terms[{alpha, beta}] = a0;
    if (rest.is_zero()) return out;
    if (k < 12) throw NotModular("nonzero cusp part at weight " + std::to_string(k));

    // rest is a cusp form; rest / Delta is modular of weight k - 12.
    const QSeries quotient = rest * inv(forms::delta(window + 2));
    const ModularPoly lower = decompose_modular_inductive(quotient, k - 12);
    return out + delta_poly() * lower;
}

QuasiModularPoly decompose_quasimodular(const QSeries& f, std::int64_t k) {
    const auto monomials = qm_weight_monomials(k);
    const auto in = prepare<NotQuasiModular>(f, static_cast<std::int64_t>(monomials.size()));
    EisensteinPowers powers(in.window);
    std::vector<QSeries> basis;
    for (const auto& m : monomials) basis.push_back(powers.monomial(m[0], m[1], m[2]));
    const auto x = solve_against<NotQuasiModular>(in, basis);

    QuasiModularPoly out;
    out.weight = k;
    QSeries recon = QSeries(1, {}, in.window);
    for (std::size_t j = 0; j < basis.size(); ++j) {
        if (x[j] == 0) continue;
        out.terms[monomials[j]] = x[j];
        recon = recon + x[j] * basis[j];
    }
    verify_residual<NotQuasiModular>(in, recon);
    return out;
}

DepthSlice depth_reduce_step(const QuasiModularPoly& p) {
    const int r = p.depth();
    if (r == 0) throw DepthZero("polynomial has depth 0");
    DepthSlice out;
    out.depth = r;
    out.slice.weight = p.weight - 2 * r;
    out.remainder.weight = p.weight;
    for (const auto& [abc, c] : p.terms) {
        if (abc[0] == r) {
            out.slice.terms[{abc[1], abc[2]}] = c;
        } else {
            out.remainder.terms[abc] = c;
        }
    }
    return out;
}

bool is_cusp(const QSeries& f) {
    if (f.lowest() && *f.lowest() < 0) return false;
    return f.coeff(0) == 0;
}

QSeries delta_shift(const QSeries& f) {
    if (f.is_exact()) throw InfinitePrecision("delta_shift needs a truncated input");
    const Rational top = *f.valid_below();
    Integer ceil_top;
    mpz_cdiv_q(ceil_top.get_mpz_t(), top.get_num_mpz_t(), top.get_den_mpz_t());
    const std::int64_t low = f.lowest_exponent()
        ? static_cast<std::int64_t>(std::floor(f.lowest_exponent()->get_d()))
        : 0;
    const std::int64_t order = std::max<std::int64_t>(ceil_top.get_si() - low, 0) + 2;
    return f * forms::delta(order);
}

QuasiModularPoly derivative_closure_check(const QSeries& f, std::int64_t k) {
    return decompose_quasimodular(derivative(f), k + 2);
}

namespace {

template <typename Monomials, typename ToSeries>
bool leading_block_nonsingular(std::int64_t max_weight, Monomials monomials_of, ToSeries series_of) {
    for (std::int64_t k = 0; k <= max_weight; k += 2) {
        const auto monomials = monomials_of(k);
        const std::size_t dim = monomials.size();
        if (dim == 0) continue;
        EisensteinPowers powers(static_cast<std::int64_t>(dim));
        detail::RationalMatrix m(dim, std::vector<Rational>(dim));
        for (std::size_t j = 0; j < dim; ++j) {
            const QSeries s = series_of(powers, monomials[j]);
            for (std::size_t i = 0; i < dim; ++i) m[i][j] = s.coeff(static_cast<std::int64_t>(i));
        }
        if (detail::rank(m) != dim) return false;
    }
    return true;
}

} // namespace

bool algebraic_independence_check(std::int64_t max_weight) {
    return leading_block_nonsingular(max_weight, weight_monomials,
        [](EisensteinPowers& p, const std::pair<int, int>& ab) {
            return p.monomial(0, ab.first, ab.second);
        });
}

bool quasimodular_independence_check(std::int64_t max_weight) {
    return leading_block_nonsingular(max_weight, qm_weight_monomials,
        [](EisensteinPowers& p, const std::array<int, 3>& abc) {
            return p.monomial(abc[0], abc[1], abc[2]);
        });
}

HermiteForm hnf_2x2(const Mat2& matrix) {
    const std::int64_t det = matrix.det();
    if (det <= 0) throw SingularMatrix("determinant must be positive, got " + std::to_string(det));
    // Column operations send the bottom row (c, d) to (0, g).
    std::int64_t x = 0, y = 0;
    const std::int64_t g = ext_gcd(matrix.c, matrix.d, x, y);
    const Mat2 u1{matrix.d / g, x, -matrix.c / g, y};
    Mat2 h = matrix * u1;
    const std::int64_t m = h.a;
    const std::int64_t t = -floor_div(h.b, m);
    const Mat2 u2{1, t, 0, 1};
    return {h * u2, u1 * u2};
}

} // namespace modq::ringstruct
