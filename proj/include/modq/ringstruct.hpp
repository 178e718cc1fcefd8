#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "modq/qseries.hpp"

namespace modq::ringstruct {

/// Extra coefficients beyond the dimension that a decomposition checks
/// against its residual.
inline constexpr std::int64_t kVerificationMargin = 10;

/// Polynomial in E4, E6, homogeneous of the given weight; key (a, b) is E4^a E6^b.
struct ModularPoly {
    std::int64_t weight = 0;
    std::map<std::pair<int, int>, Rational> terms;

    QSeries to_series(std::int64_t order) const;
    friend bool operator==(const ModularPoly&, const ModularPoly&) = default;
};

ModularPoly operator*(const ModularPoly& a, const ModularPoly& b);
ModularPoly operator+(const ModularPoly& a, const ModularPoly& b);

/// Polynomial in E2, E4, E6; key (a, b, c) is E2^a E4^b E6^c.
struct QuasiModularPoly {
    std::int64_t weight = 0;
    std::map<std::array<int, 3>, Rational> terms;

    /// Highest power of E2 with a nonzero coefficient (0 for the zero polynomial).
    int depth() const;
    QSeries to_series(std::int64_t order) const;
    friend bool operator==(const QuasiModularPoly&, const QuasiModularPoly&) = default;
};

QuasiModularPoly operator*(const QuasiModularPoly& a, const QuasiModularPoly& b);
QuasiModularPoly operator+(const QuasiModularPoly& a, const QuasiModularPoly& b);
QuasiModularPoly to_quasimodular(const ModularPoly& p);

/// dim M_k(PSL2(Z)).
std::int64_t dim_mk(std::int64_t k);
/// Number of E2^a E4^b E6^c of weight k, i.e. dim QM_k.
std::int64_t dim_qmk(std::int64_t k);

/// Solutions of 4a + 6b = k, lexicographic.
std::vector<std::pair<int, int>> weight_monomials(std::int64_t k);
/// Solutions of 2a + 4b + 6c = k, lexicographic.
std::vector<std::array<int, 3>> qm_weight_monomials(std::int64_t k);

/// Powers of E2, E4, E6 at a fixed order, computed on demand.
class EisensteinPowers {
public:
    explicit EisensteinPowers(std::int64_t order);

    std::int64_t order() const noexcept { return order_; }
    QSeries monomial(int a, int b, int c);

private:
    const QSeries& power(int which, int n);

    std::int64_t order_;
    std::array<std::vector<QSeries>, 3> powers_;
};

/// Writes f as a polynomial in E4, E6 by an exact linear solve on the
/// leading coefficients, then checks the whole known window.
ModularPoly decompose_modular(const QSeries& f, std::int64_t k);

/// Cross-check of decompose_modular: subtract a0 E4^a E6^b, divide the
/// cusp form by Delta, recurse at weight k - 12.
ModularPoly decompose_modular_inductive(const QSeries& f, std::int64_t k);

QuasiModularPoly decompose_quasimodular(const QSeries& f, std::int64_t k);

struct DepthSlice {
    int depth = 0;
    /// Modular coefficient f_r of E2^r, weight k - 2r.
    ModularPoly slice;
    /// p - f_r E2^r, of depth < r.
    QuasiModularPoly remainder;
};

/// Splits off the top E2-power slice of p. Throws DepthZero for depth 0.
DepthSlice depth_reduce_step(const QuasiModularPoly& p);

/// No negative exponents and zero constant term.
bool is_cusp(const QSeries& f);

/// f * Delta. f must carry a finite truncation.
QSeries delta_shift(const QSeries& f);

/// Decomposition of D f at weight k + 2; throws if D f leaves QM.
QuasiModularPoly derivative_closure_check(const QSeries& f, std::int64_t k);

/// For every even k <= max_weight, the leading dim x dim coefficient block of
/// the weight-k E4/E6 monomials is nonsingular.
bool algebraic_independence_check(std::int64_t max_weight);
/// Same with E2/E4/E6 monomials.
bool quasimodular_independence_check(std::int64_t max_weight);

struct Mat2 {
    std::int64_t a = 1, b = 0, c = 0, d = 1;
    std::int64_t det() const { return a * d - b * c; }
    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend bool operator==(const Mat2&, const Mat2&) = default;
};

struct HermiteForm {
    Mat2 form;       ///< (m r; 0 n) with m n = det and 0 <= r < m
    Mat2 transform;  ///< U in SL2(Z) with form = matrix * U
};

/// Hermite normal form of a positive-determinant integer 2x2 matrix under
/// right multiplication by SL2(Z). Throws SingularMatrix for det <= 0.
HermiteForm hnf_2x2(const Mat2& matrix);

} // namespace modq::ringstruct
