#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "modq/qseries.hpp"

namespace modq::lattice {

/// Positive-definite integer lattice given by its Gram matrix.
class Lattice {
public:
    /// Throws NotPositiveDefinite if gram is not symmetric positive definite.
    explicit Lattice(std::vector<std::vector<std::int64_t>> gram);

    std::size_t rank() const noexcept { return gram_.size(); }
    const std::vector<std::vector<std::int64_t>>& gram() const noexcept { return gram_; }
    Integer determinant() const;

    /// Z^r with the identity Gram matrix.
    static Lattice zn(std::size_t r);
    /// E8 root lattice, Gram = Cartan matrix of the E8 Dynkin diagram.
    static Lattice e8();

    /// Parses {"rank": r, "gram": [[...], ...]}.
    static Lattice from_json(std::string_view text);
    std::string to_json() const;

    /// Orthogonal sum.
    friend Lattice direct_sum(const Lattice& a, const Lattice& b);

private:
    std::vector<std::vector<std::int64_t>> gram_;
};

/// "e8", "zn:R" / "Zn(R)" / "E8". Throws UnknownLattice otherwise.
Lattice builtin_lattice(std::string_view name);

/// counts[n] = #{v : v^T G v = n} for n = 0..max_norm.
std::vector<Integer> norm_counts(const Lattice& lattice, std::int64_t max_norm);

/// sum over lattice vectors of q^{v.v/2}, every exponent <= max_exponent; granularity 2.
QSeries theta_series(const Lattice& lattice, const Rational& max_exponent);

/// #{v : v^T G v = norm}.
Integer vector_count(const Lattice& lattice, std::int64_t norm);

} // namespace modq::lattice
