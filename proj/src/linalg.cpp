#include "linalg.hpp"

#include <utility>

namespace modq::detail {

namespace {

// Row-reduces m in place (optionally carrying rhs); returns pivot columns.
std::vector<std::size_t> eliminate(RationalMatrix& m, std::vector<Rational>* rhs) {
    std::vector<std::size_t> pivots;
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t p = row;
        while (p < rows && m[p][col] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[row]);
        if (rhs) std::swap((*rhs)[p], (*rhs)[row]);
        const Rational inv_pivot = 1 / m[row][col];
        for (std::size_t j = col; j < cols; ++j) m[row][j] *= inv_pivot;
        if (rhs) (*rhs)[row] *= inv_pivot;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || m[r][col] == 0) continue;
            const Rational f = m[r][col];
            for (std::size_t j = col; j < cols; ++j) m[r][j] -= f * m[row][j];
            if (rhs) (*rhs)[r] -= f * (*rhs)[row];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::size_t rank(RationalMatrix m) {
    return eliminate(m, nullptr).size();
}

std::optional<std::vector<Rational>> solve_unique(RationalMatrix m, std::vector<Rational> rhs) {
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    const auto pivots = eliminate(m, &rhs);
    if (pivots.size() != cols) return std::nullopt;
    for (std::size_t r = pivots.size(); r < rhs.size(); ++r) {
        if (rhs[r] != 0) return std::nullopt;
    }
    std::vector<Rational> x(cols);
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = rhs[i];
    return x;
}

} // namespace modq::detail
