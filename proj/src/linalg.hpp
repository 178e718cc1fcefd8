#pragma once

// Exact Gaussian elimination over the rationals (internal).

#include <cstddef>
#include <optional>
#include <vector>

#include "modq/qseries.hpp"

namespace modq::detail {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Rank of a (rows x cols) matrix.
std::size_t rank(RationalMatrix m);

/// Solves m x = rhs. Returns nullopt if the system is inconsistent or the
/// solution is not unique.
std::optional<std::vector<Rational>> solve_unique(RationalMatrix m, std::vector<Rational> rhs);

} // namespace modq::detail
