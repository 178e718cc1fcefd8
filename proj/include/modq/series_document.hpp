#pragma once

#include <string>
#include <string_view>

#include "modq/qseries.hpp"

namespace modq::io {

/// JSON form of a series:
///   {"granularity": N, "truncation": T | null,
///    "coefficients": [[k, "p/q"], ...], "expr": "..."}
/// Exponents are numerators over N, strictly increasing; coefficients are
/// rationals in lowest terms.
struct SeriesDocument {
    QSeries series;
    std::string provenance;
};

std::string to_json(const SeriesDocument& doc);

/// Throws Error on malformed input, including non-canonical rationals and
/// unsorted exponents.
SeriesDocument from_json(std::string_view text);

/// Aligned two-column text table (exponent, coefficient) with an O(q^T) footer.
std::string to_table(const QSeries& s);

} // namespace modq::io
