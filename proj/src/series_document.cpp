#include "modq/series_document.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace modq::io {

namespace {

Rational parse_canonical(const std::string& text) {
    Rational r;
    if (text.empty() || r.set_str(text, 10) != 0) throw Error("bad rational '" + text + "'");
    if (r.get_den() == 0) throw Error("zero denominator in '" + text + "'");
    Rational canon = r;
    canon.canonicalize();
    if (canon.get_str() != text) throw Error("rational '" + text + "' is not in lowest terms");
    return canon;
}

std::string exponent_label(std::int64_t k, std::int64_t n) {
    return make_rational(k, n).get_str();
}

} // namespace

std::string to_json(const SeriesDocument& doc) {
    const QSeries& s = doc.series;
    nlohmann::ordered_json j;
    j["granularity"] = s.granularity();
    if (s.is_exact()) {
        j["truncation"] = nullptr;
    } else {
        j["truncation"] = s.trunc();
    }
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (const auto& [k, c] : s.terms()) coeffs.push_back({k, c.get_str()});
    j["coefficients"] = std::move(coeffs);
    j["expr"] = doc.provenance;
    return j.dump();
}

SeriesDocument from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(std::string("series document is not valid JSON: ") + e.what());
    }
    try {
        const auto n = j.at("granularity").get<std::int64_t>();
        if (n < 1) throw Error("granularity must be positive");
        std::int64_t trunc = QSeries::kExact;
        if (!j.at("truncation").is_null()) trunc = j.at("truncation").get<std::int64_t>();
        std::map<std::int64_t, Rational> terms;
        std::optional<std::int64_t> previous;
        for (const auto& entry : j.at("coefficients")) {
            if (!entry.is_array() || entry.size() != 2) throw Error("coefficient entries are [exponent, \"p/q\"] pairs");
            const auto k = entry[0].get<std::int64_t>();
            if (previous && k <= *previous) throw Error("exponents must be strictly increasing");
            if (k >= trunc) throw Error("coefficient beyond the truncation");
            previous = k;
            Rational c = parse_canonical(entry[1].get<std::string>());
            if (c == 0) throw Error("zero coefficients are not stored");
            terms.emplace(k, std::move(c));
        }
        std::string provenance = j.contains("expr") ? j.at("expr").get<std::string>() : std::string();
        return {QSeries(n, std::move(terms), trunc), std::move(provenance)};
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed series document: ") + e.what());
    }
}

std::string to_table(const QSeries& s) {
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& [k, c] : s.terms()) rows.emplace_back(exponent_label(k, s.granularity()), c.get_str());
    std::size_t w1 = 8, w2 = 11;
    for (const auto& [e, c] : rows) {
        w1 = std::max(w1, e.size());
        w2 = std::max(w2, c.size());
    }
    std::ostringstream out;
    out << std::string(w1 - 8, ' ') << "exponent  " << std::string(w2 - 11, ' ') << "coefficient\n";
    for (const auto& [e, c] : rows) {
        out << std::string(w1 - e.size(), ' ') << e << "  " << std::string(w2 - c.size(), ' ') << c << "\n";
    }
    if (s.is_exact()) {
        out << "(exact)\n";
    } else {
        out << "+ O(q^" << exponent_label(s.trunc(), s.granularity()) << ")\n";
    }
    return out.str();
}

} // namespace modq::io
