#include "modq/lattice.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include <json.hpp>

#include "linalg.hpp"

namespace modq::lattice {

namespace {

using i128 = __int128;

std::int64_t checked(i128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
        throw Error("lattice enumeration overflow; Gram entries or bound too large");
    }
    return static_cast<std::int64_t>(v);
}

std::int64_t to_i64(const Integer& z) {
    if (!z.fits_slong_p()) throw Error("lattice enumeration overflow; Gram entries or bound too large");
    return z.get_si();
}

// floor(sqrt(n)) for n >= 0
std::int64_t isqrt(std::int64_t n) {
    if (n <= 0) return 0;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (static_cast<i128>(r) * r > n) --r;
    while (static_cast<i128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

// LDL^T of the Gram matrix over Q, rescaled to integers:
//   S * v^T G v = sum_i weight[i] * Y_i^2,  Y_i = scale[i] x_i + sum_{j>i} mix[i][j] x_j
struct IntegerForm {
    std::int64_t s = 1;
    std::vector<std::int64_t> weight;
    std::vector<std::int64_t> scale;
    std::vector<std::vector<std::int64_t>> mix;
};

IntegerForm integer_form(const std::vector<std::vector<std::int64_t>>& gram) {
    const std::size_t r = gram.size();
    std::vector<Rational> d(r);
    std::vector<std::vector<Rational>> l(r, std::vector<Rational>(r));
    for (std::size_t j = 0; j < r; ++j) {
        Rational dj = Rational(static_cast<long>(gram[j][j]));
        for (std::size_t k = 0; k < j; ++k) dj -= l[j][k] * l[j][k] * d[k];
        if (dj <= 0) throw NotPositiveDefinite("Gram matrix is not positive definite");
        d[j] = dj;
        l[j][j] = 1;
        for (std::size_t i = j + 1; i < r; ++i) {
            Rational v = Rational(static_cast<long>(gram[i][j]));
            for (std::size_t k = 0; k < j; ++k) v -= l[i][k] * l[j][k] * d[k];
            l[i][j] = v / dj;
        }
    }
    IntegerForm f;
    f.weight.resize(r);
    f.scale.resize(r);
    f.mix.assign(r, std::vector<std::int64_t>(r, 0));
    std::vector<Rational> w(r);
    Integer s = 1;
    for (std::size_t i = 0; i < r; ++i) {
        // y_i = x_i + sum_{j>i} l[j][i] x_j
        Integer den = 1;
        for (std::size_t j = i + 1; j < r; ++j) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), l[j][i].get_den_mpz_t());
        f.scale[i] = to_i64(den);
        for (std::size_t j = i + 1; j < r; ++j) {
            Rational m = l[j][i] * Rational(den);
            f.mix[i][j] = to_i64(m.get_num());
        }
        w[i] = d[i] / Rational(den * den);
        mpz_lcm(s.get_mpz_t(), s.get_mpz_t(), w[i].get_den_mpz_t());
    }
    f.s = to_i64(s);
    for (std::size_t i = 0; i < r; ++i) {
        Rational wi = w[i] * Rational(s);
        f.weight[i] = to_i64(wi.get_num());
    }
    return f;
}

class Enumerator {
public:
    Enumerator(const IntegerForm& form, std::int64_t max_norm)
        : form_(form), rank_(form.weight.size()), max_norm_(max_norm),
          budget_(checked(static_cast<i128>(form.s) * max_norm)),
          x_(rank_, 0), counts_(static_cast<std::size_t>(max_norm + 1), 0) {}

    std::vector<std::int64_t> run() {
        if (rank_ == 0) {
            counts_[0] = 1;
        } else {
            descend(rank_ - 1, budget_);
        }
        return counts_;
    }

private:
    void descend(std::size_t level, std::int64_t remaining) {
        i128 center = 0;
        for (std::size_t j = level + 1; j < rank_; ++j) center += static_cast<i128>(form_.mix[level][j]) * x_[j];
        const std::int64_t c = checked(center);
        const std::int64_t w = form_.weight[level];
        const std::int64_t ymax = isqrt(remaining / w);
        const std::int64_t sc = form_.scale[level];
        const std::int64_t lo = ceil_div(-ymax - c, sc);
        const std::int64_t hi = floor_div(ymax - c, sc);
        for (std::int64_t x = lo; x <= hi; ++x) {
            const i128 y = static_cast<i128>(sc) * x + c;
            const std::int64_t rest = checked(remaining - w * y * y);
            if (rest < 0) continue;
            x_[level] = x;
            if (level == 0) {
                const std::int64_t scaled_norm = budget_ - rest;
                counts_[static_cast<std::size_t>(scaled_norm / form_.s)] += 1;
            } else {
                descend(level - 1, rest);
            }
        }
        x_[level] = 0;
    }

    const IntegerForm& form_;
    std::size_t rank_;
    std::int64_t max_norm_;
    std::int64_t budget_;
    std::vector<std::int64_t> x_;
    std::vector<std::int64_t> counts_;
};

} // namespace

Lattice::Lattice(std::vector<std::vector<std::int64_t>> gram) : gram_(std::move(gram)) {
    const std::size_t r = gram_.size();
    for (std::size_t i = 0; i < r; ++i) {
        if (gram_[i].size() != r) throw NotPositiveDefinite("Gram matrix is not square");
        for (std::size_t j = 0; j < i; ++j) {
            if (gram_[i][j] != gram_[j][i]) throw NotPositiveDefinite("Gram matrix is not symmetric");
        }
    }
    integer_form(gram_);
}

Integer Lattice::determinant() const {
    const std::size_t r = rank();
    if (r == 0) return 1;
    // product of LDL pivots
    detail::RationalMatrix m(r, std::vector<Rational>(r));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) m[i][j] = Rational(static_cast<long>(gram_[i][j]));
    }
    Rational det = 1;
    for (std::size_t col = 0; col < r; ++col) {
        for (std::size_t row = col + 1; row < r; ++row) {
            const Rational f = m[row][col] / m[col][col];
            for (std::size_t j = col; j < r; ++j) m[row][j] -= f * m[col][j];
        }
        det *= m[col][col];
    }
    return det.get_num();
}

Lattice Lattice::zn(std::size_t r) {
    std::vector<std::vector<std::int64_t>> g(r, std::vector<std::int64_t>(r, 0));
    for (std::size_t i = 0; i < r; ++i) g[i][i] = 1;
    return Lattice(std::move(g));
}

Lattice Lattice::e8() {
    std::vector<std::vector<std::int64_t>> g(8, std::vector<std::int64_t>(8, 0));
    for (std::size_t i = 0; i < 8; ++i) g[i][i] = 2;
    auto bond = [&](std::size_t i, std::size_t j) { g[i][j] = g[j][i] = -1; };
    // chain 0-1-2-3-4-5-6, node 7 attached to node 4 (arms of length 4, 2, 1)
    for (std::size_t i = 0; i + 1 < 7; ++i) bond(i, i + 1);
    bond(4, 7);
    return Lattice(std::move(g));
}

Lattice Lattice::from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw UnknownLattice(std::string("lattice document is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("gram")) throw UnknownLattice("lattice document needs a \"gram\" field");
    auto gram = doc.at("gram").get<std::vector<std::vector<std::int64_t>>>();
    if (doc.contains("rank") && doc.at("rank").get<std::size_t>() != gram.size()) {
        throw UnknownLattice("\"rank\" does not match the Gram matrix size");
    }
    return Lattice(std::move(gram));
}

std::string Lattice::to_json() const {
    nlohmann::json doc;
    doc["rank"] = rank();
    doc["gram"] = gram_;
    return doc.dump();
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
    const std::size_t r = a.rank() + b.rank();
    std::vector<std::vector<std::int64_t>> g(r, std::vector<std::int64_t>(r, 0));
    for (std::size_t i = 0; i < a.rank(); ++i) {
        for (std::size_t j = 0; j < a.rank(); ++j) g[i][j] = a.gram()[i][j];
    }
    for (std::size_t i = 0; i < b.rank(); ++i) {
        for (std::size_t j = 0; j < b.rank(); ++j) g[a.rank() + i][a.rank() + j] = b.gram()[i][j];
    }
    return Lattice(std::move(g));
}

Lattice builtin_lattice(std::string_view name) {
    if (name == "e8" || name == "E8") return Lattice::e8();
    std::string_view rest;
    if (name.starts_with("zn:") || name.starts_with("Zn:")) {
        rest = name.substr(3);
    } else if ((name.starts_with("zn(") || name.starts_with("Zn(")) && name.ends_with(")")) {
        rest = name.substr(3, name.size() - 4);
    } else {
        throw UnknownLattice("unknown lattice '" + std::string(name) + "'");
    }
    std::size_t r = 0;
    if (rest.empty()) throw UnknownLattice("missing rank in '" + std::string(name) + "'");
    for (char ch : rest) {
        if (ch < '0' || ch > '9') throw UnknownLattice("bad rank in '" + std::string(name) + "'");
        r = r * 10 + static_cast<std::size_t>(ch - '0');
    }
    return Lattice::zn(r);
}

std::vector<Integer> norm_counts(const Lattice& lattice, std::int64_t max_norm) {
    if (max_norm < 0) return {};
    const IntegerForm form = integer_form(lattice.gram());
    const auto counts = Enumerator(form, max_norm).run();
    std::vector<Integer> out;
    out.reserve(counts.size());
    for (std::int64_t c : counts) out.emplace_back(static_cast<long>(c));
    return out;
}

QSeries theta_series(const Lattice& lattice, const Rational& max_exponent) {
    if (max_exponent < 0) throw Error("theta_series: max_exponent must be non-negative");
    Rational twice = max_exponent * 2;
    Integer bound;
    mpz_fdiv_q(bound.get_mpz_t(), twice.get_num_mpz_t(), twice.get_den_mpz_t());
    const std::int64_t max_norm = to_i64(bound);
    const auto counts = norm_counts(lattice, max_norm);
    std::map<std::int64_t, Rational> terms;
    for (std::size_t n = 0; n < counts.size(); ++n) {
        if (counts[n] != 0) terms.emplace(static_cast<std::int64_t>(n), Rational(counts[n]));
    }
    return QSeries(2, std::move(terms), max_norm + 1);
}

Integer vector_count(const Lattice& lattice, std::int64_t norm) {
    if (norm < 0) return 0;
    return norm_counts(lattice, norm)[static_cast<std::size_t>(norm)];
}

} // namespace modq::lattice
