#include "modq/enumgeo.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>
#include <string>

#include "modq/forms.hpp"

namespace modq::enumgeo {

using ringstruct::QuasiModularPoly;

Multigraph theta_graph() { return {2, {{0, 1}, {0, 1}, {0, 1}}}; }

Multigraph genus3_gamma1() { return {4, {{0, 1}, {0, 1}, {2, 3}, {2, 3}, {0, 2}, {1, 3}}}; }

Multigraph genus3_gamma2() { return {4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}}; }

std::int64_t multigraph_automorphisms(const Multigraph& g) {
    const int n = g.vertices;
    std::map<std::pair<int, int>, int> mult;
    for (auto [u, v] : g.edges) {
        if (u > v) std::swap(u, v);
        ++mult[{u, v}];
    }
    auto multiplicity = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        auto it = mult.find({u, v});
        return it == mult.end() ? 0 : it->second;
    };

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::int64_t vertex_autos = 0;
    do {
        bool ok = true;
        for (const auto& [uv, m] : mult) {
            if (multiplicity(perm[static_cast<std::size_t>(uv.first)],
                             perm[static_cast<std::size_t>(uv.second)]) != m) {
                ok = false;
                break;
            }
        }
        if (ok) ++vertex_autos;
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::int64_t edge_autos = 1;
    for (const auto& [uv, m] : mult) {
        for (int i = 2; i <= m; ++i) edge_autos *= i;
        if (uv.first == uv.second) edge_autos <<= m;
    }
    return vertex_autos * edge_autos;
}

bool validate_trivalent(const Multigraph& g, int genus) {
    if (g.vertices != 2 * genus - 2) return false;
    if (static_cast<int>(g.edges.size()) != 3 * genus - 3) return false;
    std::vector<int> degree(static_cast<std::size_t>(g.vertices), 0);
    for (const auto& [u, v] : g.edges) {
        if (u < 0 || v < 0 || u >= g.vertices || v >= g.vertices) return false;
        ++degree[static_cast<std::size_t>(u)];
        ++degree[static_cast<std::size_t>(v)];
    }
    return std::all_of(degree.begin(), degree.end(), [](int d) { return d == 3; });
}

Propagator propagator_coeffs(int n_max, std::int64_t order) {
    if (n_max < 1) throw Error("propagator_coeffs: n_max must be >= 1");
    Propagator p;
    Integer fact = 1; // (2n-2)!
    for (int n = 1; n <= n_max; ++n) {
        if (n > 1) fact *= (2 * n - 3) * (2 * n - 2);
        // -zeta(1-2n) = B_{2n}/2n
        const Rational c = forms::bernoulli(2 * n) / Rational(2 * n) / Rational(fact);
        p.terms.emplace_back(2 * n - 2, c * forms::eisenstein(2 * n, forms::Normalization::E, order));
    }
    return p;
}

QuasiModularPoly amplitude_polynomial(Amplitude which, Gamma1Reading reading) {
    QuasiModularPoly p;
    switch (which) {
    case Amplitude::Theta: {
        p.weight = 6;
        const Rational s = make_rational(1, 103680); // 2^8 3^4 5
        p.terms[{3, 0, 0}] = 10 * s;
        p.terms[{1, 1, 0}] = -6 * s;
        p.terms[{0, 0, 1}] = -4 * s;
        return p;
    }
    case Amplitude::Gamma1: {
        p.weight = 12;
        const Rational s = make_rational(1, 93312); // 2^7 3^6
        p.terms[{0, 0, 2}] += 4 * s;
        p.terms[{0, 3, 0}] += 4 * s;
        p.terms[{1, 1, 1}] += -12 * s;
        p.terms[{2, 2, 0}] += -3 * s;
        p.terms[{3, 0, 1}] += 4 * s;
        if (reading == Gamma1Reading::AsPrinted) {
            p.terms[{0, 3, 0}] += 6 * s; // "6 E4^2 E4"
        } else {
            p.terms[{4, 1, 0}] += 6 * s;
        }
        p.terms[{6, 0, 0}] += -3 * s;
        return p;
    }
    case Amplitude::Gamma2: {
        // (E4 - E2^2)^3 / (2^8 3^4)
        QuasiModularPoly base;
        base.weight = 4;
        base.terms[{0, 1, 0}] = 1;
        base.terms[{2, 0, 0}] = -1;
        QuasiModularPoly scale_poly;
        scale_poly.weight = 0;
        scale_poly.terms[{0, 0, 0}] = make_rational(1, 20736);
        return base * base * base * scale_poly;
    }
    }
    throw Error("unknown amplitude");
}

QSeries graph_amplitude(Amplitude which, std::int64_t order, Gamma1Reading reading) {
    return amplitude_polynomial(which, reading).to_series(order);
}

Multigraph amplitude_graph(Amplitude which) {
    switch (which) {
    case Amplitude::Theta: return theta_graph();
    case Amplitude::Gamma1: return genus3_gamma1();
    case Amplitude::Gamma2: return genus3_gamma2();
    }
    throw Error("unknown amplitude");
}

QSeries mirror_F(int genus, std::int64_t order, Gamma1Reading reading) {
    std::vector<Amplitude> graphs;
    if (genus == 2) {
        graphs = {Amplitude::Theta};
    } else if (genus == 3) {
        graphs = {Amplitude::Gamma1, Amplitude::Gamma2};
    } else {
        throw Error("mirror_F is available for genus 2 and 3 only");
    }
    QSeries total = QSeries(1, {}, order);
    for (Amplitude a : graphs) {
        const auto aut = multigraph_automorphisms(amplitude_graph(a));
        total = total + make_rational(1, aut) * graph_amplitude(a, order, reading);
    }
    return total;
}

namespace {

constexpr int kMaxDegree = 12;
using Perm = std::array<std::uint8_t, kMaxDegree>;

Perm compose(const Perm& p, const Perm& q, int d) {
    // (p q)(x) = p(q(x))
    Perm r{};
    for (int i = 0; i < d; ++i) r[static_cast<std::size_t>(i)] = p[q[static_cast<std::size_t>(i)]];
    return r;
}

Perm inverse(const Perm& p, int d) {
    Perm r{};
    for (int i = 0; i < d; ++i) r[p[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
    return r;
}

Perm identity(int d) {
    Perm r{};
    for (int i = 0; i < d; ++i) r[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
    return r;
}

bool equal(const Perm& p, const Perm& q, int d) {
    for (int i = 0; i < d; ++i) {
        if (p[static_cast<std::size_t>(i)] != q[static_cast<std::size_t>(i)]) return false;
    }
    return true;
}

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)), components_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[static_cast<std::size_t>(x)] != x) {
            auto& px = parent_[static_cast<std::size_t>(x)];
            px = parent_[static_cast<std::size_t>(px)];
            x = px;
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent_[static_cast<std::size_t>(a)] = b;
            --components_;
        }
    }
    int components() const { return components_; }

private:
    std::vector<int> parent_;
    int components_;
};

bool transitive(const std::vector<const Perm*>& generators, int d) {
    UnionFind uf(d);
    for (const Perm* g : generators) {
        for (int i = 0; i < d; ++i) uf.unite(i, (*g)[static_cast<std::size_t>(i)]);
    }
    return uf.components() == 1;
}

std::vector<Perm> transpositions(int d) {
    std::vector<Perm> out;
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            Perm t = identity(d);
            std::swap(t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(j)]);
            out.push_back(t);
        }
    }
    return out;
}

Perm from_vector(const Permutation& p) {
    if (p.size() > kMaxDegree) throw Error("permutation degree too large");
    Perm r{};
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = static_cast<std::uint8_t>(p[i]);
    return r;
}

} // namespace

double hurwitz_cost_estimate(int degree, int genus) {
    const double fact = std::tgamma(static_cast<double>(degree) + 1.0);
    const double transp = degree * (degree - 1) / 2.0;
    return fact * std::pow(transp, 2 * genus - 2) * fact;
}

bool hurwitz_tuple_valid(const Permutation& alpha, const Permutation& beta,
                         const std::vector<Permutation>& transps) {
    const int d = static_cast<int>(alpha.size());
    const Perm a = from_vector(alpha);
    const Perm b = from_vector(beta);
    Perm p = compose(compose(a, b, d), compose(inverse(a, d), inverse(b, d), d), d);
    std::vector<Perm> ts;
    for (const auto& t : transps) ts.push_back(from_vector(t));
    for (const auto& t : ts) p = compose(p, t, d);
    if (!equal(p, identity(d), d)) return false;
    std::vector<const Perm*> gens{&a, &b};
    for (const auto& t : ts) gens.push_back(&t);
    return transitive(gens, d);
}

HurwitzRecord hurwitz_oracle(int degree, int genus, double budget) {
    if (degree < 1) throw Error("hurwitz_oracle: degree must be positive");
    if (genus < 2) throw Error("hurwitz_oracle: genus must be >= 2");
    if (degree > kMaxDegree) throw Error("hurwitz_oracle: degree too large");
    const double cost = hurwitz_cost_estimate(degree, genus);
    if (cost > budget) {
        std::ostringstream msg;
        msg << "estimated " << cost << " steps exceeds budget " << budget;
        throw BudgetExceeded(msg.str(), cost);
    }
    const int d = degree;
    const int slots = 2 * genus - 2;
    HurwitzRecord rec;
    rec.degree = degree;
    rec.genus = genus;

    const auto ts = transpositions(d);
    Integer fact = 1;
    for (int i = 2; i <= d; ++i) fact *= i;
    if (ts.empty()) {
        rec.count = 0;
        return rec;
    }

    std::vector<Perm> all;
    {
        Perm p = identity(d);
        do {
            all.push_back(p);
        } while (std::next_permutation(p.begin(), p.begin() + d));
    }
    const Perm id = identity(d);
    std::vector<std::size_t> digits(static_cast<std::size_t>(slots));
    // prefix[i] = commutator * t_{digits[0]} ... t_{digits[i-1]}
    std::vector<Perm> prefix(static_cast<std::size_t>(slots + 1));
    std::vector<const Perm*> gens(static_cast<std::size_t>(slots + 2));

    for (const Perm& a : all) {
        const Perm a_inv = inverse(a, d);
        for (const Perm& b : all) {
            prefix[0] = compose(compose(a, b, d), compose(a_inv, inverse(b, d), d), d);
            std::fill(digits.begin(), digits.end(), 0);
            for (int i = 0; i < slots; ++i) {
                prefix[static_cast<std::size_t>(i + 1)] =
                    compose(prefix[static_cast<std::size_t>(i)], ts[0], d);
            }
            while (true) {
                if (equal(prefix[static_cast<std::size_t>(slots)], id, d)) {
                    gens[0] = &a;
                    gens[1] = &b;
                    for (int i = 0; i < slots; ++i) gens[static_cast<std::size_t>(i + 2)] = &ts[digits[static_cast<std::size_t>(i)]];
                    if (transitive(gens, d)) ++rec.tuples;
                }
                // odometer, last slot fastest
                int pos = slots - 1;
                while (pos >= 0 && ++digits[static_cast<std::size_t>(pos)] == ts.size()) {
                    digits[static_cast<std::size_t>(pos)] = 0;
                    --pos;
                }
                if (pos < 0) break;
                for (int i = pos; i < slots; ++i) {
                    prefix[static_cast<std::size_t>(i + 1)] = compose(
                        prefix[static_cast<std::size_t>(i)], ts[digits[static_cast<std::size_t>(i)]], d);
                }
            }
        }
    }
    rec.count = Rational(Integer(static_cast<long>(rec.tuples))) / Rational(fact);
    return rec;
}

namespace {

QSeries ehat2(std::int64_t order) { return forms::eisenstein(2, forms::Normalization::Ehat, order); }

} // namespace

QSeries k3_series(int genus, std::int64_t order) {
    if (genus < 0) throw Error("k3_series: genus must be non-negative");
    const std::int64_t work = order + 3;
    const QSeries d_ehat2 = derivative(ehat2(work));
    return (pow(d_ehat2, genus) * inv(forms::delta(work))).truncated(order);
}

QSeries abelian_series(int genus, std::int64_t order) {
    if (genus < 2) throw Error("abelian_series: genus must be >= 2");
    const std::int64_t work = order + 1;
    const QSeries d1 = derivative(ehat2(work));
    const QSeries d2 = derivative(d1);
    return (pow(d1, genus - 2) * d2).truncated(order);
}

QSeries hirzebruch_series(HirzebruchClass beta, std::int64_t order) {
    const std::int64_t work = order + 2;
    const QSeries e4 = forms::eisenstein(4, forms::Normalization::E, work);
    if (beta == HirzebruchClass::C) {
        const QSeries q_half = QSeries::monomial(1, make_rational(1, 2));
        return (q_half * e4 * inv(forms::eta_pow(12, work))).reduced().truncated(order);
    }
    // E10 realized as E4 * E6
    const QSeries e6 = forms::eisenstein(6, forms::Normalization::E, work);
    return (Rational(-2) * e4 * e6 * inv(forms::delta(work))).truncated(order);
}

} // namespace modq::enumgeo
