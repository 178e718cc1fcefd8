#include "modq/verify.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "modq/forms.hpp"
#include "modq/hurwitz_cache.hpp"
#include "modq/lattice.hpp"
#include "modq/numeric.hpp"
#include "modq/ringstruct.hpp"

namespace modq::verify {

namespace {

using forms::Normalization;

QSeries E(std::int64_t k, std::int64_t order) { return forms::eisenstein(k, Normalization::E, order); }

class Collector {
public:
    explicit Collector(std::string suite) : suite_(std::move(suite)) {}

    template <typename F>
    void check(const std::string& name, F&& body) {
        CheckResult r{suite_, name, false, ""};
        try {
            std::string detail;
            r.passed = body(detail);
            r.detail = std::move(detail);
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        results_.push_back(std::move(r));
    }

    std::vector<CheckResult> take() { return std::move(results_); }

private:
    std::string suite_;
    std::vector<CheckResult> results_;
};

std::string sci(double v) {
    std::ostringstream s;
    s.precision(3);
    s << std::scientific << v;
    return s.str();
}

enumgeo::HurwitzRecord oracle(const Options& opts, std::optional<io::HurwitzCache>& cache, int d, int g) {
    if (cache) return cache->get_or_compute(d, g, opts.budget);
    return enumgeo::hurwitz_oracle(d, g, opts.budget);
}

} // namespace

std::vector<CheckResult> run_exact(const Options& opts) {
    Collector c("exact");
    const std::int64_t through = opts.order;
    const std::int64_t n = through + 1;
    const QSeries e2 = E(2, n), e4 = E(4, n), e6 = E(6, n);
    auto through_text = [&] { return "through q^" + std::to_string(through); };

    c.check("E8 = E4^2", [&](std::string& d) { d = through_text(); return eq(E(8, n), e4 * e4, through); });
    c.check("E10 = E4*E6", [&](std::string& d) { d = through_text(); return eq(E(10, n), e4 * e6, through); });
    c.check("Delta = eta^24", [&](std::string& d) {
        d = through_text();
        return eq(forms::delta(n), forms::eta_pow(24, n), through);
    });
    c.check("D(Delta)/Delta = E2", [&](std::string& d) {
        d = through_text();
        const QSeries delta = forms::delta(n + 2);
        return eq(derivative(delta) * inv(delta), e2, through);
    });
    c.check("D(E2) = (E2^2 - E4)/12", [&](std::string& d) {
        d = through_text();
        return eq(derivative(e2), make_rational(1, 12) * (e2 * e2 - e4), through);
    });
    c.check("D(E4) = (E2*E4 - E6)/3", [&](std::string& d) {
        d = through_text();
        return eq(derivative(e4), make_rational(1, 3) * (e2 * e4 - e6), through);
    });
    c.check("D(E6) = (E2*E6 - E4^2)/2", [&](std::string& d) {
        d = through_text();
        return eq(derivative(e6), make_rational(1, 2) * (e2 * e6 - e4 * e4), through);
    });
    c.check("Delta coefficients q^1..q^7", [&](std::string& d) {
        const QSeries delta = forms::delta(8);
        const std::int64_t expected[] = {1, -24, 252, -1472, 4830, -6048, -16744};
        std::ostringstream s;
        bool ok = delta.coeff(0) == 0;
        for (int k = 1; k <= 7; ++k) {
            const Rational got = delta.coeff(k);
            s << (k > 1 ? "," : "") << got.get_str();
            ok = ok && got == expected[k - 1];
        }
        d = s.str();
        return ok;
    });
    c.check("sigma7 = sigma3 + 120 sum sigma3*sigma3, d <= 200", [&](std::string& d) {
        const auto s3 = forms::sigma_table(3, 201);
        const auto s7 = forms::sigma_table(7, 201);
        for (std::int64_t m = 1; m <= 200; ++m) {
            Integer conv = 0;
            for (std::int64_t j = 1; j < m; ++j) conv += s3[static_cast<std::size_t>(j)] * s3[static_cast<std::size_t>(m - j)];
            if (s7[static_cast<std::size_t>(m)] != s3[static_cast<std::size_t>(m)] + 120 * conv) {
                d = "fails at d=" + std::to_string(m);
                return false;
            }
        }
        return true;
    });
    c.check("dimension table", [&](std::string& d) {
        std::ostringstream s;
        const std::int64_t ks[] = {0, 2, 4, 6, 8, 10, 12, 14, 16};
        const std::int64_t expected[] = {1, 0, 1, 1, 1, 1, 2, 1, 2};
        bool ok = true;
        for (int i = 0; i < 9; ++i) {
            const auto got = ringstruct::dim_mk(ks[i]);
            s << (i ? "," : "") << got;
            ok = ok && got == expected[i];
        }
        d = s.str();
        return ok;
    });
    c.check("decompose_modular round trip, k <= 40", [&](std::string& d) {
        std::mt19937_64 rng(opts.seed);
        std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
        int cases = 0;
        for (std::int64_t k = 0; k <= 40; k += 2) {
            const auto monomials = ringstruct::weight_monomials(k);
            if (monomials.empty()) continue;
            ringstruct::ModularPoly p;
            p.weight = k;
            for (const auto& m : monomials) {
                Rational r(num(rng), den(rng));
                r.canonicalize();
                if (r != 0) p.terms[m] = r;
            }
            const QSeries f = p.to_series(static_cast<std::int64_t>(monomials.size()) + ringstruct::kVerificationMargin + 4);
            if (ringstruct::decompose_modular(f, k) != p) {
                d = "mismatch at k=" + std::to_string(k);
                return false;
            }
            if (ringstruct::decompose_modular_inductive(f, k) != p) {
                d = "inductive algorithm disagrees at k=" + std::to_string(k);
                return false;
            }
            ++cases;
        }
        d = std::to_string(cases) + " weights";
        return true;
    });
    c.check("E4, E6 algebraically independent through weight 40", [&](std::string&) {
        return ringstruct::algebraic_independence_check(40);
    });
    c.check("theta_E8 = E4 through q^10", [&](std::string&) {
        const QSeries theta = lattice::theta_series(lattice::Lattice::e8(), 10);
        return eq(theta, E(4, 11), 10);
    });
    c.check("E8 norm-2 vectors = 240", [&](std::string& d) {
        const Integer n2 = lattice::vector_count(lattice::Lattice::e8(), 2);
        d = n2.get_str();
        return n2 == 240;
    });
    c.check("K3 genus 0 = q^-1 + 24 + 324q + 3200q^2", [&](std::string& d) {
        const QSeries k3 = enumgeo::k3_series(0, 3);
        d = to_string(k3);
        return k3.coeff(-1) == 1 && k3.coeff(0) == 24 && k3.coeff(1) == 324 && k3.coeff(2) == 3200 &&
               *k3.lowest_exponent() == -1;
    });
    c.check("F_F leading term -2 q^-1", [&](std::string& d) {
        const QSeries ff = enumgeo::hirzebruch_series(enumgeo::HirzebruchClass::F, 3);
        d = to_string(ff);
        return *ff.lowest_exponent() == -1 && ff.coeff(-1) == -2;
    });
    c.check("F_C leading term 1", [&](std::string& d) {
        const QSeries fc = enumgeo::hirzebruch_series(enumgeo::HirzebruchClass::C, 3);
        d = to_string(fc);
        return *fc.lowest_exponent() == 0 && fc.coeff(0) == 1;
    });
    return c.take();
}

std::vector<CheckResult> run_numeric(const Options& opts) {
    Collector c("numeric");
    constexpr std::int64_t kOrder = 300;
    constexpr double kTol = 1e-8;
    const auto samples = numeric::random_samples(20, opts.seed);
    const QSeries e4 = E(4, kOrder), e6 = E(6, kOrder);
    const std::vector<std::pair<std::string, std::pair<QSeries, int>>> forms_under_test = {
        {"E4", {e4, 4}},
        {"E6", {e6, 6}},
        {"Delta", {forms::delta(kOrder), 12}},
        {"E4^2", {e4 * e4, 8}},
        {"E4*E6", {e4 * e6, 10}},
    };
    for (const auto& [label, fw] : forms_under_test) {
        c.check(label + " modular at 20 seeded points", [&](std::string& d) {
            double worst = 0.0;
            for (const auto& s : samples) {
                worst = std::max(worst, numeric::modularity_residual(fw.first, fw.second, s.gamma, s.tau));
            }
            d = "max residual " + sci(worst);
            return worst < kTol;
        });
    }
    c.check("E2 anomaly 12c/(2 pi i (c tau + d))", [&](std::string& d) {
        double worst = 0.0;
        for (const auto& s : samples) worst = std::max(worst, numeric::e2_anomaly_residual(s.gamma, s.tau, kOrder));
        d = "max residual " + sci(worst);
        return worst < kTol;
    });
    c.check("E2 modularity defect equals |anomaly|", [&](std::string& d) {
        const QSeries e2 = E(2, kOrder);
        double worst = 0.0;
        for (const auto& s : samples) {
            const double r = numeric::modularity_residual(e2, 2, s.gamma, s.tau);
            worst = std::max(worst, std::abs(r - std::abs(numeric::e2_anomaly(s.gamma, s.tau))));
        }
        d = "max deviation " + sci(worst);
        return worst < kTol;
    });
    c.check("E2* = E2 - 3/(pi im tau) is weight-2 modular", [&](std::string& d) {
        double worst = 0.0;
        for (const auto& s : samples) worst = std::max(worst, numeric::e2_star_residual(s.gamma, s.tau, kOrder));
        d = "max residual " + sci(worst);
        return worst < kTol;
    });
    c.check("theta_E8 evaluates like E4", [&](std::string& d) {
        const QSeries theta = lattice::theta_series(lattice::Lattice::e8(), 10);
        double worst = 0.0;
        for (const auto& s : samples) {
            const auto a = numeric::eval_series(theta, s.tau);
            const auto b = numeric::eval_series(e4, s.tau);
            worst = std::max(worst, std::abs(a.value - b.value));
        }
        d = "max deviation " + sci(worst);
        return worst < kTol;
    });
    c.check("E4, Delta bounded at infinity", [&](std::string&) {
        return numeric::bounded_at_infinity(e4) && numeric::bounded_at_infinity(forms::delta(60));
    });
    return c.take();
}

std::vector<CheckResult> run_mirror(const Options& opts) {
    Collector c("mirror");
    std::optional<io::HurwitzCache> cache;
    if (opts.cache_path) cache.emplace(*opts.cache_path);
    nlohmann::ordered_json report;
    report["genus2"] = nlohmann::ordered_json::object();
    report["genus3"] = nlohmann::ordered_json::object();

    c.check("trivalent graphs", [&](std::string& d) {
        using namespace enumgeo;
        std::ostringstream s;
        s << "|Aut theta|=" << multigraph_automorphisms(theta_graph())
          << " |Aut G1|=" << multigraph_automorphisms(genus3_gamma1())
          << " |Aut G2|=" << multigraph_automorphisms(genus3_gamma2());
        d = s.str();
        return validate_trivalent(theta_graph(), 2) && validate_trivalent(genus3_gamma1(), 3) &&
               validate_trivalent(genus3_gamma2(), 3);
    });

    c.check("genus 2: mirror/oracle ratio constant for d = 2..5", [&](std::string& d) {
        const QSeries f2 = enumgeo::mirror_F(2, 6);
        std::optional<Rational> constant;
        bool ok = true;
        std::ostringstream s;
        for (int deg = 2; deg <= 5; ++deg) {
            const auto rec = oracle(opts, cache, deg, 2);
            const Rational m = f2.coeff(deg);
            nlohmann::ordered_json row;
            row["oracle"] = rec.count.get_str();
            row["tuples"] = rec.tuples;
            row["mirror"] = m.get_str();
            if (rec.count == 0 || m == 0) {
                ok = false;
                row["ratio"] = nullptr;
            } else {
                const Rational ratio = m / rec.count;
                row["ratio"] = ratio.get_str();
                if (!constant) constant = ratio;
                ok = ok && ratio == *constant;
            }
            report["genus2"][std::to_string(deg)] = row;
            s << (deg > 2 ? " " : "") << "N" << deg << "=" << rec.count.get_str();
        }
        if (constant) {
            report["genus2"]["constant"] = constant->get_str();
            s << " constant=" << constant->get_str();
        }
        d = s.str();
        return ok && constant.has_value();
    });

    c.check("F2 quasi-modular of weight 6", [&](std::string& d) {
        const auto p = ringstruct::decompose_quasimodular(enumgeo::mirror_F(2, 30), 6);
        d = "depth " + std::to_string(p.depth());
        return true;
    });
    c.check("F3 quasi-modular of weight 12 (both readings)", [&](std::string& d) {
        using enumgeo::Gamma1Reading;
        const auto p1 = ringstruct::decompose_quasimodular(enumgeo::mirror_F(3, 40, Gamma1Reading::AsPrinted), 12);
        const auto p2 = ringstruct::decompose_quasimodular(enumgeo::mirror_F(3, 40, Gamma1Reading::E2FourthPower), 12);
        d = "depths " + std::to_string(p1.depth()) + ", " + std::to_string(p2.depth());
        return true;
    });

    c.check("genus 3 diagnostic report (not asserted)", [&](std::string& d) {
        using enumgeo::Gamma1Reading;
        const std::pair<const char*, Gamma1Reading> readings[] = {
            {"as_printed", Gamma1Reading::AsPrinted}, {"e2_fourth_power", Gamma1Reading::E2FourthPower}};
        std::ostringstream s;
        std::vector<enumgeo::HurwitzRecord> recs;
        for (int deg = 2; deg <= 4; ++deg) recs.push_back(oracle(opts, cache, deg, 3));
        for (const auto& [label, reading] : readings) {
            const QSeries f3 = enumgeo::mirror_F(3, 6, reading);
            nlohmann::ordered_json block;
            s << label << ":";
            for (const auto& rec : recs) {
                const Rational m = f3.coeff(rec.degree);
                nlohmann::ordered_json row;
                row["oracle"] = rec.count.get_str();
                row["mirror"] = m.get_str();
                if (rec.count != 0) {
                    row["ratio"] = Rational(m / rec.count).get_str();
                    s << " " << Rational(m / rec.count).get_str();
                } else {
                    row["ratio"] = nullptr;
                    s << " -";
                }
                block[std::to_string(rec.degree)] = row;
            }
            s << "; ";
            report["genus3"][label] = block;
        }
        std::ofstream out(opts.report_path);
        if (!out) throw Error("cannot write report " + opts.report_path.string());
        out << report.dump(2) << "\n";
        s << "report written to " << opts.report_path.string();
        d = s.str();
        return true;
    });
    return c.take();
}

std::vector<CheckResult> run_suite(const std::string& suite, const Options& opts) {
    if (suite == "exact") return run_exact(opts);
    if (suite == "numeric") return run_numeric(opts);
    if (suite == "mirror") return run_mirror(opts);
    if (suite == "all") {
        auto all = run_exact(opts);
        for (auto& r : run_numeric(opts)) all.push_back(std::move(r));
        for (auto& r : run_mirror(opts)) all.push_back(std::move(r));
        return all;
    }
    throw Error("unknown suite '" + suite + "'");
}

} // namespace modq::verify
