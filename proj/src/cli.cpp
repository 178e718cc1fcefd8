#include "modq/cli.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "modq/errors.hpp"
#include "modq/expr.hpp"
#include "modq/hurwitz_cache.hpp"
#include "modq/lattice.hpp"
#include "modq/numeric.hpp"
#include "modq/ringstruct.hpp"
#include "modq/series_document.hpp"
#include "modq/verify.hpp"

namespace modq::cli {

namespace {

/// Malformed flag values that CLI11 itself cannot see (e.g. --gamma 1,2,3).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string part;
    std::istringstream in(text);
    while (std::getline(in, part, sep)) parts.push_back(part);
    return parts;
}

template <typename T>
std::vector<T> parse_list(const std::string& flag, const std::string& text, std::size_t count) {
    const auto parts = split(text, ',');
    if (parts.size() != count) {
        throw UsageError(flag + " expects " + std::to_string(count) + " comma-separated numbers");
    }
    std::vector<T> values;
    for (const auto& p : parts) {
        std::istringstream in(p);
        T v{};
        if (!(in >> v) || !(in >> std::ws).eof()) throw UsageError(flag + ": bad number '" + p + "'");
        values.push_back(v);
    }
    return values;
}

std::string monomial_label(int a, int b, int c) {
    std::string s;
    auto add = [&](const char* name, int e) {
        if (e == 0) return;
        if (!s.empty()) s += "*";
        s += name;
        if (e > 1) s += "^" + std::to_string(e);
    };
    add("E2", a);
    add("E4", b);
    add("E6", c);
    return s.empty() ? "1" : s;
}

void print_terms(std::ostream& out, const std::vector<std::pair<std::string, Rational>>& rows) {
    std::size_t width = 8;
    for (const auto& row : rows) width = std::max(width, row.first.size());
    out << std::left << std::setw(static_cast<int>(width)) << "monomial" << "  coefficient\n";
    for (const auto& [label, c] : rows) {
        out << std::left << std::setw(static_cast<int>(width)) << label << "  " << c.get_str() << "\n";
    }
}

lattice::Lattice load_lattice(const std::string& spec) {
    if (spec.rfind("file:", 0) == 0) {
        const std::string path = spec.substr(5);
        std::ifstream in(path);
        if (!in) throw UsageError("cannot read lattice file " + path);
        std::stringstream buffer;
        buffer << in.rdbuf();
        return lattice::Lattice::from_json(buffer.str());
    }
    return lattice::builtin_lattice(spec);
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact q-expansions of modular and quasi-modular forms", "modq"};
    app.require_subcommand(1);

    std::string expr_text;
    std::int64_t order = 10;
    bool as_json = false;
    auto* expand = app.add_subcommand("expand", "Expand an expression to a truncated q-series");
    expand->add_option("--expr", expr_text, "Expression, e.g. \"(E4^3 - E6^2)/1728\"")->required();
    expand->add_option("--order", order, "Coefficients below q^order")->required()->check(CLI::NonNegativeNumber);
    expand->add_flag("--json", as_json, "Print a JSON series document");

    std::int64_t weight = 0;
    bool quasi = false;
    std::optional<std::int64_t> decompose_order;
    auto* decompose = app.add_subcommand("decompose", "Write an expression as a polynomial in E4, E6 (or E2, E4, E6)");
    decompose->add_option("--expr", expr_text, "Expression")->required();
    decompose->add_option("--weight", weight, "Weight")->required();
    decompose->add_flag("--quasi", quasi, "Use the quasi-modular basis E2^a E4^b E6^c");
    decompose->add_option("--order", decompose_order, "Working order (default: dimension + margin)");

    std::int64_t max_weight = 0;
    auto* dims = app.add_subcommand("dims", "Dimensions of M_k and QM_k");
    dims->add_option("--max", max_weight, "Largest weight")->required()->check(CLI::NonNegativeNumber);

    std::string lattice_spec;
    std::string max_exp = "10";
    auto* theta = app.add_subcommand("theta", "Theta series of a lattice");
    theta->add_option("--lattice", lattice_spec, "e8 | zn:R | file:PATH")->required();
    theta->add_option("--max-exp", max_exp, "Largest exponent (rational)");
    theta->add_flag("--json", as_json, "Print a JSON series document");

    int degree = 0, genus = 0;
    double budget = enumgeo::kDefaultOracleBudget;
    std::string cache_path = "./hurwitz-cache.json";
    auto* hurwitz = app.add_subcommand("hurwitz", "Brute-force Hurwitz count of degree-d genus-g covers of an elliptic curve");
    hurwitz->add_option("--degree", degree, "Degree d")->required()->check(CLI::PositiveNumber);
    hurwitz->add_option("--genus", genus, "Genus g")->required()->check(CLI::PositiveNumber);
    hurwitz->add_option("--budget", budget, "Step budget");
    hurwitz->add_option("--cache", cache_path, "Cache file");

    std::string suite = "all";
    verify::Options vopts;
    std::string report_path = vopts.report_path.string();
    std::optional<std::string> verify_cache;
    auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suites");
    verify_cmd->add_option("--suite", suite, "exact | numeric | mirror | all")
        ->check(CLI::IsMember({"exact", "numeric", "mirror", "all"}));
    verify_cmd->add_option("--order", vopts.order, "Exact identities are compared through q^order")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--seed", vopts.seed, "Seed for random samples");
    verify_cmd->add_option("--report", report_path, "Where the mirror suite writes its report");
    verify_cmd->add_option("--budget", vopts.budget, "Oracle step budget");
    verify_cmd->add_option("--cache", verify_cache, "Oracle cache file");

    std::string gamma_text, tau_text;
    int nc_weight = 0;
    std::int64_t nc_order = 300;
    auto* numeric_check = app.add_subcommand("numeric-check", "Modularity residual at one point");
    numeric_check->add_option("--expr", expr_text, "Expression")->required();
    numeric_check->add_option("--weight", nc_weight, "Weight")->required();
    numeric_check->add_option("--gamma", gamma_text, "a,b,c,d with ad - bc = 1")->required();
    numeric_check->add_option("--tau", tau_text, "x,y with y > 0")->required();
    numeric_check->add_option("--order", nc_order, "Truncation order")->check(CLI::PositiveNumber);

    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsage;
    }

    try {
        if (*expand) {
            const auto e = expr::parse(expr_text);
            const QSeries s = expr::evaluate(*e, order);
            out << (as_json ? io::to_json({s, expr_text}) + "\n" : io::to_table(s));
        } else if (*decompose) {
            const auto e = expr::parse(expr_text);
            const std::int64_t dim = quasi ? ringstruct::dim_qmk(weight) : ringstruct::dim_mk(weight);
            const std::int64_t work = decompose_order.value_or(dim + ringstruct::kVerificationMargin + 2);
            const QSeries f = expr::evaluate(*e, work);
            std::vector<std::pair<std::string, Rational>> rows;
            if (quasi) {
                for (const auto& [m, c] : ringstruct::decompose_quasimodular(f, weight).terms) {
                    rows.emplace_back(monomial_label(m[0], m[1], m[2]), c);
                }
            } else {
                for (const auto& [m, c] : ringstruct::decompose_modular(f, weight).terms) {
                    rows.emplace_back(monomial_label(0, m.first, m.second), c);
                }
            }
            print_terms(out, rows);
        } else if (*dims) {
            out << std::right << std::setw(4) << "k" << std::setw(8) << "dim M_k" << std::setw(9) << "dim QM_k" << "\n";
            for (std::int64_t k = 0; k <= max_weight; k += 2) {
                out << std::setw(4) << k << std::setw(8) << ringstruct::dim_mk(k) << std::setw(9)
                    << ringstruct::dim_qmk(k) << "\n";
            }
        } else if (*theta) {
            Rational m;
            if (m.set_str(max_exp, 10) != 0 || m.get_den() == 0 || m < 0) {
                throw UsageError("--max-exp must be a non-negative rational");
            }
            m.canonicalize();
            const QSeries s = lattice::theta_series(load_lattice(lattice_spec), m);
            out << (as_json ? io::to_json({s, "theta(" + lattice_spec + ")"}) + "\n" : io::to_table(s));
        } else if (*hurwitz) {
            io::HurwitzCache cache(cache_path);
            const auto rec = cache.get_or_compute(degree, genus, budget);
            out << rec.count.get_str() << "\n";
        } else if (*verify_cmd) {
            vopts.report_path = report_path;
            if (verify_cache) vopts.cache_path = *verify_cache;
            const auto results = verify::run_suite(suite, vopts);
            std::size_t failed = 0;
            for (const auto& r : results) {
                out << (r.passed ? "PASS " : "FAIL ") << r.suite << ": " << r.name;
                if (!r.detail.empty()) out << "  [" << r.detail << "]";
                out << "\n";
                if (!r.passed) ++failed;
            }
            out << results.size() - failed << "/" << results.size() << " checks passed\n";
            return failed == 0 ? kOk : kVerificationFailed;
        } else if (*numeric_check) {
            const auto g = parse_list<std::int64_t>("--gamma", gamma_text, 4);
            const auto t = parse_list<double>("--tau", tau_text, 2);
            const numeric::Moebius gamma(g[0], g[1], g[2], g[3]);
            const numeric::HalfPlanePoint tau(t[0], t[1]);
            const auto e = expr::parse(expr_text);
            const QSeries f = expr::evaluate(*e, nc_order);
            const double r = numeric::modularity_residual(f, nc_weight, gamma, tau);
            out << std::scientific << std::setprecision(6) << "residual " << r << "\n";
        }
        return kOk;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        err << "parse error at position " << e.position() << ": " << e.what() << "\n";
        return kParse;
    } catch (const UnknownName& e) {
        err << "error: " << e.what() << "\n";
        return kParse;
    } catch (const UnknownLattice& e) {
        err << "error: " << e.what() << "\n";
        return kParse;
    } catch (const NotModular& e) {
        err << "error: " << e.what() << "\n";
        return kNotModular;
    } catch (const NotQuasiModular& e) {
        err << "error: " << e.what() << "\n";
        return kNotModular;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kComputation;
    }
}

} // namespace modq::cli
