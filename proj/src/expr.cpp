#include "modq/expr.hpp"

#include <cctype>
#include <set>
#include <sstream>
#include <vector>

#include "modq/enumgeo.hpp"
#include "modq/forms.hpp"
#include "modq/lattice.hpp"

namespace modq::expr {

namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

const char* describe(Tok t) {
    switch (t) {
    case Tok::Int: return "integer";
    case Tok::Ident: return "name";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Slash: return "'/'";
    case Tok::Caret: return "'^'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::End: return "end of input";
    }
    return "?";
}

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char ch = s[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            const std::size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Tok::Int, std::string(s.substr(start, i - start)), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            const std::size_t start = i;
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
            out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start});
            continue;
        }
        Tok kind;
        switch (ch) {
        case '+': kind = Tok::Plus; break;
        case '-': kind = Tok::Minus; break;
        case '*': kind = Tok::Star; break;
        case '/': kind = Tok::Slash; break;
        case '^': kind = Tok::Caret; break;
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        default:
            throw ParseError("unexpected character '" + std::string(1, ch) + "' at position " +
                             std::to_string(i), i);
        }
        out.push_back({kind, std::string(1, ch), i});
        ++i;
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

const std::set<std::string, std::less<>> kFunctions = {"k3", "abelian", "mirrorF", "hirzebruch"};

// E<k> / Ehat<k> for even k >= 2
std::optional<std::int64_t> eisenstein_weight(std::string_view id, std::string_view prefix) {
    if (!id.starts_with(prefix) || id.size() == prefix.size()) return std::nullopt;
    std::int64_t k = 0;
    for (char ch : id.substr(prefix.size())) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
        k = k * 10 + (ch - '0');
        if (k > 1000) return std::nullopt;
    }
    if (id[prefix.size()] == '0' || k < 2 || k % 2 != 0) return std::nullopt;
    return k;
}

template <typename T>
ExprPtr make(T node) {
    return std::make_shared<const FormExpr>(FormExpr{std::move(node)});
}

class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

    ExprPtr parse_all() {
        ExprPtr e = expr();
        expect({Tok::End});
        return e;
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
    }
    const Token& advance() { return tokens_[pos_++]; }
    bool accept(Tok t) {
        if (peek().kind != t) return false;
        ++pos_;
        return true;
    }
    [[noreturn]] void fail(std::initializer_list<Tok> expected) const {
        std::ostringstream msg;
        msg << "parse error at position " << peek().pos << ": found " << describe(peek().kind);
        if (!peek().text.empty()) msg << " '" << peek().text << "'";
        msg << ", expected one of {";
        bool first = true;
        for (Tok t : expected) {
            msg << (first ? "" : ", ") << describe(t);
            first = false;
        }
        msg << "}";
        throw ParseError(msg.str(), peek().pos);
    }
    const Token& expect(std::initializer_list<Tok> expected) {
        for (Tok t : expected) {
            if (peek().kind == t) return advance();
        }
        fail(expected);
    }

    ExprPtr expr() {
        ExprPtr lhs = term();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            const char op = advance().text[0];
            // rhs first: gcc 11 leaks earlier aggregate members if a later initializer throws
            ExprPtr rhs = term();
            lhs = make(Binary{op, lhs, std::move(rhs)});
        }
        return lhs;
    }

    ExprPtr term() {
        ExprPtr lhs = unary();
        while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
            const char op = advance().text[0];
            ExprPtr rhs = unary();
            lhs = make(Binary{op, lhs, std::move(rhs)});
        }
        return lhs;
    }

    ExprPtr unary() {
        if (accept(Tok::Minus)) return make(Negate{unary()});
        return factor();
    }

    ExprPtr factor() {
        ExprPtr base = atom();
        if (accept(Tok::Caret)) {
            const std::int64_t n = signed_int();
            return make(Power{base, n});
        }
        return base;
    }

    std::int64_t int_value(const Token& t) {
        if (t.text.size() > 15) throw ParseError("integer too large at position " + std::to_string(t.pos), t.pos);
        return std::stoll(t.text);
    }

    // ["-"] INT | "(" ["-"] INT ")"
    std::int64_t signed_int() {
        const bool paren = accept(Tok::LParen);
        const bool neg = accept(Tok::Minus);
        const std::int64_t v = int_value(expect({Tok::Int}));
        if (paren) expect({Tok::RParen});
        return neg ? -v : v;
    }

    // ["-"] INT | "(" ["-"] INT ["/" INT] ")"
    Rational q_exponent() {
        if (accept(Tok::LParen)) {
            const bool neg = accept(Tok::Minus);
            std::int64_t num = int_value(expect({Tok::Int}));
            std::int64_t den = 1;
            if (accept(Tok::Slash)) {
                const Token& t = expect({Tok::Int});
                den = int_value(t);
                if (den == 0) throw ParseError("zero denominator at position " + std::to_string(t.pos), t.pos);
            }
            expect({Tok::RParen});
            return make_rational(neg ? -num : num, den);
        }
        const bool neg = accept(Tok::Minus);
        const std::int64_t v = int_value(expect({Tok::Int}));
        if (peek().kind == Tok::Slash && peek(1).kind == Tok::Int) {
            throw ParseError("ambiguous fractional exponent at position " + std::to_string(peek().pos) +
                             ": write q^(a/b)", peek().pos);
        }
        return make_rational(neg ? -v : v);
    }

    ExprPtr atom() {
        const Token& t = peek();
        switch (t.kind) {
        case Tok::Int:
            advance();
            return make(Literal{Integer(t.text)});
        case Tok::LParen: {
            advance();
            ExprPtr inner = expr();
            expect({Tok::RParen});
            return inner;
        }
        case Tok::Ident:
            return named(advance());
        default:
            fail({Tok::Int, Tok::Ident, Tok::LParen, Tok::Minus});
        }
    }

    ExprPtr named(const Token& t) {
        if (t.text == "q") {
            if (accept(Tok::Caret)) return make(QPower{q_exponent()});
            return make(QPower{make_rational(1)});
        }
        if (t.text == "D") {
            expect({Tok::LParen});
            ExprPtr inner = expr();
            expect({Tok::RParen});
            return make(Derivative{inner});
        }
        if (kFunctions.contains(t.text)) {
            expect({Tok::LParen});
            const Token& arg = expect({Tok::Int, Tok::Ident});
            expect({Tok::RParen});
            if (t.text == "hirzebruch") {
                if (arg.text != "C" && arg.text != "F") {
                    throw ParseError("hirzebruch expects C or F at position " + std::to_string(arg.pos), arg.pos);
                }
            } else if (arg.kind != Tok::Int) {
                throw ParseError(t.text + " expects an integer genus at position " + std::to_string(arg.pos),
                                 arg.pos);
            }
            return make(Call{t.text, arg.text});
        }
        if (!is_known_name(t.text)) {
            throw UnknownName("unknown name '" + t.text + "' at position " + std::to_string(t.pos));
        }
        return make(Name{t.text});
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

QSeries named_series(const std::string& id, std::int64_t order) {
    using forms::Normalization;
    if (auto k = eisenstein_weight(id, "Ehat")) return forms::eisenstein(*k, Normalization::Ehat, order);
    if (auto k = eisenstein_weight(id, "E")) return forms::eisenstein(*k, Normalization::E, order);
    if (id == "Delta") return forms::delta(order);
    if (id == "eta") return forms::eta(order);
    if (id == "theta_Z") return forms::jacobi_theta_z(order);
    if (id == "theta_E8") return lattice::theta_series(lattice::Lattice::e8(), make_rational(2 * order - 1, 2));
    throw UnknownName("unknown name '" + id + "'");
}

QSeries call_series(const Call& c, std::int64_t order) {
    if (c.function == "hirzebruch") {
        return enumgeo::hirzebruch_series(c.argument == "C" ? enumgeo::HirzebruchClass::C
                                                            : enumgeo::HirzebruchClass::F,
                                          order);
    }
    const int g = std::stoi(c.argument);
    if (c.function == "k3") return enumgeo::k3_series(g, order);
    if (c.function == "abelian") return enumgeo::abelian_series(g, order);
    if (c.function == "mirrorF") return enumgeo::mirror_F(g, order);
    throw UnknownName("unknown function '" + c.function + "'");
}

// Exact non-monomial series must be cut before inversion.
QSeries invert(const QSeries& s, std::int64_t order) {
    if (s.is_exact() && s.terms().size() > 1) return inv(s.truncated(order));
    return inv(s);
}

QSeries eval_at(const FormExpr& e, std::int64_t order) {
    return std::visit(
        [&](const auto& n) -> QSeries {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Name>) {
                return named_series(n.id, order);
            } else if constexpr (std::is_same_v<T, Literal>) {
                return QSeries::constant(Rational(n.value));
            } else if constexpr (std::is_same_v<T, QPower>) {
                return QSeries::monomial(1, n.exponent);
            } else if constexpr (std::is_same_v<T, Binary>) {
                const QSeries a = eval_at(*n.lhs, order);
                const QSeries b = eval_at(*n.rhs, order);
                switch (n.op) {
                case '+': return a + b;
                case '-': return a - b;
                case '*': return a * b;
                default: return a * invert(b, order);
                }
            } else if constexpr (std::is_same_v<T, Negate>) {
                return -eval_at(*n.operand, order);
            } else if constexpr (std::is_same_v<T, Power>) {
                const QSeries base = eval_at(*n.base, order);
                if (n.exponent < 0) return pow(invert(base, order), -n.exponent);
                return pow(base, n.exponent);
            } else if constexpr (std::is_same_v<T, Derivative>) {
                return derivative(eval_at(*n.operand, order));
            } else {
                return call_series(n, order);
            }
        },
        e.node);
}

bool node_equal(const ExprPtr& a, const ExprPtr& b) {
    if (!a || !b) return a == b;
    return *a == *b;
}

} // namespace

bool is_known_name(std::string_view id) {
    if (eisenstein_weight(id, "Ehat") || eisenstein_weight(id, "E")) return true;
    return id == "Delta" || id == "eta" || id == "theta_Z" || id == "theta_E8";
}

bool operator==(const FormExpr& a, const FormExpr& b) {
    if (a.node.index() != b.node.index()) return false;
    return std::visit(
        [&](const auto& x) -> bool {
            using T = std::decay_t<decltype(x)>;
            const T& y = std::get<T>(b.node);
            if constexpr (std::is_same_v<T, Name>) return x.id == y.id;
            else if constexpr (std::is_same_v<T, Literal>) return x.value == y.value;
            else if constexpr (std::is_same_v<T, QPower>) return x.exponent == y.exponent;
            else if constexpr (std::is_same_v<T, Binary>)
                return x.op == y.op && node_equal(x.lhs, y.lhs) && node_equal(x.rhs, y.rhs);
            else if constexpr (std::is_same_v<T, Negate>) return node_equal(x.operand, y.operand);
            else if constexpr (std::is_same_v<T, Power>)
                return x.exponent == y.exponent && node_equal(x.base, y.base);
            else if constexpr (std::is_same_v<T, Derivative>) return node_equal(x.operand, y.operand);
            else return x.function == y.function && x.argument == y.argument;
        },
        a.node);
}

ExprPtr parse(std::string_view text) { return Parser(text).parse_all(); }

std::string to_string(const FormExpr& e) {
    return std::visit(
        [](const auto& n) -> std::string {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Name>) {
                return n.id;
            } else if constexpr (std::is_same_v<T, Literal>) {
                return n.value.get_str();
            } else if constexpr (std::is_same_v<T, QPower>) {
                if (n.exponent == 1) return "q";
                return "q^(" + n.exponent.get_str() + ")";
            } else if constexpr (std::is_same_v<T, Binary>) {
                return "(" + to_string(*n.lhs) + " " + n.op + " " + to_string(*n.rhs) + ")";
            } else if constexpr (std::is_same_v<T, Negate>) {
                return "(-" + to_string(*n.operand) + ")";
            } else if constexpr (std::is_same_v<T, Power>) {
                return "(" + to_string(*n.base) + ")^" + std::to_string(n.exponent);
            } else if constexpr (std::is_same_v<T, Derivative>) {
                return "D(" + to_string(*n.operand) + ")";
            } else {
                return n.function + "(" + n.argument + ")";
            }
        },
        e.node);
}

QSeries evaluate(const FormExpr& e, std::int64_t order) {
    // Divisions shrink the known window; widen the working order until the
    // result covers the request.
    std::int64_t slack = 0;
    for (int attempt = 0; attempt < 8; ++attempt) {
        QSeries s = eval_at(e, order + slack);
        if (s.is_exact()) return s;
        const auto top = s.valid_below();
        if (*top >= make_rational(order)) return s.truncated(order);
        const Rational deficit = make_rational(order) - *top;
        Integer need;
        mpz_cdiv_q(need.get_mpz_t(), deficit.get_num_mpz_t(), deficit.get_den_mpz_t());
        slack = std::max(slack + need.get_si(), 2 * slack + 1);
    }
    throw InsufficientOrder("could not reach the requested order q^" + std::to_string(order));
}

} // namespace modq::expr
