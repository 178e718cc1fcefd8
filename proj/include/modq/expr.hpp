#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "modq/qseries.hpp"

namespace modq::expr {

struct FormExpr;
using ExprPtr = std::shared_ptr<const FormExpr>;

/// Named series: E2, E4, ..., Ehat2, Delta, eta, theta_Z, theta_E8.
struct Name {
    std::string id;
};
/// Non-negative integer literal.
struct Literal {
    Integer value;
};
/// q^exponent
struct QPower {
    Rational exponent;
};
struct Binary {
    char op; // one of + - * /
    ExprPtr lhs;
    ExprPtr rhs;
};
struct Negate {
    ExprPtr operand;
};
struct Power {
    ExprPtr base;
    std::int64_t exponent;
};
/// q d/dq
struct Derivative {
    ExprPtr operand;
};
/// k3(g), abelian(g), mirrorF(g), hirzebruch(C|F)
struct Call {
    std::string function;
    std::string argument;
};

struct FormExpr {
    std::variant<Name, Literal, QPower, Binary, Negate, Power, Derivative, Call> node;
};

/// Deep structural equality.
bool operator==(const FormExpr& a, const FormExpr& b);

/// Recursive-descent parser:
///   expr   := term (("+"|"-") term)*
///   term   := unary (("*"|"/") unary)*
///   unary  := "-" unary | factor
///   factor := atom ("^" int)?
///   atom   := name | int | "q" ("^" qexp)? | "D" "(" expr ")" | func "(" arg ")" | "(" expr ")"
/// Throws ParseError (with position) or UnknownName.
ExprPtr parse(std::string_view text);

/// Fully parenthesized text that parses back to an equal tree.
std::string to_string(const FormExpr& e);

/// Whether `id` names a built-in series.
bool is_known_name(std::string_view id);

/// Evaluates to a series known below q^order (or exact, for pure literals).
QSeries evaluate(const FormExpr& e, std::int64_t order);

} // namespace modq::expr
