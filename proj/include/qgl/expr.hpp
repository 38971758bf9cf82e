#pragma once

#include <memory>
#include <string>

#include "qgl/ncpoly.hpp"

namespace qgl {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, size_t off)
        : std::runtime_error(msg + " (offset " + std::to_string(off) + ")"), offset(off) {}
    size_t offset;
};

// Abstract syntax: expr := term (("+"|"-") term)*; term := factor ("*" factor)*;
// factor := atom ("^" ("(" INT ")" | INT))?; atom := E[i,j] | c[i,j] | det |
// detinv | v | INT | "(" expr ")". The tree is grammar-shaped; parentheses are
// reinserted by the printer from precedence.
struct Expression {
    enum class Kind { Add, Sub, Mul, Pow, DivPow, GenE, GenC, Det, DetInv, V, Int };
    Kind kind;
    std::shared_ptr<const Expression> lhs, rhs; // Add/Sub/Mul
    std::shared_ptr<const Expression> base;     // Pow/DivPow
    long long value = 0;                        // Int atom, or the exponent
    int i = 0, j = 0;                           // generator indices

    friend bool operator==(const Expression& a, const Expression& b);
};

using ExprPtr = std::shared_ptr<const Expression>;

ExprPtr make_binary(Expression::Kind k, ExprPtr a, ExprPtr b);
ExprPtr make_power(ExprPtr base, long long e, bool divided);
ExprPtr make_generator(bool frt, int i, int j);
ExprPtr make_atom(Expression::Kind k, long long value = 0);

// Parses and validates generator letters/indices against the presentation.
ExprPtr parse_expression(const std::string& text, int n, AlgebraKind kind);
std::string print_expression(const ExprPtr& e);

// Evaluation in the localized FRT algebra (det/detinv allowed).
LocalizedElement eval_frt(const ExprPtr& e, int n);
// Evaluation in B_v(n); detinv is rejected.
NCPoly eval_dd(const ExprPtr& e, int n);

} // namespace qgl
