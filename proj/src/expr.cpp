#include "qgl/expr.hpp"

#include <cctype>

namespace qgl {

bool operator==(const Expression& a, const Expression& b) {
    if (a.kind != b.kind || a.value != b.value || a.i != b.i || a.j != b.j) return false;
    auto eq = [](const ExprPtr& x, const ExprPtr& y) {
        if (!x && !y) return true;
        if (!x || !y) return false;
        return *x == *y;
    };
    return eq(a.lhs, b.lhs) && eq(a.rhs, b.rhs) && eq(a.base, b.base);
}

ExprPtr make_binary(Expression::Kind k, ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<Expression>();
    e->kind = k;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
}

ExprPtr make_power(ExprPtr base, long long expo, bool divided) {
    auto e = std::make_shared<Expression>();
    e->kind = divided ? Expression::Kind::DivPow : Expression::Kind::Pow;
    e->base = std::move(base);
    e->value = expo;
    return e;
}

ExprPtr make_generator(bool frt, int i, int j) {
    auto e = std::make_shared<Expression>();
    e->kind = frt ? Expression::Kind::GenE : Expression::Kind::GenC;
    e->i = i;
    e->j = j;
    return e;
}

ExprPtr make_atom(Expression::Kind k, long long value) {
    auto e = std::make_shared<Expression>();
    e->kind = k;
    e->value = value;
    return e;
}

namespace {

class Parser {
public:
    Parser(const std::string& text, int n, AlgebraKind kind)
        : text_(text), n_(n), kind_(kind) {}

    ExprPtr run() {
        ExprPtr e = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("trailing input", pos_);
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }
    long long integer(bool allow_negative) {
        skip_ws();
        size_t start = pos_;
        bool neg = false;
        if (allow_negative && pos_ < text_.size() && text_[pos_] == '-') {
            neg = true;
            ++pos_;
        }
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError("expected integer", pos_);
        long long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1000000) throw ParseError("integer too large", start);
            ++pos_;
        }
        return neg ? -v : v;
    }
    bool word(const char* w) {
        skip_ws();
        size_t len = 0;
        while (w[len]) ++len;
        if (text_.compare(pos_, len, w) != 0) return false;
        // must not continue as an identifier
        const size_t end = pos_ + len;
        if (end < text_.size() &&
            (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
            return false;
        pos_ = end;
        return true;
    }

    ExprPtr expr() {
        ExprPtr e = term();
        while (true) {
            skip_ws();
            if (eat('+')) e = make_binary(Expression::Kind::Add, e, term());
            else if (eat('-')) e = make_binary(Expression::Kind::Sub, e, term());
            else return e;
        }
    }
    ExprPtr term() {
        ExprPtr e = factor();
        while (true) {
            skip_ws();
            if (eat('*')) e = make_binary(Expression::Kind::Mul, e, factor());
            else return e;
        }
    }
    ExprPtr factor() {
        ExprPtr base = atom();
        skip_ws();
        if (eat('^')) {
            skip_ws();
            if (eat('(')) {
                const long long m = integer(false);
                expect(')');
                return make_power(base, m, true);
            }
            return make_power(base, integer(true), false);
        }
        return base;
    }
    ExprPtr generator(bool frt) {
        const size_t at = pos_;
        expect('[');
        const long long i = integer(false);
        expect(',');
        const long long j = integer(false);
        expect(']');
        if (i < 1 || i > n_ || j < 1 || j > n_)
            throw ParseError("generator index out of range for n=" + std::to_string(n_), at);
        if (frt != (kind_ == AlgebraKind::FRT))
            throw ParseError(frt ? "E-generators belong to the FRT presentation"
                                 : "c-generators belong to the DD presentation",
                             at);
        return make_generator(frt, static_cast<int>(i), static_cast<int>(j));
    }
    ExprPtr atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        if (word("detinv")) return make_atom(Expression::Kind::DetInv);
        if (word("det")) return make_atom(Expression::Kind::Det);
        if (word("v")) return make_atom(Expression::Kind::V);
        const char c = text_[pos_];
        if (c == 'E') {
            ++pos_;
            return generator(true);
        }
        if (c == 'c') {
            ++pos_;
            return generator(false);
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return make_atom(Expression::Kind::Int, integer(false));
        if (eat('(')) {
            ExprPtr e = expr();
            expect(')');
            return e;
        }
        throw ParseError("expected atom", pos_);
    }

    const std::string& text_;
    int n_;
    AlgebraKind kind_;
    size_t pos_ = 0;
};

enum Prec { PREC_EXPR = 0, PREC_TERM = 1, PREC_FACTOR = 2, PREC_ATOM = 3 };

int precedence(const Expression& e) {
    switch (e.kind) {
        case Expression::Kind::Add:
        case Expression::Kind::Sub: return PREC_EXPR;
        case Expression::Kind::Mul: return PREC_TERM;
        case Expression::Kind::Pow:
        case Expression::Kind::DivPow: return PREC_FACTOR;
        default: return PREC_ATOM;
    }
}

std::string print_at(const ExprPtr& e, int min_prec) {
    std::string s;
    switch (e->kind) {
        case Expression::Kind::Add:
            s = print_at(e->lhs, PREC_EXPR) + " + " + print_at(e->rhs, PREC_TERM);
            break;
        case Expression::Kind::Sub:
            s = print_at(e->lhs, PREC_EXPR) + " - " + print_at(e->rhs, PREC_TERM);
            break;
        case Expression::Kind::Mul:
            s = print_at(e->lhs, PREC_TERM) + "*" + print_at(e->rhs, PREC_FACTOR);
            break;
        case Expression::Kind::Pow:
            s = print_at(e->base, PREC_ATOM) + "^" + std::to_string(e->value);
            break;
        case Expression::Kind::DivPow:
            s = print_at(e->base, PREC_ATOM) + "^(" + std::to_string(e->value) + ")";
            break;
        case Expression::Kind::GenE:
            s = "E[" + std::to_string(e->i) + "," + std::to_string(e->j) + "]";
            break;
        case Expression::Kind::GenC:
            s = "c[" + std::to_string(e->i) + "," + std::to_string(e->j) + "]";
            break;
        case Expression::Kind::Det: s = "det"; break;
        case Expression::Kind::DetInv: s = "detinv"; break;
        case Expression::Kind::V: s = "v"; break;
        case Expression::Kind::Int: s = std::to_string(e->value); break;
    }
    if (precedence(*e) < min_prec) return "(" + s + ")";
    return s;
}

} // namespace

ExprPtr parse_expression(const std::string& text, int n, AlgebraKind kind) {
    return Parser(text, n, kind).run();
}

std::string print_expression(const ExprPtr& e) { return print_at(e, PREC_EXPR); }

namespace {

LocalizedElement loc_pow(const LocalizedElement& x, long long m, int n) {
    LocalizedElement acc = LocalizedElement::of(NCPoly::unit(AlgebraKind::FRT, n));
    for (long long t = 0; t < m; ++t) acc = acc * x;
    return acc;
}

} // namespace

LocalizedElement eval_frt(const ExprPtr& e, int n) {
    switch (e->kind) {
        case Expression::Kind::Add: return eval_frt(e->lhs, n) + eval_frt(e->rhs, n);
        case Expression::Kind::Sub: return eval_frt(e->lhs, n) - eval_frt(e->rhs, n);
        case Expression::Kind::Mul: return eval_frt(e->lhs, n) * eval_frt(e->rhs, n);
        case Expression::Kind::Pow: {
            if (e->value < 0) {
                if (e->base->kind == Expression::Kind::V)
                    return LocalizedElement::of(Scalar::v_pow(static_cast<int>(e->value)) *
                                                NCPoly::unit(AlgebraKind::FRT, n));
                throw std::domain_error("negative exponents are limited to v and detinv");
            }
            return loc_pow(eval_frt(e->base, n), e->value, n);
        }
        case Expression::Kind::DivPow: {
            LocalizedElement p = loc_pow(eval_frt(e->base, n), e->value, n);
            return (Scalar::one() / q_factorial(e->value)) * p;
        }
        case Expression::Kind::GenE:
            return LocalizedElement::of(NCPoly::generator(AlgebraKind::FRT, n, e->i, e->j));
        case Expression::Kind::GenC:
            throw std::domain_error("c-generators live in the DD presentation");
        case Expression::Kind::Det:
            return LocalizedElement::of(quantum_determinant(n, AlgebraKind::FRT));
        case Expression::Kind::DetInv:
            return LocalizedElement::of(NCPoly::unit(AlgebraKind::FRT, n), 1);
        case Expression::Kind::V:
            return LocalizedElement::of(Scalar::v() * NCPoly::unit(AlgebraKind::FRT, n));
        case Expression::Kind::Int:
            return LocalizedElement::of(Scalar::integer(e->value) *
                                        NCPoly::unit(AlgebraKind::FRT, n));
    }
    throw std::logic_error("eval_frt: unreachable");
}

NCPoly eval_dd(const ExprPtr& e, int n) {
    switch (e->kind) {
        case Expression::Kind::Add: return eval_dd(e->lhs, n) + eval_dd(e->rhs, n);
        case Expression::Kind::Sub: return eval_dd(e->lhs, n) - eval_dd(e->rhs, n);
        case Expression::Kind::Mul: return multiply(eval_dd(e->lhs, n), eval_dd(e->rhs, n));
        case Expression::Kind::Pow: {
            if (e->value < 0) {
                if (e->base->kind == Expression::Kind::V)
                    return Scalar::v_pow(static_cast<int>(e->value)) *
                           NCPoly::unit(AlgebraKind::DD, n);
                throw std::domain_error("negative exponents are limited to v");
            }
            return power(eval_dd(e->base, n), static_cast<int>(e->value));
        }
        case Expression::Kind::DivPow:
            return (Scalar::one() / q_factorial(e->value)) *
                   power(eval_dd(e->base, n), static_cast<int>(e->value));
        case Expression::Kind::GenC:
            return NCPoly::generator(AlgebraKind::DD, n, e->i, e->j);
        case Expression::Kind::GenE:
            throw std::domain_error("E-generators live in the FRT presentation");
        case Expression::Kind::Det: return quantum_determinant(n, AlgebraKind::DD);
        case Expression::Kind::DetInv:
            throw std::domain_error(
                "no native DD localization; transport through the FRT side instead");
        case Expression::Kind::V: return Scalar::v() * NCPoly::unit(AlgebraKind::DD, n);
        case Expression::Kind::Int:
            return Scalar::integer(e->value) * NCPoly::unit(AlgebraKind::DD, n);
    }
    throw std::logic_error("eval_dd: unreachable");
}

} // namespace qgl
