#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>

#include "qgl/rational.hpp"

namespace qgl {

// Element of Q(u), the coefficient ring of the whole project. The symbol u
// stands for the quarter power of the field size: v = u^2 and q = u^4, so
// every exponent that shows up downstream (including the 3/2*d^2 coproduct
// shift at odd d) is an integer in u-units.
//
// Canonical form: numerator is a sparse Laurent polynomial, denominator is a
// monic ordinary polynomial with nonzero constant term, and the two share no
// common factor. Ring elements (denominator 1) stay exactly sparse Laurent
// maps; a nontrivial denominator only ever enters through divided powers.
class Scalar {
public:
    using Terms = std::map<int, Rational>; // u-exponent -> coefficient

    Scalar() = default; // zero

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return of(Rational(1)); }
    static Scalar of(const Rational& r);
    static Scalar integer(long long k) { return of(Rational(k)); }
    static Scalar u_pow(int k);
    static Scalar v_pow(int k) { return u_pow(2 * k); }
    static Scalar q_pow(int k) { return u_pow(4 * k); }
    static Scalar v() { return v_pow(1); }
    static Scalar q() { return q_pow(1); }
    static Scalar from_terms(Terms t);

    bool is_zero() const { return num_.empty(); }
    bool is_one() const;
    bool is_laurent() const;

    const Terms& num_terms() const { return num_; }
    const Terms& den_terms() const { return den_; }

    // Constant term extraction; throws unless the value lies in Q.
    Rational rational_value() const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    friend bool operator<(const Scalar& a, const Scalar& b) {
        if (a.num_ != b.num_) return a.num_ < b.num_;
        return a.den_ < b.den_;
    }

    // Human-readable form in powers of v where exponents are even, u otherwise.
    std::string str() const;

private:
    void canonicalize();

    Terms num_;
    Terms den_ = {{0, Rational(1)}};
};

// Balanced q-integer [n] = v^{n-1} + v^{n-3} + ... + v^{1-n}.
Scalar q_integer(long long n);
// [n]! = [1][2]...[n], with [0]! = 1.
Scalar q_factorial(long long n);
// Balanced binomial [m]!/([n]![m-n]!); requires m >= n >= 0.
Scalar q_binomial(long long m, long long n);

bool is_prime(long long q);

// Element of Q[u]/(u^4 - q) for a fixed prime q. The modulus is irreducible
// over Q (Eisenstein at q), so this is a field and equality is componentwise.
class Evaluated {
public:
    Evaluated() : q_(0) {}
    explicit Evaluated(long long q) : q_(q) {} // zero of the field at q
    Evaluated(long long q, std::array<Rational, 4> c) : c_(std::move(c)), q_(q) {}

    static Evaluated one(long long q) {
        return Evaluated(q, {Rational(1), Rational(), Rational(), Rational()});
    }
    static Evaluated of(long long q, const Rational& r) {
        return Evaluated(q, {r, Rational(), Rational(), Rational()});
    }
    static Evaluated u_pow(long long q, long long k);

    long long modulus() const { return q_; }
    const std::array<Rational, 4>& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_rational() const;
    Rational rational_value() const;

    Evaluated operator-() const;
    friend Evaluated operator+(const Evaluated& a, const Evaluated& b);
    friend Evaluated operator-(const Evaluated& a, const Evaluated& b);
    friend Evaluated operator*(const Evaluated& a, const Evaluated& b);
    friend Evaluated operator/(const Evaluated& a, const Evaluated& b);
    Evaluated& operator+=(const Evaluated& o) { return *this = *this + o; }
    Evaluated& operator-=(const Evaluated& o) { return *this = *this - o; }
    Evaluated& operator*=(const Evaluated& o) { return *this = *this * o; }

    Evaluated inverse() const;

    friend bool operator==(const Evaluated& a, const Evaluated& b) {
        return a.q_ == b.q_ && a.c_ == b.c_;
    }
    friend bool operator!=(const Evaluated& a, const Evaluated& b) { return !(a == b); }
    friend bool operator<(const Evaluated& a, const Evaluated& b) {
        if (a.q_ != b.q_) return a.q_ < b.q_;
        return a.c_ < b.c_;
    }

    std::string str() const;

private:
    void check_same(const Evaluated& o) const {
        if (q_ != o.q_) throw std::invalid_argument("Evaluated: mixed moduli");
    }

    std::array<Rational, 4> c_{};
    long long q_;
};

// Ring homomorphism Q(u) -> Q[u]/(u^4 - q); q must be prime.
Evaluated evaluate(const Scalar& a, long long q);

} // namespace qgl
