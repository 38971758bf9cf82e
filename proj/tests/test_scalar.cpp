#include <doctest.h>

#include <random>

#include "qgl/scalar.hpp"

using namespace qgl;

namespace {

Scalar random_scalar(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 4), expo(-6, 6), coef(-5, 5);
    Scalar::Terms t;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) t[expo(rng)] = Rational(coef(rng));
    Scalar s = Scalar::zero();
    for (const auto& [e, c] : t) s += Scalar::u_pow(e) * Scalar::of(c);
    return s;
}

} // namespace

TEST_CASE("rational arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(7, -2) == Rational(-7, 2));
    CHECK((Rational(3, 4) * Rational(8, 9)) == Rational(2, 3));
    CHECK((Rational(1) / Rational(1, 7)) == Rational(7));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK(Rational(-5, 3).str() == "-5/3");
}

TEST_CASE("scalar ring identities") {
    const Scalar v = Scalar::v();
    const Scalar vinv = Scalar::v_pow(-1);

    // (v - v^-1)(v + v^-1) = v^2 - v^-2
    CHECK((v - vinv) * (v + vinv) == Scalar::v_pow(2) - Scalar::v_pow(-2));
    // a + 0 = a
    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        Scalar a = random_scalar(rng);
        CHECK(a + Scalar::zero() == a);
        CHECK(a * Scalar::one() == a);
    }
    // (v - v^-1) * v^-1 = 1 - v^-2
    CHECK((v - vinv) * vinv == Scalar::one() - Scalar::v_pow(-2));
    // q = v^2 = u^4
    CHECK(Scalar::q() == v * v);
    CHECK(Scalar::q() == Scalar::u_pow(4));
}

TEST_CASE("scalar fraction canonical form") {
    const Scalar two = Scalar::integer(2);
    const Scalar half = Scalar::one() / two;
    CHECK(half * two == Scalar::one());
    CHECK(half.is_laurent()); // 1/2 is still a Laurent coefficient

    const Scalar d = Scalar::one() / q_integer(2); // 1/(v + v^-1)
    CHECK_FALSE(d.is_laurent());
    CHECK(d * q_integer(2) == Scalar::one());
    const Scalar e = d + d;
    CHECK(e * q_integer(2) == Scalar::integer(2));
    // cancellation back to a Laurent element
    CHECK((q_integer(2) * d) == Scalar::one());
    CHECK((q_integer(4) / q_integer(2)).is_laurent()); // [4]/[2] = v^2+v^-2
    CHECK(q_integer(4) / q_integer(2) == Scalar::v_pow(2) + Scalar::v_pow(-2));
}

TEST_CASE("quantum integers, factorials, binomials") {
    CHECK(q_integer(0) == Scalar::zero());
    CHECK(q_integer(1) == Scalar::one());
    // [3] = v^2 + 1 + v^-2
    CHECK(q_integer(3) == Scalar::v_pow(2) + Scalar::one() + Scalar::v_pow(-2));
    CHECK(q_factorial(0) == Scalar::one());
    // binom(2,1) = [2]!/([1]![1]!) = v + v^-1, expanded by hand
    CHECK(q_binomial(2, 1) == Scalar::v() + Scalar::v_pow(-1));
    CHECK_THROWS_AS(q_binomial(1, 2), std::domain_error);

    // Pascal recurrence binom(m,n) = v^n binom(m-1,n) + v^{n-m} binom(m-1,n-1),
    // the independent oracle for the factorial definition.
    for (int m = 1; m <= 8; ++m)
        for (int n = 0; n <= m; ++n) {
            Scalar rhs = Scalar::zero();
            if (n <= m - 1) rhs += Scalar::v_pow(n) * q_binomial(m - 1, n);
            if (n >= 1) rhs += Scalar::v_pow(n - m) * q_binomial(m - 1, n - 1);
            CHECK(q_binomial(m, n) == rhs);
        }

    // symmetry under v -> v^-1: binomials are palindromic Laurent polys
    for (int m = 0; m <= 6; ++m)
        for (int n = 0; n <= m; ++n) {
            const Scalar b = q_binomial(m, n);
            REQUIRE(b.is_laurent());
            Scalar flipped = Scalar::zero();
            for (const auto& [e, c] : b.num_terms())
                flipped += Scalar::u_pow(-e) * Scalar::of(c);
            CHECK(b == flipped);
        }
}

TEST_CASE("evaluation at a prime") {
    // v^2 at q=2 is the rational 2
    CHECK(evaluate(Scalar::v_pow(2), 2) == Evaluated::of(2, Rational(2)));
    // v at q=3 is u^2
    CHECK(evaluate(Scalar::v(), 3) == Evaluated(3, {Rational(0), Rational(0), Rational(1), Rational(0)}));
    // direct substitution oracle: [3] at q=2 is v^2+1+v^-2 = 2 + 1 + 1/2 = 7/2
    CHECK(evaluate(q_integer(3), 2) == Evaluated::of(2, Rational(7, 2)));
    CHECK_THROWS_AS(evaluate(Scalar::one(), 4), std::domain_error);
    CHECK_THROWS_AS(evaluate(Scalar::one(), 1), std::domain_error);

    // evaluate(v^{2k}) = q^k for |k| <= 8
    for (long long qq : {2LL, 3LL, 5LL})
        for (int k = -8; k <= 8; ++k) {
            Rational expect(1);
            for (int i = 0; i < (k > 0 ? k : -k); ++i)
                expect = k > 0 ? expect * Rational(qq) : expect / Rational(qq);
            CHECK(evaluate(Scalar::v_pow(k), qq) * evaluate(Scalar::v_pow(k), qq) ==
                  evaluate(Scalar::v_pow(2 * k), qq));
            CHECK(evaluate(Scalar::v_pow(2 * k), qq) == Evaluated::of(qq, expect));
        }
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937 rng(2026);
    for (long long qq : {2LL, 3LL, 5LL}) {
        for (int trial = 0; trial < 340; ++trial) {
            const Scalar a = random_scalar(rng), b = random_scalar(rng);
            CHECK(evaluate(a * b, qq) == evaluate(a, qq) * evaluate(b, qq));
            CHECK(evaluate(a + b, qq) == evaluate(a, qq) + evaluate(b, qq));
        }
    }
}

TEST_CASE("evaluated field inversion") {
    for (long long qq : {2LL, 3LL, 5LL}) {
        std::mt19937 rng(11 + qq);
        std::uniform_int_distribution<int> coef(-4, 4);
        for (int trial = 0; trial < 60; ++trial) {
            Evaluated x(qq, {Rational(coef(rng)), Rational(coef(rng)),
                             Rational(coef(rng)), Rational(coef(rng))});
            if (x.is_zero()) continue;
            CHECK(x * x.inverse() == Evaluated::one(qq));
        }
        CHECK_THROWS_AS(Evaluated(qq).inverse(), std::domain_error);
    }
    // u^-1 = u^3/q
    CHECK(Evaluated::u_pow(2, -1) * Evaluated::u_pow(2, 1) == Evaluated::one(2));
    // divided-power coefficients evaluate exactly: 1/[2] at q=2
    const Evaluated d = evaluate(Scalar::one() / q_integer(2), 2);
    CHECK(d * evaluate(q_integer(2), 2) == Evaluated::one(2));
}
