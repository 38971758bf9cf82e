#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <thread>

#include "qgl/structconst.hpp"

using namespace qgl;

namespace {
const MatrixType E11 = MatrixType::unit(2, 1, 1);
const MatrixType E12 = MatrixType::unit(2, 1, 2);
const MatrixType E21 = MatrixType::unit(2, 2, 1);
const MatrixType E22 = MatrixType::unit(2, 2, 2);

long long qpow_sum(long long q, int n) { // 1 + q + ... + q^n
    long long s = 0, p = 1;
    for (int k = 0; k <= n; ++k) { s += p; p *= q; }
    return s;
}
} // namespace

TEST_CASE("twist exponents") {
    // left = e_ik, right = e_jl with i>j, k>l: circ shift 3; swapped order: 1
    CHECK(twist_exponents(E22, E11).circ == 3);
    CHECK(twist_exponents(E11, E22).circ == 1);
    // i>j, k<l: dot shift of E_ik E_jl is -1
    CHECK(twist_exponents(E21, E12).dot == -1);
    CHECK(twist_exponents(E12, E21).dot == 1);
    // chi* examples: . = v^{chi*} *
    CHECK(chi_star_exponent(E12, E21) == -1);
    CHECK(chi_star_exponent(E21, E12) == 1);
    CHECK(chi_star_exponent(E12, E11) == -1);
    // multh = dot + 3 d'd''
    for (const auto& a : theta(2, 2))
        for (const auto& b : theta(2, 1))
            CHECK(twist_exponents(a, b).multh ==
                  twist_exponents(a, b).dot + 3 * a.degree() * b.degree());
}

TEST_CASE("structure constants: pinned values") {
    StructureContext ctx;
    // single-cell h is 1
    for (long long q : {2LL, 3LL})
        for (int mpp = 0; mpp <= 2; ++mpp)
            for (int mp = 0; mp <= 2; ++mp)
                CHECK(ctx.h((mpp + mp) * E12, mpp * E12, mp * E12, q) == 1);
    // the h table for the commuting pattern
    for (long long q : {2LL, 3LL, 5LL}) {
        CHECK(ctx.h(E12 + E21, E12, E21, q) == q);
        CHECK(ctx.h(E12 + E21, E21, E12, q) == 1);
        CHECK(ctx.h(E11 + E22, E12, E21, q) == 0);
        CHECK(ctx.h(E11 + E22, E21, E12, q) == 0);
    }
    // g tables
    for (long long q : {2LL, 3LL, 5LL}) {
        CHECK(ctx.g(E12 + E21, E22, E11, q) == q - 1);
        CHECK(ctx.g(E11 + E22, E22, E11, q) == q);
        CHECK(ctx.g(E11 + E22, E11, E22, q) == 1);
        CHECK(ctx.g(E12 + E21, E11, E22, q) == 0);
        CHECK(ctx.g(E12 + E21, E12, E21, q) == 1);
        CHECK(ctx.g(E12 + E21, E21, E12, q) == 1);
    }
    // g^{(n+1)e}_{e, n e} = 1 + q + ... + q^n (lines through the construction)
    for (long long q : {2LL, 3LL})
        for (int n = 0; n <= 2; ++n)
            CHECK(ctx.g((n + 2) * E12, E12, (n + 1) * E12, q) == qpow_sum(q, n + 1));
    // c examples
    CHECK(ctx.c(E11, E11, E11, 2) == 1);
    CHECK(ctx.c(E11, E12, E21, 2) == 1);
    // degenerate / incompatible inputs are zero, not errors
    CHECK(ctx.c(E11, E12, E12, 2) == 0);
    CHECK(ctx.h(E11 + E22, E11, E11, 2) == 0);
    // a at d=1 is q-1
    CHECK(ctx.a(E12, 5) == 4);
}

TEST_CASE("counit-style identity: c^L_{diag(ro L), N} = [N == L]") {
    StructureContext ctx;
    for (long long q : {2LL, 3LL})
        for (int d = 0; d <= 2; ++d)
            for (const auto& L : theta(2, d)) {
                MatrixType diag(2);
                diag.set(1, 1, L.ro()[0]);
                diag.set(2, 2, L.ro()[1]);
                for (const auto& N : theta(2, d))
                    CHECK(ctx.c(L, diag, N, q) == (N == L ? 1 : 0));
            }
}

TEST_CASE("structure constants are representative independent") {
    StructureContext ctx;
    std::mt19937 rng(555);
    for (long long q : {2LL, 3LL}) {
        // c and g: conjugate the base pair
        for (int trial = 0; trial < 12; ++trial) {
            auto ms = theta(2, 2);
            const MatrixType L = ms[std::uniform_int_distribution<size_t>(0, ms.size() - 1)(rng)];
            FlagPair p = representative(L, q);
            const FqMatrix gmat = random_gl(L.degree(), q, rng);
            FlagPair moved{p.V.apply(gmat), p.F.apply(gmat)};
            for (const auto& M : theta(2, 2))
                for (const auto& N : theta(2, 2)) {
                    if (!(L.ro() == M.ro() && L.co() == N.co() && M.co() == N.ro())) continue;
                    CHECK(c_count(M, N, p, ctx.guards()) == c_count(M, N, moved, ctx.guards()));
                }
            for (const auto& Mpp : theta(2, 1))
                for (const auto& Mp : theta(2, 1))
                    CHECK(g_count(Mpp, Mp, p, ctx.guards()) ==
                          g_count(Mpp, Mp, moved, ctx.guards()));
        }
        // h: transform the sub/quotient fixtures and vary the lift by a
        // block-unipotent element
        for (int trial = 0; trial < 10; ++trial) {
            auto ms1 = theta(2, 1);
            const MatrixType Mpp = ms1[std::uniform_int_distribution<size_t>(0, ms1.size() - 1)(rng)];
            const MatrixType Mp = ms1[std::uniform_int_distribution<size_t>(0, ms1.size() - 1)(rng)];
            const FlagPair sub = representative(Mpp, q);
            const FlagPair quot = representative(Mp, q);
            const int dpp = Mpp.degree(), dp = Mp.degree(), d = dpp + dp;
            const FqMatrix gpp = random_gl(dpp, q, rng);
            const FqMatrix gp = random_gl(dp, q, rng);
            // unipotent [[I,0],[C,I]] acting on row vectors fixes the first
            // block pointwise and the quotient coordinates
            FqMatrix uni(q, d, d);
            std::uniform_int_distribution<long long> entry(0, q - 1);
            for (int i = 0; i < d; ++i) uni.set(i, i, 1);
            for (int i = dpp; i < d; ++i)
                for (int j = 0; j < dpp; ++j) uni.set(i, j, entry(rng));
            const Flag vlift = lift_flag(sub.V.apply(gpp), quot.V.apply(gp)).apply(uni);
            for (const auto& M : theta(2, 2)) {
                if (!(M.ro() == Mpp.ro() + Mp.ro() && M.co() == Mpp.co() + Mp.co())) continue;
                CHECK(ctx.h(M, Mpp, Mp, q) ==
                      h_count(M, vlift, sub.F.apply(gpp), quot.F.apply(gp), q, ctx.guards()));
            }
        }
    }
}

TEST_CASE("guards refuse oversized enumeration") {
    StructureContext ctx;
    MatrixType big = 7 * MatrixType::unit(2, 1, 1);
    CHECK_THROWS_AS(ctx.a(big, 2), std::runtime_error);
    CHECK_THROWS_AS(ctx.h(big + E12, big, E12, 2), std::runtime_error);
}

TEST_CASE("cache: persistence round-trip, counters, corruption") {
    const std::string dir = "/tmp/qgl_cache_test";
    std::remove((dir + "/structconst.jsonl").c_str());
    (void)!system(("mkdir -p " + dir).c_str());

    StructureContext cold;
    const long long v1 = cold.h(E12 + E21, E12, E21, 2);
    const long long v2 = cold.g(E12 + E21, E22, E11, 3);
    const long long v3 = cold.a(E11 + E22, 2);
    CHECK(cold.computed() == 3);
    cold.save(dir);

    StructureContext warm;
    warm.load(dir);
    CHECK(warm.size() == 3);
    CHECK(warm.h(E12 + E21, E12, E21, 2) == v1);
    CHECK(warm.g(E12 + E21, E22, E11, 3) == v2);
    CHECK(warm.a(E11 + E22, 2) == v3);
    CHECK(warm.computed() == 0);
    CHECK(warm.served() == 3);

    // byte-identical re-serialization
    (void)!system(("mkdir -p " + dir + "_copy").c_str());
    warm.save(dir + "_copy");
    std::ifstream f1(dir + "/structconst.jsonl"), f2(dir + "_copy/structconst.jsonl");
    std::string s1((std::istreambuf_iterator<char>(f1)), std::istreambuf_iterator<char>());
    std::string s2((std::istreambuf_iterator<char>(f2)), std::istreambuf_iterator<char>());
    CHECK(s1 == s2);

    // corrupt record reports its line number
    {
        std::ofstream out(dir + "/structconst.jsonl", std::ios::app);
        out << "{not json}\n";
    }
    StructureContext broken;
    CHECK_THROWS_WITH_AS(broken.load(dir), doctest::Contains("line 4"), std::runtime_error);
}

TEST_CASE("cache accepts concurrent insertion of equal values") {
    StructureContext ctx;
    std::vector<std::thread> workers;
    std::vector<long long> results(8, -1);
    for (int t = 0; t < 8; ++t)
        workers.emplace_back([&ctx, &results, t] {
            results[static_cast<size_t>(t)] = ctx.h(E12 + E21, E12, E21, 3);
        });
    for (auto& w : workers) w.join();
    for (long long r : results) CHECK(r == 3);
}
