#include <doctest.h>

#include <random>
#include <set>

#include "qgl/flaggeo.hpp"

using namespace qgl;

TEST_CASE("subspace arithmetic") {
    const long long q = 2;
    Subspace a = Subspace::span({{1, 0}}, 2, q);
    Subspace b = Subspace::span({{0, 1}}, 2, q);

    CHECK(sum(a, a) == a);
    CHECK(intersect(a, a) == a);
    CHECK(sum(a, b) == Subspace::full(2, q));
    CHECK(intersect(a, b) == Subspace::zero(2, q));
    // quotient of a line by itself is 0 in a 1-dimensional quotient
    CHECK(a.quotient_image(a) == Subspace::zero(1, q));
    CHECK_THROWS_AS(sum(a, Subspace::zero(3, q)), std::invalid_argument);

    // dim(sum) + dim(intersection) = dim a + dim b, randomized
    std::mt19937 rng(17);
    for (long long qq : {2LL, 3LL}) {
        std::uniform_int_distribution<long long> entry(0, qq - 1);
        std::uniform_int_distribution<int> dd(1, 4), kk(0, 4);
        for (int t = 0; t < 100; ++t) {
            const int d = dd(rng);
            auto rand_space = [&]() {
                std::vector<FqVec> rows(static_cast<size_t>(kk(rng) % (d + 1)),
                                        FqVec(static_cast<size_t>(d), 0));
                for (auto& r : rows)
                    for (auto& x : r) x = entry(rng);
                return Subspace::span(rows, d, qq);
            };
            Subspace x = rand_space(), y = rand_space();
            CHECK(sum(x, y).dim() + intersect(x, y).dim() == x.dim() + y.dim());
            CHECK(sum(x, y).contains(x));
            CHECK(x.contains(intersect(x, y)));
        }
    }
}

TEST_CASE("subspace enumeration matches Gaussian binomials") {
    CHECK(enumerate_subspaces(2, 1, 2).size() == 3);
    CHECK(enumerate_subspaces(3, 1, 3).size() == 13);
    auto z = enumerate_subspaces(2, 0, 5);
    REQUIRE(z.size() == 1);
    CHECK(z[0] == Subspace::zero(2, 5));

    for (long long q : {2LL, 3LL})
        for (int d = 0; d <= 4; ++d)
            for (int k = 0; k <= d; ++k) {
                auto subs = enumerate_subspaces(d, k, q);
                CHECK(static_cast<long long>(subs.size()) == gaussian_binomial_int(d, k, q));
                std::set<Subspace> uniq(subs.begin(), subs.end());
                CHECK(uniq.size() == subs.size()); // duplicate-free
            }
    Guards g;
    CHECK_THROWS_AS(enumerate_subspaces(7, 1, 2, g), std::runtime_error);
    CHECK_THROWS_AS(enumerate_subspaces(2, 1, 11, g), std::runtime_error);
}

TEST_CASE("flag enumeration") {
    CHECK(enumerate_flags(Composition({1, 1}), 2, 2).size() == 3);
    CHECK(enumerate_flags(Composition({2, 0}), 2, 3).size() == 1);
    // 21 complete flags of F_2^3: |GL(3,2)| / |B| = 168/8, and by enumeration
    auto complete = enumerate_flags(Composition({1, 1, 1}), 3, 2);
    CHECK(complete.size() == 21);
    CHECK(gl_order(3, 2) == 168);
    std::set<Flag> uniq(complete.begin(), complete.end());
    CHECK(uniq.size() == 21);

    // counts match Gaussian multinomials for all types with d <= 4, q = 2
    for (int n : {2, 3})
        for (int d = 0; d <= 4; ++d)
            for (const auto& type : compositions(d, n)) {
                auto flags = enumerate_flags(type, d, 2);
                CHECK(static_cast<long long>(flags.size()) == flag_count(type, 2));
            }
}

TEST_CASE("orbit classification") {
    // d=1, V=F=(0 <= D): only the (2,2) entry jumps
    {
        auto flags = enumerate_flags(Composition({0, 1}), 1, 2);
        REQUIRE(flags.size() == 1);
        CHECK(orbit_type(flags[0], flags[0]) == MatrixType::unit(2, 2, 2));
    }
    // d=2 complete, V = F: diagonal
    {
        auto flags = enumerate_flags(Composition({1, 1}), 2, 2);
        CHECK(orbit_type(flags[0], flags[0]) ==
              MatrixType::unit(2, 1, 1) + MatrixType::unit(2, 2, 2));
        // distinct lines: antidiagonal
        CHECK(orbit_type(flags[0], flags[1]) ==
              MatrixType::unit(2, 1, 2) + MatrixType::unit(2, 2, 1));
    }
}

TEST_CASE("representative round-trips through orbit_type") {
    for (long long q : {2LL, 3LL})
        for (int d = 0; d <= 3; ++d)
            for (const auto& m : theta(2, d)) {
                const FlagPair p = representative(m, q);
                CHECK(orbit_type(p) == m);
                CHECK(p.V.type() == m.ro());
                CHECK(p.F.type() == m.co());
            }
    for (const auto& m : theta(3, 2)) {
        const FlagPair p = representative(m, 2);
        CHECK(orbit_type(p) == m);
    }
}

TEST_CASE("orbit dimension") {
    for (int mlt = 1; mlt <= 3; ++mlt)
        CHECK((mlt * MatrixType::unit(2, 1, 2)).orbit_dim() == 0);
    CHECK((MatrixType::unit(2, 1, 2) + MatrixType::unit(2, 2, 1)).orbit_dim() == 2);
    // l(sigma) = sum over i>k, j<l of entries, for permutation matrices
    for (const auto& perm : all_permutations(3)) {
        const MatrixType s = permutation_matrix(perm);
        long long l = 0;
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j)
                for (int k = 1; k <= 3; ++k)
                    for (int l2 = 1; l2 <= 3; ++l2)
                        if (i > k && j < l2) l += s.entry(i, j) * s.entry(k, l2);
        CHECK(l == inversions(perm));
    }
}

TEST_CASE("orbit sizes and stabilizers") {
    // a_{e_ij} at d=1 is q-1
    for (long long q : {2LL, 3LL, 5LL})
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j)
                CHECK(stabilizer_order(MatrixType::unit(2, i, j), q) == q - 1);
    // brute-force pinned values at d=2, q=2
    CHECK(orbit_size(MatrixType::unit(2, 1, 2) + MatrixType::unit(2, 2, 1), 2) == 6);
    CHECK(stabilizer_order(MatrixType::unit(2, 1, 2) + MatrixType::unit(2, 2, 1), 2) == 1);
    CHECK(orbit_size(MatrixType::unit(2, 1, 1) + MatrixType::unit(2, 2, 2), 2) == 3);
    CHECK(stabilizer_order(MatrixType::unit(2, 1, 1) + MatrixType::unit(2, 2, 2), 2) == 2);

    // orbit-stabilizer and the partition of the double flag variety
    for (long long q : {2LL, 3LL})
        for (int d = 1; d <= 3; ++d) {
            for (const auto& m : theta(2, d))
                CHECK(orbit_size(m, q) * stabilizer_order(m, q) == gl_order(d, q));
            for (const auto& c : compositions(d, 2))
                for (const auto& cc : compositions(d, 2)) {
                    long long total = 0;
                    for (const auto& m : theta(2, c, cc)) total += orbit_size(m, q);
                    CHECK(total == flag_count(c, q) * flag_count(cc, q));
                }
        }

    // independent oracle: enumerate the stabilizing group elements for d <= 2
    for (long long q : {2LL, 3LL})
        for (int d = 1; d <= 2; ++d)
            for (const auto& m : theta(2, d))
                CHECK(stabilizer_order(m, q) == stabilizer_order_direct(m, q));
}

TEST_CASE("orbit_type is GL-invariant") {
    std::mt19937 rng(4242);
    for (long long q : {2LL, 3LL}) {
        std::uniform_int_distribution<int> dd(1, 3);
        for (int t = 0; t < 100; ++t) {
            const int d = dd(rng);
            auto ms = theta(2, d);
            const MatrixType m = ms[std::uniform_int_distribution<size_t>(0, ms.size() - 1)(rng)];
            const FlagPair p = representative(m, q);
            const FqMatrix g = random_gl(d, q, rng);
            CHECK(orbit_type(p.V.apply(g), p.F.apply(g)) == m);
        }
    }
}
