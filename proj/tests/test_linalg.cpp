#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dopkit/linalg.hpp"

using namespace dopkit;

TEST_CASE("nullspace examples") {
    // [[1,1]] -> {(1,-1)}
    auto b1 = nullspace({{Rat(1), Rat(1)}});
    REQUIRE(b1.size() == 1);
    CHECK(b1[0] == RatVec{Rat(-1), Rat(1)}); // free coord positive, primitive

    // identity 3x3 -> empty
    RatMat id3 = {{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}};
    CHECK(nullspace(id3).empty());

    // [[1,2],[2,4]] -> span{(2,-1)} (up to sign convention)
    auto b2 = nullspace({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}});
    REQUIRE(b2.size() == 1);
    CHECK(b2[0] == RatVec{Rat(-2), Rat(1)});
}

TEST_CASE("nullspace properties on random matrices") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<long> dn(-6, 6);
    std::uniform_int_distribution<long> dd(1, 3);
    std::uniform_int_distribution<std::size_t> dm(1, 6);
    for (int iter = 0; iter < 60; ++iter) {
        std::size_t m = dm(rng), n = dm(rng);
        RatMat a(m, RatVec(n));
        for (auto& row : a)
            for (auto& q : row) {
                q = Rat(dn(rng), dd(rng));
                q.canonicalize();
            }
        auto ns = nullspace(a);
        // A v == 0 exactly for every basis vector
        for (const auto& v : ns) {
            for (std::size_t i = 0; i < m; ++i) {
                Rat acc(0);
                for (std::size_t j = 0; j < n; ++j) acc += a[i][j] * v[j];
                CHECK(acc == 0);
            }
            // primitive integer vector
            mpz_class g(0);
            for (const auto& q : v) {
                CHECK(q.get_den() == 1);
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num_mpz_t());
            }
            CHECK((g == 1 || g == 0));
        }
        CHECK(rank(a) + ns.size() == n);
    }
}

TEST_CASE("solve_linear") {
    RatMat a = {{Rat(2), Rat(1)}, {Rat(1), Rat(-1)}};
    RatVec x;
    REQUIRE(solve_linear(a, {Rat(5), Rat(1)}, x));
    CHECK(x == RatVec{Rat(2), Rat(1)});
    // inconsistent
    RatMat b = {{Rat(1), Rat(1)}, {Rat(2), Rat(2)}};
    CHECK(!solve_linear(b, {Rat(1), Rat(3)}, x));
}

TEST_CASE("nullspace determinism") {
    RatMat a = {{Rat(1), Rat(2), Rat(3)}, {Rat(2), Rat(4), Rat(6)}};
    auto n1 = nullspace(a);
    auto n2 = nullspace(a);
    CHECK(n1 == n2);
    REQUIRE(n1.size() == 2);
}
