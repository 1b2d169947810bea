#include <doctest.h>

#include <random>

#include "eiscoc/lattice.hpp"
#include "helpers.hpp"

using namespace eiscoc;

namespace {

IntMat M(int r, int c, std::vector<long long> v) { return IntMat(r, c, v); }

std::vector<BigInt> diag(const IntMat& D)
{
    std::vector<BigInt> out;
    for (int i = 0; i < std::min(D.rows(), D.cols()); ++i) out.push_back(D(i, i));
    return out;
}

std::vector<BigInt> big(std::vector<long> v)
{
    std::vector<BigInt> out;
    for (long x : v) out.push_back(BigInt(x));
    return out;
}

} // namespace

TEST_SUITE("lattice")
{
    TEST_CASE("hermite forms")
    {
        // expected forms from tests/oracles/lattice_oracle.py
        CHECK(hnf_only(M(2, 2, {2, 4, 0, 3})) == M(2, 2, {2, 1, 0, 3}));
        CHECK(hnf_only(M(3, 3, {4, 6, 2, 2, 2, 8, 6, 0, 4})) == M(3, 3, {2, 0, 22, 0, 2, 48, 0, 0, 62}));
        CHECK(hnf_only(M(2, 3, {3, -1, 7, 6, -2, 14})) == M(2, 3, {3, -1, 7, 0, 0, 0}));
        CHECK(hnf_only(M(3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 10})) == M(3, 3, {1, 2, 0, 0, 3, 0, 0, 0, 1}));
        HnfResult h = hnf(M(3, 3, {4, 6, 2, 2, 2, 8, 6, 0, 4}));
        CHECK(h.H == h.U * M(3, 3, {4, 6, 2, 2, 2, 8, 6, 0, 4}));
        CHECK(abs(h.U.det()) == 1);
    }

    TEST_CASE("smith forms")
    {
        CHECK(diag(snf(M(2, 2, {2, 0, 0, 3})).D) == big({1, 6}));
        CHECK(diag(snf(M(3, 3, {4, 6, 2, 2, 2, 8, 6, 0, 4})).D) == big({2, 2, 62}));
        CHECK(diag(snf(M(2, 3, {3, -1, 7, 6, -2, 14})).D) == big({1, 0}));
        CHECK(diag(snf(M(3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 10})).D) == big({1, 1, 3}));
    }

    TEST_CASE("forms of random matrices")
    {
        std::mt19937_64 rng(5);
        for (int i = 0; i < 200; ++i) {
            int r = (int)testing_util::uni(rng, 1, 5), c = (int)testing_util::uni(rng, 1, 5);
            IntMat A(r, c);
            for (int a = 0; a < r; ++a)
                for (int b = 0; b < c; ++b) A(a, b) = (long)testing_util::uni(rng, -9, 9);
            HnfResult h = hnf(A);
            CHECK(is_row_hnf(h.H));
            CHECK(h.H == h.U * A);
            SnfResult s = snf(A);
            CHECK(is_snf(s.D));
            CHECK(s.D == s.U * A * s.V);
            CHECK(abs(s.U.det()) == 1);
            CHECK(abs(s.V.det()) == 1);
        }
    }

    TEST_CASE("integer solving")
    {
        auto x = solve_int(M(1, 2, {2, 3}), big({1}));
        REQUIRE(x);
        CHECK(2 * (*x)[0] + 3 * (*x)[1] == 1);
        CHECK_FALSE(solve_int(M(1, 2, {2, 4}), big({1})));
        CHECK_THROWS_AS(solve_int(M(1, 2, {2, 4}), big({1, 2})), Error);
    }

    TEST_CASE("column lattice membership")
    {
        // columns (2,0) and (0,2)
        ColumnLattice L(M(2, 2, {2, 0, 0, 2}));
        CHECK(L.contains(big({4, 2})));
        CHECK_FALSE(L.contains(big({1, 2})));
        CHECK(L.membership_2adic(big({1, 1})) == 1);
        CHECK(L.membership_2adic(big({2, 4})) == 0);
        ColumnLattice P(M(2, 1, {3, 0}));
        CHECK_FALSE(P.membership_2adic(big({1, 0})));
        CHECK_FALSE(P.membership_2adic(big({0, 1})));
    }
}
