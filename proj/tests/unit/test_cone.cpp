#include <doctest.h>

#include <random>

#include "eiscoc/cone.hpp"
#include "helpers.hpp"

using namespace eiscoc;
using testing_util::q;

TEST_SUITE("cone")
{
    TEST_CASE("todd coefficients")
    {
        CHECK(todd_coeffs(6) == std::vector<Rat>{q(1, 1), q(1, 2), q(1, 12), q(0, 1), q(-1, 720), q(0, 1), q(1, 30240)});
    }

    TEST_CASE("dedekind sums")
    {
        // values from tests/oracles/arith_oracle.py
        CHECK(dedekind_sum(1, 3) == q(1, 18));
        CHECK(dedekind_sum(1, 2) == 0);
        CHECK(dedekind_sum(5, 7) == q(-1, 14));
        CHECK(dedekind_sum(3, 11) == q(3, 22));
        CHECK(dedekind_sum(13, 21) == q(-4, 63));
        CHECK(dedekind_sum(0, 1) == 0);
        CHECK(dedekind_sum(-4, 9) == q(4, 27));
    }

    TEST_CASE("dedekind reciprocity and the euclidean evaluation")
    {
        for (Int qq = 1; qq <= 40; ++qq)
            for (Int p = -qq; p <= 2 * qq; ++p) {
                if (gcd_ll(p, qq) != 1) continue;
                REQUIRE(dedekind_sum(p, qq) == dedekind_sum_euclid(p, qq));
                if (p > 0) {
                    Rat want = q(-1, 4) + q((long)(p * p + qq * qq + 1), (long)(12 * p * qq));
                    CHECK(dedekind_sum(p, qq) + dedekind_sum(qq, p) == want);
                }
            }
    }

    TEST_CASE("standard cone series")
    {
        PoleSeries s = theta_L_unimodular({1, 0}, {0, 1}, 4);
        BiPoly want{{{0, 0}, q(1, 1)},    {{0, 1}, q(1, 2)},    {{1, 0}, q(1, 2)},     {{0, 2}, q(1, 12)},
                    {{1, 1}, q(1, 4)},    {{2, 0}, q(1, 12)},   {{1, 2}, q(1, 24)},    {{2, 1}, q(1, 24)},
                    {{0, 4}, q(-1, 720)}, {{2, 2}, q(1, 144)},  {{4, 0}, q(-1, 720)}};
        CHECK(s.num() == want);
        CHECK(s.den_degree() == 2);
    }

    TEST_CASE("subdivision invariance")
    {
        PoleSeries whole = theta_L_arc({1, 0}, {0, 1}, 4);
        PoleSeries split = theta_L_unimodular({1, 0}, {1, 1}, 4) + theta_L_unimodular({1, 1}, {0, 1}, 4);
        CHECK(whole.equal_to_prec(split));
        CHECK(whole.equal_to_prec(theta_L_unimodular({1, 0}, {0, 1}, 4)));
    }

    TEST_CASE("phi on fixed matrices")
    {
        // values from tests/oracles/cone_oracle.py
        const Mat2Z I = Mat2Z::identity();
        std::vector<std::pair<Mat2Z, Rat>> cases{
            {{0, -1, 1, 0}, q(1, 4)},   {{1, -1, 1, 0}, q(1, 6)},   {{2, -1, 1, 0}, q(1, 12)},
            {{1, -2, 1, -1}, q(1, 4)},  {{3, -5, 2, -3}, q(1, 4)},  {{3, -7, 1, -2}, q(1, 6)},
            {{-1, -3, 1, 2}, q(1, 6)},  {{7, -3, 12, -5}, q(1, 4)},
        };
        for (const auto& [g, v] : cases) {
            CHECK(phi_pair(I, g, PhiMethod::Chain) == v);
            CHECK(phi_pair(I, g, PhiMethod::Series) == v);
        }
    }

    TEST_CASE("rademacher comparison on random matrices")
    {
        std::mt19937_64 rng(21);
        for (int i = 0; i < 40; ++i) {
            Mat2Z g = testing_util::random_sl2(rng, 60);
            if (g.b == 0) continue;
            if (g.b > 0) g = g.neg();
            auto r = rademacher_compare(g);
            CHECK(r.lhs == r.rhs);
        }
    }

    TEST_CASE("degree-zero parts")
    {
        HomRat h = degree_zero(theta_L_unimodular({1, 0}, {0, 1}, 4));
        CHECK_THROWS_AS(h.eval({1, 0}), Error);
        auto [a1, a2] = pf_split(h, {1, 0}, {0, 1});
        CHECK((a1 + a2) == h);
        CHECK(reg_value({1, 0}, {0, 1}, {0, 1}, {-1, 0}) == reg_value_chain({1, 0}, {0, 1}, {0, 1}, {-1, 0}));
    }

    TEST_CASE("twelve-fold lift is a cocycle")
    {
        std::mt19937_64 rng(22);
        for (int i = 0; i < 30; ++i) {
            Mat2Z g = testing_util::random_sl2(rng, 20), h = testing_util::random_sl2(rng, 20);
            CHECK(lift12_cocycle_check(g, h));
            CHECK(lift12_value(g).c12.get_den() == 1);
        }
    }
}
