#include <doctest.h>

#include "eiscoc/siegel.hpp"
#include "helpers.hpp"

using namespace eiscoc;
using testing_util::q;

namespace {

std::vector<Rat> ints(std::vector<long> v)
{
    std::vector<Rat> out;
    for (long x : v) out.push_back(Rat(x));
    return out;
}

void check_heads(const FracQSeries& s, const std::vector<std::pair<long long, std::vector<long>>>& heads)
{
    for (const auto& [e, c] : heads) {
        CAPTURE(e);
        CHECK(s.coeff(e).coeffs() == ints(c));
    }
    CHECK(s.lead_exponent() == heads.front().first);
}

} // namespace

TEST_SUITE("siegel")
{
    TEST_CASE("leading exponents")
    {
        CHECK(siegel_lead_exponent(0, 5) == 1);
        CHECK(siegel_lead_exponent(1, 5) == q(1, 25));
        CHECK(siegel_lead_exponent(2, 4) == q(-1, 2));
        CHECK(siegel_lead_exponent(1, 3) == q(-1, 3));
        CHECK(siegel_lead_exponent(6, 5) == siegel_lead_exponent(1, 5));
    }

    TEST_CASE("product expansions")
    {
        // coefficients from tests/oracles/siegel_oracle.py, exponents in units of 1/M^2
        check_heads(siegel_g12(0, 1, 5, 4), {{25, {-1000, 625, -1000, 0}},
                                             {50, {-19500, 12000, -19500, 0}},
                                             {75, {-204750, 126750, -204750, 0}}});
        check_heads(siegel_g12(1, 1, 5, 2), {{1, {1, 0, 0, 0}}, {6, {0, -12, 0, 0}}, {11, {0, 0, 66, 0}}, {16, {0, 0, 0, -220}}});
        check_heads(siegel_g12(2, 1, 4, 3), {{-8, {1, 0}}, {8, {12, 0}}, {24, {66, 0}}});
        check_heads(siegel_g12(1, 0, 3, 3), {{-3, {1, 0}}, {0, {-12, 0}}, {3, {54, 0}}, {6, {-76, 0}}});
    }

    TEST_CASE("powers are consistent")
    {
        FracQSeries a = siegel_g12(1, 2, 5, 6);
        FracQSeries b = siegel_g_power(1, 2, 5, 6, 24);
        CHECK((a * a).equal_to_prec(b));
        CHECK_THROWS_AS(siegel_g_power(1, 2, 5, 6, 7), Error);
    }

    TEST_CASE("auxiliary multiplier")
    {
        CHECK_THROWS_AS(m_siegel_g12(2, 0, 1, 4, 10), Error);
        CHECK_THROWS_AS(m_siegel_g12(3, 1, 1, 3, 10), Error);
        for (auto [M, m] : std::vector<std::pair<Int, Int>>{{5, 2}, {4, 3}, {3, 2}, {5, 3}})
            for (auto [c, d] : std::vector<std::pair<Int, Int>>{{0, 1}, {1, 1}, {1, 2}}) {
                if (gcd_ll(m, (M / gcd_ll(c, M)) * (M / gcd_ll(d, M))) != 1) continue;
                CAPTURE(M);
                CAPTURE(m);
                CHECK(m_compatibility_check(m, c, d, M, 8));
            }
    }

    TEST_CASE("distribution relation")
    {
        // leads in units of 1/(Mm)^2 from tests/oracles/siegel_oracle.py
        std::vector<std::tuple<Int, Int, Int, Int, Int>> cases{
            {4, 2, 0, 1, 64}, {4, 2, 1, 1, -8}, {5, 2, 0, 1, 100}, {5, 2, 1, 1, 4}, {3, 3, 0, 1, 81}, {3, 3, 1, 1, -27},
        };
        for (const auto& [M, m, c, d, lead] : cases) {
            CAPTURE(M);
            CAPTURE(m);
            CAPTURE(c);
            DistributionResult r = distribution_check(m, c, d, M, 20);
            CHECK(r.lead_lhs == lead);
            CHECK(r.lead_rhs == lead);
            CHECK(r.ratio.is_one());
            CHECK(r.ok());
        }
        CHECK_THROWS_AS(distribution_check(2, 0, 1, 4, 19), Error);
    }
}
