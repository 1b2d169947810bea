#include <doctest.h>

#include <array>

#include "eiscoc/torsion.hpp"

using namespace eiscoc;

namespace {

int rank_mod(const std::vector<Int>& x, Int n)
{
    if (x[0] == 0 && x[1] == 0 && x[2] == 0 && x[3] == 0) return 0;
    return mod_ll(x[0] * x[3] - x[2] * x[1], n) == 0 ? 1 : 2;
}

} // namespace

TEST_SUITE("torsion")
{
    TEST_CASE("cycle maps")
    {
        CycleMap p = CycleMap::point(3, 2);
        CHECK(p.size() == 9);
        CHECK(p.degree() == 1);
        CHECK(CycleMap::all(3, 2).degree() == 9);
        CHECK(p.at({0, 0}) == 1);
        CHECK(p.at({3, 0}) == 1);
        CHECK(p.coords(p.index({1, 2})) == std::vector<Int>{1, 2});
        CHECK((p + p) == p.scaled(2));
        CHECK_THROWS_AS(p + CycleMap::point(5, 2), Error);
        CycleMap b = box(CycleMap::point(3, 2), CycleMap::all(3, 2));
        CHECK(b.k() == 4);
        CHECK(b.degree() == 9);
    }

    TEST_CASE("kernels and subgroups")
    {
        CHECK(kernel_cycle(Mat2Z::identity()).degree() == 1);
        CHECK(kernel_cycle(Mat2Z{2, 0, 0, 1}).degree() == 2);
        CHECK(kernel_cycle(Mat2Z{2, 1, 0, 1}).n() == 2);
        CHECK_THROWS_AS(kernel_cycle(Mat2Z{1, 2, 2, 4}), Error);
        CHECK(cyclic_subgroups(5).size() == 6);
        CHECK_THROWS_AS(cyclic_subgroups(6), Error);
        CHECK(torsion_hecke_reps(3).size() == 4);
    }

    TEST_CASE("degrees of the hecke and multiplication operators")
    {
        for (Int n : {2, 3, 5}) {
            CycleMap z = CycleMap::point(n, 2);
            CHECK(hecke_op(z).degree() == n * (n + 1));
            CHECK(mult_pullback(z).degree() == n * n);
            CHECK(torsion_degree_check(n));
        }
    }

    TEST_CASE("e_n by rank")
    {
        // rank counts and values from tests/oracles/torsion_oracle.py
        struct Row {
            Int n;
            std::array<Int, 3> count, value;
        };
        std::vector<Row> rows{
            {2, {1, 9, 6}, {6, -2, 2}},
            {3, {1, 32, 48}, {48, -6, 3}},
            {5, {1, 144, 480}, {480, -20, 5}},
            {7, {1, 384, 2016}, {2016, -42, 7}},
        };
        for (const auto& r : rows) {
            CAPTURE(r.n);
            CycleMap e = e_n_build(r.n);
            std::array<Int, 3> cnt{0, 0, 0};
            for (std::size_t i = 0; i < e.size(); ++i) {
                int k = rank_mod(e.coords(i), r.n);
                ++cnt[k];
                REQUIRE(e.at_index(i) == r.value[k]);
            }
            CHECK(cnt == r.count);
            CHECK(e.degree() == 0);
            CHECK(hecke_op(CycleMap::point(r.n, 4)).at_index(0) == r.n + 1);
            CHECK(e_n_rank_values(r.n) == std::vector<Int>(r.value.begin(), r.value.end()));
            CHECK(e == phi_n_table(r.n));
            CHECK(e == v_op(CycleMap::point(r.n, 4)));
        }
    }

    TEST_CASE("identities between the operators")
    {
        for (Int n : {2, 3, 5}) {
            CAPTURE(n);
            CHECK(hecke_identity_check(n));
            CHECK(rows_vs_cols_check(n));
            CHECK(e_n_matches_table(n));
            CHECK(e_n_degree_zero(n));
            CHECK(pushforward_zero_check(n));
            CHECK(norm_identity_check(n));
            CHECK(v_n_zero_check(n));
        }
    }
}
