#include <doctest.h>

#include <random>

#include "eiscoc/gm.hpp"
#include "helpers.hpp"

using namespace eiscoc;

namespace {

Mat2Z random_level(std::mt19937_64& rng, Int N, bool gamma1)
{
    while (true) {
        Int c = N * testing_util::uni(rng, -20, 20), d = testing_util::uni(rng, -150, 150), x, y;
        if (gamma1) d = N * testing_util::uni(rng, -15, 15) + 1;
        if (ext_gcd(d, -c, x, y) != 1) continue;
        return {x, y, c, d};
    }
}

} // namespace

TEST_SUITE("gm")
{
    TEST_CASE("theta of minus identity")
    {
        SymbolSum2 th = theta_gamma(Mat2Z{-1, 0, 0, -1});
        SymbolSum2 want;
        want.terms = {{1, {-1, 0}, {0, -1}}, {1, {0, -1}, {1, 0}}};
        CHECK(canonical(th) == canonical(want));
    }

    TEST_CASE("boundary of theta")
    {
        std::mt19937_64 rng(31);
        for (int i = 0; i < 200; ++i) {
            Mat2Z g = testing_util::random_gl2(rng, 1000);
            DivSymbolSum want = div_sub(pullback_01(g), {{Vec2{0, 1}, 1}});
            CHECK(boundary2(theta_gamma(g)) == want);
            CHECK(boundary2(theta_gamma(g, SeqKind::ContinuedFraction)) == want);
            CHECK(boundary1(want) == 0);
        }
    }

    TEST_CASE("the two sequence kinds differ by a constant")
    {
        std::mt19937_64 rng(32);
        for (int i = 0; i < 100; ++i) {
            Mat2Z g = testing_util::random_gl2(rng, 500);
            CHECK((canonical(theta_gamma(g)) - canonical(theta_gamma(g, SeqKind::ContinuedFraction))).is_constant());
        }
    }

    TEST_CASE("cocycle defect is a small multiple of the sign symbol")
    {
        std::mt19937_64 rng(33);
        for (int i = 0; i < 200; ++i) {
            Mat2Z g = testing_util::random_gl2(rng, 200), h = testing_util::random_gl2(rng, 200);
            Int c = theta_cocycle_defect(g, h);
            CHECK(c >= -1);
            CHECK(c <= 1);
        }
    }

    TEST_CASE("symbol vectors")
    {
        CycSymbolVec v(5);
        v.add(1, 2, 3);
        v.add(1, 2, -3);
        CHECK(v.is_zero());
        CHECK_THROWS_AS(v.add(5, 1, 1), Error);
        v.add(1, 3, 2);
        CHECK(v.sigma(2).entries().count({2, 1}) == 1);
        CHECK((v - v).is_zero());
        CHECK(v.dense().size() == 16);
    }

    TEST_CASE("specialized theta of the identity vanishes")
    {
        CHECK(specialize_theta_N(Mat2Z::identity(), 7).is_zero());
        CHECK_THROWS_AS(specialize_theta_N(Mat2Z{1, 0, 1, 1}, 5), Error);
    }

    TEST_CASE("tame symbols on fixed matrices")
    {
        // values from tests/oracles/sequence_oracle.py
        std::vector<std::tuple<Int, Int, Mat2Z, Int>> cases{
            {5, 5, {2, 1, 5, 3}, 2},    {5, 5, {1, 0, 5, 1}, 1},     {5, 5, {3, 1, 5, 2}, 3},
            {5, 5, {-2, -1, 5, 3}, 3},  {5, 5, {1, 1, 5, 6}, 1},     {5, 5, {7, 3, 30, 13}, 2},
            {9, 3, {2, 1, 9, 5}, 2},    {9, 3, {1, 0, 9, 1}, 1},     {9, 3, {4, 1, 27, 7}, 1},
            {9, 3, {-5, -2, 18, 7}, 1}, {9, 3, {1, 2, 9, 19}, 1},
        };
        for (const auto& [N, ell, g, want] : cases) {
            CycSymbolVec v = specialize_theta_N(g, N);
            CHECK(tame_symbol_cyclo(v, ell)[0] == want);
            CHECK(tame_symbol_telescoping(v) == want);
            CHECK(integrality_expected(g, N) == want);
        }
    }

    TEST_CASE("relation lattice")
    {
        IntMat R = relation_lattice(5);
        CHECK(R.rows() == 16);
        const ColumnLattice& L = relation_lattice_cached(5);
        CHECK(&L == &relation_lattice_cached(5));
        ColumnLattice back = lattice_deserialize(lattice_serialize(L));
        CHECK(back.rank() == L.rank());
        CHECK(back.dim() == L.dim());
        for (int j = 0; j < R.cols(); ++j) {
            IntVec col;
            for (int i = 0; i < R.rows(); ++i) col.push_back(R(i, j));
            CHECK(L.contains(col));
            CHECK(back.contains(col));
        }
    }

    TEST_CASE("manin relations at level 12")
    {
        auto imgs = manin_relation_images(12);
        CHECK(imgs.size() == 172);
        for (const auto& m : imgs) CHECK(m.k.has_value());
    }

    TEST_CASE("eisenstein defect has trivial tame symbols")
    {
        std::mt19937_64 rng(34);
        for (auto [N, ell] : std::vector<std::pair<Int, Int>>{{5, 2}, {5, 3}, {9, 2}, {12, 7}}) {
            for (int i = 0; i < 5; ++i) {
                Mat2Z g = random_level(rng, N, true);
                DefectReport r = defect_report(g, ell, N, false);
                CHECK(r.tame_all_one);
                CHECK(r.doubled == (ell == 2));
            }
        }
    }

    TEST_CASE("unit valuations")
    {
        CHECK(unit_valuation(1, 5, 5) == 1);
        CHECK(unit_valuation(1, 9, 3) == 1);
        CHECK(unit_valuation(3, 9, 3) == 3);
        CHECK(unit_valuation(1, 12, 5) == 0);
    }
}
