#include <doctest.h>

#include <random>

#include "eiscoc/sl2.hpp"
#include "helpers.hpp"

using namespace eiscoc;

TEST_SUITE("sl2")
{
    TEST_CASE("wedge and overflow")
    {
        CHECK(wedge({1, 0}, {0, 1}) == 1);
        CHECK_THROWS_AS(checked_mul(1LL << 40, 1LL << 40), Error);
        CHECK_THROWS_AS(parse_mat("1 2 3"), Error);
        CHECK(parse_mat("2 1 5 3") == Mat2Z{2, 1, 5, 3});
    }

    TEST_CASE("connecting sequences of small matrices")
    {
        Mat2Z m{-1, 0, 0, -1};
        auto s = connecting_sequence(m);
        CHECK(s == ConnectingSeq{{0, 1}, {-1, 0}, {0, -1}});
        CHECK(monotone_connecting_sequence(m) == ConnectingSeq{{0, 1}, {-1, 0}, {0, -1}});

        // the breadth-first oracle (tests/oracles/sequence_oracle.py) finds length 2 here
        Mat2Z t{1, 1, 0, 1};
        auto st = connecting_sequence(t);
        CHECK(is_connecting_sequence(st, t));
        CHECK(st.size() - 1 <= 3);
        CHECK(is_connecting_sequence(ConnectingSeq{{0, 1}, {-1, 0}, {0, -1}, {1, 1}}, t));
        CHECK(is_connecting_sequence(ConnectingSeq{{0, 1}, {-1, -2}, {1, 1}}, t));

        CHECK(connecting_sequence(Mat2Z::identity()) == ConnectingSeq{{0, 1}});
    }

    TEST_CASE("connecting sequences of random matrices")
    {
        std::mt19937_64 rng(3);
        for (int i = 0; i < 300; ++i) {
            Mat2Z g = testing_util::random_gl2(rng, 100000);
            CHECK(is_connecting_sequence(connecting_sequence(g), g));
            CHECK(is_connecting_sequence(monotone_connecting_sequence(g), g));
        }
    }

    TEST_CASE("level-avoiding sequences")
    {
        Mat2Z g2{1, 1, 2, 3};
        auto s = n_connecting_sequence(g2, 2);
        CHECK(is_connecting_sequence(s, g2));
        for (size_t i = 0; i + 1 < s.size(); ++i) CHECK(s[i].y % 2 != 0);

        Mat2Z g5{2, 1, 5, 3};
        auto s5 = n_connecting_sequence(g5, 5);
        CHECK(s5.back() == Vec2{1, 3});
        CHECK(avoids_level(s5, 5));

        CHECK(n_connecting_sequence(Mat2Z{1, 0, 3, 1}, 3) == ConnectingSeq{{0, 1}});
        CHECK_THROWS_AS(n_connecting_sequence(Mat2Z{1, 1, 1, 2}, 5), Error);

        std::mt19937_64 rng(4);
        for (Int N : {2, 3, 4, 5, 9, 12}) {
            for (int i = 0; i < 50; ++i) {
                Int c = N * testing_util::uni(rng, -30, 30), d = testing_util::uni(rng, -200, 200), x, y;
                if (ext_gcd(d, -c, x, y) != 1) continue;
                Mat2Z g{x, y, c, d};
                auto seq = n_connecting_sequence(g, N);
                CHECK(is_connecting_sequence(seq, g));
                CHECK(avoids_level(seq, N));
            }
        }
    }

    TEST_CASE("hecke representatives")
    {
        CHECK(hecke_reps(2) == std::vector<Mat2Z>{{2, 0, 0, 1}, {2, 1, 0, 1}, {1, 0, 0, 2}});
        CHECK(hecke_reps(3).size() == 4);
        CHECK_THROWS_AS(hecke_reps(4), Error);

        for (auto [ell, N] : std::vector<std::pair<Int, Int>>{{2, 5}, {7, 3}, {3, 4}, {5, 12}}) {
            auto reps = hecke_reps_gamma1(ell, N);
            CHECK(reps.size() == (size_t)ell + 1);
            for (const auto& g : reps) {
                CHECK(g.det() == ell);
                CHECK(mod_ll(g.c, N) == 0);
                CHECK(mod_ll(g.d, N) == 1 % N);
            }
        }
        CHECK_THROWS_AS(hecke_reps_gamma1(5, 10), Error);
    }

    TEST_CASE("lifting from SL2(Z/N)")
    {
        Mat2Z l = sl2_lift_mod(5, Mat2Z{3, 0, 0, 2});
        CHECK(l.det() == 1);
        CHECK(mod_ll(l.a - 3, 5) == 0);
        CHECK(mod_ll(l.d - 2, 5) == 0);
        CHECK(mod_ll(l.b, 5) == 0);
        CHECK(mod_ll(l.c, 5) == 0);
        Mat2Z k = sl2_lift_mod(4, Mat2Z{2, 1, 1, 1});
        CHECK(k.det() == 1);
        CHECK(mod_ll(k.a - 2, 4) == 0);
        CHECK(mod_ll(k.b - 1, 4) == 0);
    }

    TEST_CASE("coset decomposition")
    {
        Mat2Z t{1, 1, 0, 1};
        auto cd = coset_decompose(t, hecke_reps(2));
        CHECK(cd.sigma.size() == 3);
        CHECK(cd.sigma[0] == 1);
        CHECK(cd.sigma[1] == 0);
        auto reps = hecke_reps(2);
        for (size_t j = 0; j < 3; ++j) {
            CHECK(cd.gammas[j].det() == 1);
            CHECK(t * reps[j] == reps[cd.sigma[j]] * cd.gammas[j]);
        }

        Mat2Z g{1, 1, 5, 6};
        auto r1 = hecke_reps_gamma1(2, 5);
        auto c1 = coset_decompose(g, r1, 5);
        for (const auto& h : c1.gammas) CHECK(in_gamma1(h, 5));
    }
}
