#include <doctest.h>

#include <random>

#include "eiscoc/circle.hpp"
#include "helpers.hpp"

using namespace eiscoc;

namespace {

std::vector<Vec2> rays_in_box(Int B)
{
    std::vector<Vec2> out;
    for (Int x = -B; x <= B; ++x)
        for (Int y = -B; y <= B; ++y)
            if (gcd_ll(x, y) == 1) out.push_back({x, y});
    return out;
}

} // namespace

TEST_SUITE("circle")
{
    TEST_CASE("ray order")
    {
        CHECK(ray_less({1, 0}, {1, 1}));
        CHECK(ray_less({0, 1}, {-1, 0}));
        CHECK(ray_less({-1, 0}, {0, -1}));
        CHECK_FALSE(ray_less({1, -1}, {1, 0}));
        CHECK(make_ray({4, -6}) == Vec2{2, -3});
        CHECK_THROWS_AS(make_ray({0, 0}), Error);
        CHECK(rot_w({1, 2}) == Vec2{-2, 1});
        CHECK(rot_w_inv(rot_w({3, -5})) == Vec2{3, -5});
    }

    TEST_CASE("delta on fixed triples")
    {
        // values from tests/oracles/circle_oracle.py
        CHECK(delta({1, 0}, {0, 1}, {-1, 0}) == 0);
        CHECK(delta({1, 0}, {-1, 0}, {0, 1}) == 1);
        CHECK(delta({2, 1}, {1, 2}, {2, 1}) == 1);
        CHECK(delta({0, -1}, {1, 0}, {-1, 1}) == 0);
        CHECK(delta({-1, 1}, {1, 0}, {0, -1}) == 1);
    }

    TEST_CASE("delta counts on small rays")
    {
        auto R = rays_in_box(2);
        CHECK(R.size() == 16);
        CHECK(rays_in_box(5).size() == 80);
        int ones = 0;
        for (const auto& a : R)
            for (const auto& b : R)
                for (const auto& c : R) ones += delta(a, b, c);
        CHECK(ones == 1920);
    }

    TEST_CASE("delta is a cocycle")
    {
        auto R = rays_in_box(2);
        for (const auto& a : R)
            for (const auto& b : R)
                for (const auto& c : R)
                    for (const auto& d : R)
                        REQUIRE(delta(b, c, d) - delta(a, c, d) + delta(a, b, d) - delta(a, b, c) == 0);
    }

    TEST_CASE("arcs and their boundary")
    {
        CircFn f = arc({1, 0}, {0, 1});
        CHECK(f.eval({1, 1}) == 1);
        CHECK(f.eval({-1, 1}) == 0);
        Ch0Elt b = nabla(f);
        CHECK(b.size() == 2);
        CHECK(b.at({0, 1}) == -b.at({1, 0}));
        // going all the way round gives a constant
        CircFn whole = arc({1, 0}, {-1, 0}) + arc({-1, 0}, {1, 0});
        CHECK(whole.is_constant());
        CHECK(nabla(CircFn::constant(3)).empty());
        CHECK((f - f) == CircFn());
    }

    TEST_CASE("two arcs minus their union is delta")
    {
        auto R = rays_in_box(2);
        for (const auto& a : R)
            for (const auto& b : R)
                for (const auto& c : R) {
                    if (a == b || b == c || a == c) continue;
                    CircFn d = arc(a, b) + arc(b, c) - arc(a, c);
                    REQUIRE(d.is_constant());
                    CHECK(d.constant_value() == delta(a, b, c));
                }
    }

    TEST_CASE("the action is a left action")
    {
        std::mt19937_64 rng(11);
        CircFn f = arc({1, 0}, {1, 2}) + arc({-3, 1}, {0, -1}).scaled(2);
        for (int i = 0; i < 100; ++i) {
            Mat2Z g = testing_util::random_gl2(rng, 50), h = testing_util::random_gl2(rng, 50);
            CHECK(act(g, act(h, f)) == act(g * h, f));
        }
        CHECK(act(Mat2Z{1, 0, 0, -1}, CircFn::constant(1)) == CircFn::constant(-1));
    }

    TEST_CASE("unimodular symbols")
    {
        CHECK_THROWS_AS(symbol_to_circ({1, 0}, {1, 2}), Error);
        for (auto [v, w] : std::vector<std::pair<Vec2, Vec2>>{{{1, 0}, {0, 1}}, {{2, 1}, {1, 1}}, {{-3, 2}, {1, -1}}}) {
            CircFn s = symbol_to_circ(v, w);
            CHECK(symbol_sum_to_circ(f2(s)) == s);
        }
        SymbolSum one;
        one.minus_one_coef = 1;
        CHECK(symbol_sum_to_circ(one).is_constant());
    }

    TEST_CASE("steinberg symbols of toric functions")
    {
        auto f = LaurentPoly2::one_minus({1, 0});
        auto g = LaurentPoly2::one_minus({0, 1});
        CHECK(n_of_steinberg(f, g) == symbol_to_circ({1, 0}, {0, 1}));
        auto sr = singular_rays(f * g);
        CHECK_FALSE(sr.empty());
    }

    TEST_CASE("theta tilde is an arc ending at the image ray")
    {
        std::mt19937_64 rng(12);
        for (int i = 0; i < 40; ++i) {
            Mat2Z g = testing_util::random_sl2(rng, 30);
            CHECK(gamma_ell0(g) == make_ray(g.inverse().left_apply(ell0())));
            CHECK(nabla(theta_tilde(g)).size() <= 2);
        }
    }
}
