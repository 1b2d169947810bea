#ifndef EISCOC_TEST_HELPERS_HPP
#define EISCOC_TEST_HELPERS_HPP

#include <random>
#include <string>
#include <vector>

#include "eiscoc/sl2.hpp"

namespace testing_util {

using eiscoc::Int;
using eiscoc::Mat2Z;

inline Int uni(std::mt19937_64& rng, Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng); }

inline Mat2Z random_sl2(std::mt19937_64& rng, Int B)
{
    while (true) {
        Int a = uni(rng, -B, B), c = uni(rng, -B, B), s, t;
        if (eiscoc::ext_gcd(a, c, s, t) != 1) continue;
        Mat2Z m{a, -t, c, s};
        Int k = uni(rng, -2, 2);
        m.b += k * m.a;
        m.d += k * m.c;
        return m;
    }
}

inline Mat2Z random_gl2(std::mt19937_64& rng, Int B)
{
    Mat2Z m = random_sl2(rng, B);
    if (uni(rng, 0, 1)) {
        m.b = -m.b;
        m.d = -m.d;
    }
    return m;
}

inline eiscoc::Rat q(long n, long d) { return eiscoc::make_rat(eiscoc::BigInt(n), eiscoc::BigInt(d)); }

inline std::vector<eiscoc::Rat> rats(const std::vector<std::string>& v)
{
    std::vector<eiscoc::Rat> out;
    for (const auto& s : v) {
        eiscoc::Rat r(s);
        r.canonicalize();
        out.push_back(r);
    }
    return out;
}

} // namespace testing_util

#endif
