#ifndef EISCOC_SL2_HPP
#define EISCOC_SL2_HPP

#include <string>
#include <vector>

#include "eiscoc/arith.hpp"

namespace eiscoc {

// Integers are checked 64-bit; intermediate products use 128-bit and raise Overflow.
using Int = long long;

Int checked_mul(Int a, Int b);
Int checked_add(Int a, Int b);

struct Vec2 {
    Int x = 0, y = 0;
    bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Vec2& o) const { return !(*this == o); }
    bool operator<(const Vec2& o) const { return x != o.x ? x < o.x : y < o.y; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2 operator+(const Vec2& o) const { return {checked_add(x, o.x), checked_add(y, o.y)}; }
    Vec2 operator-(const Vec2& o) const { return {checked_add(x, -o.x), checked_add(y, -o.y)}; }
    Vec2 operator*(Int k) const { return {checked_mul(k, x), checked_mul(k, y)}; }
    bool is_zero() const { return x == 0 && y == 0; }
    bool primitive() const { return gcd_ll(x, y) == 1; }
    std::string str() const;
};

__int128 wedge128(const Vec2& v, const Vec2& w);
Int wedge(const Vec2& v, const Vec2& w); // throws Overflow outside 64 bits
Vec2 primitive_part(const Vec2& v);

struct Mat2Z {
    Int a = 1, b = 0, c = 0, d = 1;

    static Mat2Z identity() { return {1, 0, 0, 1}; }
    static Mat2Z from_columns(const Vec2& v, const Vec2& w) { return {v.x, w.x, v.y, w.y}; }

    Int det() const;
    Mat2Z operator*(const Mat2Z& o) const;
    bool operator==(const Mat2Z& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
    bool operator!=(const Mat2Z& o) const { return !(*this == o); }
    bool operator<(const Mat2Z& o) const;
    Mat2Z neg() const { return {-a, -b, -c, -d}; }
    // adjugate, so that M * adj = det * I
    Mat2Z adj() const { return {d, -b, -c, a}; }
    // exact inverse; throws NotUnimodular unless det = +-1
    Mat2Z inverse() const;
    Mat2Z transpose() const { return {a, c, b, d}; }
    Vec2 col0() const { return {a, c}; }
    Vec2 col1() const { return {b, d}; }
    // row vector times matrix
    Vec2 left_apply(const Vec2& v) const;
    std::string str() const;
};

Mat2Z parse_mat(const std::string& s); // "a b c d"

bool in_gamma0(const Mat2Z& g, Int N);
bool in_gamma1(const Mat2Z& g, Int N);

using ConnectingSeq = std::vector<Vec2>;

bool is_connecting_sequence(const ConnectingSeq& s, const Mat2Z& g);
// the N-avoidance predicate on v_0..v_{k-1}
bool avoids_level(const ConnectingSeq& s, Int N);

// Short sequence from continued-fraction convergents (orientation fixed by
// choosing between the two expansions, else by the x,-y,-x,y tail).
ConnectingSeq connecting_sequence(const Mat2Z& g);
// Sequence turning monotonically counterclockwise, total turn below one revolution.
ConnectingSeq monotone_connecting_sequence(const Mat2Z& g);
ConnectingSeq n_connecting_sequence(const Mat2Z& g, Int N);
// apply the insertion/deletion moves to an arbitrary connecting sequence
ConnectingSeq fiddle_sequence(ConnectingSeq s, Int N);

// r_0 = from, ..., r_m = to; consecutive wedge 1, counterclockwise, under one turn
std::vector<Vec2> unimodular_chain(const Vec2& from, const Vec2& to);
// some w with v ^ w = 1, nearly orthogonal to v
Vec2 unimodular_partner(const Vec2& v);

std::vector<Mat2Z> hecke_reps(Int ell);
std::vector<Mat2Z> hecke_reps_gamma1(Int ell, Int N);
Mat2Z sl2_lift_mod(Int N, const Mat2Z& residue);

struct CosetDecomposition {
    std::vector<int> sigma;
    std::vector<Mat2Z> gammas;
};
// gamma g_j = g_{sigma(j)} gamma_j; with N > 0 the gamma_j must also lie in Gamma1(N)
CosetDecomposition coset_decompose(const Mat2Z& g, const std::vector<Mat2Z>& reps, Int N = 0);

} // namespace eiscoc

#endif
