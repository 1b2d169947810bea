#ifndef EISCOC_CIRCLE_HPP
#define EISCOC_CIRCLE_HPP

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "eiscoc/sl2.hpp"

namespace eiscoc {

// Rays are primitive vectors. The order starts at (1,0) and runs counterclockwise.
int ray_quadrant(const Vec2& v);
bool ray_less(const Vec2& a, const Vec2& b);
struct RayLess {
    bool operator()(const Vec2& a, const Vec2& b) const { return ray_less(a, b); }
};
Vec2 make_ray(const Vec2& v); // primitive part; throws ZeroIndex on the zero vector

// rotation by a quarter turn: W(x,y) = (-y,x)
inline Vec2 rot_w(const Vec2& v) { return {-v.y, v.x}; }
inline Vec2 rot_w_inv(const Vec2& v) { return {v.y, -v.x}; }

// a ray strictly inside the open counterclockwise arc (p, q), p != q
Vec2 sample_inside(const Vec2& p, const Vec2& q);

using Ch0Elt = std::map<Vec2, Int, RayLess>;

// Locally constant integer functions on the circle minus finitely many rays,
// modulo agreement off a finite set.
class CircFn {
public:
    CircFn() = default;
    static CircFn constant(Int c);
    // values[i] lives on the open arc from breaks[i] to breaks[i+1 mod n]
    static CircFn from_pieces(std::vector<Vec2> breaks, std::vector<Int> values);

    bool is_constant() const { return breaks_.empty(); }
    Int constant_value() const { return const_; }
    const std::vector<Vec2>& breaks() const { return breaks_; }
    const std::vector<Int>& values() const { return vals_; }

    // value on the arc starting at r (r itself may be a breakpoint)
    Int value_after(const Vec2& r) const;
    // value at a ray that is not a breakpoint
    Int eval(const Vec2& r) const;

    CircFn operator+(const CircFn& o) const;
    CircFn operator-(const CircFn& o) const;
    CircFn operator-() const;
    CircFn scaled(Int k) const;
    bool operator==(const CircFn& o) const;
    bool operator!=(const CircFn& o) const { return !(*this == o); }

    std::string str() const;

private:
    Int const_ = 0;
    std::vector<Vec2> breaks_;
    std::vector<Int> vals_;
};

CircFn arc(const Vec2& l1, const Vec2& l2);
// sum of coef * arc(r1, r2) by a single sweep
CircFn circ_from_arcs(const std::vector<std::tuple<Vec2, Vec2, Int>>& arcs);

Ch0Elt nabla(const CircFn& f);
// 0 when l2 lies on the closed counterclockwise arc from l1 to l3, else 1
int delta(const Vec2& l1, const Vec2& l2, const Vec2& l3);

// (g.f)(r) = det(g) f(r g); breakpoints move by b -> b g^{-1}
CircFn act(const Mat2Z& g, const CircFn& f);

// Laurent polynomials in z1, z2 with rational coefficients
class LaurentPoly2 {
public:
    LaurentPoly2() = default;
    static LaurentPoly2 monomial(const Vec2& chi, const Rat& c = Rat(1));
    static LaurentPoly2 one_minus(const Vec2& chi); // 1 - z^chi

    const std::map<Vec2, Rat>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    LaurentPoly2 operator*(const LaurentPoly2& o) const;
    LaurentPoly2 operator+(const LaurentPoly2& o) const;
    std::string str() const;

private:
    std::map<Vec2, Rat> t_;
};

// tie rays of f: lambda with lambda.(chi - chi') = 0 for two support points
std::vector<Vec2> singular_rays(const LaurentPoly2& f);

CircFn n_of_steinberg(const LaurentPoly2& f, const LaurentPoly2& g);

struct TameSymbol {
    Rat c;
    Int n = 0;
};
TameSymbol toric_tame_symbol(const LaurentPoly2& f, const LaurentPoly2& g, const Vec2& lambda);

// <v, w> stands for the symbol {1 - z^v, 1 - z^w}
struct UnimodSymbol {
    Int coef = 1;
    Vec2 v, w;
};
// integer combination of <v,w> symbols plus a multiple of {-z1, -z2}
struct SymbolSum {
    std::vector<UnimodSymbol> terms;
    Int minus_one_coef = 0;
    std::string str() const;
};

CircFn symbol_to_circ(const Vec2& v, const Vec2& w); // throws BadWedge unless v^w = +-1
CircFn symbol_sum_to_circ(const SymbolSum& s);
// arc between two adjacent rays (nu1 ^ nu2 = 1) as the symbol <-W nu2, W nu1>
UnimodSymbol f2_unimodular(const Vec2& nu1, const Vec2& nu2);
SymbolSum f2_arc(const Vec2& nu1, const Vec2& nu2);
SymbolSum f2(const CircFn& f);

// l0 = ray of (-1, 0)
inline Vec2 ell0() { return {-1, 0}; }
// the image ray l0 g^{-1}
Vec2 gamma_ell0(const Mat2Z& g);
CircFn theta_tilde(const Mat2Z& g);

std::string ch0_str(const Ch0Elt& e);

} // namespace eiscoc

#endif
