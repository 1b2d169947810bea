#ifndef EISCOC_CONE_HPP
#define EISCOC_CONE_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "eiscoc/circle.hpp"

namespace eiscoc {

// a*u1 + b*u2, stored with the first nonzero coefficient positive
struct LinForm {
    Int a = 0, b = 0;
    bool operator<(const LinForm& o) const { return a != o.a ? a < o.a : b < o.b; }
    bool operator==(const LinForm& o) const { return a == o.a && b == o.b; }
    Rat eval(const Vec2& u) const { return Rat((long)a) * (long)u.x + Rat((long)b) * (long)u.y; }
    std::string str() const;
};
// normalised form and the sign s with (a,b) = s * form
std::pair<LinForm, int> normalize_form(Int a, Int b);
// the form u -> v ^ u, which vanishes on the line R v
std::pair<LinForm, int> wedge_form(const Vec2& v);

// bivariate polynomial, (i,j) -> coefficient of u1^i u2^j
using BiPoly = std::map<std::pair<int, int>, Rat>;
using FormPowers = std::map<LinForm, int>;

// num / prod(denominator forms); coefficients of num of total degree >= prec are unknown
class PoleSeries {
public:
    PoleSeries() = default;
    PoleSeries(FormPowers den, BiPoly num, int prec);
    static PoleSeries constant(const Rat& c, int prec);

    const FormPowers& den() const { return den_; }
    const BiPoly& num() const { return num_; }
    int prec() const { return prec_; }
    int den_degree() const;

    // same value rewritten over a larger denominator
    PoleSeries over(const FormPowers& bigger) const;

    PoleSeries operator+(const PoleSeries& o) const;
    PoleSeries operator-(const PoleSeries& o) const;
    PoleSeries scaled(const Rat& c) const;
    // equality of the represented series wherever both are known
    bool equal_to_prec(const PoleSeries& o) const;

    std::string str() const;

private:
    FormPowers den_;
    BiPoly num_;
    int prec_ = 0;
};

// homogeneous degree-zero rational function num / prod(den); coefficients c[i] of u1^i u2^(n-i)
class HomRat {
public:
    HomRat() = default;
    HomRat(std::vector<Rat> num, FormPowers den);
    static HomRat constant(const Rat& c);

    const std::vector<Rat>& num() const { return num_; }
    const FormPowers& den() const { return den_; }
    bool is_zero() const;

    HomRat operator+(const HomRat& o) const;
    HomRat operator-(const HomRat& o) const;
    bool operator==(const HomRat& o) const;
    // throws DegenerateDirection when the denominator vanishes at u
    Rat eval(const Vec2& u) const;
    std::string str() const;

private:
    void reduce();
    std::vector<Rat> num_{Rat(0)};
    FormPowers den_;
};

// coefficients of x / (1 - e^{-x}) through degree T
std::vector<Rat> todd_coeffs(int T);

// 1 / ((1 - e^{-l1})(1 - e^{-l2})) for the dual forms l1(x) = x ^ nu2, l2(x) = nu1 ^ x
PoleSeries theta_L_unimodular(const Vec2& nu1, const Vec2& nu2, int T);
// sum over a unimodular subdivision of the counterclockwise arc
PoleSeries theta_L_arc(const Vec2& l1, const Vec2& l2, int T);
inline constexpr int kDefaultT = 4;

HomRat degree_zero(const PoleSeries& s);
// A1 has poles only on R nu1 (and carries the constant), A2 only on R nu2
std::pair<HomRat, HomRat> pf_split(const HomRat& h, const Vec2& nu1, const Vec2& nu2);

// A1(nu1') + A2(nu2') for the arc [nu1, nu2], through the series machinery
Rat reg_value(const Vec2& nu1, const Vec2& nu1p, const Vec2& nu2, const Vec2& nu2p);
// same quantity from the closed form of the degree-zero part along a unimodular chain
Rat reg_value_chain(const Vec2& nu1, const Vec2& nu1p, const Vec2& nu2, const Vec2& nu2p);

enum class PhiMethod { Chain, Series };
Rat phi_pair(const Mat2Z& g1, const Mat2Z& g2, PhiMethod m = PhiMethod::Chain);

// direct sawtooth summation
Rat dedekind_sum(Int p, Int q);
// reciprocity-driven Euclidean evaluation
Rat dedekind_sum_euclid(Int p, Int q);

struct RademacherResult {
    Rat lhs, rhs;
};
RademacherResult rademacher_compare(const Mat2Z& g, PhiMethod m = PhiMethod::Chain);

struct Lift12 {
    CircFn arc12; // 12 * theta_tilde
    Rat c12;      // 12 * phi(I, g)
    // arc12 minus c12 times the constant function 1 (requires c12 integral)
    CircFn combined() const;
};
Lift12 lift12_value(const Mat2Z& g);
bool lift12_cocycle_check(const Mat2Z& g1, const Mat2Z& g2);

} // namespace eiscoc

#endif
