#include "eiscoc/cone.hpp"

#include <algorithm>
#include <sstream>

namespace eiscoc {

namespace {

Rat R(Int v)
{
    return Rat((long)v);
}

// homogeneous polynomial: c[i] is the coefficient of u1^i u2^(n-i)
using HomPoly = std::vector<Rat>;

HomPoly hp_mul(const HomPoly& a, const HomPoly& b)
{
    HomPoly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
    return r;
}

HomPoly hp_linear(const Rat& u1coef, const Rat& u2coef)
{
    return {u2coef, u1coef};
}

HomPoly hp_form(const LinForm& f)
{
    return hp_linear(R(f.a), R(f.b));
}

HomPoly hp_pow(const HomPoly& a, int e)
{
    HomPoly r{Rat(1)};
    for (int i = 0; i < e; ++i) r = hp_mul(r, a);
    return r;
}

bool hp_zero(const HomPoly& a)
{
    return std::all_of(a.begin(), a.end(), [](const Rat& x) { return x == 0; });
}

// exact division by the form; false if it does not divide
bool hp_divide(const HomPoly& c, const LinForm& f, HomPoly& q)
{
    size_t n = c.size() - 1;
    if (n == 0) return hp_zero(c) ? (q = {Rat(0)}, true) : false;
    Rat a = R(f.a), b = R(f.b);
    q.assign(n, Rat(0));
    if (b != 0) {
        q[0] = c[0] / b;
        for (size_t i = 1; i < n; ++i) q[i] = (c[i] - a * q[i - 1]) / b;
        return c[n] == a * q[n - 1];
    }
    if (c[0] != 0) return false;
    for (size_t i = 1; i <= n; ++i) q[i - 1] = c[i] / a;
    return true;
}

Rat hp_eval(const HomPoly& c, const Vec2& u)
{
    Rat x = R(u.x), y = R(u.y), s = 0;
    size_t n = c.size() - 1;
    for (size_t i = 0; i <= n; ++i) {
        if (c[i] == 0) continue;
        Rat t = c[i];
        for (size_t k = 0; k < i; ++k) t *= x;
        for (size_t k = i; k < n; ++k) t *= y;
        s += t;
    }
    return s;
}

// sum_k c[k] X^k Y^(n-k) with X, Y linear
HomPoly hp_subst(const HomPoly& c, const HomPoly& X, const HomPoly& Y)
{
    size_t n = c.size() - 1;
    HomPoly r(n + 1, Rat(0));
    for (size_t k = 0; k <= n; ++k) {
        if (c[k] == 0) continue;
        HomPoly t = hp_mul(hp_pow(X, (int)k), hp_pow(Y, (int)(n - k)));
        for (size_t i = 0; i <= n; ++i) r[i] += c[k] * t[i];
    }
    return r;
}

HomPoly hp_den(const FormPowers& d)
{
    HomPoly r{Rat(1)};
    for (const auto& [f, e] : d) r = hp_mul(r, hp_pow(hp_form(f), e));
    return r;
}

BiPoly bp_mul_trunc(const BiPoly& a, const BiPoly& b, int prec)
{
    BiPoly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            int di = ea.first + eb.first, dj = ea.second + eb.second;
            if (di + dj >= prec) continue;
            r[{di, dj}] += ca * cb;
        }
    std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
    return r;
}

BiPoly bp_form_pow(const LinForm& f, int k)
{
    BiPoly r;
    HomPoly h = hp_pow(hp_form(f), k);
    for (int i = 0; i <= k; ++i)
        if (h[i] != 0) r[{i, k - i}] = h[i];
    return r;
}

BiPoly bp_todd(Int a, Int b, const std::vector<Rat>& t)
{
    BiPoly r;
    for (int k = 0; k < (int)t.size(); ++k) {
        if (t[k] == 0) continue;
        HomPoly h = hp_pow(hp_linear(R(a), R(b)), k);
        for (int i = 0; i <= k; ++i)
            if (h[i] != 0) r[{i, k - i}] += t[k] * h[i];
    }
    std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
    return r;
}

std::string hp_str(const HomPoly& c)
{
    std::ostringstream os;
    size_t n = c.size() - 1;
    bool first = true;
    for (size_t i = 0; i <= n; ++i) {
        if (c[i] == 0) continue;
        os << (first ? "" : " + ") << "(" << rat_str(c[i]) << ")";
        if (i) os << "*u1^" << i;
        if (n - i) os << "*u2^" << (n - i);
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::string den_str(const FormPowers& d)
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [f, e] : d) {
        os << (first ? "" : "*") << "(" << f.str() << ")";
        if (e != 1) os << "^" << e;
        first = false;
    }
    return first ? "1" : os.str();
}

} // namespace

std::string LinForm::str() const
{
    std::ostringstream os;
    os << a << "*u1" << (b < 0 ? " - " : " + ") << (b < 0 ? -b : b) << "*u2";
    return os.str();
}

std::pair<LinForm, int> normalize_form(Int a, Int b)
{
    if (a == 0 && b == 0) throw Error(Err::ZeroIndex, "zero linear form");
    if (a < 0 || (a == 0 && b < 0)) return {{-a, -b}, -1};
    return {{a, b}, 1};
}

std::pair<LinForm, int> wedge_form(const Vec2& v)
{
    // v ^ u = v.x u2 - v.y u1
    return normalize_form(-v.y, v.x);
}

// ---------------------------------------------------------------- PoleSeries

PoleSeries::PoleSeries(FormPowers den, BiPoly num, int prec) : den_(std::move(den)), prec_(prec)
{
    for (auto& [e, c] : num)
        if (c != 0 && e.first + e.second < prec_) num_[e] = c;
    std::erase_if(den_, [](const auto& kv) { return kv.second == 0; });
}

PoleSeries PoleSeries::constant(const Rat& c, int prec)
{
    BiPoly n;
    if (c != 0) n[{0, 0}] = c;
    return PoleSeries({}, n, prec);
}

int PoleSeries::den_degree() const
{
    int d = 0;
    for (const auto& kv : den_) d += kv.second;
    return d;
}

PoleSeries PoleSeries::over(const FormPowers& bigger) const
{
    BiPoly n = num_;
    int p = prec_;
    for (const auto& [f, e] : bigger) {
        auto it = den_.find(f);
        int have = it == den_.end() ? 0 : it->second;
        if (e < have) throw Error(Err::Internal, "target denominator too small");
        if (e == have) continue;
        p += e - have;
        n = bp_mul_trunc(n, bp_form_pow(f, e - have), p);
    }
    for (const auto& [f, e] : den_)
        if (!bigger.count(f)) throw Error(Err::Internal, "target denominator misses a form");
    return PoleSeries(bigger, n, p);
}

namespace {

FormPowers den_union(const FormPowers& a, const FormPowers& b)
{
    FormPowers d = a;
    for (const auto& [f, e] : b) d[f] = std::max(d[f], e);
    return d;
}

} // namespace

PoleSeries PoleSeries::operator+(const PoleSeries& o) const
{
    FormPowers D = den_union(den_, o.den_);
    PoleSeries a = over(D), b = o.over(D);
    int p = std::min(a.prec_, b.prec_);
    BiPoly n = a.num_;
    for (const auto& [e, c] : b.num_) n[e] += c;
    return PoleSeries(D, n, p);
}

PoleSeries PoleSeries::scaled(const Rat& c) const
{
    BiPoly n;
    if (c != 0)
        for (const auto& [e, x] : num_) n[e] = x * c;
    return PoleSeries(den_, n, prec_);
}

PoleSeries PoleSeries::operator-(const PoleSeries& o) const
{
    return *this + o.scaled(Rat(-1));
}

bool PoleSeries::equal_to_prec(const PoleSeries& o) const
{
    FormPowers D = den_union(den_, o.den_);
    PoleSeries a = over(D), b = o.over(D);
    int p = std::min(a.prec_, b.prec_);
    BiPoly x = PoleSeries(D, a.num_, p).num_, y = PoleSeries(D, b.num_, p).num_;
    return x == y;
}

std::string PoleSeries::str() const
{
    std::ostringstream os;
    os << "[";
    bool first = true;
    std::vector<std::pair<std::pair<int, int>, Rat>> terms(num_.begin(), num_.end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
        return x.first.first + x.first.second < y.first.first + y.first.second;
    });
    for (const auto& [e, c] : terms) {
        os << (first ? "" : " + ") << "(" << rat_str(c) << ")";
        if (e.first) os << "*u1^" << e.first;
        if (e.second) os << "*u2^" << e.second;
        first = false;
    }
    if (first) os << "0";
    os << " + O(deg " << prec_ << ")] / " << den_str(den_);
    return os.str();
}

// ---------------------------------------------------------------- HomRat

HomRat::HomRat(std::vector<Rat> num, FormPowers den) : num_(std::move(num)), den_(std::move(den))
{
    if (num_.empty()) num_ = {Rat(0)};
    std::erase_if(den_, [](const auto& kv) { return kv.second == 0; });
    int E = 0;
    for (const auto& kv : den_) E += kv.second;
    if ((int)num_.size() - 1 != E) throw Error(Err::DimensionMismatch, "HomRat is not of degree zero");
    reduce();
}

HomRat HomRat::constant(const Rat& c)
{
    return HomRat({c}, {});
}

bool HomRat::is_zero() const
{
    return hp_zero(num_);
}

void HomRat::reduce()
{
    if (hp_zero(num_)) {
        num_ = {Rat(0)};
        den_.clear();
        return;
    }
    for (auto& [f, e] : den_) {
        HomPoly q;
        while (e > 0 && hp_divide(num_, f, q)) {
            num_ = q;
            --e;
        }
    }
    std::erase_if(den_, [](const auto& kv) { return kv.second == 0; });
}

HomRat HomRat::operator+(const HomRat& o) const
{
    FormPowers D = den_union(den_, o.den_);
    auto lift = [&](const HomRat& h) {
        FormPowers extra;
        for (const auto& [f, e] : D) {
            auto it = h.den_.find(f);
            extra[f] = e - (it == h.den_.end() ? 0 : it->second);
        }
        return hp_mul(h.num_, hp_den(extra));
    };
    HomPoly a = lift(*this), b = lift(o);
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return HomRat(a, D);
}

HomRat HomRat::operator-(const HomRat& o) const
{
    HomPoly n = o.num_;
    for (auto& x : n) x = -x;
    return *this + HomRat(n, o.den_);
}

bool HomRat::operator==(const HomRat& o) const
{
    return hp_mul(num_, hp_den(o.den_)) == hp_mul(o.num_, hp_den(den_));
}

Rat HomRat::eval(const Vec2& u) const
{
    Rat d = 1;
    for (const auto& [f, e] : den_) {
        Rat v = f.eval(u);
        if (v == 0) throw Error(Err::DegenerateDirection, "evaluation on a polar line at " + u.str());
        for (int i = 0; i < e; ++i) d *= v;
    }
    return hp_eval(num_, u) / d;
}

std::string HomRat::str() const
{
    if (den_.empty()) return hp_str(num_);
    return "(" + hp_str(num_) + ") / " + den_str(den_);
}

// ---------------------------------------------------------------- theta_L

std::vector<Rat> todd_coeffs(int T)
{
    // invert (1 - e^{-x})/x = sum (-1)^k x^k/(k+1)!
    std::vector<Rat> g(T + 1), t(T + 1);
    Rat fact = 1;
    for (int k = 0; k <= T; ++k) {
        fact *= k + 1;
        g[k] = Rat((k % 2) ? -1 : 1) / fact;
    }
    for (int k = 0; k <= T; ++k) {
        Rat s = (k == 0) ? Rat(1) : Rat(0);
        for (int j = 1; j <= k; ++j) s -= g[j] * t[k - j];
        t[k] = s / g[0];
    }
    return t;
}

PoleSeries theta_L_unimodular(const Vec2& nu1, const Vec2& nu2, int T)
{
    if (wedge128(nu1, nu2) != 1) throw Error(Err::NotUnimodular, nu1.str() + " ^ " + nu2.str() + " != 1");
    if (T < 0) throw Error(Err::InsufficientPrecision, "negative precision");
    std::vector<Rat> t = todd_coeffs(T);
    Int a1 = nu2.y, b1 = -nu2.x; // x ^ nu2
    Int a2 = -nu1.y, b2 = nu1.x; // nu1 ^ x
    BiPoly n = bp_mul_trunc(bp_todd(a1, b1, t), bp_todd(a2, b2, t), T + 1);
    auto [f1, s1] = normalize_form(a1, b1);
    auto [f2, s2] = normalize_form(a2, b2);
    FormPowers den{{f1, 1}, {f2, 1}};
    PoleSeries s(den, n, T + 1);
    return s1 * s2 == 1 ? s : s.scaled(Rat(-1));
}

PoleSeries theta_L_arc(const Vec2& l1, const Vec2& l2, int T)
{
    Vec2 a = make_ray(l1), b = make_ray(l2);
    if (a == b) throw Error(Err::EmptyArc, "arc from a ray to itself");
    std::vector<Vec2> ch = unimodular_chain(a, b);
    FormPowers D;
    for (const Vec2& r : ch) D[wedge_form(r).first] = 1;
    PoleSeries sum = PoleSeries(D, {}, 1 << 30);
    for (size_t i = 1; i < ch.size(); ++i) sum = sum + theta_L_unimodular(ch[i - 1], ch[i], T).over(D);
    return sum;
}

HomRat degree_zero(const PoleSeries& s)
{
    int E = s.den_degree();
    if (s.prec() <= E) throw Error(Err::InsufficientPrecision, "precision does not reach the denominator degree");
    std::vector<Rat> c(E + 1, Rat(0));
    for (const auto& [e, x] : s.num())
        if (e.first + e.second == E) c[e.first] = x;
    return HomRat(c, s.den());
}

std::pair<HomRat, HomRat> pf_split(const HomRat& h, const Vec2& nu1, const Vec2& nu2)
{
    if (wedge128(nu1, nu2) == 0) throw Error(Err::DegenerateDirection, "both poles on one line");
    LinForm F1 = wedge_form(nu1).first, F2 = wedge_form(nu2).first;
    int e1 = 0, e2 = 0;
    for (const auto& [f, e] : h.den()) {
        if (f == F1) e1 = e;
        else if (f == F2) e2 = e;
        else throw Error(Err::DenominatorNotSplit, "pole along " + f.str());
    }
    int n = e1 + e2;
    // u in terms of x = F1(u), y = F2(u)
    Rat det = R(F1.a) * R(F2.b) - R(F1.b) * R(F2.a);
    HomPoly U1 = hp_linear(R(F2.b) / det, -R(F1.b) / det);
    HomPoly U2 = hp_linear(-R(F2.a) / det, R(F1.a) / det);
    HomPoly nxy = hp_subst(h.num(), U1, U2); // coefficient k of x^k y^(n-k)
    HomPoly X = hp_form(F1), Y = hp_form(F2);
    HomPoly p1(e1 + 1, Rat(0)), p2(e2 + 1, Rat(0));
    for (int k = 0; k <= n; ++k) {
        if (k <= e1) p1[k] = nxy[k];
        else p2[k - e1] = nxy[k];
    }
    HomRat A1(hp_subst(p1, X, Y), {{F1, e1}});
    HomRat A2(hp_subst(p2, X, Y), {{F2, e2}});
    return {A1, A2};
}

Rat reg_value(const Vec2& nu1, const Vec2& nu1p, const Vec2& nu2, const Vec2& nu2p)
{
    if (wedge128(nu1, nu2) == 0) throw Error(Err::DegenerateDirection, "rays on one line");
    if (wedge128(nu1, nu1p) == 0 || wedge128(nu2, nu2p) == 0)
        throw Error(Err::DegenerateDirection, "auxiliary vector on the polar line");
    HomRat h = degree_zero(theta_L_arc(nu1, nu2, kDefaultT));
    auto [A1, A2] = pf_split(h, nu1, nu2);
    return A1.eval(nu1p) + A2.eval(nu2p);
}

Rat reg_value_chain(const Vec2& nu1, const Vec2& nu1p, const Vec2& nu2, const Vec2& nu2p)
{
    if (wedge128(nu1, nu2) == 0) throw Error(Err::DegenerateDirection, "rays on one line");
    if (wedge128(nu1, nu1p) == 0 || wedge128(nu2, nu2p) == 0)
        throw Error(Err::DegenerateDirection, "auxiliary vector on the polar line");
    std::vector<Vec2> r = unimodular_chain(make_ray(nu1), make_ray(nu2));
    size_t k = r.size() - 1;
    Rat csum = 0;
    for (size_t j = 1; j < k; ++j) {
        Vec2 s = r[j - 1] + r[j + 1];
        Int c = r[j].x != 0 ? s.x / r[j].x : s.y / r[j].y;
        csum += R(c);
    }
    auto w = [](const Vec2& v, const Vec2& u) { return R(wedge(v, u)); };
    Rat A1 = make_rat((long)k, 4L) - (w(r[1], nu1p) / w(r[0], nu1p) + csum) / 12;
    Rat A2 = -(w(r[k - 1], nu2p) / w(r[k], nu2p)) / 12;
    return A1 + A2;
}

namespace {

Rat phi_generic(const Mat2Z& g1, const Mat2Z& g2, PhiMethod m)
{
    Mat2Z i1 = g1.inverse(), i2 = g2.inverse();
    Vec2 n1 = make_ray(i1.left_apply({-1, 0})), n2 = make_ray(i2.left_apply({-1, 0}));
    Vec2 p1 = i1.left_apply({0, -1}), p2 = i2.left_apply({0, -1});
    return m == PhiMethod::Chain ? reg_value_chain(n1, p1, n2, p2) : reg_value(n1, p1, n2, p2);
}

} // namespace

Rat phi_pair(const Mat2Z& g1, const Mat2Z& g2, PhiMethod m)
{
    if (g1.det() != 1 || g2.det() != 1) throw Error(Err::NotUnimodular, "phi needs SL2 arguments");
    Vec2 n1 = gamma_ell0(g1), n2 = gamma_ell0(g2);
    if (wedge128(n1, n2) != 0) return phi_generic(g1, g2, m);
    // both rays on one line: pass through a third matrix in general position
    static const Mat2Z kInv3[3] = {{1, 0, 0, 1}, {0, 1, -1, 0}, {1, 1, 0, 1}};
    for (const Mat2Z& c : kInv3) {
        Mat2Z g3 = c.inverse();
        Vec2 n3 = gamma_ell0(g3);
        if (wedge128(n1, n3) == 0) continue;
        return phi_generic(g1, g3, m) + phi_generic(g3, g2, m) - delta(n1, n3, n2);
    }
    throw Error(Err::Internal, "no auxiliary matrix");
}

Rat dedekind_sum(Int p, Int q)
{
    if (q < 1 || gcd_ll(p, q) != 1) throw Error(Err::NotCoprime, "s(" + std::to_string(p) + "," + std::to_string(q) + ")");
    // ((k/q)) ((pk/q)) = (2k - q)(2r - q) / (4 q^2) with r = pk mod q
    BigInt s = 0;
    Int pm = mod_ll(p, q);
    Int r = 0;
    for (Int k = 1; k < q; ++k) {
        r += pm;
        if (r >= q) r -= q;
        s += BigInt((long)(2 * k - q)) * (long)(2 * r - q);
    }
    return make_rat(s, BigInt((long)q) * (long)q * 4);
}

Rat dedekind_sum_euclid(Int p, Int q)
{
    if (q < 1 || gcd_ll(p, q) != 1) throw Error(Err::NotCoprime, "s(" + std::to_string(p) + "," + std::to_string(q) + ")");
    Rat acc = 0;
    int sign = 1;
    Int a = mod_ll(p, q), b = q;
    while (a != 0) {
        // s(a,b) = -1/4 + (a/b + b/a + 1/(ab))/12 - s(b mod a, a)
        Rat ra = R(a), rb = R(b);
        acc += sign * (make_rat(-1, 4) + (ra / rb + rb / ra + 1 / (ra * rb)) / 12);
        sign = -sign;
        Int na = b % a;
        b = a;
        a = na;
    }
    return acc;
}

RademacherResult rademacher_compare(const Mat2Z& g, PhiMethod m)
{
    if (g.det() != 1) throw Error(Err::NotUnimodular, g.str());
    // transpose-inverse (p p'; q q') = (d -c; -b a)
    Int p = g.d, q = -g.b, qp = g.a;
    if (q <= 0) throw Error(Err::BadOrientation, "needs q > 0 in the transpose-inverse");
    RademacherResult r;
    r.lhs = phi_pair(Mat2Z::identity(), g, m);
    r.rhs = make_rat(1, 4) + dedekind_sum(p, q) - make_rat(BigInt((long)p) + (long)qp, BigInt((long)q) * 12);
    return r;
}

CircFn Lift12::combined() const
{
    if (c12.get_den() != 1) throw Error(Err::NonIntegral, "12 phi is not an integer");
    return arc12 - CircFn::constant(c12.get_num().get_si());
}

Lift12 lift12_value(const Mat2Z& g)
{
    if (g.det() != 1) throw Error(Err::NotUnimodular, g.str());
    return {theta_tilde(g).scaled(12), phi_pair(Mat2Z::identity(), g) * 12};
}

bool lift12_cocycle_check(const Mat2Z& g1, const Mat2Z& g2)
{
    CircFn lhs = lift12_value(g1 * g2).combined();
    CircFn rhs = act(g1, lift12_value(g2).combined()) + lift12_value(g1).combined();
    return lhs == rhs;
}

} // namespace eiscoc
