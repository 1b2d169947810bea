#include "eiscoc/circle.hpp"

#include <algorithm>
#include <sstream>

namespace eiscoc {

int ray_quadrant(const Vec2& v)
{
    if (v.x > 0 && v.y >= 0) return 0;
    if (v.x <= 0 && v.y > 0) return 1;
    if (v.x < 0 && v.y <= 0) return 2;
    return 3;
}

bool ray_less(const Vec2& a, const Vec2& b)
{
    int qa = ray_quadrant(a), qb = ray_quadrant(b);
    if (qa != qb) return qa < qb;
    return wedge128(a, b) > 0;
}

Vec2 make_ray(const Vec2& v)
{
    if (v.is_zero()) throw Error(Err::ZeroIndex, "zero vector has no ray");
    return primitive_part(v);
}

Vec2 sample_inside(const Vec2& p, const Vec2& q)
{
    if (wedge128(p, q) > 0) return p + q;
    return rot_w(p);
}

// ---------------------------------------------------------------- CircFn

CircFn CircFn::constant(Int c)
{
    CircFn f;
    f.const_ = c;
    return f;
}

CircFn CircFn::from_pieces(std::vector<Vec2> breaks, std::vector<Int> values)
{
    if (breaks.size() != values.size()) throw Error(Err::DimensionMismatch, "breakpoints and values differ in length");
    if (breaks.empty()) throw Error(Err::DimensionMismatch, "no pieces");
    std::vector<std::pair<Vec2, Int>> pv;
    for (size_t i = 0; i < breaks.size(); ++i) pv.push_back({make_ray(breaks[i]), values[i]});
    std::sort(pv.begin(), pv.end(), [](const auto& a, const auto& b) { return ray_less(a.first, b.first); });
    for (size_t i = 1; i < pv.size(); ++i)
        if (pv[i].first == pv[i - 1].first) throw Error(Err::DimensionMismatch, "repeated breakpoint");
    CircFn f;
    size_t n = pv.size();
    for (size_t i = 0; i < n; ++i) {
        Int prev = pv[(i + n - 1) % n].second;
        if (pv[i].second != prev) {
            f.breaks_.push_back(pv[i].first);
            f.vals_.push_back(pv[i].second);
        }
    }
    if (f.breaks_.empty()) f.const_ = pv[0].second;
    return f;
}

Int CircFn::value_after(const Vec2& r) const
{
    if (breaks_.empty()) return const_;
    Vec2 p = make_ray(r);
    auto it = std::upper_bound(breaks_.begin(), breaks_.end(), p, ray_less);
    if (it == breaks_.begin()) return vals_.back();
    return vals_[(it - breaks_.begin()) - 1];
}

Int CircFn::eval(const Vec2& r) const
{
    return value_after(r);
}

CircFn CircFn::operator+(const CircFn& o) const
{
    if (is_constant() && o.is_constant()) return constant(checked_add(const_, o.const_));
    std::vector<Vec2> merged;
    std::merge(breaks_.begin(), breaks_.end(), o.breaks_.begin(), o.breaks_.end(), std::back_inserter(merged),
               ray_less);
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    std::vector<Int> vals;
    vals.reserve(merged.size());
    for (const Vec2& b : merged) vals.push_back(checked_add(value_after(b), o.value_after(b)));
    return from_pieces(std::move(merged), std::move(vals));
}

CircFn CircFn::operator-() const
{
    return scaled(-1);
}

CircFn CircFn::operator-(const CircFn& o) const
{
    return *this + (-o);
}

CircFn CircFn::scaled(Int k) const
{
    if (k == 0) return constant(0);
    CircFn f = *this;
    f.const_ = checked_mul(const_, k);
    for (Int& v : f.vals_) v = checked_mul(v, k);
    return f;
}

bool CircFn::operator==(const CircFn& o) const
{
    return const_ == o.const_ && breaks_ == o.breaks_ && vals_ == o.vals_;
}

std::string CircFn::str() const
{
    if (is_constant()) return "const " + std::to_string(const_);
    std::ostringstream os;
    for (size_t i = 0; i < breaks_.size(); ++i) os << (i ? " " : "") << breaks_[i].str() << ":" << vals_[i];
    return os.str();
}

CircFn arc(const Vec2& l1, const Vec2& l2)
{
    Vec2 a = make_ray(l1), b = make_ray(l2);
    if (a == b) return CircFn::constant(0);
    return CircFn::from_pieces({a, b}, {1, 0});
}

CircFn circ_from_arcs(const std::vector<std::tuple<Vec2, Vec2, Int>>& arcs)
{
    std::map<Vec2, Int, RayLess> jump;
    Int wrap = 0;
    for (const auto& [p, q, k] : arcs) {
        Vec2 a = make_ray(p), b = make_ray(q);
        if (a == b || k == 0) continue;
        if (ray_less(b, a)) wrap = checked_add(wrap, k);
        jump[a] = checked_add(jump[a], k);
        jump[b] = checked_add(jump[b], -k);
    }
    if (jump.empty()) return CircFn::constant(0);
    std::vector<Vec2> br;
    std::vector<Int> vals;
    Int cur = wrap;
    for (const auto& [r, j] : jump) {
        cur = checked_add(cur, j);
        br.push_back(r);
        vals.push_back(cur);
    }
    return CircFn::from_pieces(std::move(br), std::move(vals));
}

Ch0Elt nabla(const CircFn& f)
{
    Ch0Elt out;
    const auto& b = f.breaks();
    const auto& v = f.values();
    size_t n = b.size();
    for (size_t i = 0; i < n; ++i) out[b[i]] = v[(i + n - 1) % n] - v[i];
    return out;
}

int delta(const Vec2& l1, const Vec2& l2, const Vec2& l3)
{
    Vec2 a = make_ray(l1), b = make_ray(l2), c = make_ray(l3);
    auto key = [&](const Vec2& r) { return std::make_pair(ray_less(r, a) ? 1 : 0, r); };
    auto kb = key(b), kc = key(c);
    bool le = kb.first != kc.first ? kb.first < kc.first : !ray_less(c, b);
    return le ? 0 : 1;
}

CircFn act(const Mat2Z& g, const CircFn& f)
{
    Int D = g.det();
    if (D != 1 && D != -1) throw Error(Err::NotUnimodular, g.str());
    if (f.is_constant()) return CircFn::constant(D * f.constant_value());
    Mat2Z gi = g.inverse();
    std::vector<Vec2> nb;
    for (const Vec2& b : f.breaks()) nb.push_back(make_ray(gi.left_apply(b)));
    std::sort(nb.begin(), nb.end(), ray_less);
    std::vector<Int> vals;
    size_t n = nb.size();
    for (size_t i = 0; i < n; ++i) {
        Vec2 s = sample_inside(nb[i], nb[(i + 1) % n]);
        vals.push_back(D * f.eval(g.left_apply(s)));
    }
    return CircFn::from_pieces(std::move(nb), std::move(vals));
}

// ---------------------------------------------------------------- Laurent polynomials

LaurentPoly2 LaurentPoly2::monomial(const Vec2& chi, const Rat& c)
{
    LaurentPoly2 p;
    if (c != 0) p.t_[chi] = c;
    return p;
}

LaurentPoly2 LaurentPoly2::one_minus(const Vec2& chi)
{
    if (chi.is_zero()) return LaurentPoly2();
    LaurentPoly2 p;
    p.t_[{0, 0}] = 1;
    p.t_[chi] = -1;
    return p;
}

LaurentPoly2 LaurentPoly2::operator*(const LaurentPoly2& o) const
{
    LaurentPoly2 r;
    for (const auto& [a, x] : t_)
        for (const auto& [b, y] : o.t_) r.t_[a + b] += x * y;
    std::erase_if(r.t_, [](const auto& kv) { return kv.second == 0; });
    return r;
}

LaurentPoly2 LaurentPoly2::operator+(const LaurentPoly2& o) const
{
    LaurentPoly2 r = *this;
    for (const auto& [b, y] : o.t_) r.t_[b] += y;
    std::erase_if(r.t_, [](const auto& kv) { return kv.second == 0; });
    return r;
}

std::string LaurentPoly2::str() const
{
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : t_) {
        os << (first ? "" : " + ") << "(" << rat_str(c) << ")z^" << e.str();
        first = false;
    }
    return os.str();
}

std::vector<Vec2> singular_rays(const LaurentPoly2& f)
{
    std::vector<Vec2> out;
    std::vector<Vec2> s;
    for (const auto& kv : f.terms()) s.push_back(kv.first);
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j) {
            Vec2 d = primitive_part(s[j] - s[i]);
            out.push_back(rot_w(d));
            out.push_back(-rot_w(d));
        }
    std::sort(out.begin(), out.end(), ray_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

// the unique maximiser of lambda . chi on the support, or nullptr on a tie
const std::pair<const Vec2, Rat>* leading(const LaurentPoly2& f, const Vec2& lambda)
{
    const std::pair<const Vec2, Rat>* best = nullptr;
    __int128 bv = 0;
    bool tie = false;
    for (const auto& kv : f.terms()) {
        __int128 v = (__int128)lambda.x * kv.first.x + (__int128)lambda.y * kv.first.y;
        if (!best || v > bv) {
            best = &kv;
            bv = v;
            tie = false;
        } else if (v == bv) {
            tie = true;
        }
    }
    return tie ? nullptr : best;
}

Rat rat_pow(const Rat& a, Int e)
{
    if (e < 0) {
        if (a == 0) throw Error(Err::DivisionByZero, "negative power of zero");
        return rat_pow(1 / a, -e);
    }
    Rat r = 1, b = a;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

} // namespace

CircFn n_of_steinberg(const LaurentPoly2& f, const LaurentPoly2& g)
{
    if (f.is_zero() || g.is_zero()) throw Error(Err::ZeroPolynomial, "Steinberg symbol of zero");
    std::vector<Vec2> rays = singular_rays(f);
    std::vector<Vec2> rg = singular_rays(g);
    rays.insert(rays.end(), rg.begin(), rg.end());
    std::sort(rays.begin(), rays.end(), ray_less);
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
    auto value = [&](const Vec2& s) {
        auto lf = leading(f, s), lg = leading(g, s);
        if (!lf || !lg) throw Error(Err::Internal, "sample ray on a tie");
        return wedge(lf->first, lg->first);
    };
    if (rays.empty()) return CircFn::constant(value({1, 0}));
    if (rays.size() == 1) rays.push_back(-rays[0]);
    std::sort(rays.begin(), rays.end(), ray_less);
    std::vector<Int> vals;
    size_t n = rays.size();
    for (size_t i = 0; i < n; ++i) vals.push_back(value(sample_inside(rays[i], rays[(i + 1) % n])));
    return CircFn::from_pieces(std::move(rays), std::move(vals));
}

TameSymbol toric_tame_symbol(const LaurentPoly2& f, const LaurentPoly2& g, const Vec2& lambda)
{
    if (f.is_zero() || g.is_zero()) throw Error(Err::ZeroPolynomial, "tame symbol of zero");
    auto lf = leading(f, lambda), lg = leading(g, lambda);
    if (!lf || !lg) throw Error(Err::RayOnSingularLocus, lambda.str());
    Int vf = -(lambda.x * lf->first.x + lambda.y * lf->first.y);
    Int vg = -(lambda.x * lg->first.x + lambda.y * lg->first.y);
    TameSymbol t;
    t.c = rat_pow(lg->second, vf) * rat_pow(lf->second, -vg);
    if ((vf * vg) % 2 != 0) t.c = -t.c;
    t.n = wedge(lf->first, lg->first);
    return t;
}

// ---------------------------------------------------------------- dictionary

std::string SymbolSum::str() const
{
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms) {
        os << (first ? "" : " + ") << t.coef << "<" << t.v.str() << "," << t.w.str() << ">";
        first = false;
    }
    if (minus_one_coef != 0 || first) os << (first ? "" : " + ") << minus_one_coef << "{-z1,-z2}";
    return os.str();
}

namespace {

std::tuple<Vec2, Vec2, Int> symbol_arc(const Vec2& v, const Vec2& w, Int k)
{
    __int128 d = wedge128(v, w);
    if (d == 1) return {-rot_w(w), rot_w(v), k};
    if (d == -1) return {-rot_w(v), rot_w(w), -k};
    throw Error(Err::BadWedge, v.str() + " ^ " + w.str() + " is not +-1");
}

} // namespace

CircFn symbol_to_circ(const Vec2& v, const Vec2& w)
{
    auto [a, b, k] = symbol_arc(v, w, 1);
    return arc(a, b).scaled(k);
}

CircFn symbol_sum_to_circ(const SymbolSum& s)
{
    std::vector<std::tuple<Vec2, Vec2, Int>> arcs;
    arcs.reserve(s.terms.size());
    for (const auto& t : s.terms) arcs.push_back(symbol_arc(t.v, t.w, t.coef));
    return circ_from_arcs(arcs) + CircFn::constant(s.minus_one_coef);
}

UnimodSymbol f2_unimodular(const Vec2& nu1, const Vec2& nu2)
{
    if (wedge128(nu1, nu2) != 1) throw Error(Err::BadWedge, "arc endpoints are not adjacent");
    return {1, -rot_w(nu2), rot_w(nu1)};
}

SymbolSum f2_arc(const Vec2& nu1, const Vec2& nu2)
{
    SymbolSum s;
    Vec2 a = make_ray(nu1), b = make_ray(nu2);
    if (a == b) return s;
    std::vector<Vec2> ch = unimodular_chain(a, b);
    for (size_t i = 1; i < ch.size(); ++i) s.terms.push_back(f2_unimodular(ch[i - 1], ch[i]));
    return s;
}

SymbolSum f2(const CircFn& f)
{
    SymbolSum s;
    if (f.is_constant()) {
        s.minus_one_coef = f.constant_value();
        return s;
    }
    const auto& b = f.breaks();
    const auto& v = f.values();
    size_t n = b.size();
    for (size_t i = 0; i < n; ++i) {
        if (v[i] == 0) continue;
        SymbolSum part = f2_arc(b[i], b[(i + 1) % n]);
        for (auto t : part.terms) {
            t.coef *= v[i];
            s.terms.push_back(t);
        }
    }
    return s;
}

Vec2 gamma_ell0(const Mat2Z& g)
{
    Int D = g.det();
    if (D != 1 && D != -1) throw Error(Err::NotUnimodular, g.str());
    return {-D * g.d, D * g.b};
}

CircFn theta_tilde(const Mat2Z& g)
{
    return arc(ell0(), gamma_ell0(g));
}

std::string ch0_str(const Ch0Elt& e)
{
    if (e.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [r, k] : e) {
        os << (first ? "" : " + ") << k << "*1_" << r.str();
        first = false;
    }
    return os.str();
}

} // namespace eiscoc
