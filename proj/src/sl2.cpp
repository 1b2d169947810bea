#include "eiscoc/sl2.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace eiscoc {

namespace {

Int narrow(__int128 v)
{
    if (v > (__int128)INT64_MAX || v < (__int128)INT64_MIN) throw Error(Err::Overflow, "64-bit range exceeded");
    return (Int)v;
}

Int floor_div128(__int128 a, __int128 b)
{
    __int128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return narrow(q);
}

} // namespace

Int checked_mul(Int a, Int b)
{
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(Err::Overflow, "product exceeds 64 bits");
    return r;
}

Int checked_add(Int a, Int b)
{
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(Err::Overflow, "sum exceeds 64 bits");
    return r;
}

std::string Vec2::str() const
{
    return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

__int128 wedge128(const Vec2& v, const Vec2& w)
{
    return (__int128)v.x * w.y - (__int128)v.y * w.x;
}

Int wedge(const Vec2& v, const Vec2& w)
{
    return narrow(wedge128(v, w));
}

Vec2 primitive_part(const Vec2& v)
{
    Int g = gcd_ll(v.x, v.y);
    if (g == 0) return v;
    return {v.x / g, v.y / g};
}

Int Mat2Z::det() const
{
    return narrow((__int128)a * d - (__int128)b * c);
}

Mat2Z Mat2Z::operator*(const Mat2Z& o) const
{
    return {narrow((__int128)a * o.a + (__int128)b * o.c), narrow((__int128)a * o.b + (__int128)b * o.d),
            narrow((__int128)c * o.a + (__int128)d * o.c), narrow((__int128)c * o.b + (__int128)d * o.d)};
}

bool Mat2Z::operator<(const Mat2Z& o) const
{
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    if (c != o.c) return c < o.c;
    return d < o.d;
}

Mat2Z Mat2Z::inverse() const
{
    Int D = det();
    if (D != 1 && D != -1) throw Error(Err::NotUnimodular, "inverse needs det +-1");
    return {D * d, -D * b, -D * c, D * a};
}

Vec2 Mat2Z::left_apply(const Vec2& v) const
{
    return {narrow((__int128)v.x * a + (__int128)v.y * c), narrow((__int128)v.x * b + (__int128)v.y * d)};
}

std::string Mat2Z::str() const
{
    std::ostringstream os;
    os << "[[" << a << "," << b << "],[" << c << "," << d << "]]";
    return os.str();
}

Mat2Z parse_mat(const std::string& s)
{
    std::istringstream is(s);
    Mat2Z m;
    if (!(is >> m.a >> m.b >> m.c >> m.d)) throw Error(Err::DimensionMismatch, "expected four integers: " + s);
    std::string rest;
    if (is >> rest) throw Error(Err::DimensionMismatch, "trailing input: " + s);
    return m;
}

bool in_gamma0(const Mat2Z& g, Int N)
{
    Int D = g.det();
    return (D == 1 || D == -1) && mod_ll(g.c, N) == 0;
}

bool in_gamma1(const Mat2Z& g, Int N)
{
    return in_gamma0(g, N) && mod_ll(g.d, N) == 1 % N;
}

// ---------------------------------------------------------------- sequences

namespace {

Vec2 endpoint(const Mat2Z& g)
{
    Int D = g.det();
    if (D != 1 && D != -1) throw Error(Err::NotUnimodular, g.str());
    return {D * g.b, D * g.d};
}

std::vector<Int> partial_quotients(Int x, Int y)
{
    // y > 0
    std::vector<Int> q;
    Int a0 = floor_div128(x, y);
    q.push_back(a0);
    Int r = x - a0 * y, s = y;
    while (r != 0) {
        Int t = s / r;
        q.push_back(t);
        Int nr = s - t * r;
        s = r;
        r = nr;
    }
    return q;
}

// raw list with |consecutive wedge| = 1 from (0,1) to +-t
std::vector<Vec2> convergent_list(const std::vector<Int>& q)
{
    std::vector<Vec2> raw{{0, 1}, {1, 0}};
    Int p2 = 0, q2 = 1, p1 = 1, q1 = 0;
    for (Int a : q) {
        Int p = checked_add(checked_mul(a, p1), p2);
        Int qq = checked_add(checked_mul(a, q1), q2);
        raw.push_back({p, qq});
        p2 = p1;
        q2 = q1;
        p1 = p;
        q1 = qq;
    }
    if (q[0] == 0) raw.erase(raw.begin() + 1, raw.begin() + 3);
    return raw;
}

ConnectingSeq orient(const std::vector<Vec2>& raw, const Vec2& t)
{
    ConnectingSeq s{raw[0]};
    for (size_t i = 1; i < raw.size(); ++i) {
        Int w = wedge(s.back(), raw[i]);
        if (w == 1) s.push_back(raw[i]);
        else if (w == -1) s.push_back(-raw[i]);
        else throw Error(Err::Internal, "convergents not adjacent");
    }
    if (s.back() == t) return s;
    if (s.back() != -t) throw Error(Err::Internal, "convergents miss the target");
    if (s.size() == 1) return {{0, 1}, {-1, 0}, {0, -1}};
    Vec2 P = s[s.size() - 2];
    s.push_back(-P);
    s.push_back(t);
    return s;
}

} // namespace

bool is_connecting_sequence(const ConnectingSeq& s, const Mat2Z& g)
{
    if (s.empty() || s.front() != Vec2{0, 1}) return false;
    if (s.back() != endpoint(g)) return false;
    for (size_t i = 1; i < s.size(); ++i)
        if (wedge128(s[i - 1], s[i]) != 1) return false;
    return true;
}

bool avoids_level(const ConnectingSeq& s, Int N)
{
    for (size_t i = 0; i + 1 < s.size(); ++i)
        if (mod_ll(s[i].y, N) == 0) return false;
    return true;
}

ConnectingSeq connecting_sequence(const Mat2Z& g)
{
    Vec2 t = endpoint(g);
    if (t == Vec2{0, 1}) return {t};
    Vec2 n = t.y < 0 ? -t : t;
    std::vector<std::vector<Vec2>> raws;
    if (n.y == 0) {
        raws.push_back({{0, 1}, {1, 0}});
    } else {
        std::vector<Int> q = partial_quotients(n.x, n.y);
        raws.push_back(convergent_list(q));
        std::vector<Int> alt = q;
        alt.back() -= 1;
        alt.push_back(1);
        raws.push_back(convergent_list(alt));
    }
    ConnectingSeq best;
    for (const auto& raw : raws) {
        ConnectingSeq s = orient(raw, t);
        if (best.empty() || s.size() < best.size()) best = s;
    }
    return best;
}

Vec2 unimodular_partner(const Vec2& v)
{
    Int s, t;
    if (ext_gcd(v.x, v.y, s, t) != 1) throw Error(Err::BadWedge, "vector not primitive: " + v.str());
    Vec2 w{-t, s}; // v.x*s + v.y*t = 1
    __int128 num = -((__int128)w.x * v.x + (__int128)w.y * v.y);
    __int128 den = (__int128)v.x * v.x + (__int128)v.y * v.y;
    Int k = floor_div128(2 * num + den, 2 * den);
    return {narrow(w.x + (__int128)k * v.x), narrow(w.y + (__int128)k * v.y)};
}

std::vector<Vec2> unimodular_chain(const Vec2& from, const Vec2& to)
{
    if (!from.primitive() || !to.primitive()) throw Error(Err::BadWedge, "chain endpoints must be primitive");
    if (from == to) throw Error(Err::EmptyArc, "chain from a ray to itself");
    Vec2 a = from, ap = unimodular_partner(from);
    Vec2 axes[5] = {a, ap, -a, -ap, a};
    __int128 al = wedge128(to, ap), be = wedge128(a, to);
    __int128 loc[4][2] = {{al, be}, {be, -al}, {-al, -be}, {-be, al}};
    std::vector<Vec2> out;
    for (int i = 0; i < 4; ++i) {
        out.push_back(axes[i]);
        __int128 s = loc[i][0], t = loc[i][1];
        if (!(s > 0 && t >= 0)) continue;
        if (t == 0) return out; // to == axes[i], never for i = 0
        const Vec2 E = axes[i], F = axes[i + 1];
        auto global = [&](__int128 u, __int128 v) {
            return Vec2{narrow(u * E.x + v * F.x), narrow(u * E.y + v * F.y)};
        };
        __int128 Lx = 1, Ly = 0, Rx = 0, Ry = 1;
        while (true) {
            __int128 Mx = Lx + Rx, My = Ly + Ry;
            __int128 c = Mx * t - My * s;
            if (c == 0) break;
            if (c > 0) {
                __int128 lt = Lx * t - Ly * s, rt = Rx * t - Ry * s;
                __int128 k = (lt - 1) / (-rt);
                for (__int128 j = 1; j <= k; ++j) out.push_back(global(Lx + j * Rx, Ly + j * Ry));
                Lx += k * Rx;
                Ly += k * Ry;
            } else {
                __int128 tr = s * Ry - t * Rx, tl = s * Ly - t * Lx;
                __int128 k = (tr - 1) / (-tl);
                Rx += k * Lx;
                Ry += k * Ly;
            }
        }
        out.push_back(to);
        return out;
    }
    throw Error(Err::Internal, "target outside all quadrants");
}

ConnectingSeq monotone_connecting_sequence(const Mat2Z& g)
{
    Vec2 t = endpoint(g);
    if (t == Vec2{0, 1}) return {t};
    return unimodular_chain({0, 1}, t);
}

ConnectingSeq fiddle_sequence(ConnectingSeq s, Int N)
{
    if (N < 2) throw Error(Err::NotInGamma0, "level must be at least 2");
    ConnectingSeq out{s[0]};
    size_t k = s.size() - 1;
    for (size_t i = 1; i <= k; ++i) {
        const Vec2& B = s[i];
        if (i == k || mod_ll(B.y, N) != 0) {
            out.push_back(B);
            continue;
        }
        Vec2 P = out.back(), A = s[i + 1];
        Int t = wedge(P, A);
        if (t <= 0) {
            for (Int m = 1 - t; m >= 1; --m) out.push_back(A + B * m);
        } else if (t >= 2) {
            auto x = [&](Int j) { return A + B * (1 - t + j); };
            out.push_back(x(0));
            for (Int j = 0; j + 1 <= t - 1; ++j) {
                out.push_back(-x(j + 1));
                out.push_back(-x(j));
                if (j + 1 < t - 1) out.push_back(x(j + 1));
            }
        }
        // t == 1: B is dropped
    }
    return out;
}

ConnectingSeq n_connecting_sequence(const Mat2Z& g, Int N)
{
    if (N < 2 || !in_gamma0(g, N)) throw Error(Err::NotInGamma0, g.str() + " at level " + std::to_string(N));
    return fiddle_sequence(connecting_sequence(g), N);
}

// ---------------------------------------------------------------- Hecke

std::vector<Mat2Z> hecke_reps(Int ell)
{
    if (!is_prime(ell)) throw Error(Err::NotPrime, std::to_string(ell));
    std::vector<Mat2Z> r;
    for (Int j = 0; j < ell; ++j) r.push_back({ell, j, 0, 1});
    r.push_back({1, 0, 0, ell});
    return r;
}

Mat2Z sl2_lift_mod(Int N, const Mat2Z& m)
{
    if (N < 1) throw Error(Err::BadDeterminant, "modulus must be positive");
    Int a = mod_ll(m.a, N), b = mod_ll(m.b, N), c = mod_ll(m.c, N), d = mod_ll(m.d, N);
    if (mod_ll((Int)(((__int128)a * d - (__int128)b * c) % N), N) != 1 % N)
        throw Error(Err::BadDeterminant, "determinant is not 1 mod N");
    if (N == 1) return Mat2Z::identity();
    Int cp = c;
    if (cp == 0 && d != 1 && d != N - 1) cp = N;
    Int dp = d;
    if (cp == 0) dp = (d == 1) ? 1 : -1;
    else
        while (gcd_ll(cp, dp) != 1) dp += N;
    Int x, y;
    ext_gcd(dp, -cp, x, y); // x*dp - y*cp = 1, so (x y; cp dp) has det 1
    Int ap = x, bp = y;
    if (cp == 0) {
        ap = dp;
        bp = 0;
    }
    __int128 k = mod_ll((Int)((-(__int128)bp * (a - ap) + (__int128)ap * (b - bp)) % N), N);
    Mat2Z r{narrow(ap + k * cp), narrow(bp + k * dp), cp, dp};
    if (r.det() != 1) throw Error(Err::Internal, "lift failed");
    return r;
}

std::vector<Mat2Z> hecke_reps_gamma1(Int ell, Int N)
{
    if (!is_prime(ell)) throw Error(Err::NotPrime, std::to_string(ell));
    if (gcd_ll(ell, N) != 1) throw Error(Err::NotCoprime, "ell divides N");
    std::vector<Mat2Z> r;
    for (Int j = 0; j < ell; ++j) r.push_back({ell, j, 0, 1});
    // delta = diag(ell, 1/ell) mod N and = I mod ell, so delta*(1 0;0 ell) keeps its lattice
    Int M = N * ell;
    auto crt = [&](Int rN, Int rl) {
        for (Int v = 0; v < M; ++v)
            if (mod_ll(v, N) == mod_ll(rN, N) && mod_ll(v, ell) == mod_ll(rl, ell)) return v;
        throw Error(Err::Internal, "crt");
    };
    Mat2Z res{crt(ell, 1), 0, 0, crt(inv_mod(ell, N), 1)};
    Mat2Z delta = sl2_lift_mod(M, res);
    r.push_back(delta * Mat2Z{1, 0, 0, ell});
    return r;
}

CosetDecomposition coset_decompose(const Mat2Z& g, const std::vector<Mat2Z>& reps, Int N)
{
    Int D = g.det();
    if (D != 1 && D != -1) throw Error(Err::NotUnimodular, g.str());
    CosetDecomposition out;
    std::set<int> used;
    for (size_t j = 0; j < reps.size(); ++j) {
        Mat2Z gj = g * reps[j];
        int found = -1;
        Mat2Z hit;
        for (size_t i = 0; i < reps.size() && found < 0; ++i) {
            Int di = reps[i].det();
            Mat2Z m = reps[i].adj() * gj;
            if (m.a % di || m.b % di || m.c % di || m.d % di) continue;
            Mat2Z q{m.a / di, m.b / di, m.c / di, m.d / di};
            if (N > 0 && !in_gamma1(q, N)) continue;
            found = (int)i;
            hit = q;
        }
        if (found < 0 || !used.insert(found).second)
            throw Error(Err::NotACosetSystem, "no matching coset for index " + std::to_string(j));
        out.sigma.push_back(found);
        out.gammas.push_back(hit);
    }
    return out;
}

} // namespace eiscoc
