#include "eiscoc/torsion.hpp"

#include <sstream>

namespace eiscoc {

namespace {

void require_prime(Int n)
{
    if (!is_prime(n)) throw Error(Err::NotPrime, std::to_string(n));
}

Int md(Int a, Int n) { return mod_ll(a, n); }

// x g on a row vector mod n
std::pair<Int, Int> row_times(Int x, Int y, const Mat2Z& g, Int n)
{
    return {md(md(x * g.a, n) + md(y * g.c, n), n), md(md(x * g.b, n) + md(y * g.d, n), n)};
}

// M g with M given by (P.x, P.y, Q.x, Q.y); rows of M are (P.x, Q.x), (P.y, Q.y)
std::vector<Int> mat_times(const std::vector<Int>& m, const Mat2Z& g, Int n)
{
    auto [r0a, r0b] = row_times(m[0], m[2], g, n);
    auto [r1a, r1b] = row_times(m[1], m[3], g, n);
    return {r0a, r1a, r0b, r1b};
}

std::vector<Int> apply(const std::vector<Int>& x, const Mat2Z& g, Int n)
{
    if (x.size() == 2) {
        auto [u, v] = row_times(x[0], x[1], g, n);
        return {u, v};
    }
    return mat_times(x, g, n);
}

} // namespace

CycleMap::CycleMap(Int n, int k) : n_(n), k_(k)
{
    if (n < 1) throw Error(Err::TorsionIndexZero, "n must be positive");
    if (k != 2 && k != 4) throw Error(Err::DimensionMismatch, "k must be 2 or 4");
    std::size_t s = 1;
    for (int i = 0; i < k; ++i) s *= (std::size_t)n;
    v_.assign(s, 0);
}

CycleMap CycleMap::point(Int n, int k)
{
    CycleMap f(n, k);
    f.v_[0] = 1;
    return f;
}

CycleMap CycleMap::all(Int n, int k)
{
    CycleMap f(n, k);
    for (auto& x : f.v_) x = 1;
    return f;
}

std::size_t CycleMap::index(const std::vector<Int>& x) const
{
    if ((int)x.size() != k_) throw Error(Err::DimensionMismatch, "point has wrong length");
    std::size_t i = 0;
    for (Int c : x) i = i * (std::size_t)n_ + (std::size_t)md(c, n_);
    return i;
}

std::vector<Int> CycleMap::coords(std::size_t i) const
{
    std::vector<Int> x(k_);
    for (int j = k_ - 1; j >= 0; --j) {
        x[j] = (Int)(i % (std::size_t)n_);
        i /= (std::size_t)n_;
    }
    return x;
}

Int CycleMap::at(const std::vector<Int>& x) const { return v_[index(x)]; }
Int& CycleMap::at(const std::vector<Int>& x) { return v_[index(x)]; }

Int CycleMap::degree() const
{
    Int s = 0;
    for (Int x : v_) s += x;
    return s;
}

void CycleMap::check_same(const CycleMap& o) const
{
    if (n_ != o.n_ || k_ != o.k_) throw Error(Err::DimensionMismatch, "cycle maps on different groups");
}

CycleMap CycleMap::operator+(const CycleMap& o) const
{
    check_same(o);
    CycleMap r = *this;
    for (std::size_t i = 0; i < v_.size(); ++i) r.v_[i] += o.v_[i];
    return r;
}

CycleMap CycleMap::operator-(const CycleMap& o) const
{
    check_same(o);
    CycleMap r = *this;
    for (std::size_t i = 0; i < v_.size(); ++i) r.v_[i] -= o.v_[i];
    return r;
}

CycleMap CycleMap::scaled(Int c) const
{
    CycleMap r = *this;
    for (auto& x : r.v_) x *= c;
    return r;
}

std::string CycleMap::str() const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < v_.size(); ++i) {
        if (v_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << v_[i] << "*(";
        auto x = coords(i);
        for (int j = 0; j < k_; ++j) os << (j ? "," : "") << x[j];
        os << ")";
    }
    return first ? "0" : os.str();
}

CycleMap box(const CycleMap& f, const CycleMap& g)
{
    if (f.k() != 2 || g.k() != 2 || f.n() != g.n())
        throw Error(Err::DimensionMismatch, "box needs two maps on the same (Z/n)^2");
    Int n = f.n();
    CycleMap r(n, 4);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f.at_index(i) == 0) continue;
        auto p = f.coords(i);
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (g.at_index(j) == 0) continue;
            auto q = g.coords(j);
            r.at({p[0], p[1], q[0], q[1]}) += f.at_index(i) * g.at_index(j);
        }
    }
    return r;
}

std::vector<Mat2Z> torsion_hecke_reps(Int n)
{
    std::vector<Mat2Z> out;
    for (Int j = 0; j < n; ++j) out.push_back({n, j, 0, 1});
    out.push_back({1, 0, 0, n});
    return out;
}

CycleMap kernel_cycle(const Mat2Z& g, int k)
{
    Int det = g.det();
    if (det == 0) throw Error(Err::SingularMatrix, g.str());
    Int n = det < 0 ? -det : det;
    CycleMap r(n, k);
    for (std::size_t i = 0; i < r.size(); ++i) {
        auto y = apply(r.coords(i), g, n);
        bool zero = true;
        for (Int c : y) zero = zero && c == 0;
        if (zero) r.at_index(i) = 1;
    }
    return r;
}

std::vector<CycleMap> cyclic_subgroups(Int n)
{
    require_prime(n);
    std::vector<std::pair<Int, Int>> gens;
    for (Int j = 0; j < n; ++j) gens.push_back({1, j});
    gens.push_back({0, 1});
    std::vector<CycleMap> out;
    for (auto [x, y] : gens) {
        CycleMap K(n, 2);
        for (Int t = 0; t < n; ++t) K.at({t * x, t * y}) = 1;
        out.push_back(K);
    }
    return out;
}

CycleMap hecke_op(const CycleMap& f)
{
    Int n = f.n();
    CycleMap r(n, f.k());
    auto reps = torsion_hecke_reps(n);
    for (std::size_t i = 0; i < r.size(); ++i) {
        auto x = r.coords(i);
        Int s = 0;
        for (const auto& g : reps) s += f.at(apply(x, g, n));
        r.at_index(i) = s;
    }
    return r;
}

CycleMap mult_pullback(const CycleMap& f)
{
    CycleMap r(f.n(), f.k());
    Int v = f.at_index(0);
    for (std::size_t i = 0; i < r.size(); ++i) r.at_index(i) = v;
    return r;
}

CycleMap v_op(const CycleMap& f)
{
    Int n = f.n();
    return f.scaled(n * n * n * n) - hecke_op(f).scaled(n * n) + mult_pullback(f).scaled(n);
}

CycleMap e_n_build(Int n)
{
    require_prime(n);
    CycleMap T(n, 4);
    for (const auto& K : cyclic_subgroups(n)) T = T + box(K, K);
    CycleMap zero = CycleMap::point(n, 4), full = CycleMap::all(n, 4);
    return (zero.scaled(n * n * n) - T.scaled(n) + full).scaled(n);
}

namespace {

int rank_mod(const std::vector<Int>& m, Int n)
{
    bool zero = true;
    for (Int c : m) zero = zero && c == 0;
    if (zero) return 0;
    return md(m[0] * m[3] - m[1] * m[2], n) == 0 ? 1 : 2;
}

} // namespace

std::vector<Int> e_n_rank_values(Int n)
{
    return {n * n * n * n - n * n * n - n * n + n, n - n * n, n};
}

CycleMap phi_n_table(Int n)
{
    require_prime(n);
    auto vals = e_n_rank_values(n);
    CycleMap r(n, 4);
    for (std::size_t i = 0; i < r.size(); ++i) r.at_index(i) = vals[rank_mod(r.coords(i), n)];
    return r;
}

bool hecke_identity_check(Int ell)
{
    require_prime(ell);
    CycleMap sum(ell, 2);
    for (const auto& g : torsion_hecke_reps(ell)) {
        CycleMap K = kernel_cycle(g, 2);
        if (K.degree() != ell) return false;
        sum = sum + K;
    }
    return sum == CycleMap::point(ell, 2).scaled(ell) + CycleMap::all(ell, 2);
}

bool rows_vs_cols_check(Int ell)
{
    require_prime(ell);
    CycleMap lhs(ell, 4);
    for (const auto& K : cyclic_subgroups(ell)) lhs = lhs + box(K, K);

    // sum over (a:b) in P^1(F_ell) of [aP + bQ = 0]
    std::vector<std::pair<Int, Int>> line;
    for (Int j = 0; j < ell; ++j) line.push_back({1, j});
    line.push_back({0, 1});
    CycleMap rhs(ell, 4);
    for (std::size_t i = 0; i < rhs.size(); ++i) {
        auto m = rhs.coords(i);
        Int s = 0;
        for (auto [a, b] : line)
            if (md(a * m[0] + b * m[2], ell) == 0 && md(a * m[1] + b * m[3], ell) == 0) ++s;
        rhs.at_index(i) = s;
    }
    if (!(lhs == rhs)) return false;
    if (rhs.at_index(0) != ell + 1) return false;

    CycleMap kernels(ell, 4);
    for (const auto& g : torsion_hecke_reps(ell)) kernels = kernels + kernel_cycle(g, 4);
    return kernels == rhs;
}

bool e_n_matches_table(Int n) { return e_n_build(n) == phi_n_table(n); }

bool e_n_degree_zero(Int n) { return e_n_build(n).degree() == 0; }

bool pushforward_zero_check(Int n)
{
    CycleMap e = e_n_build(n);
    for (Int vx = 0; vx < n; ++vx) {
        for (Int vy = 0; vy < n; ++vy) {
            if (vx == 0 && vy == 0) continue;
            CycleMap push(n, 2);
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e.at_index(i) == 0) continue;
                auto m = e.coords(i);
                push.at({vx * m[0] + vy * m[2], vx * m[1] + vy * m[3]}) += e.at_index(i);
            }
            if (!(push == CycleMap(n, 2))) return false;
        }
    }
    return true;
}

bool norm_identity_check(Int n)
{
    require_prime(n);
    CycleMap zero2 = CycleMap::point(n, 2), all2 = CycleMap::all(n, 2);
    CycleMap all4 = CycleMap::all(n, 4);
    CycleMap delta = zero2.scaled(n * n) - all2;
    auto subgroups = cyclic_subgroups(n);

    CycleMap sum_kk(n, 4), sum_k_all(n, 4), sum_dd(n, 4);
    for (const auto& K : subgroups) {
        CycleMap dp = K.scaled(n) - all2;
        sum_kk = sum_kk + box(K, K);
        sum_k_all = sum_k_all + box(K, all2);
        sum_dd = sum_dd + box(dp, dp);
    }
    CycleMap zero_all = box(zero2, all2), all_zero = box(all2, zero2);

    if (!(sum_k_all == all4 + zero_all.scaled(n))) return false;
    if (!(sum_dd == sum_kk.scaled(n * n) - (zero_all + all_zero).scaled(n * n) + all4.scaled(1 - n)))
        return false;
    if (!(box(delta, delta) ==
          CycleMap::point(n, 4).scaled(n * n * n * n) - (zero_all + all_zero).scaled(n * n) + all4))
        return false;
    return box(delta, delta) - sum_dd == e_n_build(n);
}

bool v_n_zero_check(Int n)
{
    require_prime(n);
    return v_op(CycleMap::point(n, 4)) == e_n_build(n);
}

bool torsion_degree_check(Int n)
{
    require_prime(n);
    CycleMap p = CycleMap::point(n, 2);
    return hecke_op(p).degree() == n * (n + 1) && mult_pullback(p).degree() == n * n;
}

} // namespace eiscoc
