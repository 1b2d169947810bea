#include "eiscoc/gm.hpp"

#include <mutex>
#include <sstream>

namespace eiscoc {

namespace {

Vec2 col_apply(const Mat2Z& g, const Vec2& v)
{
    return {checked_add(checked_mul(g.a, v.x), checked_mul(g.b, v.y)),
            checked_add(checked_mul(g.c, v.x), checked_mul(g.d, v.y))};
}

void div_add(DivSymbolSum& d, const Vec2& v, Int k)
{
    if (k == 0) return;
    Int& x = d[v];
    x += k;
    if (x == 0) d.erase(v);
}

} // namespace

DivSymbolSum boundary2(const SymbolSum2& s)
{
    DivSymbolSum out;
    for (const auto& t : s.terms) {
        __int128 det = wedge128(t.v, t.w);
        if (det == 1) {
            div_add(out, t.v, t.coef);
            div_add(out, -t.w, -t.coef);
        } else if (det == -1) {
            div_add(out, -t.v, t.coef);
            div_add(out, t.w, -t.coef);
        } else {
            throw Error(Err::BadWedge, "symbol with determinant other than +-1");
        }
    }
    return out;
}

Int boundary1(const DivSymbolSum& d)
{
    Int s = 0;
    for (const auto& kv : d) s += kv.second;
    return s;
}

DivSymbolSum pullback_01(const Mat2Z& g)
{
    Int D = g.det();
    if (D != 1 && D != -1) throw Error(Err::NotUnimodular, g.str());
    return {{Vec2{D * g.b, D * g.d}, 1}};
}

DivSymbolSum div_sub(const DivSymbolSum& a, const DivSymbolSum& b)
{
    DivSymbolSum out = a;
    for (const auto& [v, k] : b) div_add(out, v, -k);
    return out;
}

SymbolSum2 pullback(const Mat2Z& g, const SymbolSum2& s)
{
    Int D = g.det();
    if (D != 1 && D != -1) throw Error(Err::NotUnimodular, g.str());
    SymbolSum2 out;
    for (const auto& t : s.terms) out.terms.push_back({t.coef, col_apply(g, t.v), col_apply(g, t.w)});
    out.minus_one_coef = D * s.minus_one_coef;
    return out;
}

CircFn canonical(const SymbolSum2& s)
{
    return symbol_sum_to_circ(s);
}

SymbolSum2 theta_from_sequence(const ConnectingSeq& seq)
{
    SymbolSum2 s;
    for (size_t i = 1; i < seq.size(); ++i) s.terms.push_back({1, seq[i], -seq[i - 1]});
    return s;
}

SymbolSum2 theta_gamma(const Mat2Z& g, SeqKind k)
{
    return theta_from_sequence(k == SeqKind::Monotone ? monotone_connecting_sequence(g) : connecting_sequence(g));
}

Int theta_cocycle_defect(const Mat2Z& g, const Mat2Z& gp)
{
    CircFn d = canonical(theta_gamma(g * gp)) - canonical(pullback(g, theta_gamma(gp))) - canonical(theta_gamma(g));
    if (!d.is_constant()) throw Error(Err::Internal, "cocycle defect is not constant: " + d.str());
    return d.constant_value();
}

// ---------------------------------------------------------------- cyclotomic symbols

CycSymbolVec::CycSymbolVec(Int N) : N_(N)
{
    if (N < 2) throw Error(Err::ZeroIndex, "level must be at least 2");
}

void CycSymbolVec::add(Int a, Int b, Int coef)
{
    a = mod_ll(a, N_);
    b = mod_ll(b, N_);
    if (a == 0 || b == 0) throw Error(Err::ZeroIndex, "index divisible by N");
    if (coef == 0) return;
    Int& x = e_[{a, b}];
    x = checked_add(x, coef);
    if (x == 0) e_.erase({a, b});
}

CycSymbolVec CycSymbolVec::operator+(const CycSymbolVec& o) const
{
    if (N_ != o.N_) throw Error(Err::DimensionMismatch, "levels differ");
    CycSymbolVec r = *this;
    for (const auto& [k, c] : o.e_) r.add(k.first, k.second, c);
    return r;
}

CycSymbolVec CycSymbolVec::operator-(const CycSymbolVec& o) const
{
    return *this + o.scaled(-1);
}

CycSymbolVec CycSymbolVec::scaled(Int k) const
{
    CycSymbolVec r(N_);
    for (const auto& [key, c] : e_) r.add(key.first, key.second, checked_mul(c, k));
    return r;
}

CycSymbolVec CycSymbolVec::sigma(Int j) const
{
    if (gcd_ll(j, N_) != 1) throw Error(Err::NonUnitIndex, "sigma needs a unit");
    CycSymbolVec r(N_);
    for (const auto& [key, c] : e_) r.add(checked_mul(key.first, j), checked_mul(key.second, j), c);
    return r;
}

IntVec CycSymbolVec::dense() const
{
    IntVec v((size_t)((N_ - 1) * (N_ - 1)), BigInt(0));
    for (const auto& [key, c] : e_) v[(key.first - 1) * (N_ - 1) + (key.second - 1)] = (long)c;
    return v;
}

std::string CycSymbolVec::str() const
{
    if (e_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : e_) {
        os << (first ? "" : " + ") << c << "{" << key.first << "," << key.second << "}";
        first = false;
    }
    return os.str();
}

CycSymbolVec specialize_theta_N(const Mat2Z& g, Int N)
{
    ConnectingSeq s = n_connecting_sequence(g, N);
    CycSymbolVec v(N);
    for (size_t i = 1; i < s.size(); ++i) v.add(s[i].y, -s[i - 1].y, 1);
    return v;
}

// ---------------------------------------------------------------- relation lattice

IntMat relation_lattice(Int N)
{
    if (N < 3) throw Error(Err::ZeroIndex, "relation lattice needs N >= 3");
    int n = (int)(N - 1);
    auto idx = [&](Int a, Int b) { return (int)((mod_ll(a, N) - 1) * n + (mod_ll(b, N) - 1)); };
    std::vector<std::map<int, long>> cols;
    auto push = [&](std::map<int, long> c) {
        std::erase_if(c, [](const auto& kv) { return kv.second == 0; });
        if (!c.empty()) cols.push_back(std::move(c));
    };
    for (Int a = 1; a < N; ++a)
        for (Int b = 1; b < N; ++b) {
            std::map<int, long> c1, c2, c3;
            c1[idx(a, b)] += 1;
            c1[idx(-a, b)] -= 1;
            push(c1);
            c2[idx(a, b)] += 1;
            c2[idx(a, -b)] -= 1;
            push(c2);
            if (mod_ll(a + b, N) != 0) {
                std::map<int, long> r2;
                r2[idx(a, -(a + b))] += 1;
                r2[idx(a + b, -b)] += 1;
                r2[idx(a, -b)] -= 1;
                push(r2);
            }
            if (a <= b) {
                c3[idx(a, b)] += 1;
                c3[idx(b, a)] += 1;
                push(c3);
            }
        }
    IntMat M(n * n, (int)cols.size());
    for (size_t j = 0; j < cols.size(); ++j)
        for (const auto& [i, v] : cols[j]) M(i, (int)j) = v;
    return M;
}

namespace {

std::mutex g_lat_mu;
std::map<Int, std::shared_ptr<const ColumnLattice>> g_lat;

} // namespace

void relation_lattice_seed(Int N, ColumnLattice L)
{
    std::lock_guard<std::mutex> lk(g_lat_mu);
    g_lat[N] = std::make_shared<const ColumnLattice>(std::move(L));
}

const ColumnLattice& relation_lattice_cached(Int N)
{
    {
        std::lock_guard<std::mutex> lk(g_lat_mu);
        auto it = g_lat.find(N);
        if (it != g_lat.end()) return *it->second;
    }
    auto L = std::make_shared<const ColumnLattice>(relation_lattice(N));
    std::lock_guard<std::mutex> lk(g_lat_mu);
    auto [it, inserted] = g_lat.emplace(N, L);
    return *it->second;
}

std::string lattice_serialize(const ColumnLattice& L)
{
    std::ostringstream os;
    const IntMat& H = L.echelon();
    int r = L.rank();
    os << L.dim() << " " << r << " " << H.cols() << "\n";
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < H.cols(); ++j) os << (j ? " " : "") << H(i, j).get_str();
        os << "\n";
    }
    return os.str();
}

ColumnLattice lattice_deserialize(const std::string& s)
{
    std::istringstream is(s);
    int dim, r, c;
    if (!(is >> dim >> r >> c) || r < 0 || c < 0) throw Error(Err::DimensionMismatch, "bad lattice header");
    IntMat H(r, c);
    std::string tok;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) {
            if (!(is >> tok)) throw Error(Err::DimensionMismatch, "truncated lattice data");
            H(i, j) = BigInt(tok);
        }
    return ColumnLattice::from_echelon(dim, std::move(H));
}

CycSymbolVec pi_manin(Int u, Int v, Int N)
{
    CycSymbolVec r(N);
    r.add(u, v, 1);
    return r;
}

std::vector<ManinImage> manin_relation_images(Int N)
{
    const ColumnLattice& L = relation_lattice_cached(N);
    std::vector<ManinImage> out;
    for (Int u = 1; u < N; ++u)
        for (Int v = 1; v < N; ++v) {
            if (gcd_ll(gcd_ll(u, v), N) != 1) continue;
            {
                CycSymbolVec x = pi_manin(u, v, N) + pi_manin(-v, u, N);
                std::ostringstream lab;
                lab << "[" << u << ":" << v << "]+[" << mod_ll(-v, N) << ":" << u << "]";
                out.push_back({lab.str(), x, L.membership_2adic(x.dense())});
            }
            if (mod_ll(u + v, N) != 0) {
                CycSymbolVec x = pi_manin(u, v, N) - pi_manin(u, u + v, N) - pi_manin(u + v, v, N);
                std::ostringstream lab;
                lab << "[" << u << ":" << v << "]-[" << u << ":" << mod_ll(u + v, N) << "]-[" << mod_ll(u + v, N)
                    << ":" << v << "]";
                out.push_back({lab.str(), x, L.membership_2adic(x.dense())});
            }
        }
    return out;
}

// ---------------------------------------------------------------- Hecke and tame symbols

std::vector<Mat2Z> hecke_homology(const Mat2Z& g, Int ell, Int N)
{
    if (gcd_ll(ell, N) != 1) throw Error(Err::NotCoprime, "ell divides N");
    if (!in_gamma1(g, N)) throw Error(Err::NotInGamma1, g.str());
    return coset_decompose(g, hecke_reps_gamma1(ell, N), N).gammas;
}

CycSymbolVec eisenstein_defect(const Mat2Z& g, Int ell, Int N)
{
    std::vector<Mat2Z> gj = hecke_homology(g, ell, N);
    CycSymbolVec th = specialize_theta_N(g, N);
    CycSymbolVec sum(N);
    for (const Mat2Z& m : gj) sum = sum + specialize_theta_N(m, N);
    return sum - th.scaled(ell) - th.sigma(ell);
}

Int unit_valuation(Int a, Int N, Int ell)
{
    Int ord = N / gcd_ll(mod_ll(a, N), N);
    if (ord == 1) throw Error(Err::ZeroIndex, "1 - zeta^0 is zero");
    Int r = 0, o = ord;
    while (o % ell == 0) {
        o /= ell;
        ++r;
    }
    if (o != 1) return 0;
    Int Nk = 1;
    Int m = N;
    while (m % ell == 0) {
        m /= ell;
        Nk *= ell;
    }
    return euler_phi(Nk) / euler_phi(ord);
}

ResidueField::Elt tame_symbol_cyclo(const CycSymbolVec& v, Int ell)
{
    Int N = v.N();
    if (N % ell != 0 || !is_prime(ell)) throw Error(Err::UnsupportedLevelShape, "ell must be a prime dividing N");
    ResidueField RF((int)N, ell);
    FieldPtr F = cyc_field((int)N);
    BigInt q1 = RF.size() - 1;
    ResidueField::Elt acc = RF.one();
    for (const auto& [key, c] : v.entries()) {
        auto [a, b] = key;
        Int vf = unit_valuation(a, N, ell), vg = unit_valuation(b, N, ell);
        if (vf == 0 && vg == 0) continue;
        ResidueField::Elt val;
        if (vg == 0) {
            val = RF.pow(RF.reduce(cyc_unit(F, b)), BigInt((long)vf));
        } else if (vf == 0) {
            val = RF.inv(RF.pow(RF.reduce(cyc_unit(F, a)), BigInt((long)vg)));
        } else {
            CycElt x = cyc_unit(F, b).pow(vf) * cyc_unit_inverse(F, a).pow(vg);
            val = RF.reduce(x);
        }
        if ((vf * vg) % 2 != 0) val = RF.mul(val, RF.from_int(-1));
        BigInt e = BigInt((long)c) % q1;
        if (e < 0) e += q1;
        acc = RF.mul(acc, RF.pow(val, e));
    }
    return acc;
}

namespace {

Int prime_power_base(Int N)
{
    auto f = factorize(N);
    if (f.size() != 1) throw Error(Err::UnsupportedLevelShape, "closed form needs a prime-power level");
    return f[0].first;
}

} // namespace

Int tame_symbol_telescoping(const CycSymbolVec& v)
{
    Int N = v.N();
    Int ell = prime_power_base(N);
    Int acc = 1;
    auto split = [&](Int a, Int& val, Int& unit) {
        val = 1;
        while (a % ell == 0) {
            a /= ell;
            val *= ell;
        }
        unit = mod_ll(a, ell);
    };
    for (const auto& [key, c] : v.entries()) {
        Int vf, uf, vg, ug;
        split(key.first, vf, uf);
        split(key.second, vg, ug);
        Int x = mod_ll(pow_mod(ug, vf, ell) * inv_mod(pow_mod(uf, vg, ell), ell), ell);
        if ((vf * vg) % 2 != 0) x = mod_ll(-x, ell);
        Int e = mod_ll(c, ell - 1);
        acc = mod_ll(acc * pow_mod(x, e, ell), ell);
    }
    return acc;
}

Int integrality_expected(const Mat2Z& g, Int N)
{
    Int ell = prime_power_base(N);
    return mod_ll(g.det() * inv_mod(mod_ll(g.d, ell), ell), ell);
}

DefectReport defect_report(const Mat2Z& g, Int ell, Int N, bool with_membership)
{
    DefectReport r;
    r.N = N;
    r.ell = ell;
    r.gamma = g;
    r.defect = eisenstein_defect(g, ell, N);
    if (ell == 2) {
        r.doubled = true;
        r.defect = r.defect.scaled(2);
    }
    for (const auto& [p, e] : factorize(N)) {
        ResidueField RF((int)N, p);
        ResidueField::Elt t = tame_symbol_cyclo(r.defect, p);
        r.tame.push_back({p, RF.str(t)});
        if (!RF.is_one(t)) r.tame_all_one = false;
    }
    if (with_membership) r.membership = relation_lattice_cached(N).membership_2adic(r.defect.dense());
    return r;
}

} // namespace eiscoc
