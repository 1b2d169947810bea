#include "eiscoc/arith.hpp"

#include <algorithm>
#include <sstream>

namespace eiscoc {

long long gcd_ll(long long a, long long b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long long mod_ll(long long a, long long m)
{
    long long r = a % m;
    return r < 0 ? r + m : r;
}

long long ext_gcd(long long a, long long b, long long& x, long long& y)
{
    long long x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        long long q = a / b;
        long long t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
        t = y0 - q * y1;
        y0 = y1;
        y1 = t;
    }
    if (a < 0) {
        a = -a;
        x0 = -x0;
        y0 = -y0;
    }
    x = x0;
    y = y0;
    return a;
}

long long inv_mod(long long a, long long m)
{
    if (m == 1) return 0;
    long long x, y;
    if (ext_gcd(mod_ll(a, m), m, x, y) != 1)
        throw Error(Err::NonUnitIndex, std::to_string(a) + " is not invertible mod " + std::to_string(m));
    return mod_ll(x, m);
}

long long pow_mod(long long a, long long e, long long m)
{
    __int128 r = 1 % m, b = mod_ll(a, m);
    while (e > 0) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return (long long)r;
}

bool is_prime(long long n)
{
    if (n < 2) return false;
    for (long long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

std::vector<std::pair<long long, int>> factorize(long long n)
{
    std::vector<std::pair<long long, int>> out;
    if (n < 0) n = -n;
    for (long long p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) out.push_back({p, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

long long euler_phi(long long n)
{
    long long r = n;
    for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
    return r;
}

long long mult_order(long long a, long long m)
{
    if (m == 1) return 1;
    if (gcd_ll(a, m) != 1) throw Error(Err::NonUnitIndex, "order of a non-unit");
    long long k = 1, x = mod_ll(a, m);
    while (x != 1) {
        x = (long long)((__int128)x * a % m);
        ++k;
    }
    return k;
}

std::string rat_str(const Rat& r)
{
    return r.get_str();
}

// ---------------------------------------------------------------- Phi_N

namespace {

using ZPoly = std::vector<long long>;

ZPoly zpoly_exact_div(ZPoly a, const ZPoly& b)
{
    // b monic
    int db = (int)b.size() - 1;
    int da = (int)a.size() - 1;
    ZPoly q(std::max(0, da - db + 1), 0);
    for (int i = da; i >= db; --i) {
        long long c = a[i];
        q[i - db] = c;
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    for (int i = 0; i < db; ++i)
        if (a[i] != 0) throw Error(Err::Internal, "inexact cyclotomic division");
    return q;
}

std::mutex g_phi_mu;
std::map<int, ZPoly> g_phi_cache;

} // namespace

std::vector<long long> cyclotomic_polynomial(int N)
{
    if (N < 1) throw Error(Err::ZeroIndex, "cyclotomic_polynomial needs N >= 1");
    {
        std::lock_guard<std::mutex> lk(g_phi_mu);
        auto it = g_phi_cache.find(N);
        if (it != g_phi_cache.end()) return it->second;
    }
    ZPoly p(N + 1, 0);
    p[0] = -1;
    p[N] = 1;
    for (int d = 1; d < N; ++d)
        if (N % d == 0) p = zpoly_exact_div(p, cyclotomic_polynomial(d));
    std::lock_guard<std::mutex> lk(g_phi_mu);
    g_phi_cache[N] = p;
    return p;
}

// ---------------------------------------------------------------- fields

namespace {
std::mutex g_field_mu;
std::map<int, FieldPtr> g_fields;
} // namespace

FieldPtr cyc_field(int N)
{
    if (N < 1) throw Error(Err::ZeroIndex, "cyclotomic field needs N >= 1");
    std::lock_guard<std::mutex> lk(g_field_mu);
    auto it = g_fields.find(N);
    if (it != g_fields.end()) return it->second;
    auto F = std::make_shared<CycField>();
    F->N = N;
    F->phi = cyclotomic_polynomial(N);
    F->degree = (int)F->phi.size() - 1;
    int d = F->degree;
    std::vector<long long> cur(d, 0);
    cur[0] = 1;
    if (d == 1 && N == 1) cur[0] = 1;
    for (int k = 0; k < N; ++k) {
        F->zeta_powers.push_back(cur);
        // multiply by x, reduce with the monic phi
        std::vector<long long> nxt(d, 0);
        long long top = cur[d - 1];
        for (int i = d - 1; i >= 1; --i) nxt[i] = cur[i - 1];
        nxt[0] = 0;
        for (int i = 0; i < d; ++i) nxt[i] -= top * F->phi[i];
        cur = nxt;
    }
    g_fields[N] = F;
    return F;
}

// ---------------------------------------------------------------- CycElt

CycElt::CycElt(FieldPtr F) : F_(std::move(F)), c_(F_->degree, Rat(0)) {}

CycElt::CycElt(FieldPtr F, std::vector<Rat> coeffs) : F_(std::move(F)), c_(std::move(coeffs))
{
    if ((int)c_.size() != F_->degree) throw Error(Err::DimensionMismatch, "coefficient count");
}

CycElt CycElt::constant(FieldPtr F, const Rat& c)
{
    CycElt r(std::move(F));
    r.c_[0] = c;
    return r;
}

CycElt CycElt::zeta_pow(FieldPtr F, long long k)
{
    CycElt r(F);
    const auto& z = F->zeta_powers[mod_ll(k, F->N)];
    for (int i = 0; i < F->degree; ++i) r.c_[i] = (long)z[i];
    return r;
}

bool CycElt::is_zero() const
{
    return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return r == 0; });
}

bool CycElt::is_one() const
{
    if (c_.empty() || c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

void CycElt::check_same(const CycElt& o) const
{
    if (!F_ || !o.F_ || F_->N != o.F_->N) throw Error(Err::DimensionMismatch, "elements of different fields");
}

CycElt CycElt::operator+(const CycElt& o) const
{
    CycElt r = *this;
    r += o;
    return r;
}

CycElt CycElt::operator-(const CycElt& o) const
{
    CycElt r = *this;
    r -= o;
    return r;
}

CycElt CycElt::operator-() const
{
    CycElt r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

CycElt& CycElt::operator+=(const CycElt& o)
{
    check_same(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CycElt& CycElt::operator-=(const CycElt& o)
{
    check_same(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

CycElt CycElt::operator*(const CycElt& o) const
{
    check_same(o);
    int d = F_->degree;
    std::vector<Rat> prod(2 * d - 1, Rat(0));
    for (int i = 0; i < d; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < d; ++j)
            if (o.c_[j] != 0) prod[i + j] += c_[i] * o.c_[j];
    }
    CycElt r(F_);
    for (int i = 0; i < d; ++i) r.c_[i] = prod[i];
    for (int k = d; k < 2 * d - 1; ++k) {
        if (prod[k] == 0) continue;
        const auto& z = F_->zeta_powers[k % F_->N];
        for (int i = 0; i < d; ++i)
            if (z[i] != 0) r.c_[i] += prod[k] * (long)z[i];
    }
    return r;
}

CycElt CycElt::operator*(const Rat& s) const
{
    CycElt r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
}

bool CycElt::operator==(const CycElt& o) const
{
    check_same(o);
    return c_ == o.c_;
}

CycElt CycElt::shift(long long k) const
{
    int d = F_->degree;
    int N = F_->N;
    CycElt r(F_);
    for (int i = 0; i < d; ++i) {
        if (c_[i] == 0) continue;
        const auto& z = F_->zeta_powers[mod_ll(i + k, N)];
        for (int j = 0; j < d; ++j)
            if (z[j] != 0) r.c_[j] += c_[i] * (long)z[j];
    }
    return r;
}

namespace {

using QPoly = std::vector<Rat>;

void qtrim(QPoly& p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qsub_mul(const QPoly& a, const QPoly& q, const QPoly& b)
{
    // a - q*b
    QPoly r = a;
    if (r.size() < q.size() + b.size()) r.resize(q.size() + b.size(), Rat(0));
    for (size_t i = 0; i < q.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] -= q[i] * b[j];
    qtrim(r);
    return r;
}

void qdivmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r)
{
    r = a;
    qtrim(r);
    q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rat(0));
    Rat lb = b.back();
    while (r.size() >= b.size()) {
        size_t sh = r.size() - b.size();
        Rat c = r.back() / lb;
        q[sh] = c;
        for (size_t j = 0; j < b.size(); ++j) r[sh + j] -= c * b[j];
        qtrim(r);
    }
}

} // namespace

CycElt CycElt::inverse() const
{
    if (is_zero()) throw Error(Err::DivisionByZero, "inverse of zero");
    QPoly r0;
    for (long long v : F_->phi) r0.push_back(Rat((long)v));
    QPoly r1 = c_;
    qtrim(r1);
    QPoly s0, s1{Rat(1)};
    while (r1.size() > 1) {
        QPoly q, r;
        qdivmod(r0, r1, q, r);
        QPoly s = qsub_mul(s0, q, s1);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r1.empty()) throw Error(Err::DivisionByZero, "not invertible");
    Rat c = 1 / r1[0];
    CycElt out(F_);
    for (size_t i = 0; i < s1.size() && i < out.c_.size(); ++i) out.c_[i] = s1[i] * c;
    return out;
}

CycElt CycElt::pow(long long e) const
{
    if (e < 0) return inverse().pow(-e);
    CycElt r = constant(F_, 1), b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

std::string CycElt::str() const
{
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rat v = c_[i];
        if (!first) os << (v < 0 ? " - " : " + ");
        else if (v < 0) os << "-";
        Rat a = abs(v);
        if (i == 0) os << a.get_str();
        else {
            if (a != 1) os << a.get_str() << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

CycElt cyc_unit(const FieldPtr& F, long long a)
{
    if (mod_ll(a, F->N) == 0) throw Error(Err::ZeroIndex, "1 - zeta^0 is not a unit");
    return CycElt::constant(F, 1) - CycElt::zeta_pow(F, a);
}

CycElt cyc_unit_inverse(const FieldPtr& F, long long a)
{
    long long k = mod_ll(a, F->N);
    {
        std::lock_guard<std::mutex> lk(F->cache_mu);
        auto it = F->unit_inverse_cache.find(k);
        if (it != F->unit_inverse_cache.end()) return *it->second;
    }
    auto inv = std::make_shared<const CycElt>(cyc_unit(F, k).inverse());
    std::lock_guard<std::mutex> lk(F->cache_mu);
    F->unit_inverse_cache[k] = inv;
    return *inv;
}

CycElt galois_apply(const FieldPtr& F, long long j, const CycElt& x)
{
    if (gcd_ll(j, F->N) != 1) throw Error(Err::NonUnitIndex, "galois index not prime to N");
    CycElt r(F);
    for (int i = 0; i < F->degree; ++i) {
        const Rat& c = x.coeffs()[i];
        if (c == 0) continue;
        r += CycElt::zeta_pow(F, (long long)i * j) * c;
    }
    return r;
}

bool steinberg_unit_identity(const FieldPtr& F, long long a, long long b)
{
    long long N = F->N;
    if (mod_ll(a, N) == 0 || mod_ll(b, N) == 0 || mod_ll(a + b, N) == 0)
        throw Error(Err::ZeroIndex, "degenerate exponents");
    CycElt one = CycElt::constant(F, 1);
    CycElt lhs = cyc_unit(F, a) * cyc_unit_inverse(F, a + b) + cyc_unit(F, -b) * cyc_unit_inverse(F, -a - b);
    return lhs == one;
}

// ---------------------------------------------------------------- residue fields

ResidueField::ResidueField(int N, long long ell) : N_(N), ell_(ell)
{
    if (!is_prime(ell)) throw Error(Err::NotPrime, std::to_string(ell));
    long long Np = N;
    while (Np % ell == 0) Np /= ell;
    f_ = (int)mult_order(ell % Np == 0 ? 1 : ell, Np);
    BigInt count;
    mpz_ui_pow_ui(count.get_mpz_t(), (unsigned long)ell, (unsigned long)f_);
    if (count > (1 << 24)) throw Error(Err::UnsupportedLevelShape, "residue field too large to search");
    std::vector<long long> phi = cyclotomic_polynomial(N);
    for (auto& c : phi) c = mod_ll(c, ell);
    long long total = count.get_si();
    std::vector<long long> h(f_ + 1, 0);
    h[f_] = 1;
    for (long long idx = 0; idx < total; ++idx) {
        // c_0 is the most significant digit
        long long v = idx;
        for (int i = f_ - 1; i >= 0; --i) {
            h[i] = v % ell;
            v /= ell;
        }
        std::vector<long long> r = phi;
        for (int i = (int)r.size() - 1; i >= f_; --i) {
            long long c = r[i];
            if (c == 0) continue;
            for (int j = 0; j <= f_; ++j) r[i - f_ + j] = mod_ll(r[i - f_ + j] - c * h[j], ell);
        }
        bool divides = true;
        for (int i = 0; i < f_; ++i)
            if (r[i] != 0) divides = false;
        if (divides) {
            h_ = h;
            return;
        }
    }
    throw Error(Err::Internal, "no factor of Phi_N found");
}

BigInt ResidueField::size() const
{
    BigInt s;
    mpz_ui_pow_ui(s.get_mpz_t(), (unsigned long)ell_, (unsigned long)f_);
    return s;
}

ResidueField::Elt ResidueField::one() const
{
    Elt e(f_, 0);
    e[0] = 1;
    return e;
}

ResidueField::Elt ResidueField::from_int(long long v) const
{
    Elt e(f_, 0);
    e[0] = mod_ll(v, ell_);
    return e;
}

ResidueField::Elt ResidueField::reduce_poly(std::vector<long long> p) const
{
    for (auto& c : p) c = mod_ll(c, ell_);
    for (int i = (int)p.size() - 1; i >= f_; --i) {
        long long c = p[i];
        if (c == 0) continue;
        for (int j = 0; j <= f_; ++j) p[i - f_ + j] = mod_ll(p[i - f_ + j] - c * h_[j], ell_);
    }
    Elt e(f_, 0);
    for (int i = 0; i < f_ && i < (int)p.size(); ++i) e[i] = p[i];
    return e;
}

ResidueField::Elt ResidueField::reduce(const CycElt& x) const
{
    if (x.field()->N != N_) throw Error(Err::DimensionMismatch, "element from another field");
    std::vector<long long> p(x.coeffs().size(), 0);
    BigInt L((long)ell_);
    for (size_t i = 0; i < p.size(); ++i) {
        const Rat& r = x.coeffs()[i];
        BigInt den = r.get_den() % L;
        if (den == 0) throw Error(Err::NonIntegral, "denominator divisible by " + std::to_string(ell_));
        BigInt num = r.get_num() % L;
        long long n = mod_ll(num.get_si(), ell_), d = mod_ll(den.get_si(), ell_);
        p[i] = (long long)((__int128)n * inv_mod(d, ell_) % ell_);
    }
    return reduce_poly(p);
}

ResidueField::Elt ResidueField::mul(const Elt& a, const Elt& b) const
{
    std::vector<long long> p(2 * f_ - 1, 0);
    for (int i = 0; i < f_; ++i)
        for (int j = 0; j < f_; ++j) p[i + j] = (p[i + j] + a[i] * b[j]) % ell_;
    return reduce_poly(p);
}

ResidueField::Elt ResidueField::pow(const Elt& a, const BigInt& e0) const
{
    BigInt e = e0;
    Elt base = a;
    if (e < 0) {
        base = inv(a);
        e = -e;
    }
    Elt r = one();
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = mul(r, base);
        e >>= 1;
        if (e > 0) base = mul(base, base);
    }
    return r;
}

ResidueField::Elt ResidueField::inv(const Elt& a) const
{
    if (is_zero(a)) throw Error(Err::DivisionByZero, "zero in residue field");
    return pow(a, size() - 2);
}

bool ResidueField::is_zero(const Elt& a) const
{
    return std::all_of(a.begin(), a.end(), [](long long v) { return v == 0; });
}

std::string ResidueField::str(const Elt& a) const
{
    if (f_ == 1) return std::to_string(a[0]);
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < f_; ++i) os << (i ? "," : "") << a[i];
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------- q-series

FracQSeries::FracQSeries(FieldPtr F, long long D, long long prec) : F_(std::move(F)), D_(D), prec_(prec)
{
    if (D_ < 1) throw Error(Err::DimensionMismatch, "base denominator must be positive");
}

FracQSeries FracQSeries::monomial(FieldPtr F, long long D, long long prec, long long e, const CycElt& c)
{
    FracQSeries s(std::move(F), D, prec);
    s.add_term(e, c);
    return s;
}

FracQSeries FracQSeries::one(FieldPtr F, long long D, long long prec)
{
    auto one = CycElt::constant(F, 1);
    return monomial(std::move(F), D, prec, 0, one);
}

std::optional<long long> FracQSeries::lead_exponent() const
{
    if (t_.empty()) return std::nullopt;
    return t_.begin()->first;
}

const CycElt& FracQSeries::lead_coeff() const
{
    if (t_.empty()) throw Error(Err::ZeroLeadingTerm, "zero series");
    return t_.begin()->second;
}

CycElt FracQSeries::coeff(long long e) const
{
    auto it = t_.find(e);
    if (it == t_.end()) return CycElt(F_);
    return it->second;
}

void FracQSeries::add_term(long long e, const CycElt& c)
{
    if (e >= prec_) return;
    auto it = t_.find(e);
    if (it == t_.end()) {
        if (!c.is_zero()) t_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

FracQSeries FracQSeries::truncated(long long prec) const
{
    FracQSeries r(F_, D_, std::min(prec, prec_));
    for (const auto& [e, c] : t_)
        if (e < r.prec_) r.t_.emplace(e, c);
    return r;
}

void FracQSeries::check_same(const FracQSeries& o) const
{
    if (!F_ || !o.F_ || F_->N != o.F_->N || D_ != o.D_)
        throw Error(Err::DimensionMismatch, "series over different fields or exponent grids");
}

namespace {
long long sat_add(long long a, long long b)
{
    long long s = a + b;
    return std::min(s, FracQSeries::kExact);
}
} // namespace

FracQSeries FracQSeries::operator*(const FracQSeries& o) const
{
    check_same(o);
    long long p;
    if (t_.empty() || o.t_.empty()) {
        long long la = t_.empty() ? 0 : t_.begin()->first;
        long long lb = o.t_.empty() ? 0 : o.t_.begin()->first;
        p = std::min(sat_add(prec_, lb), sat_add(o.prec_, la));
        return FracQSeries(F_, D_, p);
    }
    p = std::min(sat_add(prec_, o.t_.begin()->first), sat_add(o.prec_, t_.begin()->first));
    FracQSeries r(F_, D_, p);
    for (const auto& [ea, ca] : t_) {
        for (const auto& [eb, cb] : o.t_) {
            if (ea + eb >= p) break;
            r.add_term(ea + eb, ca * cb);
        }
    }
    return r;
}

FracQSeries FracQSeries::operator+(const FracQSeries& o) const
{
    check_same(o);
    FracQSeries r(F_, D_, std::min(prec_, o.prec_));
    for (const auto& [e, c] : t_) r.add_term(e, c);
    for (const auto& [e, c] : o.t_) r.add_term(e, c);
    return r;
}

FracQSeries FracQSeries::operator-(const FracQSeries& o) const
{
    return *this + o.scaled(CycElt::constant(F_, -1));
}

FracQSeries FracQSeries::scaled(const CycElt& c) const
{
    FracQSeries r(F_, D_, prec_);
    for (const auto& [e, v] : t_) r.add_term(e, v * c);
    return r;
}

FracQSeries FracQSeries::inverse() const
{
    if (t_.empty() || t_.begin()->second.is_zero()) throw Error(Err::ZeroLeadingTerm, "cannot invert");
    long long e0 = t_.begin()->first;
    long long rel = prec_ >= kExact ? kExact : prec_ - e0;
    if (rel >= kExact) {
        if (t_.size() != 1) throw Error(Err::InsufficientPrecision, "inverse of an exact non-monomial series");
        FracQSeries r(F_, D_, kExact);
        r.add_term(-e0, t_.begin()->second.inverse());
        return r;
    }
    CycElt a0inv = t_.begin()->second.inverse();
    std::vector<std::pair<long long, const CycElt*>> offs;
    long long g = 0;
    for (auto it = std::next(t_.begin()); it != t_.end(); ++it) {
        offs.push_back({it->first - e0, &it->second});
        g = gcd_ll(g, it->first - e0);
    }
    FracQSeries r(F_, D_, -e0 + rel);
    std::map<long long, CycElt> b;
    b.emplace(0, a0inv);
    if (g > 0) {
        for (long long k = g; k < rel; k += g) {
            CycElt acc(F_);
            bool any = false;
            for (const auto& [o, c] : offs) {
                if (o > k) break;
                auto it = b.find(k - o);
                if (it == b.end()) continue;
                acc += *c * it->second;
                any = true;
            }
            if (!any) continue;
            acc = -(acc * a0inv);
            if (!acc.is_zero()) b.emplace(k, acc);
        }
    }
    for (const auto& [k, c] : b) r.add_term(k - e0, c);
    return r;
}

FracQSeries FracQSeries::pow(long long e) const
{
    if (e < 0) return inverse().pow(-e);
    FracQSeries r = one(F_, D_, kExact);
    FracQSeries b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

bool FracQSeries::equal_to_prec(const FracQSeries& o) const
{
    check_same(o);
    long long p = std::min(prec_, o.prec_);
    auto a = t_.begin();
    auto b = o.t_.begin();
    while (true) {
        bool ea = a == t_.end() || a->first >= p;
        bool eb = b == o.t_.end() || b->first >= p;
        if (ea && eb) return true;
        if (ea || eb) return false;
        if (a->first != b->first || a->second != b->second) return false;
        ++a;
        ++b;
    }
}

bool FracQSeries::is_constant() const
{
    for (const auto& [e, c] : t_)
        if (e != 0) return false;
    return true;
}

std::string FracQSeries::str() const
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (e != 0) {
            Rat x((long)e, (long)D_);
            x.canonicalize();
            os << "*q^(" << x.get_str() << ")";
        }
    }
    if (first) os << "0";
    if (prec_ < kExact) {
        Rat x((long)prec_, (long)D_);
        x.canonicalize();
        os << " + O(q^(" << x.get_str() << "))";
    }
    return os.str();
}

} // namespace eiscoc
