#ifndef EISCOC_ARITH_HPP
#define EISCOC_ARITH_HPP

#include <gmpxx.h>

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "eiscoc/error.hpp"

namespace eiscoc {

using BigInt = mpz_class;
using Rat = mpq_class;

// small integer number theory
long long gcd_ll(long long a, long long b);
long long mod_ll(long long a, long long m); // result in [0, m)
long long inv_mod(long long a, long long m); // throws NonUnitIndex
long long pow_mod(long long a, long long e, long long m);
bool is_prime(long long n);
long long euler_phi(long long n);
std::vector<std::pair<long long, int>> factorize(long long n);
long long mult_order(long long a, long long m);
// x,y with a*x + b*y = g = gcd(a,b) >= 0
long long ext_gcd(long long a, long long b, long long& x, long long& y);

std::string rat_str(const Rat& r);
// canonical n/d
inline Rat make_rat(const BigInt& n, const BigInt& d)
{
    Rat r(n, d);
    r.canonicalize();
    return r;
}

// Phi_N, coefficients low degree first
std::vector<long long> cyclotomic_polynomial(int N);

class CycElt;

struct CycField {
    int N = 1;
    int degree = 1;
    std::vector<long long> phi;                     // monic, size degree+1
    std::vector<std::vector<long long>> zeta_powers; // zeta^k in the power basis, k < N

    mutable std::mutex cache_mu;
    mutable std::map<long long, std::shared_ptr<const CycElt>> unit_inverse_cache;
};
using FieldPtr = std::shared_ptr<const CycField>;

// shared per-N instance
FieldPtr cyc_field(int N);

class CycElt {
public:
    CycElt() = default;
    explicit CycElt(FieldPtr F);
    CycElt(FieldPtr F, std::vector<Rat> coeffs);

    static CycElt constant(FieldPtr F, const Rat& c);
    static CycElt zeta_pow(FieldPtr F, long long k);

    const FieldPtr& field() const { return F_; }
    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_one() const;

    CycElt operator+(const CycElt& o) const;
    CycElt operator-(const CycElt& o) const;
    CycElt operator-() const;
    CycElt operator*(const CycElt& o) const;
    CycElt operator*(const Rat& r) const;
    CycElt& operator+=(const CycElt& o);
    CycElt& operator-=(const CycElt& o);
    bool operator==(const CycElt& o) const;
    bool operator!=(const CycElt& o) const { return !(*this == o); }

    // throws DivisionByZero
    CycElt inverse() const;
    CycElt pow(long long e) const;
    // multiply by zeta^k
    CycElt shift(long long k) const;

    std::string str() const;

private:
    void check_same(const CycElt& o) const;
    FieldPtr F_;
    std::vector<Rat> c_;
};

// 1 - zeta^a; throws ZeroIndex when a = 0 mod N
CycElt cyc_unit(const FieldPtr& F, long long a);
// inverse of 1 - zeta^a, memoised on the field
CycElt cyc_unit_inverse(const FieldPtr& F, long long a);
// zeta -> zeta^j; throws NonUnitIndex unless gcd(j, N) = 1
CycElt galois_apply(const FieldPtr& F, long long j, const CycElt& x);
// (1-x)/(1-xy) + (1-1/y)/(1-1/(xy)) == 1 with x = zeta^a, y = zeta^b
bool steinberg_unit_identity(const FieldPtr& F, long long a, long long b);

// F_ell[x]/(h) with h the lexicographically least monic irreducible factor of
// Phi_N mod ell; "least" compares coefficient lists from the constant term up.
class ResidueField {
public:
    using Elt = std::vector<long long>;

    ResidueField(int N, long long ell);

    int N() const { return N_; }
    long long ell() const { return ell_; }
    int degree() const { return f_; }
    const std::vector<long long>& modulus() const { return h_; }
    BigInt size() const;

    Elt zero() const { return Elt(f_, 0); }
    Elt one() const;
    Elt from_int(long long v) const;
    Elt reduce(const CycElt& x) const; // throws NonIntegral
    Elt mul(const Elt& a, const Elt& b) const;
    Elt pow(const Elt& a, const BigInt& e) const;
    Elt inv(const Elt& a) const; // throws DivisionByZero
    bool is_zero(const Elt& a) const;
    bool is_one(const Elt& a) const { return a == one(); }
    std::string str(const Elt& a) const;

private:
    Elt reduce_poly(std::vector<long long> p) const;
    int N_;
    long long ell_;
    int f_;
    std::vector<long long> h_;
};

inline ResidueField residue_field(int N, long long ell) { return ResidueField(N, ell); }

// Truncated series sum_k c_k q^(k/D); terms with k >= prec are unknown.
class FracQSeries {
public:
    static constexpr long long kExact = (1LL << 60);

    FracQSeries() = default;
    FracQSeries(FieldPtr F, long long D, long long prec);

    static FracQSeries monomial(FieldPtr F, long long D, long long prec, long long e, const CycElt& c);
    static FracQSeries one(FieldPtr F, long long D, long long prec);

    const FieldPtr& field() const { return F_; }
    long long base_denom() const { return D_; }
    long long prec() const { return prec_; }
    const std::map<long long, CycElt>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::optional<long long> lead_exponent() const;
    const CycElt& lead_coeff() const;
    CycElt coeff(long long e) const;

    void add_term(long long e, const CycElt& c);
    FracQSeries truncated(long long prec) const;

    FracQSeries operator*(const FracQSeries& o) const;
    FracQSeries operator+(const FracQSeries& o) const;
    FracQSeries operator-(const FracQSeries& o) const;
    FracQSeries scaled(const CycElt& c) const;
    FracQSeries inverse() const; // throws ZeroLeadingTerm
    FracQSeries pow(long long e) const;

    // agreement of all coefficients below the smaller precision
    bool equal_to_prec(const FracQSeries& o) const;
    // only a constant term below prec
    bool is_constant() const;

    std::string str() const;

private:
    void check_same(const FracQSeries& o) const;
    FieldPtr F_;
    long long D_ = 1;
    long long prec_ = 0;
    std::map<long long, CycElt> t_;
};

} // namespace eiscoc

#endif
