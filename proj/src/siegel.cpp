#include "eiscoc/siegel.hpp"

namespace eiscoc {

namespace {

// Truncated series in q^{1/L} with coefficients in the group ring Z[Z/L];
// slot s holds the coefficient of q^{s/L}.
class GroupRingSeries {
public:
    GroupRingSeries(Int L, Int slots) : L_(L), slots_(slots), v_((std::size_t)(L * slots))
    {
        v_[0] = 1;
    }

    // multiply by (1 - q^{e/L} zeta^k)^times
    void mul_binomial(Int e, Int k, Int times)
    {
        k = mod_ll(k, L_);
        for (Int r = 0; r < times; ++r) {
            if (e == 0) {
                for (Int s = 0; s < slots_; ++s) {
                    std::vector<BigInt> row(v_.begin() + s * L_, v_.begin() + (s + 1) * L_);
                    for (Int t = 0; t < L_; ++t) at(s, (t + k) % L_) -= row[t];
                }
                continue;
            }
            for (Int s = slots_ - 1; s >= e; --s)
                for (Int t = 0; t < L_; ++t) {
                    const BigInt& src = at(s - e, t);
                    if (src != 0) at(s, (t + k) % L_) -= src;
                }
        }
    }

    CycElt to_cyc(const FieldPtr& F, Int s) const
    {
        std::vector<Rat> c(F->degree, Rat(0));
        for (Int t = 0; t < L_; ++t) {
            const BigInt& x = v_[(std::size_t)(s * L_ + t)];
            if (x == 0) continue;
            const auto& z = F->zeta_powers[(std::size_t)t];
            for (int i = 0; i < F->degree; ++i)
                if (z[i] != 0) c[i] += Rat(x * BigInt((long)z[i]));
        }
        return CycElt(F, std::move(c));
    }

    Int slots() const { return slots_; }

private:
    BigInt& at(Int s, Int t) { return v_[(std::size_t)(s * L_ + t)]; }
    Int L_, slots_;
    std::vector<BigInt> v_;
};

// multiply acc by the product for g(c/M, d/M) to the power e, written at level L (M | L);
// returns the leading exponent in units of 1/L^2
Int accumulate(GroupRingSeries& acc, Int c, Int d, Int M, Int L, Int e)
{
    Int s = L / M;
    Int cl = c * s, dl = d * s;
    Int limit = acc.slots();
    for (Int j = 0; j * L + cl < limit; ++j) acc.mul_binomial(j * L + cl, dl, e);
    for (Int j = 1; j * L - cl < limit; ++j) acc.mul_binomial(j * L - cl, -dl, e);
    return (e / 12) * (6 * c * c - 6 * c * M + M * M) * s * s;
}

void check_index(Int& c, Int& d, Int M)
{
    if (M < 1) throw Error(Err::TorsionIndexZero, "M must be positive");
    c = mod_ll(c, M);
    d = mod_ll(d, M);
    if (c == 0 && d == 0) throw Error(Err::TorsionIndexZero, "(c,d) lies in M Z^2");
}

FracQSeries to_series(const GroupRingSeries& acc, const FieldPtr& F, Int L, Int lead, Int prec)
{
    FracQSeries r(F, L * L, lead + prec * L * L);
    for (Int s = 0; s < acc.slots(); ++s) {
        CycElt c = acc.to_cyc(F, s);
        if (!c.is_zero()) r.add_term(lead + s * L, c);
    }
    return r;
}

} // namespace

Rat siegel_lead_exponent(Int c, Int M)
{
    if (M < 1) throw Error(Err::TorsionIndexZero, "M must be positive");
    c = mod_ll(c, M);
    return make_rat(BigInt((long)(6 * c * c - 6 * c * M + M * M)), BigInt((long)(M * M)));
}

FracQSeries siegel_g_power(Int c, Int d, Int M, Int prec, Int e)
{
    check_index(c, d, M);
    if (e <= 0 || e % 12 != 0) throw Error(Err::BadAuxiliary, "exponent must be a positive multiple of 12");
    if (prec < 1) throw Error(Err::PrecisionTooLow, "prec must be positive");
    GroupRingSeries acc(M, prec * M);
    Int lead = accumulate(acc, c, d, M, M, e);
    return to_series(acc, cyc_field((int)M), M, lead, prec);
}

FracQSeries siegel_g12(Int c, Int d, Int M, Int prec) { return siegel_g_power(c, d, M, prec, 12); }

FracQSeries m_siegel_g12(Int m, Int c, Int d, Int M, Int prec)
{
    check_index(c, d, M);
    Int aux = (M / gcd_ll(c, M)) * (M / gcd_ll(d, M));
    if (m < 1 || gcd_ll(m, aux) != 1) throw Error(Err::BadAuxiliary, "m must be prime to " + std::to_string(aux));
    FracQSeries g = siegel_g12(c, d, M, prec);
    FracQSeries h = siegel_g12(m * c, m * d, M, prec);
    return g.pow(m * m) * h.inverse();
}

bool m_compatibility_check(Int m, Int c, Int d, Int M, Int prec)
{
    FracQSeries lhs = m_siegel_g12(m, c, d, M, prec) * siegel_g12(m * c, m * d, M, prec);
    FracQSeries rhs = siegel_g_power(c, d, M, prec, 12 * m * m);
    return lhs.lead_exponent() == rhs.lead_exponent() && lhs.equal_to_prec(rhs);
}

DistributionResult distribution_check(Int m, Int c, Int d, Int M, Int prec)
{
    if (prec < 20) throw Error(Err::PrecisionTooLow, "need at least 20 terms");
    if (m < 1) throw Error(Err::BadAuxiliary, "m must be positive");
    check_index(c, d, M);
    Int L = M * m;
    FieldPtr F = cyc_field((int)L);

    DistributionResult res;
    res.M = M;
    res.m = m;
    res.c = c;
    res.d = d;
    res.prec = prec;

    GroupRingSeries lhs(L, prec * L), rhs(L, prec * L);
    res.lead_lhs = accumulate(lhs, c, d, M, L, 12);
    for (Int i = 0; i < m; ++i)
        for (Int j = 0; j < m; ++j) res.lead_rhs += accumulate(rhs, c + i * M, d + j * M, L, L, 12);

    CycElt a0 = lhs.to_cyc(F, 0);
    res.ratio = rhs.to_cyc(F, 0) * a0.inverse();
    res.constant = true;
    for (Int s = 1; s < prec * L && res.constant; ++s)
        res.constant = rhs.to_cyc(F, s) == res.ratio * lhs.to_cyc(F, s);
    res.root_of_unity = res.ratio.pow(2 * L).is_one();
    return res;
}

} // namespace eiscoc
