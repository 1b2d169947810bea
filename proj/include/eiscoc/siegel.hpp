#ifndef EISCOC_SIEGEL_HPP
#define EISCOC_SIEGEL_HPP

#include "eiscoc/sl2.hpp"

namespace eiscoc {

// 6 B2(c/M) with B2(t) = t^2 - t + 1/6
Rat siegel_lead_exponent(Int c, Int M);

// 12th power of q^{B2(c/M)/2} prod_{j>=0} (1 - q^{j+c/M} z^d) prod_{j>=1} (1 - q^{j-c/M} z^{-d}),
// z = zeta_M, exponents in units of 1/M^2, integer q-exponents below prec are exact
// (relative to the leading term). c is reduced into [0, M).
FracQSeries siegel_g12(Int c, Int d, Int M, Int prec);
// the same product raised to the power e instead of 12 (e a positive multiple of 12)
FracQSeries siegel_g_power(Int c, Int d, Int M, Int prec, Int e);

// g(c,d)^{m^2} / g(mc, md); throws BadAuxiliary unless gcd(m, M/(c,M) * M/(d,M)) = 1
FracQSeries m_siegel_g12(Int m, Int c, Int d, Int M, Int prec);
// m_siegel_g12 * g(mc, md) against the direct product with exponent 12 m^2
bool m_compatibility_check(Int m, Int c, Int d, Int M, Int prec);

struct DistributionResult {
    Int M = 0, m = 0, c = 0, d = 0, prec = 0;
    Int lead_lhs = 0, lead_rhs = 0; // units of 1/(Mm)^2
    CycElt ratio;                   // in Q(zeta_{Mm})
    bool constant = false;          // rhs = ratio * lhs to precision
    bool root_of_unity = false;     // ratio^{2Mm} = 1
    bool ok() const { return constant && root_of_unity && lead_lhs == lead_rhs; }
};
// prod_{i,j < m} g((c + iM)/(Mm), (d + jM)/(Mm)) against g(c/M, d/M); throws PrecisionTooLow when prec < 20
DistributionResult distribution_check(Int m, Int c, Int d, Int M, Int prec);

} // namespace eiscoc

#endif
