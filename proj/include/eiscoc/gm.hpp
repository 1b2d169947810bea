#ifndef EISCOC_GM_HPP
#define EISCOC_GM_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eiscoc/circle.hpp"
#include "eiscoc/lattice.hpp"

namespace eiscoc {

// Sums of matrix symbols <v,w> = {1 - z^v, 1 - z^w} reuse SymbolSum; the
// canonical form is the circle image together with the {-z1,-z2} channel.
using SymbolSum2 = SymbolSum;

// divisor symbols <a,c>, keyed by the signed primitive vector
using DivSymbolSum = std::map<Vec2, Int>;

DivSymbolSum boundary2(const SymbolSum2& s);
Int boundary1(const DivSymbolSum& d);
DivSymbolSum pullback_01(const Mat2Z& g);
DivSymbolSum div_sub(const DivSymbolSum& a, const DivSymbolSum& b);

// g^* <v,w> = <g v, g w>
SymbolSum2 pullback(const Mat2Z& g, const SymbolSum2& s);
CircFn canonical(const SymbolSum2& s);

// sum of <v_i, -v_{i-1}> along a connecting sequence
SymbolSum2 theta_from_sequence(const ConnectingSeq& seq);
enum class SeqKind { Monotone, ContinuedFraction };
SymbolSum2 theta_gamma(const Mat2Z& g, SeqKind k = SeqKind::Monotone);
// the constant c with Theta_{gg'} - g^* Theta_{g'} - Theta_g = c {-z1,-z2}
Int theta_cocycle_defect(const Mat2Z& g, const Mat2Z& gp);

// integer combination of {1 - zeta^a, 1 - zeta^b}, indices in [1, N)
class CycSymbolVec {
public:
    CycSymbolVec() = default;
    explicit CycSymbolVec(Int N);

    Int N() const { return N_; }
    const std::map<std::pair<Int, Int>, Int>& entries() const { return e_; }
    bool is_zero() const { return e_.empty(); }

    void add(Int a, Int b, Int coef); // throws ZeroIndex
    CycSymbolVec operator+(const CycSymbolVec& o) const;
    CycSymbolVec operator-(const CycSymbolVec& o) const;
    CycSymbolVec scaled(Int k) const;
    // (a,b) -> (ja, jb)
    CycSymbolVec sigma(Int j) const;
    bool operator==(const CycSymbolVec& o) const { return N_ == o.N_ && e_ == o.e_; }

    // coordinate (a-1)(N-1) + (b-1)
    IntVec dense() const;
    std::string str() const;

private:
    Int N_ = 0;
    std::map<std::pair<Int, Int>, Int> e_;
};

CycSymbolVec specialize_theta_N(const Mat2Z& g, Int N);

// columns R1 (sign changes), R2 (three-term), R3 (antisymmetry)
IntMat relation_lattice(Int N);
// echelon form of the relation lattice, computed once per N in this process
const ColumnLattice& relation_lattice_cached(Int N);
// seed the per-process cache, e.g. from a file
void relation_lattice_seed(Int N, ColumnLattice L);
std::string lattice_serialize(const ColumnLattice& L);
ColumnLattice lattice_deserialize(const std::string& s);

CycSymbolVec pi_manin(Int u, Int v, Int N);
struct ManinImage {
    std::string label;
    CycSymbolVec vec;
    std::optional<int> k; // least k with 2^k vec in the lattice
};
std::vector<ManinImage> manin_relation_images(Int N);

std::vector<Mat2Z> hecke_homology(const Mat2Z& g, Int ell, Int N);
// sum_j Theta_N(g_j) - ell Theta_N(g) - sigma_ell Theta_N(g)
CycSymbolVec eisenstein_defect(const Mat2Z& g, Int ell, Int N);

// valuation of 1 - zeta^a at a prime above ell
Int unit_valuation(Int a, Int N, Int ell);
// product of tame symbols at the chosen prime above ell (a prime dividing N)
ResidueField::Elt tame_symbol_cyclo(const CycSymbolVec& v, Int ell);
// closed form for prime-power N through the unit parts a' of a = ell^s a'
Int tame_symbol_telescoping(const CycSymbolVec& v);
// det(g) d^{-1} mod ell for N = ell^k
Int integrality_expected(const Mat2Z& g, Int N);

struct DefectReport {
    Int N = 0, ell = 0;
    Mat2Z gamma;
    bool doubled = false;
    CycSymbolVec defect;
    std::vector<std::pair<Int, std::string>> tame; // (prime, residue value)
    bool tame_all_one = true;
    std::optional<int> membership; // experimental
};
DefectReport defect_report(const Mat2Z& g, Int ell, Int N, bool with_membership = true);

} // namespace eiscoc

#endif
