#ifndef EISCOC_LATTICE_HPP
#define EISCOC_LATTICE_HPP

#include <optional>
#include <string>
#include <vector>

#include "eiscoc/arith.hpp"

namespace eiscoc {

class IntMat {
public:
    IntMat() = default;
    IntMat(int rows, int cols) : r_(rows), c_(cols), e_((size_t)rows * cols, BigInt(0)) {}
    IntMat(int rows, int cols, const std::vector<long long>& rowmajor);

    static IntMat identity(int n);

    int rows() const { return r_; }
    int cols() const { return c_; }
    BigInt& operator()(int i, int j) { return e_[(size_t)i * c_ + j]; }
    const BigInt& operator()(int i, int j) const { return e_[(size_t)i * c_ + j]; }

    IntMat operator*(const IntMat& o) const;
    bool operator==(const IntMat& o) const { return r_ == o.r_ && c_ == o.c_ && e_ == o.e_; }
    IntMat transpose() const;
    BigInt det() const; // square only, Bareiss
    bool is_zero() const;
    std::string str() const;

    void swap_rows(int a, int b);
    void swap_cols(int a, int b);
    void add_row_multiple(int dst, int src, const BigInt& k); // row_dst += k*row_src
    void add_col_multiple(int dst, int src, const BigInt& k);
    void negate_row(int i);
    void negate_col(int j);

private:
    int r_ = 0, c_ = 0;
    std::vector<BigInt> e_;
};

using IntVec = std::vector<BigInt>;

struct HnfResult {
    IntMat H, U; // H = U*M
};
struct SnfResult {
    IntMat D, U, V; // D = U*M*V
};

// Row Hermite normal form: pivots positive, entries above a pivot reduced into [0, pivot).
HnfResult hnf(const IntMat& M);
IntMat hnf_only(const IntMat& M);
SnfResult snf(const IntMat& M);

bool is_row_hnf(const IntMat& H);
bool is_snf(const IntMat& D);

std::optional<IntVec> solve_int(const IntMat& M, const IntVec& b);
// least k <= 64 with 2^k b in the column span of M over Z
std::optional<int> membership_2adic(const IntMat& M, const IntVec& b);

// Column lattice of M kept in echelon form, for repeated membership queries.
class ColumnLattice {
public:
    explicit ColumnLattice(const IntMat& M);
    static ColumnLattice from_echelon(int dim, IntMat H);
    int dim() const { return dim_; }
    int rank() const { return (int)piv_.size(); }
    const IntMat& echelon() const { return H_; }
    // rational coordinates in the echelon basis, empty if b is outside the Q-span
    std::optional<std::vector<Rat>> coordinates(const IntVec& b) const;
    bool contains(const IntVec& b) const;
    std::optional<int> membership_2adic(const IntVec& b) const;

private:
    ColumnLattice() = default;
    void index_pivots();
    int dim_ = 0;
    IntMat H_; // rows generate the lattice, row echelon
    std::vector<int> piv_;
};

} // namespace eiscoc

#endif
