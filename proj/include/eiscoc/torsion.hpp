#ifndef EISCOC_TORSION_HPP
#define EISCOC_TORSION_HPP

#include <string>
#include <vector>

#include "eiscoc/sl2.hpp"

namespace eiscoc {

// Integer function on (Z/n)^k, k = 2 or 4, stored densely.
// Points of (Z/n)^4 are pairs (P, Q), read as the matrix with columns P, Q;
// the coordinate order is (P.x, P.y, Q.x, Q.y).
class CycleMap {
public:
    CycleMap() = default;
    CycleMap(Int n, int k);

    static CycleMap point(Int n, int k);  // indicator of 0
    static CycleMap all(Int n, int k);    // indicator of everything

    Int n() const { return n_; }
    int k() const { return k_; }
    std::size_t size() const { return v_.size(); }

    Int at(const std::vector<Int>& x) const;
    Int& at(const std::vector<Int>& x);
    Int at_index(std::size_t i) const { return v_[i]; }
    Int& at_index(std::size_t i) { return v_[i]; }
    std::vector<Int> coords(std::size_t i) const;
    std::size_t index(const std::vector<Int>& x) const;

    Int degree() const;
    CycleMap operator+(const CycleMap& o) const;
    CycleMap operator-(const CycleMap& o) const;
    CycleMap scaled(Int c) const;
    bool operator==(const CycleMap& o) const { return n_ == o.n_ && k_ == o.k_ && v_ == o.v_; }

    std::string str() const;

private:
    void check_same(const CycleMap& o) const;
    Int n_ = 1;
    int k_ = 0;
    std::vector<Int> v_;
};

// f (x) g on (Z/n)^4
CycleMap box(const CycleMap& f, const CycleMap& g);

// the n + 1 matrices (n j; 0 1), (1 0; 0 n) of determinant n
std::vector<Mat2Z> torsion_hecke_reps(Int n);

// {x in (Z/n)^2 : x g = 0}, n = |det g|; k = 4 gives pairs whose rows lie in that set
CycleMap kernel_cycle(const Mat2Z& g, int k = 2);
// the n + 1 cyclic subgroups of order n in (Z/n)^2
std::vector<CycleMap> cyclic_subgroups(Int n);

// T(f)(M) = sum_j f(M g_j) and [n]^* f (M) = f(nM) = f(0)
CycleMap hecke_op(const CycleMap& f);
CycleMap mult_pullback(const CycleMap& f);
// n^4 - n^2 T + n [n]^*
CycleMap v_op(const CycleMap& f);

CycleMap e_n_build(Int n);
CycleMap phi_n_table(Int n);
// value of e_n by rank 0, 1, 2
std::vector<Int> e_n_rank_values(Int n);

bool hecke_identity_check(Int ell);
bool rows_vs_cols_check(Int ell);
bool e_n_matches_table(Int n);
bool e_n_degree_zero(Int n);
bool pushforward_zero_check(Int n);
bool norm_identity_check(Int n);
bool v_n_zero_check(Int n);
// degrees of T(0) and [n]^*(0) on (Z/n)^2 are n(n+1) and n^2
bool torsion_degree_check(Int n);

} // namespace eiscoc

#endif
