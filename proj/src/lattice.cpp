#include "eiscoc/lattice.hpp"

#include <sstream>

namespace eiscoc {

IntMat::IntMat(int rows, int cols, const std::vector<long long>& rowmajor) : IntMat(rows, cols)
{
    if ((int)rowmajor.size() != rows * cols) throw Error(Err::DimensionMismatch, "entry count");
    for (size_t i = 0; i < rowmajor.size(); ++i) e_[i] = BigInt((long)rowmajor[i]);
}

IntMat IntMat::identity(int n)
{
    IntMat I(n, n);
    for (int i = 0; i < n; ++i) I(i, i) = 1;
    return I;
}

IntMat IntMat::operator*(const IntMat& o) const
{
    if (c_ != o.r_) throw Error(Err::DimensionMismatch, "matrix product");
    IntMat P(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const BigInt& a = (*this)(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.c_; ++j)
                if (o(k, j) != 0) P(i, j) += a * o(k, j);
        }
    return P;
}

IntMat IntMat::transpose() const
{
    IntMat T(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) T(j, i) = (*this)(i, j);
    return T;
}

BigInt IntMat::det() const
{
    if (r_ != c_) throw Error(Err::DimensionMismatch, "det of non-square matrix");
    int n = r_;
    if (n == 0) return 1;
    IntMat A = *this;
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (A(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (A(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            A.swap_rows(k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                BigInt v = A(i, j) * A(k, k) - A(i, k) * A(k, j);
                A(i, j) = v / prev;
            }
        prev = A(k, k);
    }
    return sign * A(n - 1, n - 1);
}

bool IntMat::is_zero() const
{
    for (const auto& x : e_)
        if (x != 0) return false;
    return true;
}

std::string IntMat::str() const
{
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < r_; ++i) {
        os << (i ? ";" : "") << "[";
        for (int j = 0; j < c_; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

void IntMat::swap_rows(int a, int b)
{
    if (a == b) return;
    for (int j = 0; j < c_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMat::swap_cols(int a, int b)
{
    if (a == b) return;
    for (int i = 0; i < r_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMat::add_row_multiple(int dst, int src, const BigInt& k)
{
    if (k == 0) return;
    for (int j = 0; j < c_; ++j)
        if ((*this)(src, j) != 0) (*this)(dst, j) += k * (*this)(src, j);
}

void IntMat::add_col_multiple(int dst, int src, const BigInt& k)
{
    if (k == 0) return;
    for (int i = 0; i < r_; ++i)
        if ((*this)(i, src) != 0) (*this)(i, dst) += k * (*this)(i, src);
}

void IntMat::negate_row(int i)
{
    for (int j = 0; j < c_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMat::negate_col(int j)
{
    for (int i = 0; i < r_; ++i) (*this)(i, j) = -(*this)(i, j);
}

// ---------------------------------------------------------------- HNF

namespace {

BigInt floor_div(const BigInt& a, const BigInt& b)
{
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

BigInt trunc_div(const BigInt& a, const BigInt& b)
{
    BigInt q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

void hnf_impl(IntMat& H, IntMat* U)
{
    int m = H.rows(), n = H.cols();
    int r = 0;
    for (int c = 0; c < n && r < m; ++c) {
        bool have = false;
        while (true) {
            int best = -1;
            for (int i = r; i < m; ++i)
                if (H(i, c) != 0 && (best < 0 || abs(H(i, c)) < abs(H(best, c)))) best = i;
            if (best < 0) break;
            have = true;
            H.swap_rows(r, best);
            if (U) U->swap_rows(r, best);
            bool clean = true;
            for (int i = r + 1; i < m; ++i) {
                if (H(i, c) == 0) continue;
                BigInt q = trunc_div(H(i, c), H(r, c));
                H.add_row_multiple(i, r, -q);
                if (U) U->add_row_multiple(i, r, -q);
                if (H(i, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (!have) continue;
        if (H(r, c) < 0) {
            H.negate_row(r);
            if (U) U->negate_row(r);
        }
        for (int i = 0; i < r; ++i) {
            BigInt q = floor_div(H(i, c), H(r, c));
            H.add_row_multiple(i, r, -q);
            if (U) U->add_row_multiple(i, r, -q);
        }
        ++r;
    }
}

} // namespace

HnfResult hnf(const IntMat& M)
{
    HnfResult res{M, IntMat::identity(M.rows())};
    hnf_impl(res.H, &res.U);
    return res;
}

IntMat hnf_only(const IntMat& M)
{
    IntMat H = M;
    hnf_impl(H, nullptr);
    return H;
}

bool is_row_hnf(const IntMat& H)
{
    int last = -1;
    bool zero_seen = false;
    for (int i = 0; i < H.rows(); ++i) {
        int p = -1;
        for (int j = 0; j < H.cols(); ++j)
            if (H(i, j) != 0) {
                p = j;
                break;
            }
        if (p < 0) {
            zero_seen = true;
            continue;
        }
        if (zero_seen || p <= last || H(i, p) <= 0) return false;
        for (int k = 0; k < i; ++k)
            if (H(k, p) < 0 || H(k, p) >= H(i, p)) return false;
        for (int k = i + 1; k < H.rows(); ++k)
            if (H(k, p) != 0) return false;
        last = p;
    }
    return true;
}

// ---------------------------------------------------------------- SNF

SnfResult snf(const IntMat& M)
{
    int m = M.rows(), n = M.cols();
    SnfResult s{M, IntMat::identity(m), IntMat::identity(n)};
    IntMat& A = s.D;
    for (int t = 0; t < std::min(m, n); ++t) {
        while (true) {
            int bi = -1, bj = -1;
            for (int i = t; i < m; ++i)
                for (int j = t; j < n; ++j)
                    if (A(i, j) != 0 && (bi < 0 || abs(A(i, j)) < abs(A(bi, bj)))) {
                        bi = i;
                        bj = j;
                    }
            if (bi < 0) return s;
            A.swap_rows(t, bi);
            s.U.swap_rows(t, bi);
            A.swap_cols(t, bj);
            s.V.swap_cols(t, bj);
            bool dirty = false;
            for (int i = t + 1; i < m; ++i) {
                if (A(i, t) == 0) continue;
                BigInt q = trunc_div(A(i, t), A(t, t));
                A.add_row_multiple(i, t, -q);
                s.U.add_row_multiple(i, t, -q);
                if (A(i, t) != 0) dirty = true;
            }
            for (int j = t + 1; j < n; ++j) {
                if (A(t, j) == 0) continue;
                BigInt q = trunc_div(A(t, j), A(t, t));
                A.add_col_multiple(j, t, -q);
                s.V.add_col_multiple(j, t, -q);
                if (A(t, j) != 0) dirty = true;
            }
            if (dirty) continue;
            int bad = -1;
            for (int i = t + 1; i < m && bad < 0; ++i)
                for (int j = t + 1; j < n; ++j)
                    if (A(i, j) % A(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad < 0) break;
            A.add_row_multiple(t, bad, BigInt(1));
            s.U.add_row_multiple(t, bad, BigInt(1));
        }
        if (A(t, t) < 0) {
            A.negate_row(t);
            s.U.negate_row(t);
        }
    }
    return s;
}

bool is_snf(const IntMat& D)
{
    int k = std::min(D.rows(), D.cols());
    for (int i = 0; i < D.rows(); ++i)
        for (int j = 0; j < D.cols(); ++j)
            if (i != j && D(i, j) != 0) return false;
    for (int i = 0; i < k; ++i) {
        if (D(i, i) < 0) return false;
        if (i + 1 < k) {
            if (D(i, i) == 0 && D(i + 1, i + 1) != 0) return false;
            if (D(i, i) != 0 && D(i + 1, i + 1) % D(i, i) != 0) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------- solving

std::optional<IntVec> solve_int(const IntMat& M, const IntVec& b)
{
    if ((int)b.size() != M.rows()) throw Error(Err::DimensionMismatch, "right-hand side length");
    HnfResult h = hnf(M.transpose()); // H = U M^T, M x = b <=> H^T y = b, x = U^T y
    const IntMat& H = h.H;
    int n = H.rows(), m = H.cols();
    IntVec y(n, BigInt(0));
    int row = 0;
    for (int j = 0; j < m && row < n; ++j) {
        if (H(row, j) == 0) continue;
        BigInt rhs = b[j];
        for (int i = 0; i < row; ++i) rhs -= H(i, j) * y[i];
        if (rhs % H(row, j) != 0) return std::nullopt;
        y[row] = rhs / H(row, j);
        ++row;
    }
    for (int j = 0; j < m; ++j) {
        BigInt s = 0;
        for (int i = 0; i < n; ++i) s += H(i, j) * y[i];
        if (s != b[j]) return std::nullopt;
    }
    IntVec x(M.cols(), BigInt(0));
    for (int k = 0; k < M.cols(); ++k)
        for (int i = 0; i < n; ++i)
            if (y[i] != 0) x[k] += h.U(i, k) * y[i];
    return x;
}

ColumnLattice::ColumnLattice(const IntMat& M) : dim_(M.rows()), H_(hnf_only(M.transpose()))
{
    index_pivots();
}

ColumnLattice ColumnLattice::from_echelon(int dim, IntMat H)
{
    ColumnLattice L;
    L.dim_ = dim;
    L.H_ = std::move(H);
    L.index_pivots();
    return L;
}

void ColumnLattice::index_pivots()
{
    piv_.clear();
    for (int i = 0; i < H_.rows(); ++i) {
        int p = -1;
        for (int j = 0; j < H_.cols(); ++j)
            if (H_(i, j) != 0) {
                p = j;
                break;
            }
        if (p < 0) break;
        piv_.push_back(p);
    }
}

std::optional<std::vector<Rat>> ColumnLattice::coordinates(const IntVec& b) const
{
    if ((int)b.size() != dim_) throw Error(Err::DimensionMismatch, "vector length");
    int r = rank();
    std::vector<Rat> y(r);
    std::vector<Rat> res(b.begin(), b.end());
    for (int k = 0; k < r; ++k) {
        int p = piv_[k];
        y[k] = res[p] / Rat(H_(k, p));
        if (y[k] == 0) continue;
        for (int j = p; j < dim_; ++j)
            if (H_(k, j) != 0) res[j] -= y[k] * Rat(H_(k, j));
    }
    for (const auto& v : res)
        if (v != 0) return std::nullopt;
    return y;
}

bool ColumnLattice::contains(const IntVec& b) const
{
    auto y = coordinates(b);
    if (!y) return false;
    for (const auto& v : *y)
        if (v.get_den() != 1) return false;
    return true;
}

std::optional<int> ColumnLattice::membership_2adic(const IntVec& b) const
{
    auto y = coordinates(b);
    if (!y) return std::nullopt;
    int k = 0;
    for (const auto& v : *y) {
        BigInt d = v.get_den();
        int e = (int)mpz_scan1(d.get_mpz_t(), 0);
        BigInt odd = d >> e;
        if (odd != 1) return std::nullopt;
        k = std::max(k, e);
    }
    if (k > 64) return std::nullopt;
    return k;
}

std::optional<int> membership_2adic(const IntMat& M, const IntVec& b)
{
    if ((int)b.size() != M.rows()) throw Error(Err::DimensionMismatch, "vector length");
    return ColumnLattice(M).membership_2adic(b);
}

} // namespace eiscoc
