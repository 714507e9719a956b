#include "ortho/exact_linalg.hpp"

#include <string>

namespace ortho {

namespace {

// Row-style HNF elimination in place. If U is non-null it must start as the
// identity; the same row operations are applied, so U_out * A_in = A_out.
void hnf_in_place(IntMatrix& A, IntMatrix* U) {
    const int m = A.rows();
    const int n = A.cols();
    Int c, quo;
    for (int col = 0; col < n; ++col) {
        // Euclid among rows col..m-1 until one nonzero entry remains in this
        // column, then move it to the pivot position.
        for (;;) {
            int p = -1;
            for (int r = col; r < m; ++r) {
                if (sgn(A.at(r, col)) == 0) continue;
                if (p < 0 || mpz_cmpabs(A.at(r, col).get_mpz_t(), A.at(p, col).get_mpz_t()) < 0) p = r;
            }
            if (p < 0)
                throw RankDeficientError("rows do not span full column rank at column " +
                                         std::to_string(col));
            bool clean = true;
            for (int r = col; r < m; ++r) {
                if (r == p || sgn(A.at(r, col)) == 0) continue;
                mpz_tdiv_q(quo.get_mpz_t(), A.at(r, col).get_mpz_t(), A.at(p, col).get_mpz_t());
                c = -quo;
                A.add_row_multiple(r, p, c);
                if (U) U->add_row_multiple(r, p, c);
                if (sgn(A.at(r, col)) != 0) clean = false;
            }
            if (clean) {
                A.swap_rows(col, p);
                if (U) U->swap_rows(col, p);
                break;
            }
        }
        if (sgn(A.at(col, col)) < 0) {
            A.negate_row(col);
            if (U) U->negate_row(col);
        }
        // Reduce the entries above the pivot into [0, pivot).
        for (int r = 0; r < col; ++r) {
            mpz_fdiv_q(quo.get_mpz_t(), A.at(r, col).get_mpz_t(), A.at(col, col).get_mpz_t());
            if (sgn(quo) != 0) {
                c = -quo;
                A.add_row_multiple(r, col, c);
                if (U) U->add_row_multiple(r, col, c);
            }
        }
    }
}

}  // namespace

IntMatrix hnf(const IntMatrix& generators) {
    const int n = generators.cols();
    if (generators.rows() < n) throw RankDeficientError("fewer rows than columns");
    IntMatrix A = generators;
    hnf_in_place(A, nullptr);
    if (A.rows() == n) return A;
    IntMatrix H(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) H.at(i, j) = A.at(i, j);
    return H;
}

Int determinant(const IntMatrix& B) {
    if (!B.square()) throw BadDimensionError("determinant of a non-square matrix");
    const int n = B.rows();
    IntMatrix A = B;
    int sign = 1;
    Int prev = 1, t;
    for (int k = 0; k + 1 < n; ++k) {
        if (sgn(A.at(k, k)) == 0) {
            int r = -1;
            for (int i = k + 1; i < n; ++i)
                if (sgn(A.at(i, k)) != 0) { r = i; break; }
            if (r < 0) return 0;
            A.swap_rows(k, r);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                t = A.at(i, j) * A.at(k, k) - A.at(i, k) * A.at(k, j);
                mpz_divexact(A.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            A.at(i, k) = 0;
        }
        prev = A.at(k, k);
    }
    Int d = A.at(n - 1, n - 1);
    if (sign < 0) d = -d;
    return d;
}

HnfSolver::HnfSolver(const IntMatrix& B) : h_(B), u_(IntMatrix::identity(B.rows())) {
    if (!B.square()) throw BadDimensionError("HnfSolver requires a square basis");
    try {
        hnf_in_place(h_, &u_);
    } catch (const RankDeficientError&) {
        throw SingularBasisError("basis is singular");
    }
}

Int HnfSolver::abs_det() const {
    Int d = 1;
    for (int i = 0; i < h_.rows(); ++i) d *= h_.at(i, i);
    return d;
}

std::optional<std::vector<Int>> HnfSolver::coords_in_hnf(const std::vector<Int>& v) const {
    const int n = h_.rows();
    if (static_cast<int>(v.size()) != n) throw BadDimensionError("vector length mismatch");
    std::vector<Int> y(n);
    Int acc;
    for (int j = 0; j < n; ++j) {
        acc = v[j];
        for (int i = 0; i < j; ++i) acc -= y[i] * h_.at(i, j);
        if (!mpz_divisible_p(acc.get_mpz_t(), h_.at(j, j).get_mpz_t())) return std::nullopt;
        mpz_divexact(y[j].get_mpz_t(), acc.get_mpz_t(), h_.at(j, j).get_mpz_t());
    }
    return y;
}

bool HnfSolver::contains(const std::vector<Int>& v) const { return coords_in_hnf(v).has_value(); }

std::optional<std::vector<Int>> HnfSolver::solve(const std::vector<Int>& v) const {
    auto y = coords_in_hnf(v);
    if (!y) return std::nullopt;
    return row_times_matrix(*y, u_);
}

std::vector<Rat> HnfSolver::solve_rational(const std::vector<Rat>& t) const {
    const int n = h_.rows();
    if (static_cast<int>(t.size()) != n) throw BadDimensionError("vector length mismatch");
    std::vector<Rat> y(n);
    Rat acc;
    for (int j = 0; j < n; ++j) {
        acc = t[j];
        for (int i = 0; i < j; ++i) acc -= y[i] * Rat(h_.at(i, j));
        y[j] = acc / Rat(h_.at(j, j));
    }
    std::vector<Rat> x(n);
    for (int i = 0; i < n; ++i) {
        if (sgn(y[i]) == 0) continue;
        for (int j = 0; j < n; ++j) x[j] += y[i] * Rat(u_.at(i, j));
    }
    return x;
}

std::optional<std::vector<Int>> solve_integral(const IntMatrix& B, const std::vector<Int>& v) {
    return HnfSolver(B).solve(v);
}

RrefFq rref_fq_full(const FqMatrix& G) {
    FqMatrix A = G;
    const int q = A.q;
    std::vector<int> pivots;
    int r = 0;
    for (int col = 0; col < A.cols && r < A.rows; ++col) {
        int p = -1;
        for (int i = r; i < A.rows; ++i)
            if (A.at(i, col) != 0) { p = i; break; }
        if (p < 0) continue;
        for (int j = 0; j < A.cols; ++j) std::swap(A.at(r, j), A.at(p, j));
        // scale pivot to 1 (inverse of 2 mod 3 is 2)
        if (A.at(r, col) == 2 && q == 3)
            for (int j = 0; j < A.cols; ++j) A.at(r, j) = static_cast<uint8_t>((A.at(r, j) * 2) % q);
        for (int i = 0; i < A.rows; ++i) {
            if (i == r || A.at(i, col) == 0) continue;
            const int f = A.at(i, col);
            for (int j = 0; j < A.cols; ++j)
                A.at(i, j) = static_cast<uint8_t>((A.at(i, j) + (q - f) * A.at(r, j)) % q);
        }
        pivots.push_back(col);
        ++r;
    }
    FqMatrix R(A.q, r, A.cols);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < A.cols; ++j) R.at(i, j) = A.at(i, j);
    return {std::move(R), std::move(pivots)};
}

std::pair<FqMatrix, int> rref_fq(const FqMatrix& G) {
    RrefFq r = rref_fq_full(G);
    int rank = r.mat.rows;
    return {std::move(r.mat), rank};
}

FqMatrix parity_check(const FqMatrix& G) {
    RrefFq r = rref_fq_full(G);
    const int q = G.q, n = G.cols, k = r.mat.rows;
    std::vector<char> is_pivot(n, 0);
    for (int p : r.pivots) is_pivot[p] = 1;
    FqMatrix H(q, n - k, n);
    int row = 0;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        H.at(row, f) = 1;
        for (int i = 0; i < k; ++i)
            H.at(row, r.pivots[i]) = static_cast<uint8_t>((q - r.mat.at(i, f)) % q);
        ++row;
    }
    return H;
}

bool in_code(const FqMatrix& H, const uint8_t* c) {
    for (int i = 0; i < H.rows; ++i) {
        int acc = 0;
        const uint8_t* h = H.row_ptr(i);
        for (int j = 0; j < H.cols; ++j) acc += h[j] * c[j];
        if (acc % H.q != 0) return false;
    }
    return true;
}

bool in_code(const FqMatrix& H, const std::vector<uint8_t>& c) {
    if (static_cast<int>(c.size()) != H.cols) throw BadDimensionError("codeword length mismatch");
    return in_code(H, c.data());
}

}  // namespace ortho
