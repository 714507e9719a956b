#include "ortho/fq_matrix.hpp"
#include "ortho/int_matrix.hpp"

namespace ortho {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> init)
    : rows_(static_cast<int>(init.size())), cols_(0) {
    if (init.size() == 0) throw BadDimensionError("IntMatrix dimensions must be >= 1");
    cols_ = static_cast<int>(init.begin()->size());
    if (cols_ < 1) throw BadDimensionError("IntMatrix dimensions must be >= 1");
    a_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& r : init) {
        if (static_cast<int>(r.size()) != cols_) throw BadDimensionError("ragged initializer");
        for (long v : r) a_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix I(n, n);
    for (int i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

IntMatrix IntMatrix::scalar(int n, const Int& d) {
    IntMatrix D(n, n);
    for (int i = 0; i < n; ++i) D.at(i, i) = d;
    return D;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix T(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) T.at(j, i) = at(i, j);
    return T;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw BadDimensionError("matrix product shape mismatch");
    IntMatrix P(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& v = at(i, k);
            if (sgn(v) == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) P.at(i, j) += v * rhs.at(k, j);
        }
    return P;
}

void IntMatrix::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::negate_row(int i) {
    for (int c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::add_row_multiple(int dst, int src, const Int& c) {
    if (sgn(c) == 0) return;
    for (int j = 0; j < cols_; ++j) at(dst, j) += c * at(src, j);
}

std::vector<Int> IntMatrix::row_copy(int i) const {
    std::vector<Int> r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

IntMatrix gram(const IntMatrix& B) {
    IntMatrix G(B.rows(), B.rows());
    for (int i = 0; i < B.rows(); ++i)
        for (int j = i; j < B.rows(); ++j) {
            Int s = 0;
            for (int c = 0; c < B.cols(); ++c) s += B.at(i, c) * B.at(j, c);
            G.at(i, j) = s;
            G.at(j, i) = s;
        }
    return G;
}

bool is_diagonal(const IntMatrix& A) {
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j)
            if (i != j && sgn(A.at(i, j)) != 0) return false;
    return true;
}

std::vector<Int> row_times_matrix(const std::vector<Int>& x, const IntMatrix& B) {
    if (static_cast<int>(x.size()) != B.rows()) throw BadDimensionError("row-vector length mismatch");
    std::vector<Int> v(B.cols());
    for (int i = 0; i < B.rows(); ++i) {
        if (sgn(x[i]) == 0) continue;
        for (int j = 0; j < B.cols(); ++j) v[j] += x[i] * B.at(i, j);
    }
    return v;
}

FqMatrix::FqMatrix(int q_, int rows_, int cols_) : q(q_), rows(rows_), cols(cols_) {
    if (q != 2 && q != 3) throw BadDimensionError("q must be 2 or 3");
    if (rows < 0 || cols < 1) throw BadDimensionError("bad FqMatrix shape");
    a.assign(static_cast<size_t>(rows) * cols, 0);
}

FqMatrix::FqMatrix(int q_, std::initializer_list<std::initializer_list<int>> init)
    : FqMatrix(q_, static_cast<int>(init.size()),
               init.size() ? static_cast<int>(init.begin()->size()) : 1) {
    int i = 0;
    for (const auto& r : init) {
        if (static_cast<int>(r.size()) != cols) throw BadDimensionError("ragged initializer");
        int j = 0;
        for (int v : r) {
            if (v < 0 || v >= q) throw BadDimensionError("entry out of F_q range");
            at(i, j++) = static_cast<uint8_t>(v);
        }
        ++i;
    }
}

FqMatrix mod_q(const IntMatrix& A, int q) {
    FqMatrix R(q, A.rows(), A.cols());
    Int r;
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j) {
            mpz_fdiv_r_ui(r.get_mpz_t(), A.at(i, j).get_mpz_t(), static_cast<unsigned long>(q));
            R.at(i, j) = static_cast<uint8_t>(r.get_ui());
        }
    return R;
}

IntMatrix embed(const FqMatrix& A) {
    if (A.rows < 1) throw BadDimensionError("cannot embed an empty matrix");
    IntMatrix E(A.rows, A.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) E.at(i, j) = A.at(i, j);
    return E;
}

}  // namespace ortho
