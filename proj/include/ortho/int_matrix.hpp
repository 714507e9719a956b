#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "ortho/errors.hpp"

namespace ortho {

using Int = mpz_class;
using Rat = mpq_class;

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 1 || cols < 1) throw BadDimensionError("IntMatrix dimensions must be >= 1");
        a_.resize(static_cast<size_t>(rows) * static_cast<size_t>(cols));
    }

    IntMatrix(std::initializer_list<std::initializer_list<long>> init);

    static IntMatrix identity(int n);
    static IntMatrix scalar(int n, const Int& d);  // d * I_n

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Int& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& rhs) const;

    void swap_rows(int i, int j);
    void negate_row(int i);
    void add_row_multiple(int dst, int src, const Int& c);  // row dst += c * row src

    std::vector<Int> row_copy(int i) const;

private:
    int rows_;
    int cols_;
    std::vector<Int> a_;
};

IntMatrix gram(const IntMatrix& B);  // B * B^T
bool is_diagonal(const IntMatrix& A);
std::vector<Int> row_times_matrix(const std::vector<Int>& x, const IntMatrix& B);

}  // namespace ortho
