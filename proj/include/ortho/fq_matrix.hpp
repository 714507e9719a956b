#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "ortho/int_matrix.hpp"

namespace ortho {

/// Matrix over F_q, q in {2,3}. Entries are residues in {0,...,q-1}.
/// Zero-row matrices are allowed (generator of the zero code, parity check of
/// the full code).
struct FqMatrix {
    int q = 2;
    int rows = 0;
    int cols = 1;
    std::vector<uint8_t> a;

    FqMatrix() = default;
    FqMatrix(int q_, int rows_, int cols_);
    FqMatrix(int q_, std::initializer_list<std::initializer_list<int>> init);

    uint8_t& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    uint8_t at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
    const uint8_t* row_ptr(int i) const { return a.data() + static_cast<size_t>(i) * cols; }

    bool operator==(const FqMatrix& o) const {
        return q == o.q && rows == o.rows && cols == o.cols && a == o.a;
    }
    bool operator!=(const FqMatrix& o) const { return !(*this == o); }
};

/// Entrywise reduction of an integer matrix into F_q residues {0,...,q-1}.
FqMatrix mod_q(const IntMatrix& A, int q);

/// Real embedding of residues: entries {0,...,q-1} as integers. rows >= 1.
IntMatrix embed(const FqMatrix& A);

}  // namespace ortho
