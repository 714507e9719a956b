#pragma once

#include <vector>

#include "ortho/int_matrix.hpp"

namespace ortho {

struct WeighingMatrix {
    int n;
    int k;
    IntMatrix entries;
};

/// The 2x2 weight-2 block [[1,1],[1,-1]].
const IntMatrix& weight2_block();

/// The 4x4 weight-3 block with Gram 3*I_4 whose rows mod 3 generate the
/// tetracode.
const IntMatrix& weight3_block();

/// Entries in {-1,0,1}, exactly k nonzeros per row and column, W*W^T = k*I_n.
bool is_weighing(const IntMatrix& W, int k);

/// Block-diagonal product of n/2 weight-2 blocks (k=2) or n/4 weight-3
/// blocks (k=3). Throws BadDimensionError for inadmissible (n, k).
WeighingMatrix standard_weighing(int n, int k);

/// True iff W2 = P*S*W1*T*Q for permutation matrices P, Q and +-1 diagonal
/// matrices S, T. Search guard n <= 8 (TooLargeError beyond).
bool weighing_equivalent(const IntMatrix& W1, const IntMatrix& W2);

/// Exhaustive list of weighing matrices of order n <= 4 and weight k whose
/// rows are sign-normalized (first nonzero positive). Throws TooLargeError.
std::vector<IntMatrix> enumerate_weighing(int n, int k);

}  // namespace ortho
