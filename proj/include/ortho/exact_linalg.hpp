#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ortho/fq_matrix.hpp"
#include "ortho/int_matrix.hpp"

namespace ortho {

/// Hermite normal form of the row lattice spanned by `generators` (which may
/// have more rows than columns): the unique n x n upper-triangular basis with
/// positive diagonal and 0 <= H[i][j] < H[j][j] for i < j.
/// Throws RankDeficientError when the rows do not have full column rank.
IntMatrix hnf(const IntMatrix& generators);

/// Exact determinant via Bareiss fraction-free elimination.
Int determinant(const IntMatrix& B);

/// Integral coefficient vector x with x*B = v, if v lies in the row lattice
/// of B; std::nullopt otherwise. Throws SingularBasisError if det(B) = 0.
std::optional<std::vector<Int>> solve_integral(const IntMatrix& B, const std::vector<Int>& v);

/// Factored form of a nonsingular square basis: U*B = H with H the HNF of B
/// and U unimodular. Answers repeated membership and coordinate queries with
/// one O(n^2) substitution each.
class HnfSolver {
public:
    explicit HnfSolver(const IntMatrix& B);  // throws SingularBasisError

    const IntMatrix& hnf_basis() const { return h_; }
    Int abs_det() const;

    bool contains(const std::vector<Int>& v) const;
    std::optional<std::vector<Int>> solve(const std::vector<Int>& v) const;  // x*B = v over Z
    std::vector<Rat> solve_rational(const std::vector<Rat>& t) const;        // x*B = t over Q

private:
    std::optional<std::vector<Int>> coords_in_hnf(const std::vector<Int>& v) const;

    IntMatrix h_;
    IntMatrix u_;
};

struct RrefFq {
    FqMatrix mat;             // zero rows dropped
    std::vector<int> pivots;  // pivot column of each remaining row
};

/// Reduced row echelon form over F_q with pivot bookkeeping.
RrefFq rref_fq_full(const FqMatrix& G);

/// Reduced row echelon form over F_q; returns the reduced generator (zero
/// rows dropped) and its rank.
std::pair<FqMatrix, int> rref_fq(const FqMatrix& G);

/// Parity-check matrix H with c in C <=> H*c^T = 0 over F_q. For a rank-k
/// generator of length n the result has n-k rows (possibly none).
FqMatrix parity_check(const FqMatrix& G);

bool in_code(const FqMatrix& H, const uint8_t* c);
bool in_code(const FqMatrix& H, const std::vector<uint8_t>& c);

}  // namespace ortho
