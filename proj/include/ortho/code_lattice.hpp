#pragma once

#include <vector>

#include "ortho/exact_linalg.hpp"

namespace ortho {

/// Linear code over F_q in canonical form: generator kept in RREF with zero
/// rows dropped, parity-check matrix cached. Canonical form makes code
/// equality entrywise generator equality.
struct LinearCode {
    FqMatrix generator;  // k x n, RREF
    FqMatrix parity;     // (n-k) x n

    int q() const { return generator.q; }
    int n() const { return generator.cols; }
    int k() const { return generator.rows; }

    bool operator==(const LinearCode& o) const { return generator == o.generator; }
    bool operator!=(const LinearCode& o) const { return !(*this == o); }
};

/// Canonicalize arbitrary generator rows into a LinearCode.
LinearCode make_code(const FqMatrix& generator_rows);

/// Full-rank integral basis of a lattice L with q*Z^n <= L <= Z^n.
struct LatticeBasis {
    int q;
    int n;
    IntMatrix basis;
};

/// HNF basis of C + q*Z^n: the HNF of the generator rows stacked over q*I_n.
LatticeBasis code_to_basis(const LinearCode& C);

/// Generator of L mod q by row reduction of the basis mod q.
LinearCode basis_to_code(const LatticeBasis& B);

/// Check that B is square nonsingular and q*e_j lies in L(B) for every j,
/// i.e. that L(B) comes from Construction-A for this q.
/// Throws SingularBasisError / NotConstructionAError.
LatticeBasis validate(const IntMatrix& B, int q);

/// True iff both bases generate the same lattice (HNF equality).
bool same_lattice(const IntMatrix& B1, const IntMatrix& B2);

/// Code generated by the generator rows restricted to `coords` (0-based,
/// distinct, nonempty), re-reduced. Throws BadIndexError.
LinearCode project_code(const LinearCode& C, const std::vector<int>& coords);

}  // namespace ortho
