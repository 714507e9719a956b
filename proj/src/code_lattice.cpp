#include "ortho/code_lattice.hpp"

#include <string>

namespace ortho {

LinearCode make_code(const FqMatrix& generator_rows) {
    FqMatrix gen = rref_fq(generator_rows).first;
    FqMatrix par = parity_check(gen);
    return LinearCode{std::move(gen), std::move(par)};
}

LatticeBasis code_to_basis(const LinearCode& C) {
    const int n = C.n(), k = C.k(), q = C.q();
    IntMatrix stacked(k + n, n);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j) stacked.at(i, j) = C.generator.at(i, j);
    for (int j = 0; j < n; ++j) stacked.at(k + j, j) = q;
    return LatticeBasis{q, n, hnf(stacked)};
}

LinearCode basis_to_code(const LatticeBasis& B) {
    return make_code(mod_q(B.basis, B.q));
}

LatticeBasis validate(const IntMatrix& B, int q) {
    if (q != 2 && q != 3) throw BadDimensionError("q must be 2 or 3");
    if (!B.square()) throw BadDimensionError("lattice basis must be square");
    const int n = B.rows();
    HnfSolver solver(B);  // throws SingularBasisError
    std::vector<Int> v(n);
    for (int j = 0; j < n; ++j) {
        if (j > 0) v[j - 1] = 0;
        v[j] = q;
        if (!solver.contains(v))
            throw NotConstructionAError("q*e_" + std::to_string(j + 1) + " is not in the lattice");
    }
    return LatticeBasis{q, n, B};
}

bool same_lattice(const IntMatrix& B1, const IntMatrix& B2) {
    if (!B1.square() || !B2.square() || B1.rows() != B2.rows())
        throw BadDimensionError("same_lattice requires square bases of equal size");
    try {
        return hnf(B1) == hnf(B2);
    } catch (const RankDeficientError&) {
        throw SingularBasisError("basis is singular");
    }
}

LinearCode project_code(const LinearCode& C, const std::vector<int>& coords) {
    if (coords.empty()) throw BadIndexError("empty coordinate list");
    std::vector<char> seen(C.n(), 0);
    for (int c : coords) {
        if (c < 0 || c >= C.n()) throw BadIndexError("coordinate out of range");
        if (seen[c]) throw BadIndexError("duplicate coordinate");
        seen[c] = 1;
    }
    FqMatrix P(C.q(), C.k(), static_cast<int>(coords.size()));
    for (int i = 0; i < C.k(); ++i)
        for (int j = 0; j < static_cast<int>(coords.size()); ++j)
            P.at(i, j) = C.generator.at(i, coords[j]);
    return make_code(P);
}

}  // namespace ortho
