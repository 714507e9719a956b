#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ortho/decompose.hpp"

namespace ortho {

/// Ordered list of decomposition components; coordinate sets partition [n].
struct Decomposition {
    int q;
    int n;
    std::vector<Component> components;
};

/// Integral basis with pairwise-orthogonal rows.
struct OrthogonalBasis {
    int n;
    IntMatrix basis;
};

struct Verdict {
    bool orthogonal;
    std::optional<OrthogonalBasis> basis;
    std::optional<Decomposition> decomposition;
};

/// Decide whether L(B) = C + qZ^n is orthogonal; on success return a
/// verified orthogonal basis and the decomposition that produced it.
/// Throws SingularBasisError / NotConstructionAError on malformed input and
/// VerificationError if an assembled basis fails verification (a bug, never
/// a mathematical outcome).
Verdict decide(const IntMatrix& B, int q, int threads = 1);

/// Scatter each component block into its coordinate positions, components in
/// discovery order.
OrthogonalBasis assemble_basis(const Decomposition& d);

/// Checks (a) diagonal Gram with positive diagonal, (b) HNF equality with
/// B_in, (c) per-row divisibility q*|b_j| in {0, ||b||^2, q*||b||^2}.
bool verify_orthogonal_basis(const IntMatrix& B_in, const OrthogonalBasis& B_orth, int q);

/// Independent oracle: enumerate all lattice vectors with ||v||^2 <= q^2 and
/// backtrack for n mutually orthogonal ones with |det| = |det(B)|. n <= 8.
std::optional<OrthogonalBasis> brute_force_orthogonal(const IntMatrix& B, int q);

/// Closest vector by per-axis rounding on an orthogonal basis; rounding is
/// half-away-from-zero on exact rationals.
std::vector<Int> cvp_round(const OrthogonalBasis& B, const std::vector<Rat>& t);

/// Exact exhaustive CVP over the coefficient box round(t*B^-1) +- n*q, ties
/// broken by lexicographically smallest lattice point. n <= 6.
std::vector<Int> cvp_exhaustive(const IntMatrix& B, const std::vector<Rat>& t);

/// Exact squared Euclidean distance between an integer point and a rational
/// target.
Rat distance2(const std::vector<Int>& v, const std::vector<Rat>& t);

enum class InstanceKind { Orthogonal, RandomCode };

/// Deterministic seeded instance factory. Orthogonal: random legal
/// decomposition, random coordinate permutation, scrambled by 3n elementary
/// row operations with coefficients in {-2,...,2}. RandomCode: HNF basis of a
/// random rank-k code.
IntMatrix gen_instance(int q, int n, uint64_t seed, InstanceKind kind, int code_rank = 0);

}  // namespace ortho
