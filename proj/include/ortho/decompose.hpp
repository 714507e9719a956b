#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "ortho/code_lattice.hpp"

namespace ortho {

/// Component kinds of a direct-product decomposition:
///   Full1  - full length-1 code, lattice Z, block [1]
///   Zero1  - zero length-1 code, lattice qZ, block [q]
///   Rep2   - binary repetition code {00,11}, 2x2 weight-2 block (q=2)
///   Tetra4 - ternary code generated by T(M) mod 3, 4x4 block T(M) (q=3)
enum class ComponentKind { Full1, Zero1, Rep2, Tetra4 };

struct Component {
    ComponentKind kind;
    std::vector<int> coords;  // 0-based coordinates, in block column order
    IntMatrix block;
};

/// Display name ("Z", "2Z"/"3Z", "Rep2", "Tetra4").
const char* kind_name(ComponentKind kind, int q);

/// All distinct length-4 ternary codes generated by column-negated and
/// column-permuted copies of the weight-3 block, with one witness matrix
/// each. Built once from the 16 x 24 = 384 raw candidates and deduplicated
/// by canonical generator.
class TmCatalog {
public:
    struct Entry {
        IntMatrix tm;   // witness matrix, tm * tm^T = 3*I_4
        FqMatrix code;  // canonical RREF of (tm mod 3)
    };

    const std::vector<Entry>& entries() const { return entries_; }
    size_t size() const { return entries_.size(); }

    /// Index of the entry whose code has this canonical RREF, or -1.
    int find(const FqMatrix& rref) const;

    void add(IntMatrix tm, FqMatrix code_rref);

private:
    std::vector<Entry> entries_;
    std::map<std::vector<uint8_t>, int> by_rref_;
};

const TmCatalog& tm_candidates();

/// Split off a length-1 component: first all-zero generator column gives
/// Zero1, otherwise the first coordinate j whose q extensions of every
/// projected generator are codewords gives Full1.
std::optional<Component> decompose_length1(const LinearCode& C);

/// Split off a {00,11} pair (q = 2). First qualifying pair in lexicographic
/// order; scan parallelized over pairs.
std::optional<Component> decompose_length2_binary(const LinearCode& C, int threads = 1);

/// Split off a T(M) quadruple (q = 3). First qualifying 4-subset in
/// lexicographic order; scan parallelized over subsets.
std::optional<Component> decompose_length4_ternary(const LinearCode& C, int threads = 1);

/// Full greedy decomposition (attempt order Zero1, Full1, then the
/// multi-coordinate split), or std::nullopt when the code does not decompose
/// — equivalently, when C + qZ^n has no orthogonal basis.
std::optional<std::vector<Component>> decompose_binary(const LinearCode& C, int threads = 1);
std::optional<std::vector<Component>> decompose_ternary(const LinearCode& C, int threads = 1);

/// Plain-loop reference scans. Same results as the OpenMP kernels by the
/// deterministic lexicographic-minimum rule; kept for tests and ortho_bench.
namespace serial_ref {
std::optional<Component> decompose_length2_binary(const LinearCode& C);
std::optional<Component> decompose_length4_ternary(const LinearCode& C);
std::optional<std::vector<Component>> decompose_binary(const LinearCode& C);
std::optional<std::vector<Component>> decompose_ternary(const LinearCode& C);
}  // namespace serial_ref

namespace detail {
/// Shared greedy recursion over length-1 splits plus one long-scan callback.
std::optional<std::vector<Component>> decompose_driver(
    const LinearCode& C,
    const std::function<std::optional<Component>(const LinearCode&)>& long_scan);
}  // namespace detail

}  // namespace ortho
