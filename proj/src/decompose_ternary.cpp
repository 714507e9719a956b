#include <algorithm>
#include <array>
#include <atomic>

#include "ortho/decompose.hpp"
#include "ortho/weighing.hpp"

namespace ortho {

int TmCatalog::find(const FqMatrix& rref) const {
    auto it = by_rref_.find(rref.a);
    return it == by_rref_.end() ? -1 : it->second;
}

void TmCatalog::add(IntMatrix tm, FqMatrix code_rref) {
    by_rref_.emplace(code_rref.a, static_cast<int>(entries_.size()));
    entries_.push_back(Entry{std::move(tm), std::move(code_rref)});
}

namespace {

TmCatalog build_catalog() {
    TmCatalog cat;
    const IntMatrix& seed = weight3_block();
    std::array<int, 4> perm{0, 1, 2, 3};
    do {
        for (int mask = 0; mask < 16; ++mask) {
            IntMatrix tm(4, 4);
            for (int i = 0; i < 4; ++i)
                for (int c = 0; c < 4; ++c) {
                    tm.at(i, c) = seed.at(i, perm[c]);
                    if (mask & (1 << c)) tm.at(i, c) = -tm.at(i, c);
                }
            FqMatrix code = rref_fq(mod_q(tm, 3)).first;
            if (cat.find(code) < 0) cat.add(std::move(tm), std::move(code));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return cat;
}

// Projection onto the 4-subset must equal a catalog code exactly (canonical
// RREF lookup), then every generator extended by each row of T(M) mod 3 must
// stay a codeword. Returns the catalog index or -1.
int tetra4_candidate(const LinearCode& C, const TmCatalog& cat, const std::array<int, 4>& js,
                     std::vector<uint8_t>& w, FqMatrix& proj) {
    const int k = C.k(), n = C.n();
    for (int i = 0; i < k; ++i)
        for (int c = 0; c < 4; ++c) proj.at(i, c) = C.generator.at(i, js[c]);
    FqMatrix rr = rref_fq(proj).first;
    if (rr.rows != 2) return -1;
    const int idx = cat.find(rr);
    if (idx < 0) return -1;
    const IntMatrix& tm = cat.entries()[idx].tm;
    for (int i = 0; i < k; ++i) {
        const uint8_t* g = C.generator.row_ptr(i);
        for (int r = 0; r < 4; ++r) {
            std::copy(g, g + n, w.begin());
            for (int c = 0; c < 4; ++c) {
                long e = tm.at(r, c).get_si();
                w[js[c]] = static_cast<uint8_t>((e % 3 + 3) % 3);
            }
            if (!in_code(C.parity, w.data())) return -1;
        }
    }
    return idx;
}

std::vector<std::array<int, 4>> subset4_list(int n) {
    std::vector<std::array<int, 4>> subsets;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) subsets.push_back({a, b, c, d});
    return subsets;
}

Component make_tetra4(const std::array<int, 4>& js, const IntMatrix& tm) {
    return Component{ComponentKind::Tetra4, {js[0], js[1], js[2], js[3]}, tm};
}

void check_ternary(const LinearCode& C) {
    if (C.q() != 3) throw BadDimensionError("ternary decomposition requires q = 3");
}

}  // namespace

const TmCatalog& tm_candidates() {
    static const TmCatalog cat = build_catalog();
    return cat;
}

std::optional<Component> decompose_length4_ternary(const LinearCode& C, int threads) {
    check_ternary(C);
    const int n = C.n();
    if (n < 4) return std::nullopt;
    const TmCatalog& cat = tm_candidates();
    const auto subsets = subset4_list(n);
    const long total = static_cast<long>(subsets.size());
    std::atomic<long> best{total};
#pragma omp parallel num_threads(std::max(1, threads))
    {
        std::vector<uint8_t> w(n);
        FqMatrix proj(3, C.k(), 4);
#pragma omp for schedule(dynamic, 32)
        for (long idx = 0; idx < total; ++idx) {
            if (idx >= best.load(std::memory_order_relaxed)) continue;
            if (tetra4_candidate(C, cat, subsets[idx], w, proj) >= 0) {
                long cur = best.load();
                while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
                }
            }
        }
    }
    const long hit = best.load();
    if (hit == total) return std::nullopt;
    std::vector<uint8_t> w(n);
    FqMatrix proj(3, C.k(), 4);
    const int entry = tetra4_candidate(C, cat, subsets[hit], w, proj);
    return make_tetra4(subsets[hit], cat.entries()[entry].tm);
}

std::optional<std::vector<Component>> decompose_ternary(const LinearCode& C, int threads) {
    check_ternary(C);
    return detail::decompose_driver(
        C, [threads](const LinearCode& c) { return decompose_length4_ternary(c, threads); });
}

namespace serial_ref {

std::optional<Component> decompose_length4_ternary(const LinearCode& C) {
    check_ternary(C);
    const int n = C.n();
    if (n < 4) return std::nullopt;
    const TmCatalog& cat = tm_candidates();
    std::vector<uint8_t> w(n);
    FqMatrix proj(3, C.k(), 4);
    for (const auto& js : subset4_list(n)) {
        const int entry = tetra4_candidate(C, cat, js, w, proj);
        if (entry >= 0) return make_tetra4(js, cat.entries()[entry].tm);
    }
    return std::nullopt;
}

std::optional<std::vector<Component>> decompose_ternary(const LinearCode& C) {
    check_ternary(C);
    return detail::decompose_driver(
        C, [](const LinearCode& c) { return serial_ref::decompose_length4_ternary(c); });
}

}  // namespace serial_ref

}  // namespace ortho
