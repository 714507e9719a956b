#include <algorithm>
#include <atomic>
#include <utility>

#include "ortho/decompose.hpp"
#include "ortho/weighing.hpp"

namespace ortho {

namespace {

// Projection of C onto {j1,j2} must be exactly {00,11}: every generator
// projects into {00,11}, some generator hits 11, and both extensions of every
// projected generator are codewords.
bool rep2_candidate(const LinearCode& C, int j1, int j2, std::vector<uint8_t>& w) {
    const int k = C.k(), n = C.n();
    bool has11 = false;
    for (int i = 0; i < k; ++i) {
        const uint8_t a = C.generator.at(i, j1);
        if (a != C.generator.at(i, j2)) return false;
        if (a == 1) has11 = true;
    }
    if (!has11) return false;
    for (int i = 0; i < k; ++i) {
        const uint8_t* g = C.generator.row_ptr(i);
        const uint8_t flipped = static_cast<uint8_t>(1 - g[j1]);
        std::copy(g, g + n, w.begin());
        w[j1] = flipped;
        w[j2] = flipped;
        if (!in_code(C.parity, w.data())) return false;
    }
    return true;
}

std::vector<std::pair<int, int>> pair_list(int n) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int j1 = 0; j1 < n; ++j1)
        for (int j2 = j1 + 1; j2 < n; ++j2) pairs.emplace_back(j1, j2);
    return pairs;
}

Component make_rep2(int j1, int j2) {
    return Component{ComponentKind::Rep2, {j1, j2}, weight2_block()};
}

void check_binary(const LinearCode& C) {
    if (C.q() != 2) throw BadDimensionError("binary decomposition requires q = 2");
}

}  // namespace

std::optional<Component> decompose_length2_binary(const LinearCode& C, int threads) {
    check_binary(C);
    const int n = C.n();
    if (n < 2) return std::nullopt;
    const auto pairs = pair_list(n);
    const long total = static_cast<long>(pairs.size());
    std::atomic<long> best{total};
#pragma omp parallel num_threads(std::max(1, threads))
    {
        std::vector<uint8_t> w(n);
#pragma omp for schedule(dynamic, 16)
        for (long idx = 0; idx < total; ++idx) {
            if (idx >= best.load(std::memory_order_relaxed)) continue;
            if (rep2_candidate(C, pairs[idx].first, pairs[idx].second, w)) {
                long cur = best.load();
                while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
                }
            }
        }
    }
    const long hit = best.load();
    if (hit == total) return std::nullopt;
    return make_rep2(pairs[hit].first, pairs[hit].second);
}

std::optional<std::vector<Component>> decompose_binary(const LinearCode& C, int threads) {
    check_binary(C);
    return detail::decompose_driver(
        C, [threads](const LinearCode& c) { return decompose_length2_binary(c, threads); });
}

namespace serial_ref {

std::optional<Component> decompose_length2_binary(const LinearCode& C) {
    check_binary(C);
    const int n = C.n();
    std::vector<uint8_t> w(n);
    for (int j1 = 0; j1 < n; ++j1)
        for (int j2 = j1 + 1; j2 < n; ++j2)
            if (rep2_candidate(C, j1, j2, w)) return make_rep2(j1, j2);
    return std::nullopt;
}

std::optional<std::vector<Component>> decompose_binary(const LinearCode& C) {
    check_binary(C);
    return detail::decompose_driver(
        C, [](const LinearCode& c) { return serial_ref::decompose_length2_binary(c); });
}

}  // namespace serial_ref

}  // namespace ortho
