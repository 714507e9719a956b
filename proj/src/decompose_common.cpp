#include <numeric>

#include "ortho/decompose.hpp"
#include "ortho/weighing.hpp"

namespace ortho {

const char* kind_name(ComponentKind kind, int q) {
    switch (kind) {
        case ComponentKind::Full1: return "Z";
        case ComponentKind::Zero1: return q == 2 ? "2Z" : "3Z";
        case ComponentKind::Rep2: return "Rep2";
        case ComponentKind::Tetra4: return "Tetra4";
    }
    return "?";
}

namespace {

IntMatrix scalar_block(long v) {
    IntMatrix b(1, 1);
    b.at(0, 0) = v;
    return b;
}

}  // namespace

std::optional<Component> decompose_length1(const LinearCode& C) {
    const int n = C.n(), k = C.k(), q = C.q();
    for (int j = 0; j < n; ++j) {
        bool zero = true;
        for (int i = 0; i < k && zero; ++i) zero = C.generator.at(i, j) == 0;
        if (zero) return Component{ComponentKind::Zero1, {j}, scalar_block(q)};
    }
    // The length-1 loop: every projected generator extended by each residue
    // at position j must stay a codeword.
    std::vector<uint8_t> w(n);
    for (int j = 0; j < n; ++j) {
        bool ok = true;
        for (int i = 0; i < k && ok; ++i) {
            const uint8_t* g = C.generator.row_ptr(i);
            for (uint8_t v = 0; v < q && ok; ++v) {
                if (v == g[j]) continue;  // the generator itself
                std::copy(g, g + n, w.begin());
                w[j] = v;
                ok = in_code(C.parity, w.data());
            }
        }
        if (ok) return Component{ComponentKind::Full1, {j}, scalar_block(1)};
    }
    return std::nullopt;
}

namespace detail {

std::optional<std::vector<Component>> decompose_driver(
    const LinearCode& C,
    const std::function<std::optional<Component>(const LinearCode&)>& long_scan) {
    LinearCode cur = C;
    std::vector<int> orig(cur.n());
    std::iota(orig.begin(), orig.end(), 0);
    std::vector<Component> out;
    while (cur.n() > 0) {
        std::optional<Component> s = decompose_length1(cur);
        if (!s) s = long_scan(cur);
        if (!s) return std::nullopt;
        std::vector<char> taken(cur.n(), 0);
        for (int j : s->coords) taken[j] = 1;
        Component comp = std::move(*s);
        for (int& j : comp.coords) j = orig[j];
        out.push_back(std::move(comp));
        std::vector<int> rest, rest_orig;
        for (int j = 0; j < cur.n(); ++j)
            if (!taken[j]) {
                rest.push_back(j);
                rest_orig.push_back(orig[j]);
            }
        if (rest.empty()) break;
        cur = project_code(cur, rest);
        orig = std::move(rest_orig);
    }
    return out;
}

}  // namespace detail

}  // namespace ortho
