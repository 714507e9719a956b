#include "ortho/weighing.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

namespace ortho {

const IntMatrix& weight2_block() {
    static const IntMatrix b{{1, 1}, {1, -1}};
    return b;
}

const IntMatrix& weight3_block() {
    static const IntMatrix m{{1, 1, 1, 0}, {1, -1, 0, 1}, {1, 0, -1, -1}, {0, 1, -1, 1}};
    return m;
}

bool is_weighing(const IntMatrix& W, int k) {
    if (!W.square()) return false;
    const int n = W.rows();
    std::vector<int> colw(n, 0);
    for (int i = 0; i < n; ++i) {
        int roww = 0;
        for (int j = 0; j < n; ++j) {
            const Int& e = W.at(i, j);
            if (e != 0 && e != 1 && e != -1) return false;
            if (sgn(e) != 0) {
                ++roww;
                ++colw[j];
            }
        }
        if (roww != k) return false;
    }
    for (int j = 0; j < n; ++j)
        if (colw[j] != k) return false;
    IntMatrix G = gram(W);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (G.at(i, j) != (i == j ? Int(k) : Int(0))) return false;
    return true;
}

WeighingMatrix standard_weighing(int n, int k) {
    const IntMatrix* block = nullptr;
    if (k == 2 && n >= 2 && n % 2 == 0)
        block = &weight2_block();
    else if (k == 3 && n >= 4 && n % 4 == 0)
        block = &weight3_block();
    else
        throw BadDimensionError("no standard weighing matrix for this (n, k)");
    const int b = block->rows();
    IntMatrix W(n, n);
    for (int s = 0; s < n; s += b)
        for (int i = 0; i < b; ++i)
            for (int j = 0; j < b; ++j) W.at(s + i, s + j) = block->at(i, j);
    return WeighingMatrix{n, k, std::move(W)};
}

namespace {

using Row = std::vector<int8_t>;

// Prefix of a row up to its sign: the lexicographically smaller of +-prefix.
Row sign_canonical(const Row& r) {
    Row neg(r.size());
    for (size_t i = 0; i < r.size(); ++i) neg[i] = static_cast<int8_t>(-r[i]);
    return std::min(r, neg);
}

std::vector<Row> prefix_multiset(const std::vector<Row>& rows, int depth) {
    std::vector<Row> keys;
    keys.reserve(rows.size());
    for (const Row& r : rows) keys.push_back(sign_canonical(Row(r.begin(), r.begin() + depth)));
    std::sort(keys.begin(), keys.end());
    return keys;
}

std::vector<Row> to_rows(const IntMatrix& W) {
    std::vector<Row> rows(W.rows(), Row(W.cols()));
    for (int i = 0; i < W.rows(); ++i)
        for (int j = 0; j < W.cols(); ++j) rows[i][j] = static_cast<int8_t>(W.at(i, j).get_si());
    return rows;
}

// DFS over signed column assignments: build W1*Q column by column and prune
// on sign-canonical row-prefix multisets against W2.
bool match_columns(const std::vector<Row>& w1, const std::vector<Row>& w2,
                   std::vector<Row>& built, std::vector<char>& used, int depth) {
    const int n = static_cast<int>(w1.size());
    if (depth == n) return true;
    const std::vector<Row> target = prefix_multiset(w2, depth + 1);
    for (int s = 0; s < n; ++s) {
        if (used[s]) continue;
        for (int eps : {1, -1}) {
            for (int i = 0; i < n; ++i) built[i][depth] = static_cast<int8_t>(eps * w1[i][s]);
            bool prefix_ok = true;
            {
                std::vector<Row> got;
                got.reserve(n);
                for (int i = 0; i < n; ++i)
                    got.push_back(sign_canonical(Row(built[i].begin(), built[i].begin() + depth + 1)));
                std::sort(got.begin(), got.end());
                prefix_ok = got == target;
            }
            if (!prefix_ok) continue;
            used[s] = 1;
            if (match_columns(w1, w2, built, used, depth + 1)) return true;
            used[s] = 0;
        }
    }
    return false;
}

}  // namespace

bool weighing_equivalent(const IntMatrix& W1, const IntMatrix& W2) {
    if (!W1.square() || !W2.square()) return false;
    if (W1.rows() > 8 || W2.rows() > 8) throw TooLargeError("equivalence search limited to n <= 8");
    if (W1.rows() != W2.rows()) return false;
    const std::vector<Row> r1 = to_rows(W1);
    const std::vector<Row> r2 = to_rows(W2);
    const int n = W1.rows();
    std::vector<Row> built(n, Row(n, 0));
    std::vector<char> used(n, 0);
    return match_columns(r1, r2, built, used, 0);
}

namespace {

// All sign-normalized candidate rows: support of size k, first nonzero +1,
// in deterministic (support-lex, sign-pattern) order.
std::vector<Row> candidate_rows(int n, int k) {
    std::vector<Row> out;
    std::vector<int> support(k);
    // iterate k-subsets of [n] lexicographically
    for (int i = 0; i < k; ++i) support[i] = i;
    if (k > n || k < 1) return out;
    for (;;) {
        for (int signs = 0; signs < (1 << (k - 1)); ++signs) {
            Row r(n, 0);
            r[support[0]] = 1;
            for (int t = 1; t < k; ++t)
                r[support[t]] = static_cast<int8_t>((signs >> (t - 1)) & 1 ? -1 : 1);
            out.push_back(std::move(r));
        }
        int i = k - 1;
        while (i >= 0 && support[i] == n - k + i) --i;
        if (i < 0) break;
        ++support[i];
        for (int t = i + 1; t < k; ++t) support[t] = support[t - 1] + 1;
    }
    return out;
}

void enumerate_rec(const std::vector<Row>& cand, int n, int k, std::vector<int>& chosen,
                   std::vector<int>& colw, std::vector<IntMatrix>& out) {
    if (static_cast<int>(chosen.size()) == n) {
        for (int j = 0; j < n; ++j)
            if (colw[j] != k) return;
        IntMatrix W(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) W.at(i, j) = cand[chosen[i]][j];
        out.push_back(std::move(W));
        return;
    }
    for (int c = 0; c < static_cast<int>(cand.size()); ++c) {
        const Row& r = cand[c];
        bool ok = true;
        for (int prev : chosen) {
            int dot = 0;
            for (int j = 0; j < n; ++j) dot += r[j] * cand[prev][j];
            if (dot != 0) {
                ok = false;
                break;
            }
        }
        for (int j = 0; j < n && ok; ++j)
            if (r[j] != 0 && colw[j] + 1 > k) ok = false;
        if (!ok) continue;
        chosen.push_back(c);
        for (int j = 0; j < n; ++j)
            if (r[j] != 0) ++colw[j];
        enumerate_rec(cand, n, k, chosen, colw, out);
        for (int j = 0; j < n; ++j)
            if (r[j] != 0) --colw[j];
        chosen.pop_back();
    }
}

}  // namespace

std::vector<IntMatrix> enumerate_weighing(int n, int k) {
    if (n > 4) throw TooLargeError("enumeration limited to n <= 4");
    if (n < 1) throw BadDimensionError("n must be >= 1");
    const std::vector<Row> cand = candidate_rows(n, k);
    std::vector<IntMatrix> out;
    std::vector<int> chosen, colw(n, 0);
    enumerate_rec(cand, n, k, chosen, colw, out);
    return out;
}

}  // namespace ortho
