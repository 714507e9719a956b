#include "ortho/orthogonality.hpp"

#include <algorithm>
#include <utility>

#include "ortho/weighing.hpp"

namespace ortho {

OrthogonalBasis assemble_basis(const Decomposition& d) {
    IntMatrix B(d.n, d.n);
    int r = 0;
    for (const Component& c : d.components) {
        if (static_cast<int>(c.coords.size()) != c.block.cols() || !c.block.square())
            throw BadDimensionError("component block/coordinate mismatch");
        if (r + c.block.rows() > d.n)
            throw BadDimensionError("components exceed the lattice dimension");
        for (int i = 0; i < c.block.rows(); ++i, ++r)
            for (int j = 0; j < c.block.cols(); ++j) B.at(r, c.coords[j]) = c.block.at(i, j);
    }
    if (r != d.n) throw BadDimensionError("components do not partition the coordinates");
    return OrthogonalBasis{d.n, std::move(B)};
}

bool verify_orthogonal_basis(const IntMatrix& B_in, const OrthogonalBasis& B_orth, int q) {
    if (!B_in.square() || B_in.rows() != B_orth.n || B_orth.basis.rows() != B_orth.n ||
        B_orth.basis.cols() != B_orth.n)
        return false;
    const IntMatrix G = gram(B_orth.basis);
    if (!is_diagonal(G)) return false;
    for (int i = 0; i < B_orth.n; ++i)
        if (sgn(G.at(i, i)) <= 0) return false;
    // Per-row divisibility forced by q*Z^n <= L: q|b_j| in {0, ||b||^2, q||b||^2}.
    Int t;
    for (int i = 0; i < B_orth.n; ++i) {
        const Int& nrm = G.at(i, i);
        for (int j = 0; j < B_orth.n; ++j) {
            t = q * abs(B_orth.basis.at(i, j));
            if (sgn(t) != 0 && t != nrm && t != q * nrm) return false;
        }
    }
    return same_lattice(B_in, B_orth.basis);
}

Verdict decide(const IntMatrix& B, int q, int threads) {
    LatticeBasis lb = validate(B, q);
    LinearCode C = basis_to_code(lb);
    std::optional<std::vector<Component>> comps =
        q == 2 ? decompose_binary(C, threads) : decompose_ternary(C, threads);
    if (!comps) return Verdict{false, std::nullopt, std::nullopt};
    Decomposition d{q, lb.n, std::move(*comps)};
    OrthogonalBasis ob = assemble_basis(d);
    if (!verify_orthogonal_basis(B, ob, q))
        throw VerificationError("assembled basis failed verification");
    return Verdict{true, std::move(ob), std::move(d)};
}

namespace {

// All sign-normalized nonzero integer vectors with entries in [-q, q] and
// squared norm <= q^2, in lexicographic order.
void collect_candidates(int n, int q, int depth, int budget, std::vector<int>& v,
                        std::vector<std::vector<int>>& out) {
    if (depth == n) {
        int first = 0;
        while (first < n && v[first] == 0) ++first;
        if (first < n && v[first] > 0) out.push_back(v);
        return;
    }
    for (int e = -q; e <= q; ++e) {
        if (e * e > budget) continue;
        v[depth] = e;
        collect_candidates(n, q, depth + 1, budget - e * e, v, out);
    }
    v[depth] = 0;
}

bool orthogonal_set_search(const std::vector<std::vector<int>>& members,
                           const std::vector<int>& norms, int n, const Int& det2, const Int& qsq,
                           size_t start, std::vector<size_t>& chosen, const Int& prod) {
    if (static_cast<int>(chosen.size()) == n) return prod == det2;
    const int remaining = n - static_cast<int>(chosen.size());
    Int cap = prod, next;
    for (int i = 0; i < remaining; ++i) cap *= qsq;
    if (cap < det2) return false;
    for (size_t c = start; c < members.size(); ++c) {
        next = prod * norms[c];
        if (next > det2 || !mpz_divisible_p(det2.get_mpz_t(), next.get_mpz_t())) continue;
        bool orth = true;
        for (size_t idx : chosen) {
            int dot = 0;
            for (int j = 0; j < n; ++j) dot += members[c][j] * members[idx][j];
            if (dot != 0) {
                orth = false;
                break;
            }
        }
        if (!orth) continue;
        chosen.push_back(c);
        if (orthogonal_set_search(members, norms, n, det2, qsq, c + 1, chosen, next)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

std::optional<OrthogonalBasis> brute_force_orthogonal(const IntMatrix& B, int q) {
    if (!B.square()) throw BadDimensionError("oracle requires a square basis");
    if (q != 2 && q != 3) throw BadDimensionError("q must be 2 or 3");
    const int n = B.rows();
    if (n > 8) throw TooLargeError("oracle limited to n <= 8");
    HnfSolver solver(B);
    const Int det = solver.abs_det();
    const Int det2 = det * det;
    const Int qsq = q * q;

    std::vector<std::vector<int>> cands;
    std::vector<int> v(n, 0);
    collect_candidates(n, q, 0, q * q, v, cands);

    std::vector<std::vector<int>> members;
    std::vector<int> norms;
    std::vector<Int> vz(n);
    for (const auto& c : cands) {
        for (int j = 0; j < n; ++j) vz[j] = c[j];
        if (!solver.contains(vz)) continue;
        int nrm = 0;
        for (int j = 0; j < n; ++j) nrm += c[j] * c[j];
        members.push_back(c);
        norms.push_back(nrm);
    }

    std::vector<size_t> chosen;
    if (!orthogonal_set_search(members, norms, n, det2, qsq, 0, chosen, Int(1)))
        return std::nullopt;
    IntMatrix basis(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) basis.at(i, j) = members[chosen[i]][j];
    return OrthogonalBasis{n, std::move(basis)};
}

namespace {

// Round half away from zero, exactly.
Int round_half_away(const Rat& x) {
    const Int num = x.get_num();
    const Int den = x.get_den();
    Int r = (2 * abs(num) + den) / (2 * den);
    if (sgn(num) < 0) r = -r;
    return r;
}

}  // namespace

std::vector<Int> cvp_round(const OrthogonalBasis& B, const std::vector<Rat>& t) {
    const int n = B.n;
    if (static_cast<int>(t.size()) != n) throw BadDimensionError("target length mismatch");
    std::vector<Int> result(n);
    Rat proj;
    Int nrm;
    for (int i = 0; i < n; ++i) {
        proj = 0;
        nrm = 0;
        for (int j = 0; j < n; ++j) {
            proj += t[j] * Rat(B.basis.at(i, j));
            nrm += B.basis.at(i, j) * B.basis.at(i, j);
        }
        const Int c = round_half_away(proj / Rat(nrm));
        if (sgn(c) == 0) continue;
        for (int j = 0; j < n; ++j) result[j] += c * B.basis.at(i, j);
    }
    return result;
}

Rat distance2(const std::vector<Int>& v, const std::vector<Rat>& t) {
    if (v.size() != t.size()) throw BadDimensionError("vector length mismatch");
    Rat d = 0, diff;
    for (size_t i = 0; i < v.size(); ++i) {
        diff = Rat(v[i]) - t[i];
        d += diff * diff;
    }
    return d;
}

namespace {

struct CvpSearch {
    const IntMatrix& B;
    const std::vector<Rat>& x0;
    std::vector<std::vector<Rat>> mu;      // mu[i][j], j < i
    std::vector<Rat> star_norm;            // ||b*_i||^2
    std::vector<long> lo, hi;
    std::vector<long> z;
    std::vector<Rat> delta;                // z_i - x0_i for fixed depths
    bool have_best = false;
    Rat best;
    std::vector<Int> best_point;

    // depth runs n-1 .. 0; acc is the partial squared distance of the fixed
    // coefficients
    void descend(int depth, const Rat& acc) {
        const int n = B.rows();
        if (depth < 0) {
            std::vector<Int> zi(n);
            for (int i = 0; i < n; ++i) zi[i] = z[i];
            std::vector<Int> point = row_times_matrix(zi, B);
            if (!have_best || acc < best ||
                (acc == best && std::lexicographical_compare(point.begin(), point.end(),
                                                             best_point.begin(), best_point.end()))) {
                have_best = true;
                best = acc;
                best_point = std::move(point);
            }
            return;
        }
        Rat shift = 0;
        for (int j = depth + 1; j < n; ++j) shift += mu[j][depth] * delta[j];
        const Rat center = x0[depth] - shift;
        std::vector<std::pair<Rat, long>> order;
        order.reserve(hi[depth] - lo[depth] + 1);
        Rat off, term;
        for (long zv = lo[depth]; zv <= hi[depth]; ++zv) {
            off = Rat(zv) - center;
            term = star_norm[depth] * off * off;
            order.emplace_back(term, zv);
        }
        std::sort(order.begin(), order.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        Rat sub;
        for (const auto& [term, zv] : order) {
            sub = acc + term;
            if (have_best && sub > best) break;  // sorted: the rest are no better
            z[depth] = zv;
            delta[depth] = Rat(zv) - x0[depth];
            descend(depth - 1, sub);
        }
    }
};

}  // namespace

std::vector<Int> cvp_exhaustive(const IntMatrix& B, const std::vector<Rat>& t) {
    if (!B.square()) throw BadDimensionError("cvp_exhaustive requires a square basis");
    const int n = B.rows();
    if (n > 6) throw TooLargeError("exhaustive CVP limited to n <= 6");
    if (static_cast<int>(t.size()) != n) throw BadDimensionError("target length mismatch");
    HnfSolver solver(B);
    const std::vector<Rat> x0 = solver.solve_rational(t);

    // Exact Gram-Schmidt of the rows.
    std::vector<std::vector<Rat>> star(n, std::vector<Rat>(n));
    std::vector<std::vector<Rat>> mu(n, std::vector<Rat>(n));
    std::vector<Rat> star_norm(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) star[i][j] = Rat(B.at(i, j));
        for (int j = 0; j < i; ++j) {
            Rat dot = 0;
            for (int c = 0; c < n; ++c) dot += Rat(B.at(i, c)) * star[j][c];
            mu[i][j] = dot / star_norm[j];
            for (int c = 0; c < n; ++c) star[i][c] -= mu[i][j] * star[j][c];
        }
        star_norm[i] = 0;
        for (int c = 0; c < n; ++c) star_norm[i] += star[i][c] * star[i][c];
    }

    // Coefficient box: round(t * B^-1) with +-3n slack (covers n*q for both q).
    CvpSearch s{B, x0, std::move(mu), std::move(star_norm), {}, {}, {}, {}, false, Rat(0), {}};
    s.lo.resize(n);
    s.hi.resize(n);
    s.z.assign(n, 0);
    s.delta.assign(n, Rat(0));
    Int f;
    for (int i = 0; i < n; ++i) {
        mpz_fdiv_q(f.get_mpz_t(), x0[i].get_num().get_mpz_t(), x0[i].get_den().get_mpz_t());
        if (!f.fits_slong_p()) throw TooLargeError("target coefficients out of range");
        s.lo[i] = f.get_si() - 3 * n;
        mpz_cdiv_q(f.get_mpz_t(), x0[i].get_num().get_mpz_t(), x0[i].get_den().get_mpz_t());
        s.hi[i] = f.get_si() + 3 * n;
    }
    s.descend(n - 1, Rat(0));
    return s.best_point;
}

namespace {

struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    uint64_t below(uint64_t m) { return next() % m; }
};

}  // namespace

IntMatrix gen_instance(int q, int n, uint64_t seed, InstanceKind kind, int code_rank) {
    if ((q != 2 && q != 3) || n < 1) throw BadDimensionError("bad instance dimensions");
    SplitMix64 rng(seed * 0x9e3779b97f4a7c15ULL + static_cast<uint64_t>(q) * 0x100000001b3ULL +
                   static_cast<uint64_t>(n));

    if (kind == InstanceKind::Orthogonal) {
        std::vector<IntMatrix> blocks;
        int rem = n;
        while (rem > 0) {
            const int big = (q == 2) ? 2 : 4;
            const int nkinds = rem >= big ? 3 : 2;
            const int pick = static_cast<int>(rng.below(nkinds));
            if (pick == 0) {
                blocks.push_back(IntMatrix::scalar(1, 1));
            } else if (pick == 1) {
                blocks.push_back(IntMatrix::scalar(1, q));
            } else if (q == 2) {
                blocks.push_back(weight2_block());
            } else {
                const auto& entries = tm_candidates().entries();
                blocks.push_back(entries[rng.below(entries.size())].tm);
            }
            rem -= blocks.back().rows();
        }
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        for (int i = n - 1; i > 0; --i)
            std::swap(perm[i], perm[rng.below(static_cast<uint64_t>(i) + 1)]);
        IntMatrix B(n, n);
        int row = 0, off = 0;
        for (const IntMatrix& blk : blocks) {
            for (int i = 0; i < blk.rows(); ++i, ++row)
                for (int j = 0; j < blk.cols(); ++j) B.at(row, perm[off + j]) = blk.at(i, j);
            off += blk.cols();
        }
        static const long coef[4] = {-2, -1, 1, 2};
        for (int t = 0; t < 3 * n && n > 1; ++t) {
            const int i = static_cast<int>(rng.below(n));
            int j = static_cast<int>(rng.below(n - 1));
            if (j >= i) ++j;
            B.add_row_multiple(i, j, Int(coef[rng.below(4)]));
        }
        return B;
    }

    if (code_rank < 0 || code_rank > n) throw BadDimensionError("bad code rank");
    for (;;) {
        FqMatrix G(q, code_rank, n);
        for (int i = 0; i < code_rank; ++i)
            for (int j = 0; j < n; ++j) G.at(i, j) = static_cast<uint8_t>(rng.below(q));
        if (rref_fq(G).second != code_rank) continue;
        return code_to_basis(make_code(G)).basis;
    }
}

}  // namespace ortho
