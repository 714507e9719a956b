#include <algorithm>
#include <set>

#include "doctest.h"
#include "ortho/orthogonality.hpp"
#include "ortho/weighing.hpp"
#include "test_support.hpp"

using namespace ortho;
using test::TestRng;

namespace {

LinearCode code3(std::initializer_list<std::initializer_list<int>> rows) {
    return make_code(FqMatrix(3, rows));
}

LinearCode tetracode() { return make_code(mod_q(weight3_block(), 3)); }

bool sound(const LinearCode& C, const std::vector<Component>& comps) {
    Decomposition d{C.q(), C.n(), comps};
    OrthogonalBasis ob = assemble_basis(d);
    return verify_orthogonal_basis(code_to_basis(C).basis, ob, C.q());
}

}  // namespace

TEST_CASE("tm_candidates catalog") {
    const TmCatalog& cat = tm_candidates();

    // golden count, cross-checked by an independent dedup over full codeword
    // sets of all 16 x 24 raw candidates
    CHECK(cat.size() == 8);
    std::set<std::set<std::vector<uint8_t>>> dedup;
    std::array<int, 4> perm{0, 1, 2, 3};
    do {
        for (int mask = 0; mask < 16; ++mask) {
            IntMatrix tm(4, 4);
            for (int i = 0; i < 4; ++i)
                for (int c = 0; c < 4; ++c) {
                    tm.at(i, c) = weight3_block().at(i, perm[c]);
                    if (mask & (1 << c)) tm.at(i, c) = -tm.at(i, c);
                }
            dedup.insert(test::codeword_set(make_code(mod_q(tm, 3))));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(dedup.size() == cat.size());

    // the seed matrix itself is the first entry, carrying the tetracode
    CHECK(cat.entries()[0].tm == weight3_block());
    CHECK(cat.entries()[0].code == tetracode().generator);

    const IntMatrix gram3 = IntMatrix::scalar(4, 3);
    std::set<std::vector<uint8_t>> seen;
    for (const auto& e : cat.entries()) {
        CHECK(gram(e.tm) == gram3);
        CHECK(e.code.rows == 2);
        CHECK(test::codeword_set(make_code(e.code)).size() == 9);
        CHECK(seen.insert(e.code.a).second);  // pairwise distinct codes
    }
}

TEST_CASE("decompose_length1 on ternary codes") {
    auto full = decompose_length1(code3({{1, 0}, {0, 1}}));
    REQUIRE(full.has_value());
    CHECK(full->kind == ComponentKind::Full1);
    CHECK(full->coords == std::vector<int>{0});

    CHECK_FALSE(decompose_length1(code3({{1, 1}})).has_value());

    // {0} x tetracode
    FqMatrix g(3, 2, 5);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 4; ++j) g.at(i, j + 1) = tetracode().generator.at(i, j);
    auto zero = decompose_length1(make_code(g));
    REQUIRE(zero.has_value());
    CHECK(zero->kind == ComponentKind::Zero1);
    CHECK(zero->coords == std::vector<int>{0});
    CHECK(zero->block.at(0, 0) == 3);
}

TEST_CASE("decompose_length4_ternary examples") {
    auto t = decompose_length4_ternary(tetracode());
    REQUIRE(t.has_value());
    CHECK(t->kind == ComponentKind::Tetra4);
    CHECK(t->coords == std::vector<int>{0, 1, 2, 3});
    CHECK(t->block == weight3_block());

    // tetracode x {0,1,2} under a coordinate permutation
    TestRng rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        FqMatrix G(3, 3, 5);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 4; ++j) G.at(i, j) = tetracode().generator.at(i, j);
        G.at(2, 4) = 1;
        std::vector<int> perm(5);
        for (int i = 0; i < 5; ++i) perm[i] = i;
        for (int i = 4; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
        FqMatrix PG(3, 3, 5);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 5; ++j) PG.at(i, j) = G.at(i, perm[j]);
        LinearCode C = make_code(PG);

        auto s = decompose_length4_ternary(C);
        REQUIRE(s.has_value());
        // the returned quadruple must be the image of {0,1,2,3}
        std::vector<int> expect;
        for (int j = 0; j < 5; ++j)
            if (perm[j] != 4) expect.push_back(j);
        CHECK(s->coords == expect);
        // and the split verifies once the leftover Full1 coordinate is added
        int rest = 0;
        while (perm[rest] != 4) ++rest;
        std::vector<Component> comps = {*s,
                                        Component{ComponentKind::Full1, {rest}, IntMatrix{{1}}}};
        CHECK(sound(C, comps));
    }

    // {00,11,22} padded with zero columns to length 4: no 4-subset matches
    auto none = decompose_length4_ternary(code3({{1, 1, 0, 0}}));
    CHECK_FALSE(none.has_value());
}

TEST_CASE("decompose_ternary drivers") {
    auto full2 = decompose_ternary(code3({{1, 0}, {0, 1}}));
    REQUIRE(full2.has_value());
    REQUIRE(full2->size() == 2);
    CHECK((*full2)[0].kind == ComponentKind::Full1);
    CHECK((*full2)[1].kind == ComponentKind::Full1);

    // tetracode x zero-code(1): Zero1 found first by the attempt order
    FqMatrix G(3, 2, 5);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 4; ++j) G.at(i, j) = tetracode().generator.at(i, j);
    LinearCode C = make_code(G);
    auto comps = decompose_ternary(C);
    REQUIRE(comps.has_value());
    REQUIRE(comps->size() == 2);
    CHECK((*comps)[0].kind == ComponentKind::Zero1);
    CHECK((*comps)[0].coords == std::vector<int>{4});
    CHECK((*comps)[1].kind == ComponentKind::Tetra4);
    CHECK((*comps)[1].coords == std::vector<int>{0, 1, 2, 3});
    CHECK(sound(C, *comps));

    CHECK_FALSE(decompose_ternary(code3({{1, 1}})).has_value());
}

TEST_CASE("ternary completeness against the oracle, length <= 4") {
    int orthogonal_count = 0;
    for (int n = 1; n <= 4; ++n) {
        for (const FqMatrix& G : test::all_subspaces(3, n)) {
            LinearCode C = make_code(G);
            LatticeBasis B = code_to_basis(C);
            auto comps = decompose_ternary(C);
            auto oracle = brute_force_orthogonal(B.basis, 3);
            REQUIRE_MESSAGE(comps.has_value() == oracle.has_value(),
                            "verdict mismatch at n=" << n);
            if (comps) {
                CHECK(sound(C, *comps));
                ++orthogonal_count;
            }
        }
    }
    CHECK(orthogonal_count > 0);
}

TEST_CASE("every Tetra4 block is catalogued and has Gram 3I") {
    TestRng rng(31);
    const IntMatrix gram3 = IntMatrix::scalar(4, 3);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 4 + static_cast<int>(rng.below(4));
        const int k = static_cast<int>(rng.below(n + 1));
        FqMatrix G(3, k, n);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < n; ++j) G.at(i, j) = static_cast<uint8_t>(rng.below(3));
        auto comps = decompose_ternary(make_code(G));
        if (!comps) continue;
        for (const auto& c : *comps) {
            if (c.kind != ComponentKind::Tetra4) continue;
            CHECK(gram(c.block) == gram3);
            CHECK(tm_candidates().find(rref_fq(mod_q(c.block, 3)).first) >= 0);
        }
    }
}

TEST_CASE("negating a coordinate preserves the ternary verdict") {
    TestRng rng(57);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(6));
        const int k = static_cast<int>(rng.below(n + 1));
        FqMatrix G(3, k, n);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < n; ++j) G.at(i, j) = static_cast<uint8_t>(rng.below(3));
        const int col = static_cast<int>(rng.below(n));
        FqMatrix NG = G;
        for (int i = 0; i < k; ++i) NG.at(i, col) = static_cast<uint8_t>((2 * NG.at(i, col)) % 3);
        CHECK(decompose_ternary(make_code(G)).has_value() ==
              decompose_ternary(make_code(NG)).has_value());
    }
}

TEST_CASE("parallel subset scan agrees with the serial reference") {
    TestRng rng(77);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 4 + static_cast<int>(rng.below(5));
        const int k = static_cast<int>(rng.below(n + 1));
        FqMatrix G(3, k, n);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < n; ++j) G.at(i, j) = static_cast<uint8_t>(rng.below(3));
        LinearCode C = make_code(G);

        auto par = decompose_length4_ternary(C, 4);
        auto ser = serial_ref::decompose_length4_ternary(C);
        CHECK(par.has_value() == ser.has_value());
        if (par) {
            CHECK(par->coords == ser->coords);
            CHECK(par->block == ser->block);
        }

        auto dp = decompose_ternary(C, 4);
        auto ds = serial_ref::decompose_ternary(C);
        CHECK(dp.has_value() == ds.has_value());
        if (dp) {
            REQUIRE(dp->size() == ds->size());
            for (size_t i = 0; i < dp->size(); ++i) {
                CHECK((*dp)[i].kind == (*ds)[i].kind);
                CHECK((*dp)[i].coords == (*ds)[i].coords);
                CHECK((*dp)[i].block == (*ds)[i].block);
            }
        }
    }

    // seeded orthogonal instances exercise the success path
    for (uint64_t seed = 1; seed <= 10; ++seed) {
        IntMatrix B = gen_instance(3, 12, seed, InstanceKind::Orthogonal);
        LinearCode C = basis_to_code(validate(B, 3));
        auto dp = decompose_ternary(C, 4);
        auto ds = serial_ref::decompose_ternary(C);
        REQUIRE(dp.has_value());
        REQUIRE(ds.has_value());
        CHECK(dp->size() == ds->size());
    }
}
