#include "doctest.h"
#include "ortho/orthogonality.hpp"
#include "test_support.hpp"

using namespace ortho;
using test::TestRng;

namespace {

LinearCode code2(std::initializer_list<std::initializer_list<int>> rows) {
    return make_code(FqMatrix(2, rows));
}

const LinearCode kEvenWeight3 = code2({{1, 1, 0}, {0, 1, 1}});

// kind + sorted coords, order-insensitive comparison of component lists
using Sig = std::pair<ComponentKind, std::vector<int>>;
std::vector<Sig> signature(const std::vector<Component>& comps) {
    std::vector<Sig> s;
    for (const auto& c : comps) {
        std::vector<int> coords = c.coords;
        std::sort(coords.begin(), coords.end());
        s.emplace_back(c.kind, std::move(coords));
    }
    std::sort(s.begin(), s.end());
    return s;
}

bool sound(const LinearCode& C, const std::vector<Component>& comps) {
    Decomposition d{C.q(), C.n(), comps};
    OrthogonalBasis ob = assemble_basis(d);
    return verify_orthogonal_basis(code_to_basis(C).basis, ob, C.q());
}

}  // namespace

TEST_CASE("decompose_length1 on binary codes") {
    auto full = decompose_length1(code2({{1, 0}, {0, 1}}));
    REQUIRE(full.has_value());
    CHECK(full->kind == ComponentKind::Full1);
    CHECK(full->coords == std::vector<int>{0});

    CHECK_FALSE(decompose_length1(kEvenWeight3).has_value());

    auto zero = decompose_length1(code2({{0, 1}}));
    REQUIRE(zero.has_value());
    CHECK(zero->kind == ComponentKind::Zero1);
    CHECK(zero->coords == std::vector<int>{0});
    CHECK(zero->block.at(0, 0) == 2);
}

TEST_CASE("decompose_length2_binary examples") {
    auto rep = decompose_length2_binary(code2({{1, 1}}));
    REQUIRE(rep.has_value());
    CHECK(rep->kind == ComponentKind::Rep2);
    CHECK(rep->coords == std::vector<int>{0, 1});
    CHECK(rep->block == IntMatrix{{1, 1}, {1, -1}});

    CHECK_FALSE(decompose_length2_binary(kEvenWeight3).has_value());

    // {00,11} x {0,1} with coordinates shuffled by the transposition (1 3):
    // generator rows become (0,1,1) for the pair {2,3} and (1,0,0)
    LinearCode shuffled = code2({{0, 1, 1}, {1, 0, 0}});
    auto s = decompose_length2_binary(shuffled);
    REQUIRE(s.has_value());
    CHECK(s->coords == std::vector<int>{1, 2});
    // verify by membership: both extensions of the remaining generator
    auto words = test::codeword_set(shuffled);
    CHECK(words.count({0, 1, 1}));
    CHECK(words.count({1, 1, 1}));
    CHECK(words.count({1, 0, 0}));
}

TEST_CASE("decompose_binary drivers") {
    auto full3 = decompose_binary(code2({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    REQUIRE(full3.has_value());
    REQUIRE(full3->size() == 3);
    for (int i = 0; i < 3; ++i) {
        CHECK((*full3)[i].kind == ComponentKind::Full1);
        CHECK((*full3)[i].coords == std::vector<int>{i});
    }

    // product of {00,11} on coords {0,1} and {0,1} on coord 2; the split set
    // is fixed, the discovery order follows the attempt ordering
    LinearCode prod = code2({{1, 1, 0}, {0, 0, 1}});
    auto comps = decompose_binary(prod);
    REQUIRE(comps.has_value());
    CHECK(signature(*comps) ==
          std::vector<Sig>{{ComponentKind::Full1, {2}}, {ComponentKind::Rep2, {0, 1}}});
    CHECK(sound(prod, *comps));

    CHECK_FALSE(decompose_binary(kEvenWeight3).has_value());
}

TEST_CASE("binary completeness against the oracle, length <= 4") {
    for (int n = 1; n <= 4; ++n) {
        for (const FqMatrix& G : test::all_subspaces(2, n)) {
            LinearCode C = make_code(G);
            LatticeBasis B = code_to_basis(C);
            auto comps = decompose_binary(C);
            auto oracle = brute_force_orthogonal(B.basis, 2);
            REQUIRE_MESSAGE(comps.has_value() == oracle.has_value(),
                            "verdict mismatch at n=" << n);
            if (comps) CHECK(sound(C, *comps));
        }
    }
}

TEST_CASE("binary decision is permutation invariant") {
    TestRng rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(5));
        const int k = static_cast<int>(rng.below(n + 1));
        FqMatrix G(2, k, n);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < n; ++j) G.at(i, j) = static_cast<uint8_t>(rng.below(2));
        LinearCode C = make_code(G);

        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
        FqMatrix PG(2, k, n);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < n; ++j) PG.at(i, j) = G.at(i, perm[j]);
        LinearCode PC = make_code(PG);

        auto a = decompose_binary(C);
        auto b = decompose_binary(PC);
        CHECK(a.has_value() == b.has_value());
        if (a) {
            int cov = 0;
            for (const auto& c : *a) cov += static_cast<int>(c.coords.size());
            CHECK(cov == n);
            CHECK(sound(C, *a));
        }
    }
}

TEST_CASE("parallel pair scan agrees with the serial reference") {
    TestRng rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(7));
        const int k = static_cast<int>(rng.below(n + 1));
        FqMatrix G(2, k, n);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < n; ++j) G.at(i, j) = static_cast<uint8_t>(rng.below(2));
        LinearCode C = make_code(G);

        auto par = decompose_length2_binary(C, 4);
        auto ser = serial_ref::decompose_length2_binary(C);
        CHECK(par.has_value() == ser.has_value());
        if (par) {
            CHECK(par->coords == ser->coords);
            CHECK(par->block == ser->block);
        }

        auto dp = decompose_binary(C, 4);
        auto ds = serial_ref::decompose_binary(C);
        CHECK(dp.has_value() == ds.has_value());
        if (dp) {
            REQUIRE(dp->size() == ds->size());
            for (size_t i = 0; i < dp->size(); ++i) {
                CHECK((*dp)[i].kind == (*ds)[i].kind);
                CHECK((*dp)[i].coords == (*ds)[i].coords);
            }
        }
    }
}
