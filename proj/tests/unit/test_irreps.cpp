#include <catch2/catch_amalgamated.hpp>

#include "../support/builders.hpp"
#include "gdual/irreps.hpp"

using namespace gdual;
using namespace testsupport;

TEST_CASE("dual of Z3 consists of the three cube-root characters") {
    FiniteGroup z3 = cyclic_group(3);
    DualSet dual = enumerate_twisted_irreps(z3, trivial_cocycle(3), 0);
    REQUIRE(dual.reps.size() == 3);
    for (const auto& r : dual.reps) REQUIRE(r.dim == 1);
    // oracle: 1-dim reps are exactly maps g -> w^{kg} with w^3 = 1
    cplx w = phase_from_turns(1, 3);
    std::vector<std::vector<cplx>> expected;
    for (int k = 0; k < 3; ++k)
        expected.push_back({cplx{1, 0}, std::pow(w, k), std::pow(w, 2 * k)});
    for (const auto& e : expected) {
        bool found = false;
        for (const auto& r : dual.reps) {
            double dist = 0.0;
            for (int g = 0; g < 3; ++g) dist = std::max(dist, std::abs(r.character[g] - e[g]));
            found = found || dist < 1e-9;
        }
        REQUIRE(found);
    }
}

TEST_CASE("twisted Klein-four group has a single 2-dimensional class") {
    ExtensionSpec s = klein_spec();
    HCocycle ht = klein_twist(s);
    GroupCocycle t;
    t.order = 4;
    t.values = ht.values;
    DualSet dual = enumerate_twisted_irreps(s.G, t, 0);
    REQUIRE(dual.reps.size() == 1);
    REQUIRE(dual.reps[0].dim == 2);
    // brute-force trace: chi(1) = 2 and chi(g) = 0 elsewhere
    REQUIRE(std::abs(dual.reps[0].character[0] - cplx{2.0, 0.0}) < 1e-9);
    for (int g = 1; g < 4; ++g) REQUIRE(std::abs(dual.reps[0].character[g]) < 1e-9);
}

TEST_CASE("trivial group has the trivial dual") {
    FiniteGroup z1 = cyclic_group(1);
    DualSet dual = enumerate_twisted_irreps(z1, trivial_cocycle(1), 0);
    REQUIRE(dual.reps.size() == 1);
    REQUIRE(dual.reps[0].dim == 1);
    REQUIRE(dual.reps[0].U[0](0, 0) == cplx{1.0, 0.0});
}

TEST_CASE("sum of squared dimensions and representation laws") {
    struct Case {
        FiniteGroup g;
        GroupCocycle t;
    };
    std::vector<Case> cases;
    for (int n : {2, 3, 4, 5, 6, 8}) cases.push_back({cyclic_group(n), trivial_cocycle(n)});
    {
        ExtensionSpec s = s3_spec();
        FiniteGroup h = build_H(s);
        cases.push_back({h, trivial_cocycle(6)});
        HCocycle t = coboundary_twist(s, h, 17);
        GroupCocycle gt;
        gt.order = 6;
        gt.values = t.values;
        cases.push_back({h, gt});
    }
    {
        ExtensionSpec k = klein_spec();
        HCocycle ht = klein_twist(k);
        GroupCocycle t;
        t.order = 4;
        t.values = ht.values;
        cases.push_back({k.G, t});
    }
    for (std::size_t i = 0; i < cases.size(); ++i) {
        DualSet dual = enumerate_twisted_irreps(cases[i].g, cases[i].t, i);
        REQUIRE(dual.sum_of_squares() == cases[i].g.order);
        for (const auto& r : dual.reps) {
            for (int x = 0; x < cases[i].g.order; ++x) {
                REQUIRE(r.U[x].unitarity_defect() < 1e-8);
                for (int y = 0; y < cases[i].g.order; ++y) {
                    CMatrix lhs = r.U[x] * r.U[y];
                    CMatrix rhs = r.U[cases[i].g.op(x, y)] * cases[i].t.at(x, y);
                    REQUIRE((lhs - rhs).norm_inf() < 1e-8);
                }
            }
        }
    }
}

TEST_CASE("regular character at the identity equals the dimension") {
    ExtensionSpec s = s3_spec();
    FiniteGroup h = build_H(s);
    DualSet dual = enumerate_twisted_irreps(h, trivial_cocycle(6), 0);
    for (const auto& r : dual.reps)
        REQUIRE(std::abs(r.character[h.identity] - cplx{(double)r.dim, 0.0}) < 1e-12);
}

TEST_CASE("enumeration is deterministic given the seed") {
    ExtensionSpec s = s3_spec();
    FiniteGroup h = build_H(s);
    DualSet d1 = enumerate_twisted_irreps(h, trivial_cocycle(6), 3);
    DualSet d2 = enumerate_twisted_irreps(h, trivial_cocycle(6), 3);
    REQUIRE(d1.reps.size() == d2.reps.size());
    for (std::size_t i = 0; i < d1.reps.size(); ++i)
        for (std::size_t g = 0; g < d1.reps[i].U.size(); ++g)
            for (int r = 0; r < d1.reps[i].dim; ++r)
                for (int c = 0; c < d1.reps[i].dim; ++c)
                    REQUIRE(d1.reps[i].U[g](r, c) == d2.reps[i].U[g](r, c));
}

TEST_CASE("wedderburn multiset matches the enumerated dimensions") {
    ExtensionSpec s = s3_spec();
    FiniteGroup h = build_H(s);
    for (std::uint64_t seed : {0ULL, 1ULL}) {
        HCocycle t = coboundary_twist(s, h, seed + 40);
        GroupCocycle gt;
        gt.order = 6;
        gt.values = t.values;
        FDAlgebra a = build_twisted_group_algebra(h, gt);
        WedderburnResult w = wedderburn_blocks(a, seed);
        DualSet dual = enumerate_twisted_irreps(h, gt, seed);
        std::vector<int> dims;
        for (const auto& r : dual.reps) dims.push_back(r.dim);
        std::sort(dims.begin(), dims.end());
        REQUIRE(dims == w.blocks);
    }
}

TEST_CASE("find_intertwiner basic cases") {
    FiniteGroup z3 = cyclic_group(3);
    DualSet dual = enumerate_twisted_irreps(z3, trivial_cocycle(3), 0);
    SECTION("identical representations give the identity") {
        auto t = find_intertwiner(dual.reps[1], dual.reps[1]);
        REQUIRE(t.has_value());
        REQUIRE(((*t) - CMatrix::identity(1)).norm_inf() < 1e-12);
    }
    SECTION("distinct characters give nothing") {
        auto t = find_intertwiner(dual.reps[0], dual.reps[1]);
        REQUIRE_FALSE(t.has_value());
    }
}

TEST_CASE("find_intertwiner recovers a conjugating unitary up to phase") {
    ExtensionSpec k = klein_spec();
    HCocycle ht = klein_twist(k);
    GroupCocycle t;
    t.order = 4;
    t.values = ht.values;
    DualSet dual = enumerate_twisted_irreps(k.G, t, 0);
    const TwistedIrrep& r = dual.reps[0];
    Rng rng(23);
    CMatrix u = random_unitary(2, rng);
    TwistedIrrep conj;
    conj.dim = 2;
    for (const auto& m : r.U) conj.U.push_back(u * m * u.adjoint());
    conj.character = twisted_character(conj);
    auto found = find_intertwiner(r, conj);
    REQUIRE(found.has_value());
    for (std::size_t g = 0; g < r.U.size(); ++g)
        REQUIRE(((*found) * r.U[g] - conj.U[g] * (*found)).norm_inf() < 1e-9);
    // agreement with u up to the fixed phase convention
    CMatrix ratio = (*found) * u.adjoint();
    cplx lambda = ratio.trace() / 2.0;
    REQUIRE(std::abs(std::abs(lambda) - 1.0) < 1e-9);
    REQUIRE((ratio - CMatrix::identity(2) * lambda).norm_inf() < 1e-9);
}

TEST_CASE("reducible inputs raise SchurViolation") {
    FiniteGroup z2 = cyclic_group(2);
    DualSet dual = enumerate_twisted_irreps(z2, trivial_cocycle(2), 0);
    TwistedIrrep doubled;
    doubled.dim = 2;
    for (const auto& m : dual.reps[0].U) {
        CMatrix d2(2, 2);
        d2(0, 0) = m(0, 0);
        d2(1, 1) = m(0, 0);
        doubled.U.push_back(d2);
    }
    doubled.character = twisted_character(doubled);
    REQUIRE_THROWS_AS(find_intertwiner(doubled, doubled), Error);
}
