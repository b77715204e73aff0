#include <catch2/catch_amalgamated.hpp>

#include "../support/builders.hpp"
#include "gdual/algebra.hpp"
#include "gdual/extension.hpp"

using namespace gdual;
using namespace testsupport;

TEST_CASE("group algebra of Z2 is commutative with blocks {1,1}") {
    FiniteGroup z2 = cyclic_group(2);
    FDAlgebra a = build_twisted_group_algebra(z2, trivial_cocycle(2));
    auto x = a.mul(a.basis_vector(0), a.basis_vector(1));
    auto y = a.mul(a.basis_vector(1), a.basis_vector(0));
    for (int i = 0; i < 2; ++i) REQUIRE(std::abs(x[i] - y[i]) < 1e-15);
    WedderburnResult w = wedderburn_blocks(a, 0);
    REQUIRE(w.blocks == std::vector<int>{1, 1});
    REQUIRE(w.center_dim == 2);
}

TEST_CASE("twisted Klein-four algebra is noncommutative with a single 2x2 block") {
    ExtensionSpec s = klein_spec();
    HCocycle ht = klein_twist(s);
    GroupCocycle t;
    t.order = 4;
    t.values = ht.values;
    FDAlgebra a = build_twisted_group_algebra(s.G, t);
    // basis elements (1,0) and (0,1) anticommute
    auto xy = a.mul(a.basis_vector(2), a.basis_vector(1));
    auto yx = a.mul(a.basis_vector(1), a.basis_vector(2));
    for (int i = 0; i < 4; ++i) REQUIRE(std::abs(xy[i] + yx[i]) < 1e-15);

    WedderburnResult w = wedderburn_blocks(a, 0);
    REQUIRE(w.blocks == std::vector<int>{2});

    // oracle: no sign function is a square root of this cocycle, so no
    // one-dimensional twisted representation exists and {2} is forced
    FiniteGroup g = s.G;
    bool coboundary = false;
    for (int mask = 0; mask < 16 && !coboundary; ++mask) {
        auto b = [&](int e) { return (mask >> e) & 1 ? -1.0 : 1.0; };
        bool all = true;
        for (int x = 0; x < 4 && all; ++x)
            for (int y = 0; y < 4 && all; ++y)
                all = std::abs(t.at(x, y).real() - b(x) * b(y) * b(g.op(x, y))) < 1e-12;
        coboundary = all;
    }
    REQUIRE_FALSE(coboundary);
}

TEST_CASE("group algebra of S3 splits as {1,1,2}") {
    ExtensionSpec s = s3_spec();
    FiniteGroup h = build_H(s);
    GroupCocycle triv = trivial_cocycle(6);
    FDAlgebra a = build_twisted_group_algebra(h, triv);
    WedderburnResult w = wedderburn_blocks(a, 0);
    REQUIRE(w.blocks == std::vector<int>{1, 1, 2});
    // oracle: 3 conjugacy classes and sum d_i^2 = 6 admit only {1,1,2}
    REQUIRE(conjugacy_class_count(h) == 3);
    int found = 0;
    for (int d1 = 1; d1 * d1 <= 6; ++d1)
        for (int d2 = d1; d1 * d1 + d2 * d2 <= 6; ++d2)
            for (int d3 = d2; d1 * d1 + d2 * d2 + d3 * d3 <= 6; ++d3)
                if (d1 * d1 + d2 * d2 + d3 * d3 == 6) {
                    ++found;
                    REQUIRE(std::vector<int>{d1, d2, d3} == std::vector<int>{1, 1, 2});
                }
    REQUIRE(found == 1);
}

TEST_CASE("associativity is verified exhaustively during construction") {
    ExtensionSpec s = s3_spec();
    FiniteGroup h = build_H(s);
    for (std::uint64_t seed : {1ULL, 2ULL}) {
        HCocycle t = coboundary_twist(s, h, seed);
        GroupCocycle gt;
        gt.order = h.order;
        gt.values = t.values;
        REQUIRE_NOTHROW(build_twisted_group_algebra(h, gt));
    }
}

TEST_CASE("corrupted structure constants are rejected") {
    FiniteGroup z3 = cyclic_group(3);
    FDAlgebra a = build_twisted_group_algebra(z3, trivial_cocycle(3));
    a.prod_coef[static_cast<std::size_t>(1) * 3 + 1] = cplx{0.5, 0.25};
    REQUIRE_THROWS_AS(validate_fdalgebra(a, 1e-9), Error);
}

TEST_CASE("wedderburn is deterministic in the seed") {
    ExtensionSpec s = s3_spec();
    FiniteGroup h = build_H(s);
    FDAlgebra a = build_twisted_group_algebra(h, trivial_cocycle(6));
    WedderburnResult w1 = wedderburn_blocks(a, 5);
    WedderburnResult w2 = wedderburn_blocks(a, 5);
    REQUIRE(w1.blocks == w2.blocks);
    for (std::size_t i = 0; i < w1.idempotents.size(); ++i)
        for (int j = 0; j < a.dim; ++j) REQUIRE(w1.idempotents[i][j] == w2.idempotents[i][j]);
}
