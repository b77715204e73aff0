#include <catch2/catch_amalgamated.hpp>

#include "gdual/cochain.hpp"
#include "gdual/rng.hpp"

using namespace gdual;

namespace {

// pull a cocycle on G/N back along the quotient map (inflation)
RealCochain inflate(const FiniteGroup& g, const std::vector<int>& proj, const FiniteGroup& q,
                    const RealCochain& f2q) {
    RealCochain f = make_real_cochain2(g);
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b) f.at(a, b) = f2q.at(proj[a], proj[b]);
    (void)q;
    return f;
}

} // namespace

TEST_CASE("zero cocycle solves to zero") {
    FiniteGroup z3 = cyclic_group(3);
    RealCochain f = coboundary_solve_real(z3, make_real_cochain2(z3));
    for (double v : f.values) REQUIRE(v == 0.0);
}

TEST_CASE("Z2 cocycle with F(1,1)=1") {
    FiniteGroup z2 = cyclic_group(2);
    RealCochain f2 = make_real_cochain2(z2);
    f2.at(1, 1) = 1.0;
    RealCochain f = coboundary_solve_real(z2, f2);
    REQUIRE(f.at(0) == Catch::Approx(0.0));
    REQUIRE(f.at(1) == Catch::Approx(0.5));
    // exhaustive df = F over all 4 pairs
    RealCochain df = real_coboundary(z2, f);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) REQUIRE(df.at(a, b) == Catch::Approx(f2.at(a, b)));
}

TEST_CASE("random coboundary on Z4 (seed 1) recovers df = F") {
    FiniteGroup z4 = cyclic_group(4);
    Rng rng(1);
    RealCochain phi = make_real_cochain1(z4);
    for (int a = 0; a < 4; ++a) phi.at(a) = rng.gauss();
    RealCochain f2 = real_coboundary(z4, phi);
    RealCochain f = coboundary_solve_real(z4, f2);
    RealCochain df = real_coboundary(z4, f);
    for (std::size_t i = 0; i < df.values.size(); ++i)
        REQUIRE(std::abs(df.values[i] - f2.values[i]) < 1e-12);
}

TEST_CASE("non-cocycle input names a witnessing triple") {
    FiniteGroup z3 = cyclic_group(3);
    RealCochain f2 = make_real_cochain2(z3);
    f2.at(1, 1) = 1.0; // breaks the identity on Z3
    try {
        coboundary_solve_real(z3, f2);
        FAIL("expected NotACocycle");
    } catch (const Error& e) {
        REQUIRE(e.code() == "NotACocycle");
    }
}

TEST_CASE("solver is a section of d on cocycles (coboundaries and inflations)") {
    std::vector<FiniteGroup> groups;
    for (int n : {2, 3, 4, 5, 6, 7, 8}) groups.push_back(cyclic_group(n));
    groups.push_back(direct_product(cyclic_group(2), cyclic_group(2)));
    groups.push_back(direct_product(cyclic_group(2), cyclic_group(4)));

    int cases = 0;
    for (std::uint64_t s = 0; s < 60 && cases < 100; ++s) {
        const FiniteGroup& g = groups[s % groups.size()];
        Rng rng(s);
        // coboundary case
        RealCochain phi = make_real_cochain1(g);
        for (int a = 0; a < g.order; ++a) phi.at(a) = rng.uniform(-2.0, 2.0);
        RealCochain f2 = real_coboundary(g, phi);
        RealCochain f = coboundary_solve_real(g, f2);
        RealCochain df = real_coboundary(g, f);
        for (std::size_t i = 0; i < df.values.size(); ++i)
            REQUIRE(std::abs(df.values[i] - f2.values[i]) < 1e-12);
        ++cases;
        // inflation case: pull back a coboundary on Z2 along Zn -> Z2 (n even)
        if (g.order % 2 == 0 && g.order > 2) {
            FiniteGroup z2 = cyclic_group(2);
            RealCochain psi = make_real_cochain1(z2);
            psi.at(0) = rng.uniform(-1.0, 1.0);
            psi.at(1) = rng.uniform(-1.0, 1.0);
            RealCochain on_q = real_coboundary(z2, psi);
            std::vector<int> proj(g.order);
            bool hom = true;
            for (int a = 0; a < g.order; ++a) proj[a] = a % 2;
            for (int a = 0; a < g.order && hom; ++a)
                for (int b = 0; b < g.order && hom; ++b)
                    hom = proj[g.op(a, b)] == (proj[a] + proj[b]) % 2;
            if (hom) {
                RealCochain inflated = inflate(g, proj, z2, on_q);
                RealCochain fi = coboundary_solve_real(g, inflated);
                RealCochain dfi = real_coboundary(g, fi);
                for (std::size_t i = 0; i < dfi.values.size(); ++i)
                    REQUIRE(std::abs(dfi.values[i] - inflated.values[i]) < 1e-12);
                ++cases;
            }
        }
    }
    REQUIRE(cases >= 60);
}
