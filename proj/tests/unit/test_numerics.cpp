#include <catch2/catch_amalgamated.hpp>

#include "gdual/eigen.hpp"
#include "gdual/matrix.hpp"
#include "gdual/rng.hpp"

using namespace gdual;

namespace {

CMatrix random_hermitian(int n, Rng& rng) {
    CMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = rng.cgauss();
    return (a + a.adjoint()) * cplx{0.5, 0.0};
}

} // namespace

TEST_CASE("lu solve and inverse") {
    Rng rng(7);
    CMatrix a(5, 5);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) a(i, j) = rng.cgauss();
    CMatrix inv = LU(a).inverse();
    REQUIRE((a * inv - CMatrix::identity(5)).norm_inf() < 1e-11);
}

TEST_CASE("cholesky factors positive definite gram matrices") {
    Rng rng(11);
    CMatrix b(6, 6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) b(i, j) = rng.cgauss();
    CMatrix g = b.adjoint() * b + CMatrix::identity(6);
    CMatrix r = cholesky_upper(g);
    REQUIRE((r.adjoint() * r - g).norm_inf() < 1e-10);
}

TEST_CASE("kernel accumulator finds null spaces") {
    // rows of rank 2 in C^4
    KernelAccumulator acc(4, 1e-10);
    acc.add_row({cplx{1, 0}, cplx{0, 0}, cplx{1, 0}, cplx{0, 0}});
    acc.add_row({cplx{0, 0}, cplx{1, 0}, cplx{0, 0}, cplx{-1, 0}});
    acc.add_row({cplx{1, 0}, cplx{1, 0}, cplx{1, 0}, cplx{-1, 0}}); // dependent
    REQUIRE(acc.rank() == 2);
    auto k = acc.kernel();
    REQUIRE(k.size() == 2);
    // every kernel vector annihilates the rows
    for (const auto& v : k) {
        cplx s1 = v[0] + v[2];
        cplx s2 = v[1] - v[3];
        REQUIRE(std::abs(s1) < 1e-10);
        REQUIRE(std::abs(s2) < 1e-10);
    }
}

TEST_CASE("hermitian_eigen identity matrix") {
    EigenResult r = hermitian_eigen(CMatrix::identity(3));
    for (double v : r.values) REQUIRE(v == Catch::Approx(1.0));
}

TEST_CASE("hermitian_eigen sorts eigenvalues ascending") {
    CMatrix m(2, 2);
    m(0, 0) = 2.0;
    m(1, 1) = -1.0;
    EigenResult r = hermitian_eigen(m);
    REQUIRE(r.values[0] == Catch::Approx(-1.0));
    REQUIRE(r.values[1] == Catch::Approx(2.0));
}

TEST_CASE("hermitian_eigen reconstruction on seed 0") {
    Rng rng(0);
    CMatrix m = random_hermitian(6, rng);
    EigenResult r = hermitian_eigen(m);
    CMatrix lam(6, 6);
    for (int i = 0; i < 6; ++i) lam(i, i) = r.values[i];
    REQUIRE((r.vectors * lam * r.vectors.adjoint() - m).norm_inf() < 1e-10);
}

TEST_CASE("hermitian_eigen rejects non-hermitian input") {
    CMatrix m(2, 2);
    m(0, 1) = 1.0;
    REQUIRE_THROWS_AS(hermitian_eigen(m), Error);
}

TEST_CASE("hermitian_eigen property sweep") {
    // 100 seeded random Hermitian matrices with n <= 12
    for (std::uint64_t s = 0; s < 100; ++s) {
        Rng rng(s);
        int n = 1 + static_cast<int>(rng.below(12));
        CMatrix m = random_hermitian(n, rng);
        EigenResult r = hermitian_eigen(m);
        CMatrix lam(n, n);
        for (int i = 0; i < n; ++i) lam(i, i) = r.values[i];
        REQUIRE((r.vectors * lam * r.vectors.adjoint() - m).norm_inf() < 1e-9);
        REQUIRE(r.vectors.unitarity_defect() < 1e-10);
    }
}

TEST_CASE("phase_from_turns is exact on quarter turns") {
    REQUIRE(phase_from_turns(0, 4) == cplx{1.0, 0.0});
    REQUIRE(phase_from_turns(1, 4) == cplx{0.0, 1.0});
    REQUIRE(phase_from_turns(1, 2) == cplx{-1.0, 0.0});
    REQUIRE(phase_from_turns(3, 4) == cplx{0.0, -1.0});
    REQUIRE(phase_from_turns(5, 4) == cplx{0.0, 1.0});
    cplx z = phase_from_turns(1, 3);
    REQUIRE(std::abs(z - cplx{-0.5, std::sqrt(3.0) / 2.0}) < 1e-15);
}

TEST_CASE("rng streams are deterministic") {
    Rng a(42), b(42);
    for (int i = 0; i < 16; ++i) REQUIRE(a.next() == b.next());
}
