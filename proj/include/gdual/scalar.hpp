#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

#include "gdual/error.hpp"

namespace gdual {

using cplx = std::complex<double>;

struct Tolerances {
    double scalar  = 1e-8;  // scalar identification (Schur checks) and verdicts
    double unitary = 1e-9;  // unitarity / Hermiticity / unit-modulus checks
    double rank    = 1e-9;  // rank decisions in orthogonalization

    static Tolerances from_scalar(double tol) {
        Tolerances t;
        t.scalar  = tol;
        t.unitary = tol / 10.0;
        t.rank    = tol / 10.0;
        return t;
    }
};

inline bool is_unit_modulus(cplx z, double tol) {
    return std::abs(std::abs(z) - 1.0) <= tol;
}

inline void require_unit_modulus(cplx z, double tol, const char* site) {
    if (!is_unit_modulus(z, tol))
        fail("NotUnitModulus", site, " value (", z.real(), ",", z.imag(), ") has |z| = ", std::abs(z));
}

// exp(2*pi*i * p/q), exact for quarter turns so that fixtures built from
// rationals keep bit-exact +-1 and +-i entries.
inline cplx phase_from_turns(long long p, long long q) {
    if (q == 0) fail("BadScalar", "turns with zero denominator");
    long long num = p % q;
    if (num < 0) num += std::abs(q);
    if (q < 0) { q = -q; }
    // reduce the common quarter-turn cases to exact values
    if (4 * num % q == 0) {
        switch ((4 * num) / q) {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            case 3: return {0.0, -1.0};
        }
    }
    double theta = 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(q);
    return {std::cos(theta), std::sin(theta)};
}

inline cplx phase_from_turns(double turns) {
    double theta = 2.0 * std::numbers::pi * turns;
    return {std::cos(theta), std::sin(theta)};
}

// Unit scalar with validation on construction.
struct UnitScalar {
    cplx value{1.0, 0.0};

    UnitScalar() = default;
    explicit UnitScalar(cplx z, double tol = 1e-9) : value(z) {
        require_unit_modulus(z, tol, "UnitScalar");
    }
};

} // namespace gdual
