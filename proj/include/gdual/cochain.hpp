#pragma once

#include <cmath>
#include <vector>

#include "gdual/group.hpp"
#include "gdual/scalar.hpp"

namespace gdual {

/**
 * Real cochains on a finite group, additive convention:
 *
 *   (df)(g,h) = f(g) + f(h) - f(gh)
 *
 * A degree-2 cochain F is a cocycle when
 *
 *   F(x,g) + F(xg,h) = F(g,h) + F(x,gh)   for all x,g,h.
 *
 * Because H^2(G,R) vanishes for finite G, every real 2-cocycle is a
 * coboundary, and averaging over the first argument produces a primitive:
 * f(g) := (1/|G|) sum_x F(x,g) satisfies df = F exactly.
 */
struct RealCochain {
    int degree = 1;              // 1 or 2
    int order = 0;               // |G|
    std::vector<double> values;  // degree 1: |G| entries; degree 2: |G|^2 row-major

    double& at(int g) { return values[g]; }
    double at(int g) const { return values[g]; }
    double& at(int g, int h) { return values[static_cast<std::size_t>(g) * order + h]; }
    double at(int g, int h) const { return values[static_cast<std::size_t>(g) * order + h]; }
};

inline RealCochain make_real_cochain1(const FiniteGroup& g) {
    return RealCochain{1, g.order, std::vector<double>(g.order, 0.0)};
}

inline RealCochain make_real_cochain2(const FiniteGroup& g) {
    return RealCochain{2, g.order, std::vector<double>(static_cast<std::size_t>(g.order) * g.order, 0.0)};
}

inline RealCochain real_coboundary(const FiniteGroup& g, const RealCochain& f) {
    RealCochain df = make_real_cochain2(g);
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
            df.at(a, b) = f.at(a) + f.at(b) - f.at(g.op(a, b));
    return df;
}

inline void check_real_cocycle(const FiniteGroup& g, const RealCochain& f2, double tol) {
    for (int x = 0; x < g.order; ++x)
        for (int a = 0; a < g.order; ++a)
            for (int b = 0; b < g.order; ++b) {
                double lhs = f2.at(x, a) + f2.at(g.op(x, a), b);
                double rhs = f2.at(a, b) + f2.at(x, g.op(a, b));
                if (std::abs(lhs - rhs) > tol)
                    fail("NotACocycle", "triple (", x, ",", a, ",", b, ") defect ", lhs - rhs);
            }
}

inline RealCochain coboundary_solve_real(const FiniteGroup& g, const RealCochain& f2,
                                         double tol = 1e-9) {
    if (f2.degree != 2 || f2.order != g.order)
        fail("ShapeMismatch", "expected degree-2 cochain on the given group");
    check_real_cocycle(g, f2, tol);
    RealCochain f = make_real_cochain1(g);
    for (int a = 0; a < g.order; ++a) {
        double s = 0.0;
        for (int x = 0; x < g.order; ++x) s += f2.at(x, a);
        f.at(a) = s / g.order;
    }
    return f;
}

// Unit-complex 2-cocycle table on a plain finite group.
struct GroupCocycle {
    int order = 0;
    std::vector<cplx> values; // order x order

    cplx& at(int g, int h) { return values[static_cast<std::size_t>(g) * order + h]; }
    cplx at(int g, int h) const { return values[static_cast<std::size_t>(g) * order + h]; }
};

inline GroupCocycle trivial_cocycle(int order) {
    GroupCocycle c;
    c.order = order;
    c.values.assign(static_cast<std::size_t>(order) * order, cplx{1.0, 0.0});
    return c;
}

// Checks unit modulus, the cocycle identity and normalization at the
// identity.  Full inverse-normalization t(g, g^-1) = 1 is not demanded here:
// restrictions of a dual cocycle to an isotropy group carry only the
// identity normalization.
inline void validate_group_cocycle(const FiniteGroup& g, const GroupCocycle& t, double tol) {
    if (t.order != g.order) fail("ShapeMismatch", "cocycle table order mismatch");
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
            if (!is_unit_modulus(t.at(a, b), tol))
                fail("NotUnitModulus", "pair (", a, ",", b, ") |t| = ", std::abs(t.at(a, b)));
    for (int a = 0; a < g.order; ++a) {
        if (std::abs(t.at(g.identity, a) - cplx{1.0, 0.0}) > tol)
            fail("NotNormalized", "t(1,", a, ") = (", t.at(g.identity, a).real(), ",",
                 t.at(g.identity, a).imag(), ")");
        if (std::abs(t.at(a, g.identity) - cplx{1.0, 0.0}) > tol)
            fail("NotNormalized", "t(", a, ",1) != 1");
    }
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
            for (int c = 0; c < g.order; ++c) {
                cplx lhs = t.at(a, b) * t.at(g.op(a, b), c);
                cplx rhs = t.at(a, g.op(b, c)) * t.at(b, c);
                if (std::abs(lhs - rhs) > tol)
                    fail("CocycleIdentityFails", "triple (", a, ",", b, ",", c, ") defect ",
                         std::abs(lhs - rhs));
            }
}

} // namespace gdual
