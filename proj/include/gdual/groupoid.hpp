#pragma once

#include <vector>

#include "gdual/algebra.hpp"
#include "gdual/group.hpp"

namespace gdual {

/**
 * Finite groupoid: objects 0..n_objects-1, arrows with source/target maps.
 * Composition a . b is defined exactly when dst(a) = src(b); the composite
 * runs src(a) -> dst(b).  Units are one arrow per object; inverses are
 * two-sided.
 */
struct FiniteGroupoid {
    int n_objects = 0;
    int n_arrows = 0;
    std::vector<int> src, dst;
    std::vector<int> compose_table; // n_arrows^2, -1 when undefined
    std::vector<int> inv;
    std::vector<int> unit; // per object

    bool composable(int a, int b) const { return dst[a] == src[b]; }
    int compose(int a, int b) const { return compose_table[static_cast<std::size_t>(a) * n_arrows + b]; }
};

inline void validate_groupoid(const FiniteGroupoid& g) {
    int n = g.n_arrows;
    if (g.n_objects <= 0) fail("EmptyTable", "groupoid without objects");
    if (static_cast<int>(g.src.size()) != n || static_cast<int>(g.dst.size()) != n ||
        static_cast<int>(g.inv.size()) != n ||
        static_cast<int>(g.compose_table.size()) != n * n ||
        static_cast<int>(g.unit.size()) != g.n_objects)
        fail("ShapeMismatch", "groupoid table sizes");
    for (int a = 0; a < n; ++a) {
        if (g.src[a] < 0 || g.src[a] >= g.n_objects || g.dst[a] < 0 || g.dst[a] >= g.n_objects)
            fail("IndexOutOfRange", "arrow ", a, " endpoints");
        if (g.inv[a] < 0 || g.inv[a] >= n) fail("IndexOutOfRange", "inverse of arrow ", a);
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int c = g.compose(a, b);
            if (g.composable(a, b)) {
                if (c < 0 || c >= n) fail("NotComposable", "missing composite (", a, ",", b, ")");
                if (g.src[c] != g.src[a] || g.dst[c] != g.dst[b])
                    fail("NotComposable", "composite endpoints (", a, ",", b, ")");
            } else if (c != -1) {
                fail("NotComposable", "composite defined for non-composable (", a, ",", b, ")");
            }
        }
    for (int x = 0; x < g.n_objects; ++x) {
        int u = g.unit[x];
        if (u < 0 || u >= n || g.src[u] != x || g.dst[u] != x)
            fail("NoIdentity", "unit arrow of object ", x);
    }
    for (int a = 0; a < n; ++a) {
        if (g.compose(g.unit[g.src[a]], a) != a) fail("NoIdentity", "left unit at arrow ", a);
        if (g.compose(a, g.unit[g.dst[a]]) != a) fail("NoIdentity", "right unit at arrow ", a);
    }
    for (int a = 0; a < n; ++a) {
        int ai = g.inv[a];
        if (g.src[ai] != g.dst[a] || g.dst[ai] != g.src[a])
            fail("NoInverse", "inverse endpoints of arrow ", a);
        if (g.compose(a, ai) != g.unit[g.src[a]] || g.compose(ai, a) != g.unit[g.dst[a]])
            fail("NoInverse", "arrow ", a);
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!g.composable(a, b)) continue;
            for (int c = 0; c < n; ++c) {
                if (!g.composable(b, c)) continue;
                if (g.compose(g.compose(a, b), c) != g.compose(a, g.compose(b, c)))
                    fail("NotAssociative", "triple (", a, ",", b, ",", c, ")");
            }
        }
}

inline FiniteGroupoid groupoid_from_group(const FiniteGroup& g) {
    FiniteGroupoid gd;
    gd.n_objects = 1;
    gd.n_arrows = g.order;
    gd.src.assign(g.order, 0);
    gd.dst.assign(g.order, 0);
    gd.compose_table = g.mult;
    gd.inv = g.inv;
    gd.unit = {g.identity};
    validate_groupoid(gd);
    return gd;
}

// arrows (i,j): i -> j, indexed i*n + j
inline FiniteGroupoid pair_groupoid(int n) {
    FiniteGroupoid gd;
    gd.n_objects = n;
    gd.n_arrows = n * n;
    gd.src.resize(n * n);
    gd.dst.resize(n * n);
    gd.inv.resize(n * n);
    gd.unit.resize(n);
    gd.compose_table.assign(static_cast<std::size_t>(n) * n * n * n, -1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int a = i * n + j;
            gd.src[a] = i;
            gd.dst[a] = j;
            gd.inv[a] = j * n + i;
        }
    for (int i = 0; i < n; ++i) gd.unit[i] = i * n + i;
    for (int a = 0; a < n * n; ++a)
        for (int b = 0; b < n * n; ++b)
            if (gd.dst[a] == gd.src[b])
                gd.compose_table[static_cast<std::size_t>(a) * n * n + b] =
                    gd.src[a] * n + gd.dst[b];
    validate_groupoid(gd);
    return gd;
}

// arrows (a,b) indexed a*|B| + b
inline FiniteGroupoid product_groupoid(const FiniteGroupoid& a, const FiniteGroupoid& b) {
    FiniteGroupoid gd;
    gd.n_objects = a.n_objects * b.n_objects;
    gd.n_arrows = a.n_arrows * b.n_arrows;
    auto obj = [&](int xa, int xb) { return xa * b.n_objects + xb; };
    gd.src.resize(gd.n_arrows);
    gd.dst.resize(gd.n_arrows);
    gd.inv.resize(gd.n_arrows);
    gd.unit.resize(gd.n_objects);
    gd.compose_table.assign(static_cast<std::size_t>(gd.n_arrows) * gd.n_arrows, -1);
    for (int p = 0; p < a.n_arrows; ++p)
        for (int q = 0; q < b.n_arrows; ++q) {
            int k = p * b.n_arrows + q;
            gd.src[k] = obj(a.src[p], b.src[q]);
            gd.dst[k] = obj(a.dst[p], b.dst[q]);
            gd.inv[k] = a.inv[p] * b.n_arrows + b.inv[q];
        }
    for (int xa = 0; xa < a.n_objects; ++xa)
        for (int xb = 0; xb < b.n_objects; ++xb)
            gd.unit[obj(xa, xb)] = a.unit[xa] * b.n_arrows + b.unit[xb];
    for (int k1 = 0; k1 < gd.n_arrows; ++k1)
        for (int k2 = 0; k2 < gd.n_arrows; ++k2) {
            int p1 = k1 / b.n_arrows, q1 = k1 % b.n_arrows;
            int p2 = k2 / b.n_arrows, q2 = k2 % b.n_arrows;
            if (a.composable(p1, p2) && b.composable(q1, q2))
                gd.compose_table[static_cast<std::size_t>(k1) * gd.n_arrows + k2] =
                    a.compose(p1, p2) * b.n_arrows + b.compose(q1, q2);
        }
    validate_groupoid(gd);
    return gd;
}

// Unit-complex cocycle table on composable arrow pairs.
struct GroupoidCocycle {
    int n_arrows = 0;
    std::vector<cplx> values; // n_arrows^2; meaningful on composable pairs

    cplx& at(int a, int b) { return values[static_cast<std::size_t>(a) * n_arrows + b]; }
    cplx at(int a, int b) const { return values[static_cast<std::size_t>(a) * n_arrows + b]; }
};

inline GroupoidCocycle trivial_groupoid_cocycle(const FiniteGroupoid& g) {
    GroupoidCocycle c;
    c.n_arrows = g.n_arrows;
    c.values.assign(static_cast<std::size_t>(g.n_arrows) * g.n_arrows, cplx{1.0, 0.0});
    return c;
}

inline void validate_groupoid_cocycle(const FiniteGroupoid& g, const GroupoidCocycle& c,
                                      double tol) {
    if (c.n_arrows != g.n_arrows) fail("ShapeMismatch", "cocycle arrow count");
    for (int a = 0; a < g.n_arrows; ++a)
        for (int b = 0; b < g.n_arrows; ++b)
            if (g.composable(a, b) && !is_unit_modulus(c.at(a, b), tol))
                fail("NotUnitModulus", "pair (", a, ",", b, ")");
    for (int a = 0; a < g.n_arrows; ++a) {
        if (std::abs(c.at(g.unit[g.src[a]], a) - cplx{1.0, 0.0}) > tol)
            fail("NotNormalized", "c(unit, a) at arrow ", a);
        if (std::abs(c.at(a, g.unit[g.dst[a]]) - cplx{1.0, 0.0}) > tol)
            fail("NotNormalized", "c(a, unit) at arrow ", a);
    }
    for (int a = 0; a < g.n_arrows; ++a)
        for (int b = 0; b < g.n_arrows; ++b) {
            if (!g.composable(a, b)) continue;
            for (int d = 0; d < g.n_arrows; ++d) {
                if (!g.composable(b, d)) continue;
                cplx lhs = c.at(a, b) * c.at(g.compose(a, b), d);
                cplx rhs = c.at(a, g.compose(b, d)) * c.at(b, d);
                if (std::abs(lhs - rhs) > tol)
                    fail("CocycleIdentityFails", "triple (", a, ",", b, ",", d, ") defect ",
                         std::abs(lhs - rhs));
            }
        }
}

/**
 * Twisted convolution algebra of a finite groupoid: basis the arrow set,
 * delta_a . delta_b = c(a,b) delta_{ab} for composable pairs and zero
 * otherwise; the unit is the sum of the unit arrows.  Associativity of the
 * result is exactly the groupoid cocycle identity, and construction
 * re-verifies it on all basis triples.
 */
inline FDAlgebra build_convolution_algebra(const FiniteGroupoid& g, const GroupoidCocycle& c,
                                           double tol = 1e-8) {
    validate_groupoid_cocycle(g, c, tol);
    FDAlgebra a;
    int n = g.n_arrows;
    a.dim = n;
    a.prod_idx.assign(static_cast<std::size_t>(n) * n, -1);
    a.prod_coef.assign(static_cast<std::size_t>(n) * n, cplx{0.0, 0.0});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.composable(i, j)) {
                a.prod_idx[static_cast<std::size_t>(i) * n + j] = g.compose(i, j);
                a.prod_coef[static_cast<std::size_t>(i) * n + j] = c.at(i, j);
            }
    a.star_idx.resize(n);
    a.star_coef.resize(n);
    for (int i = 0; i < n; ++i) {
        a.star_idx[i] = g.inv[i];
        a.star_coef[i] = std::conj(c.at(i, g.inv[i]));
    }
    a.unit.assign(n, cplx{0.0, 0.0});
    for (int x = 0; x < g.n_objects; ++x) a.unit[g.unit[x]] = 1.0;
    validate_fdalgebra(a, tol);
    return a;
}

} // namespace gdual
