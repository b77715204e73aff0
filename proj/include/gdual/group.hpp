#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "gdual/error.hpp"

namespace gdual {

// Finite group given by its multiplication table.  Elements are indices
// 0..order-1; the table stores op(a,b) row-major.
struct FiniteGroup {
    int order = 0;
    std::vector<int> mult; // order x order
    int identity = 0;
    std::vector<int> inv;

    int op(int a, int b) const { return mult[static_cast<std::size_t>(a) * order + b]; }
};

// Checks the table is a group: total, associative, with two-sided identity
// and inverses.  Errors name the witnessing element or triple.
inline FiniteGroup validate_group(const std::vector<std::vector<int>>& table) {
    int n = static_cast<int>(table.size());
    if (n == 0) fail("EmptyTable", "group table has no rows");
    FiniteGroup g;
    g.order = n;
    g.mult.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(table[i].size()) != n)
            fail("NotSquare", "row ", i, " has ", table[i].size(), " entries, expected ", n);
        for (int j = 0; j < n; ++j) {
            int v = table[i][j];
            if (v < 0 || v >= n) fail("IndexOutOfRange", "entry (", i, ",", j, ") = ", v);
            g.mult[static_cast<std::size_t>(i) * n + j] = v;
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c)))
                    fail("NotAssociative", "triple (", a, ",", b, ",", c, ")");
    int e = -1;
    for (int cand = 0; cand < n; ++cand) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            ok = g.op(cand, a) == a && g.op(a, cand) == a;
        if (ok) { e = cand; break; }
    }
    if (e < 0) fail("NoIdentity", "no two-sided identity element");
    g.identity = e;
    g.inv.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (g.op(a, b) == e && g.op(b, a) == e) { g.inv[a] = b; break; }
        }
        if (g.inv[a] < 0) fail("NoInverse", "element ", a, " has no two-sided inverse");
    }
    return g;
}

inline bool is_automorphism(const FiniteGroup& g, const std::vector<int>& f) {
    if (static_cast<int>(f.size()) != g.order) return false;
    std::vector<char> seen(g.order, 0);
    for (int x : f) {
        if (x < 0 || x >= g.order || seen[x]) return false;
        seen[x] = 1;
    }
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
            if (f[g.op(a, b)] != g.op(f[a], f[b])) return false;
    return true;
}

inline FiniteGroup cyclic_group(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return validate_group(t);
}

// Index (a,b) -> a*|B| + b.
inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    int n = a.order * b.order;
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int a1 = i / b.order, b1 = i % b.order;
            int a2 = j / b.order, b2 = j % b.order;
            t[i][j] = a.op(a1, a2) * b.order + b.op(b1, b2);
        }
    return validate_group(t);
}

// Subgroup on a subset of elements (must be closed); keeps a map back to the
// parent's element indices.
struct Subgroup {
    FiniteGroup group;
    std::vector<int> elements; // subgroup index -> parent index
};

inline Subgroup subgroup_from_elements(const FiniteGroup& g, std::vector<int> elems) {
    std::sort(elems.begin(), elems.end());
    int m = static_cast<int>(elems.size());
    std::vector<int> pos(g.order, -1);
    for (int i = 0; i < m; ++i) pos[elems[i]] = i;
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            int p = g.op(elems[i], elems[j]);
            if (pos[p] < 0) fail("NotClosed", "subset not closed at (", elems[i], ",", elems[j], ")");
            t[i][j] = pos[p];
        }
    Subgroup s;
    s.group = validate_group(t);
    s.elements = std::move(elems);
    return s;
}

} // namespace gdual
