#pragma once

#include <vector>

#include "gdual/cochain.hpp"
#include "gdual/group.hpp"
#include "gdual/scalar.hpp"

namespace gdual {

/**
 * Extension data for 1 -> G -> H -> Q -> 1.
 *
 * A pair (rho, tau) with rho: Q -> Aut(G) and tau: Q x Q -> G presents H on
 * the set G x Q with product
 *
 *   (g1,q1)(g2,q2) = (g1 * rho_{q1}(g2) * tau(q1,q2), q1 q2),
 *
 * subject to
 *   rho(q1) rho(q2)       = Ad_{tau(q1,q2)} . rho(q1 q2)
 *   tau(q1,q2) tau(q1q2,q3) = rho_{q1}(tau(q2,q3)) tau(q1,q2q3)
 *   tau(1,q) = tau(q,1) = tau(q,q^-1) = 1.
 *
 * H elements are indexed lexicographically: h = g*|Q| + q.
 */
struct ExtensionSpec {
    FiniteGroup G;
    FiniteGroup Q;
    std::vector<int> rho; // rho[q*|G| + g]
    std::vector<int> tau; // tau[q1*|Q| + q2]

    int rho_of(int q, int g) const { return rho[static_cast<std::size_t>(q) * G.order + g]; }
    int tau_of(int q1, int q2) const { return tau[static_cast<std::size_t>(q1) * Q.order + q2]; }
    int h_index(int g, int q) const { return g * Q.order + q; }
    int h_g(int h) const { return h / Q.order; }
    int h_q(int h) const { return h % Q.order; }
    int h_order() const { return G.order * Q.order; }

    // preimage of g under rho_q
    int rho_inv_of(int q, int g) const {
        for (int x = 0; x < G.order; ++x)
            if (rho_of(q, x) == g) return x;
        fail("RhoNotAutomorphism", "rho_", q, " is not surjective at ", g);
    }
};

inline void validate_extension_spec(const ExtensionSpec& s) {
    const FiniteGroup& G = s.G;
    const FiniteGroup& Q = s.Q;
    if (static_cast<int>(s.rho.size()) != Q.order * G.order)
        fail("ShapeMismatch", "rho table size");
    if (static_cast<int>(s.tau.size()) != Q.order * Q.order)
        fail("ShapeMismatch", "tau table size");
    for (int q = 0; q < Q.order; ++q) {
        std::vector<int> f(G.order);
        for (int g = 0; g < G.order; ++g) {
            int v = s.rho_of(q, g);
            if (v < 0 || v >= G.order) fail("IndexOutOfRange", "rho(", q, ",", g, ")");
            f[g] = v;
        }
        if (!is_automorphism(G, f)) fail("RhoNotAutomorphism", "q = ", q);
    }
    for (const int v : s.tau)
        if (v < 0 || v >= G.order) fail("IndexOutOfRange", "tau entry ", v);
    // normalization of tau
    for (int q = 0; q < Q.order; ++q) {
        if (s.tau_of(Q.identity, q) != G.identity) fail("NotNormalized", "tau(1,", q, ")");
        if (s.tau_of(q, Q.identity) != G.identity) fail("NotNormalized", "tau(", q, ",1)");
        if (s.tau_of(q, Q.inv[q]) != G.identity) fail("NotNormalized", "tau(", q, ",", Q.inv[q], ")");
    }
    if (s.rho_of(Q.identity, 0) != 0 || !([&] {
            for (int g = 0; g < G.order; ++g)
                if (s.rho_of(Q.identity, g) != g) return false;
            return true;
        }()))
        fail("RhoNotAutomorphism", "rho at the identity of Q is not the identity map");
    // rho composition up to inner automorphism by tau
    for (int q1 = 0; q1 < Q.order; ++q1)
        for (int q2 = 0; q2 < Q.order; ++q2) {
            int q12 = Q.op(q1, q2);
            int t = s.tau_of(q1, q2);
            for (int g = 0; g < G.order; ++g) {
                int lhs = s.rho_of(q1, s.rho_of(q2, g));
                int rhs = G.op(G.op(t, s.rho_of(q12, g)), G.inv[t]);
                if (lhs != rhs) fail("RhoCompositionFails", "(q1,q2) = (", q1, ",", q2, ") at g = ", g);
            }
        }
    // tau cocycle condition
    for (int q1 = 0; q1 < Q.order; ++q1)
        for (int q2 = 0; q2 < Q.order; ++q2)
            for (int q3 = 0; q3 < Q.order; ++q3) {
                int lhs = G.op(s.tau_of(q1, q2), s.tau_of(Q.op(q1, q2), q3));
                int rhs = G.op(s.rho_of(q1, s.tau_of(q2, q3)), s.tau_of(q1, Q.op(q2, q3)));
                if (lhs != rhs) fail("TauCocycleFails", "triple (", q1, ",", q2, ",", q3, ")");
            }
}

inline FiniteGroup build_H(const ExtensionSpec& s) {
    validate_extension_spec(s);
    int n = s.h_order();
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int g1 = 0; g1 < s.G.order; ++g1)
        for (int q1 = 0; q1 < s.Q.order; ++q1)
            for (int g2 = 0; g2 < s.G.order; ++g2)
                for (int q2 = 0; q2 < s.Q.order; ++q2) {
                    int g = s.G.op(s.G.op(g1, s.rho_of(q1, g2)), s.tau_of(q1, q2));
                    int q = s.Q.op(q1, q2);
                    t[s.h_index(g1, q1)][s.h_index(g2, q2)] = s.h_index(g, q);
                }
    return validate_group(t); // re-verifies associativity of the product formula
}

// Unit-complex 2-cocycle on H, indexed by pairs of H elements.
struct HCocycle {
    int h_order = 0;
    std::vector<cplx> values;

    cplx& at(int h1, int h2) { return values[static_cast<std::size_t>(h1) * h_order + h2]; }
    cplx at(int h1, int h2) const { return values[static_cast<std::size_t>(h1) * h_order + h2]; }
};

inline HCocycle trivial_h_cocycle(const ExtensionSpec& s) {
    HCocycle t;
    t.h_order = s.h_order();
    t.values.assign(static_cast<std::size_t>(t.h_order) * t.h_order, cplx{1.0, 0.0});
    return t;
}

/**
 * Validates t as a normalized unit-complex 2-cocycle on H:
 *   - |t| = 1 entrywise,
 *   - t(h1,h2) t(h1h2,h3) = t(h1,h2h3) t(h2,h3),
 *   - t(1,h) = t(h,1) = 1,
 *   - t(s(q), s(q)^-1) = 1 on the section s(q) = (1,q).
 *
 * The section entries are the ones the derived maps sigma, nu, taubar rely
 * on; inverse-normalization is not required away from the section, so tables
 * such as the Klein-four cocycle (-1)^{a b'} are accepted as-is.
 */
inline void validate_h_cocycle(const ExtensionSpec& s, const FiniteGroup& h, const HCocycle& t,
                               double tol) {
    int n = h.order;
    if (t.h_order != n) fail("ShapeMismatch", "cocycle table order ", t.h_order, " vs |H| = ", n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (!is_unit_modulus(t.at(a, b), tol))
                fail("NotUnitModulus", "pair (", a, ",", b, ")");
    for (int a = 0; a < n; ++a) {
        if (std::abs(t.at(h.identity, a) - cplx{1.0, 0.0}) > tol)
            fail("NotNormalized", "t(1,h) at h = ", a);
        if (std::abs(t.at(a, h.identity) - cplx{1.0, 0.0}) > tol)
            fail("NotNormalized", "t(h,1) at h = ", a);
    }
    for (int q = 0; q < s.Q.order; ++q) {
        int hq = s.h_index(s.G.identity, q);
        int hqi = s.h_index(s.G.identity, s.Q.inv[q]);
        if (std::abs(t.at(hq, hqi) - cplx{1.0, 0.0}) > tol)
            fail("NotNormalized", "t(s(q), s(q)^-1) at q = ", q);
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                cplx lhs = t.at(a, b) * t.at(h.op(a, b), c);
                cplx rhs = t.at(a, h.op(b, c)) * t.at(b, c);
                if (std::abs(lhs - rhs) > tol)
                    fail("CocycleIdentityFails", "triple (", a, ",", b, ",", c, ") defect ",
                         std::abs(lhs - rhs));
            }
}

inline GroupCocycle restrict_to_G(const ExtensionSpec& s, const HCocycle& t) {
    GroupCocycle r;
    r.order = s.G.order;
    r.values.resize(static_cast<std::size_t>(r.order) * r.order);
    for (int g1 = 0; g1 < s.G.order; ++g1)
        for (int g2 = 0; g2 < s.G.order; ++g2)
            r.at(g1, g2) = t.at(s.h_index(g1, s.Q.identity), s.h_index(g2, s.Q.identity));
    return r;
}

/**
 * Derived twist data of the section s(q) = (1,1,q) in H_t:
 *
 *   sigma(q1,q2) = t((1,q1),(1,q2)) * t((tau(q1,q2), q1q2), (1,(q1q2)^-1))
 *   nu(q,g)      = t((1,q),(g,1))   * t((rho_q(g), q), (1,q^-1))
 *   taubar       = (sigma, tau), valued in the twisted fiber G_t.
 *
 * Conjugation by the section acts on the twisted fiber as
 * Ad_q(s,g) = (s * nu(q,g), rho_q(g)).
 */
struct DerivedTwistData {
    std::vector<cplx> sigma; // |Q|^2
    std::vector<cplx> nu;    // |Q| x |G|

    int q_order = 0, g_order = 0;
    cplx sigma_of(int q1, int q2) const { return sigma[static_cast<std::size_t>(q1) * q_order + q2]; }
    cplx nu_of(int q, int g) const { return nu[static_cast<std::size_t>(q) * g_order + g]; }
};

namespace detail {
// scalar picked up when conjugating (.,g) by (sigma0,g0) inside a twisted fiber
inline cplx fiber_conj_scalar(const FiniteGroup& g, const GroupCocycle& t, int g0, int x) {
    int g0x = g.op(g0, x);
    return t.at(g0, x) * t.at(g0x, g.inv[g0]) * std::conj(t.at(g0, g.inv[g0]));
}
} // namespace detail

inline DerivedTwistData derive_twist_data(const ExtensionSpec& s, const FiniteGroup& h,
                                          const HCocycle& t, double tol) {
    const FiniteGroup& G = s.G;
    const FiniteGroup& Q = s.Q;
    DerivedTwistData d;
    d.q_order = Q.order;
    d.g_order = G.order;
    d.sigma.resize(static_cast<std::size_t>(Q.order) * Q.order);
    d.nu.resize(static_cast<std::size_t>(Q.order) * G.order);

    for (int q1 = 0; q1 < Q.order; ++q1)
        for (int q2 = 0; q2 < Q.order; ++q2) {
            int q12 = Q.op(q1, q2);
            d.sigma[static_cast<std::size_t>(q1) * Q.order + q2] =
                t.at(s.h_index(G.identity, q1), s.h_index(G.identity, q2)) *
                t.at(s.h_index(s.tau_of(q1, q2), q12), s.h_index(G.identity, Q.inv[q12]));
        }
    for (int q = 0; q < Q.order; ++q)
        for (int g = 0; g < G.order; ++g) {
            d.nu[static_cast<std::size_t>(q) * G.order + g] =
                t.at(s.h_index(G.identity, q), s.h_index(g, Q.identity)) *
                t.at(s.h_index(s.rho_of(q, g), q), s.h_index(G.identity, Q.inv[q]));
        }

    GroupCocycle tg = restrict_to_G(s, t);
    auto check = [&](bool ok, const char* what, int a, int b, int c) {
        if (!ok) fail("TwistDataInconsistent", what, " at (", a, ",", b, ",", c, ")");
    };

    // (1) taubar normalized on the section
    for (int q = 0; q < Q.order; ++q) {
        check(std::abs(d.sigma_of(Q.identity, q) - cplx{1.0, 0.0}) <= tol, "taubar(1,q)", q, 0, 0);
        check(std::abs(d.sigma_of(q, Q.identity) - cplx{1.0, 0.0}) <= tol, "taubar(q,1)", q, 0, 0);
        check(std::abs(d.sigma_of(q, Q.inv[q]) - cplx{1.0, 0.0}) <= tol, "taubar(q,q^-1)", q, 0, 0);
    }

    // (2) s(q1)s(q2) = (taubar(q1,q2), 1) s(q1q2) as elements of H_t
    for (int q1 = 0; q1 < Q.order; ++q1)
        for (int q2 = 0; q2 < Q.order; ++q2) {
            int q12 = Q.op(q1, q2);
            int tau12 = s.tau_of(q1, q2);
            // lhs: scalar t((1,q1),(1,q2)), element (tau12, q12)
            cplx lhs_scalar = t.at(s.h_index(G.identity, q1), s.h_index(G.identity, q2));
            int lhs_elem = h.op(s.h_index(G.identity, q1), s.h_index(G.identity, q2));
            // rhs: (sigma, tau12, 1) * (1, 1, q12)
            cplx rhs_scalar = d.sigma_of(q1, q2) *
                              t.at(s.h_index(tau12, Q.identity), s.h_index(G.identity, q12));
            int rhs_elem = h.op(s.h_index(tau12, Q.identity), s.h_index(G.identity, q12));
            check(lhs_elem == rhs_elem, "section product (group part)", q1, q2, 0);
            check(std::abs(lhs_scalar - rhs_scalar) <= tol, "section product", q1, q2, 0);
        }

    // (3) taubar cocycle relation in G_t
    for (int q1 = 0; q1 < Q.order; ++q1)
        for (int q2 = 0; q2 < Q.order; ++q2)
            for (int q3 = 0; q3 < Q.order; ++q3) {
                int q12 = Q.op(q1, q2), q23 = Q.op(q2, q3), q123 = Q.op(q12, q3);
                int ta = s.tau_of(q1, q2), tb = s.tau_of(q12, q3);
                int tc = s.tau_of(q2, q3), td = s.tau_of(q1, q23);
                (void)q123;
                cplx lhs = d.sigma_of(q1, q2) * d.sigma_of(q12, q3) * tg.at(ta, tb);
                int lhs_g = G.op(ta, tb);
                cplx rhs = d.sigma_of(q2, q3) * d.nu_of(q1, tc) * d.sigma_of(q1, q23) *
                           tg.at(s.rho_of(q1, tc), td);
                int rhs_g = G.op(s.rho_of(q1, tc), td);
                check(lhs_g == rhs_g, "taubar cocycle (group part)", q1, q2, q3);
                check(std::abs(lhs - rhs) <= tol, "taubar cocycle (scalar part)", q1, q2, q3);
            }

    // nu composition law: Ad_{q1} Ad_{q2} = Ad_{taubar(q1,q2)} Ad_{q1q2}
    for (int q1 = 0; q1 < Q.order; ++q1)
        for (int q2 = 0; q2 < Q.order; ++q2) {
            int q12 = Q.op(q1, q2);
            int tau12 = s.tau_of(q1, q2);
            for (int g = 0; g < G.order; ++g) {
                cplx lhs = d.nu_of(q1, s.rho_of(q2, g)) * d.nu_of(q2, g);
                cplx rhs = detail::fiber_conj_scalar(G, tg, tau12, s.rho_of(q12, g)) *
                           d.nu_of(q12, g);
                int lg = s.rho_of(q1, s.rho_of(q2, g));
                int rg = G.op(G.op(tau12, s.rho_of(q12, g)), G.inv[tau12]);
                check(lg == rg, "nu law (group part)", q1, q2, g);
                check(std::abs(lhs - rhs) <= tol, "nu law (scalar part)", q1, q2, g);
            }
        }

    return d;
}

/**
 * Shifts t by an explicit coboundary so that the identity and section
 * normalizations hold; returns the shifted cocycle together with the
 * 1-cochain beta used (t' = t * d(beta)).
 */
struct NormalizedCocycle {
    HCocycle cocycle;
    std::vector<cplx> beta;
};

inline NormalizedCocycle normalize_cocycle(const ExtensionSpec& s, const FiniteGroup& h,
                                           const HCocycle& t) {
    int n = h.order;
    std::vector<cplx> beta(n, cplx{1.0, 0.0});
    cplx t11 = t.at(h.identity, h.identity);
    double a11 = std::abs(t11);
    if (a11 == 0.0) fail("NotUnitModulus", "t(1,1) = 0");
    beta[h.identity] = std::conj(t11) / (a11 * a11); // 1/t(1,1)
    // section entries: enforce t'((1,q),(1,q^-1)) = 1 pairwise
    std::vector<char> done(s.Q.order, 0);
    done[s.Q.identity] = 1;
    for (int q = 0; q < s.Q.order; ++q) {
        if (done[q]) continue;
        int qi = s.Q.inv[q];
        int hq = s.h_index(s.G.identity, q);
        int hqi = s.h_index(s.G.identity, qi);
        if (qi == q) {
            // involution: beta(h)^2 = beta(1) / t(h,h)
            cplx target = beta[h.identity] / t.at(hq, hq);
            beta[hq] = std::sqrt(target);
            done[q] = 1;
        } else {
            cplx prod = t.at(hq, hqi); // want beta(hq) beta(hqi) = beta(1)/prod
            beta[hq] = 1.0;
            beta[hqi] = beta[h.identity] / prod;
            done[q] = done[qi] = 1;
        }
    }
    NormalizedCocycle out;
    out.cocycle.h_order = n;
    out.cocycle.values.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            out.cocycle.at(a, b) = t.at(a, b) * beta[a] * beta[b] / beta[h.op(a, b)];
    out.beta = std::move(beta);
    return out;
}

} // namespace gdual
