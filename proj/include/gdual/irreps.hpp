#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "gdual/algebra.hpp"

namespace gdual {

/**
 * An irreducible t-twisted unitary representation of a finite group:
 *   U(g) U(h) = t(g,h) U(gh),  U(g) unitary,  commutant = scalars.
 */
struct TwistedIrrep {
    int dim = 0;
    std::vector<CMatrix> U;          // per group element
    std::vector<cplx> character;     // tr U(g)
};

struct DualSet {
    std::vector<TwistedIrrep> reps;  // canonical order, pairwise non-isomorphic

    int sum_of_squares() const {
        int s = 0;
        for (const auto& r : reps) s += r.dim * r.dim;
        return s;
    }
};

inline std::vector<cplx> twisted_character(const TwistedIrrep& r) {
    std::vector<cplx> chi(r.U.size());
    for (std::size_t g = 0; g < r.U.size(); ++g) chi[g] = r.U[g].trace();
    return chi;
}

namespace detail {

inline double rounded(double v) { return std::round(v * 1e6) / 1e6; }

// canonical class order: dimension ascending, then the character vector
// compared entrywise (real part then imaginary part, rounded to 1e-6)
inline bool canonical_less(const TwistedIrrep& a, const TwistedIrrep& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    for (std::size_t i = 0; i < a.character.size(); ++i) {
        double ar = rounded(a.character[i].real()), br = rounded(b.character[i].real());
        if (ar != br) return ar < br;
        double ai = rounded(a.character[i].imag()), bi = rounded(b.character[i].imag());
        if (ai != bi) return ai < bi;
    }
    return false;
}

} // namespace detail

/**
 * Unitary intertwiner between twisted representations over the same cocycle:
 * finds T with T U1(g) = U2(g) T for all g, or nothing when the
 * representations are non-isomorphic.  The solution space of the linear
 * system must have dimension 0 or 1; anything larger means a reducible input
 * and raises SchurViolation.
 *
 * The returned T is unitary and phase-normalized: its entry of largest
 * modulus (row-major tie break) is real positive.
 */
inline std::optional<CMatrix> find_intertwiner(const std::vector<CMatrix>& u1,
                                               const std::vector<CMatrix>& u2,
                                               const Tolerances& tol = Tolerances{}) {
    int d1 = u1.empty() ? 0 : u1[0].rows();
    int d2 = u2.empty() ? 0 : u2[0].rows();
    if (d1 != d2) return std::nullopt; // irreducibles of distinct dimension
    int d = d1;
    if (d == 0) return std::nullopt;
    KernelAccumulator acc(d * d, tol.rank);
    std::vector<cplx> row(static_cast<std::size_t>(d) * d);
    for (std::size_t g = 0; g < u1.size(); ++g) {
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                std::fill(row.begin(), row.end(), cplx{0.0, 0.0});
                // (T U1(g) - U2(g) T)_{ij} = 0, unknown T_{rc} at index r*d + c
                for (int k = 0; k < d; ++k) {
                    row[static_cast<std::size_t>(i) * d + k] += u1[g](k, j);
                    row[static_cast<std::size_t>(k) * d + j] -= u2[g](i, k);
                }
                acc.add_row(row);
            }
    }
    auto kernel = acc.kernel();
    if (kernel.empty()) return std::nullopt;
    if (kernel.size() > 1)
        fail("SchurViolation", "intertwiner space has dimension ", kernel.size());
    CMatrix t(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) t(i, j) = kernel[0][static_cast<std::size_t>(i) * d + j];
    // T^* T is scalar by Schur; rescale to a unitary
    CMatrix tt = t.adjoint() * t;
    cplx lambda = tt.trace() / static_cast<double>(d);
    if (std::abs(lambda) < 1e-14) return std::nullopt;
    double dev = 0.0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            dev = std::max(dev, std::abs(tt(i, j) - (i == j ? lambda : cplx{0.0, 0.0})));
    if (dev > tol.scalar * std::abs(lambda) * 100)
        fail("SchurViolation", "T*T deviates from a scalar by ", dev);
    t = t * cplx{1.0 / std::sqrt(lambda.real()), 0.0};
    // phase normalization
    int bi = 0, bj = 0;
    double best = -1.0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (std::abs(t(i, j)) > best) { best = std::abs(t(i, j)); bi = i; bj = j; }
    cplx phase = t(bi, bj) / std::abs(t(bi, bj));
    t = t * std::conj(phase);
    if (d == 1) t(0, 0) = cplx{1.0, 0.0}; // exactly, after phase normalization
    return t;
}

inline std::optional<CMatrix> find_intertwiner(const TwistedIrrep& r1, const TwistedIrrep& r2,
                                               const Tolerances& tol = Tolerances{}) {
    return find_intertwiner(r1.U, r2.U, tol);
}

// index of the class whose character matches chi, or -1
inline int match_class_by_character(const DualSet& dual, const std::vector<cplx>& chi,
                                    double tol = 1e-6) {
    int found = -1;
    for (std::size_t i = 0; i < dual.reps.size(); ++i) {
        double dist = 0.0;
        for (std::size_t g = 0; g < chi.size(); ++g)
            dist = std::max(dist, std::abs(chi[g] - dual.reps[i].character[g]));
        if (dist <= tol) {
            if (found >= 0) fail("ClassNotFound", "character matches two classes");
            found = static_cast<int>(i);
        }
    }
    return found;
}

/**
 * Enumerates the dual: one canonical representative per isomorphism class of
 * irreducible t-twisted unitary representations.
 *
 * Inside each Wedderburn block of C(G,t) a seeded random Hermitian element
 * of the block corner is diagonalized; Lagrange interpolation on its block
 * spectrum produces a minimal projection p, the left ideal C(G,t)p carries
 * the restriction of the left regular twisted action, and the averaged
 * invariant inner product sum_g (U(g) u, U(g) v) makes that action exactly
 * unitary.
 */
inline DualSet enumerate_twisted_irreps(const FiniteGroup& g, const GroupCocycle& t,
                                        std::uint64_t seed, const Tolerances& tol = Tolerances{}) {
    FDAlgebra alg = build_twisted_group_algebra(g, t, tol.unitary);
    int n = alg.dim;
    AlgebraEnv env(alg);
    WedderburnResult wed = wedderburn_blocks(alg, seed, tol);

    DualSet dual;
    for (std::size_t bi = 0; bi < wed.blocks.size(); ++bi) {
        int d = wed.blocks[bi];
        const std::vector<cplx>& p_central = wed.idempotents[bi];
        CMatrix proj = env.rep(p_central);

        std::optional<TwistedIrrep> done;
        std::string last_issue = "unknown";
        for (int attempt = 0; attempt < 8 && !done; ++attempt) {
            Rng rng(mix_seed(seed, 0x1000 + bi * 64 + attempt));
            // Hermitian element of the block corner
            std::vector<cplx> w(n);
            for (int i = 0; i < n; ++i) w[i] = rng.cgauss();
            std::vector<cplx> m = alg.mul(p_central, alg.mul(w, p_central));
            std::vector<cplx> ms = alg.star(m);
            std::vector<cplx> h(n);
            for (int i = 0; i < n; ++i) h[i] = (m[i] + ms[i]) * 0.5;

            std::vector<cplx> p; // minimal projection in the block
            if (d == 1) {
                p = p_central;
            } else {
                // spectrum of h inside the block
                std::vector<std::vector<cplx>> cols;
                for (int j = 0; j < n; ++j) {
                    std::vector<cplx> c(n);
                    for (int i = 0; i < n; ++i) c[i] = proj(i, j);
                    cols.push_back(std::move(c));
                }
                auto block_basis = orthonormal_span(cols, tol.rank);
                if (static_cast<int>(block_basis.size()) != d * d) {
                    last_issue = "block projection rank defect";
                    continue;
                }
                CMatrix hrep = env.rep(h);
                int bd = d * d;
                CMatrix hb(bd, bd);
                for (int c1 = 0; c1 < bd; ++c1) {
                    std::vector<cplx> hv(n, cplx{0.0, 0.0});
                    for (int r = 0; r < n; ++r)
                        for (int c = 0; c < n; ++c) hv[r] += hrep(r, c) * block_basis[c1][c];
                    for (int r1 = 0; r1 < bd; ++r1) hb(r1, c1) = dot(block_basis[r1], hv);
                }
                EigenResult eig = hermitian_eigen(hb, 1e-6);
                double scale = 1.0;
                for (double v : eig.values) scale = std::max(scale, std::abs(v));
                auto clusters = cluster_eigenvalues(eig.values, 1e-7 * scale);
                if (static_cast<int>(clusters.size()) != d) {
                    last_issue = "degenerate block spectrum";
                    continue;
                }
                bool mult_ok = true;
                for (auto& [mean, count] : clusters) mult_ok = mult_ok && count == d;
                if (!mult_ok) {
                    last_issue = "unexpected block multiplicities";
                    continue;
                }
                // Lagrange interpolation on the block spectrum singles out the
                // projection onto the first eigenvalue
                p = p_central;
                double mu0 = clusters[0].first;
                for (int j = 1; j < d; ++j) {
                    double mu = clusters[j].first;
                    std::vector<cplx> term(n);
                    for (int i = 0; i < n; ++i) term[i] = h[i] - mu * p_central[i];
                    p = alg.mul(p, term);
                    cplx f = cplx{1.0 / (mu0 - mu), 0.0};
                    for (int i = 0; i < n; ++i) p[i] *= f;
                }
                std::vector<cplx> pp = alg.mul(p, p);
                double defect = 0.0;
                for (int i = 0; i < n; ++i) defect = std::max(defect, std::abs(pp[i] - p[i]));
                if (defect > 1e-7) {
                    last_issue = "minimal projection defective";
                    continue;
                }
            }

            // minimal left ideal spanned by {e_j p}
            std::vector<cplx> pvec = env.embed(p);
            std::vector<std::vector<cplx>> ideal;
            for (int j = 0; j < n; ++j) {
                std::vector<cplx> v(n, cplx{0.0, 0.0});
                for (int r = 0; r < n; ++r)
                    for (int c = 0; c < n; ++c) v[r] += env.basis_reg[j](r, c) * pvec[c];
                ideal.push_back(std::move(v));
            }
            auto w_basis = orthonormal_span(ideal, tol.rank);
            if (static_cast<int>(w_basis.size()) != d) {
                last_issue = "left ideal dimension defect";
                continue;
            }

            TwistedIrrep rep;
            rep.dim = d;
            rep.U.resize(n);
            for (int ge = 0; ge < n; ++ge) {
                CMatrix u(d, d);
                for (int c = 0; c < d; ++c) {
                    std::vector<cplx> lv(n, cplx{0.0, 0.0});
                    for (int r2 = 0; r2 < n; ++r2)
                        for (int c2 = 0; c2 < n; ++c2)
                            lv[r2] += env.basis_reg[ge](r2, c2) * w_basis[c][c2];
                    for (int r = 0; r < d; ++r) u(r, c) = dot(w_basis[r], lv);
                }
                rep.U[ge] = std::move(u);
            }

            // averaged invariant inner product -> exact unitarity
            CMatrix s(d, d);
            for (int ge = 0; ge < n; ++ge) s = s + rep.U[ge].adjoint() * rep.U[ge];
            s = s * cplx{1.0 / n, 0.0};
            CMatrix rs = cholesky_upper(s);
            CMatrix rs_inv = LU(rs).inverse();
            for (int ge = 0; ge < n; ++ge) rep.U[ge] = rs * rep.U[ge] * rs_inv;
            rep.U[g.identity] = CMatrix::identity(d);

            // invariants: twisted multiplicativity, unitarity, irreducibility
            bool valid = true;
            for (int x = 0; x < n && valid; ++x) {
                if (rep.U[x].unitarity_defect() > tol.unitary * 100) valid = false;
                for (int y = 0; y < n && valid; ++y) {
                    CMatrix lhs = rep.U[x] * rep.U[y];
                    CMatrix rhs = rep.U[g.op(x, y)] * t.at(x, y);
                    if ((lhs - rhs).norm_inf() > tol.scalar) valid = false;
                }
            }
            if (!valid) {
                last_issue = "representation invariants failed";
                continue;
            }
            rep.character = twisted_character(rep);
            done = std::move(rep);
        }
        if (!done) fail("DegenerateProjection", "block ", bi, ": ", last_issue);
        dual.reps.push_back(std::move(*done));
    }

    std::stable_sort(dual.reps.begin(), dual.reps.end(), detail::canonical_less);
    if (dual.sum_of_squares() != n)
        fail("NotSemisimpleDetected", "sum of squared dimensions ", dual.sum_of_squares(),
             " differs from |G| = ", n);
    for (std::size_t i = 0; i < dual.reps.size(); ++i)
        for (std::size_t j = i + 1; j < dual.reps.size(); ++j) {
            double dist = 0.0;
            for (std::size_t ge = 0; ge < dual.reps[i].character.size(); ++ge)
                dist = std::max(dist,
                                std::abs(dual.reps[i].character[ge] - dual.reps[j].character[ge]));
            if (dist < 1e-6) fail("NotSemisimpleDetected", "duplicate classes ", i, ",", j);
        }
    // irreducibility: the self-intertwiner space must be one-dimensional
    for (const auto& r : dual.reps) {
        auto self = find_intertwiner(r, r, tol);
        if (!self) fail("SchurViolation", "no self-intertwiner found");
    }
    return dual;
}

} // namespace gdual
