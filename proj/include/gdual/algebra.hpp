#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "gdual/cochain.hpp"
#include "gdual/eigen.hpp"
#include "gdual/group.hpp"
#include "gdual/matrix.hpp"
#include "gdual/rng.hpp"

namespace gdual {

/**
 * Finite-dimensional associative *-algebra with monomial structure
 * constants: e_i e_j is either zero or a single scalar multiple of a basis
 * element.  Twisted group algebras and twisted groupoid convolution algebras
 * both have this shape.
 *
 * star is antilinear: star(sum x_i e_i) = sum conj(x_i) star_coef_i e_{star_idx_i}.
 */
struct FDAlgebra {
    int dim = 0;
    std::vector<int> prod_idx;   // dim x dim, -1 for vanishing products
    std::vector<cplx> prod_coef; // dim x dim
    std::vector<int> star_idx;
    std::vector<cplx> star_coef;
    std::vector<cplx> unit; // coordinates of the multiplicative unit
    std::vector<std::string> labels;

    int pidx(int i, int j) const { return prod_idx[static_cast<std::size_t>(i) * dim + j]; }
    cplx pcoef(int i, int j) const { return prod_coef[static_cast<std::size_t>(i) * dim + j]; }

    std::vector<cplx> mul(const std::vector<cplx>& x, const std::vector<cplx>& y) const {
        std::vector<cplx> out(dim, cplx{0.0, 0.0});
        for (int i = 0; i < dim; ++i) {
            if (x[i] == cplx{0.0, 0.0}) continue;
            for (int j = 0; j < dim; ++j) {
                int k = pidx(i, j);
                if (k < 0 || y[j] == cplx{0.0, 0.0}) continue;
                out[k] += pcoef(i, j) * x[i] * y[j];
            }
        }
        return out;
    }

    std::vector<cplx> star(const std::vector<cplx>& x) const {
        std::vector<cplx> out(dim, cplx{0.0, 0.0});
        for (int i = 0; i < dim; ++i) out[star_idx[i]] += std::conj(x[i]) * star_coef[i];
        return out;
    }

    std::vector<cplx> basis_vector(int i) const {
        std::vector<cplx> v(dim, cplx{0.0, 0.0});
        v[i] = 1.0;
        return v;
    }

    // left regular representation
    CMatrix lambda(const std::vector<cplx>& x) const {
        CMatrix m(dim, dim);
        for (int i = 0; i < dim; ++i) {
            if (x[i] == cplx{0.0, 0.0}) continue;
            for (int j = 0; j < dim; ++j) {
                int k = pidx(i, j);
                if (k >= 0) m(k, j) += pcoef(i, j) * x[i];
            }
        }
        return m;
    }

    cplx regular_trace(const std::vector<cplx>& x) const {
        cplx t = 0.0;
        for (int i = 0; i < dim; ++i) {
            if (x[i] == cplx{0.0, 0.0}) continue;
            for (int j = 0; j < dim; ++j)
                if (pidx(i, j) == j) t += pcoef(i, j) * x[i];
        }
        return t;
    }
};

inline void validate_fdalgebra(const FDAlgebra& a, double tol) {
    int n = a.dim;
    // associativity on basis triples
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                int ij = a.pidx(i, j);
                int lk = ij < 0 ? -1 : a.pidx(ij, k);
                cplx lc = ij < 0 || lk < 0 ? cplx{0.0, 0.0} : a.pcoef(i, j) * a.pcoef(ij, k);
                int jk = a.pidx(j, k);
                int rk = jk < 0 ? -1 : a.pidx(i, jk);
                cplx rc = jk < 0 || rk < 0 ? cplx{0.0, 0.0} : a.pcoef(j, k) * a.pcoef(i, jk);
                bool lzero = std::abs(lc) <= tol, rzero = std::abs(rc) <= tol;
                if (lzero && rzero) continue;
                if (lzero != rzero || lk != rk || std::abs(lc - rc) > tol)
                    fail("NotAssociative", "basis triple (", i, ",", j, ",", k, ")");
            }
    // star: involutive antihomomorphism
    for (int i = 0; i < n; ++i) {
        int i1 = a.star_idx[i];
        int i2 = a.star_idx[i1];
        cplx c = std::conj(a.star_coef[i]) * a.star_coef[i1];
        if (i2 != i || std::abs(c - cplx{1.0, 0.0}) > tol)
            fail("StarNotInvolutive", "basis element ", i);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<cplx> lhs = a.star(a.mul(a.basis_vector(i), a.basis_vector(j)));
            std::vector<cplx> rhs = a.mul(a.star(a.basis_vector(j)), a.star(a.basis_vector(i)));
            for (int k = 0; k < n; ++k)
                if (std::abs(lhs[k] - rhs[k]) > tol)
                    fail("StarNotAntihomomorphism", "pair (", i, ",", j, ")");
        }
    // unit
    for (int j = 0; j < n; ++j) {
        std::vector<cplx> l = a.mul(a.unit, a.basis_vector(j));
        std::vector<cplx> r = a.mul(a.basis_vector(j), a.unit);
        for (int k = 0; k < n; ++k) {
            cplx want = k == j ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
            if (std::abs(l[k] - want) > tol || std::abs(r[k] - want) > tol)
                fail("UnitFails", "basis element ", j);
        }
    }
}

/**
 * Twisted group algebra C(G,t): basis {e_g}, e_g e_h = t(g,h) e_{gh},
 * star(e_g) = conj(t(g, g^-1)) e_{g^-1}.
 */
inline FDAlgebra build_twisted_group_algebra(const FiniteGroup& g, const GroupCocycle& t,
                                             double tol = 1e-9) {
    validate_group_cocycle(g, t, tol);
    FDAlgebra a;
    a.dim = g.order;
    a.prod_idx.resize(static_cast<std::size_t>(a.dim) * a.dim);
    a.prod_coef.resize(static_cast<std::size_t>(a.dim) * a.dim);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            a.prod_idx[static_cast<std::size_t>(i) * a.dim + j] = g.op(i, j);
            a.prod_coef[static_cast<std::size_t>(i) * a.dim + j] = t.at(i, j);
        }
    a.star_idx.resize(a.dim);
    a.star_coef.resize(a.dim);
    for (int i = 0; i < a.dim; ++i) {
        a.star_idx[i] = g.inv[i];
        a.star_coef[i] = std::conj(t.at(i, g.inv[i]));
    }
    a.unit.assign(a.dim, cplx{0.0, 0.0});
    a.unit[g.identity] = 1.0;
    validate_fdalgebra(a, std::max(tol, 1e-9) * 10);
    return a;
}

/**
 * Cached analysis environment: the regular representation conjugated into a
 * *-representation.  With the trace functional phi(x) = tr(lambda(x))/n the
 * form <a,b> = phi(a* b) is Hermitian positive definite for our unit-modulus
 * cocycle algebras; its Cholesky factor R turns lambda into a *-rep
 * lambda~(x) = R lambda(x) R^-1, so self-adjoint elements become genuinely
 * Hermitian matrices.
 */
struct AlgebraEnv {
    const FDAlgebra* alg = nullptr;
    CMatrix R, Rinv;
    std::vector<CMatrix> basis_reg; // lambda~(e_i)

    explicit AlgebraEnv(const FDAlgebra& a) : alg(&a) {
        int n = a.dim;
        CMatrix gram(n, n);
        for (int i = 0; i < n; ++i) {
            std::vector<cplx> si = a.star(a.basis_vector(i));
            for (int j = 0; j < n; ++j) {
                std::vector<cplx> p = a.mul(si, a.basis_vector(j));
                gram(i, j) = a.regular_trace(p) / static_cast<double>(n);
            }
        }
        if (gram.hermiticity_defect() > 1e-8)
            fail("NotSemisimpleDetected", "trace form is not Hermitian");
        R = cholesky_upper(gram);
        Rinv = LU(R).inverse();
        basis_reg.reserve(n);
        for (int i = 0; i < n; ++i)
            basis_reg.push_back(R * a.lambda(a.basis_vector(i)) * Rinv);
    }

    CMatrix rep(const std::vector<cplx>& x) const {
        int n = alg->dim;
        CMatrix m(n, n);
        for (int i = 0; i < n; ++i) {
            if (x[i] == cplx{0.0, 0.0}) continue;
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) m(r, c) += x[i] * basis_reg[i](r, c);
        }
        return m;
    }

    std::vector<cplx> embed(const std::vector<cplx>& x) const { // algebra coords -> C^n
        std::vector<cplx> v(alg->dim, cplx{0.0, 0.0});
        for (int i = 0; i < alg->dim; ++i)
            for (int j = 0; j < alg->dim; ++j) v[i] += R(i, j) * x[j];
        return v;
    }

    std::vector<cplx> extract(const std::vector<cplx>& v) const { // C^n -> algebra coords
        std::vector<cplx> x(alg->dim, cplx{0.0, 0.0});
        for (int i = 0; i < alg->dim; ++i)
            for (int j = 0; j < alg->dim; ++j) x[i] += Rinv(i, j) * v[j];
        return x;
    }
};

// Orthonormal basis of the center, in algebra coordinates.
inline std::vector<std::vector<cplx>> algebra_center(const FDAlgebra& a, double rank_tol) {
    int n = a.dim;
    KernelAccumulator acc(n, rank_tol);
    std::vector<cplx> row(n);
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            std::fill(row.begin(), row.end(), cplx{0.0, 0.0});
            for (int i = 0; i < n; ++i) {
                if (a.pidx(i, j) == k) row[i] += a.pcoef(i, j);
                if (a.pidx(j, i) == k) row[i] -= a.pcoef(j, i);
            }
            acc.add_row(row);
        }
    }
    return acc.kernel();
}

struct WedderburnResult {
    std::vector<int> blocks;                     // dimensions, ascending
    std::vector<std::vector<cplx>> idempotents;  // central primitive, aligned with blocks
    int center_dim = 0;
};

/**
 * Block decomposition of a semisimple *-algebra.
 *
 * The center is computed as the kernel of the commutation system; a seeded
 * random Hermitian central element is diagonalized on the center, its
 * spectral projections rescale to the central primitive idempotents, and
 * each block dimension is sqrt of the rank of the idempotent's left regular
 * action.
 */
inline WedderburnResult wedderburn_blocks(const FDAlgebra& a, std::uint64_t seed,
                                          const Tolerances& tol = Tolerances{}) {
    int n = a.dim;
    AlgebraEnv env(a);
    auto center = algebra_center(a, tol.rank);
    int k = static_cast<int>(center.size());
    if (k == 0) fail("NotSemisimpleDetected", "trivial center in a nonzero algebra");

    std::string last_issue = "unknown";
    for (int attempt = 0; attempt < 8; ++attempt) {
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(attempt)));
        std::vector<cplx> y(n, cplx{0.0, 0.0});
        for (int alpha = 0; alpha < k; ++alpha) {
            cplx c = rng.cgauss();
            for (int i = 0; i < n; ++i) y[i] += c * center[alpha][i];
        }
        std::vector<cplx> ys = a.star(y);
        std::vector<cplx> x(n);
        for (int i = 0; i < n; ++i) x[i] = (y[i] + ys[i]) * 0.5;

        // orthonormal basis of the embedded center
        std::vector<std::vector<cplx>> embedded;
        embedded.reserve(k);
        for (const auto& z : center) embedded.push_back(env.embed(z));
        auto onb = orthonormal_span(embedded, tol.rank);
        if (static_cast<int>(onb.size()) != k) { last_issue = "center basis defective"; continue; }
        std::vector<std::vector<cplx>> onb_alg;
        onb_alg.reserve(k);
        for (const auto& b : onb) onb_alg.push_back(env.extract(b));

        // matrix of multiplication by x on the center
        CMatrix m(k, k);
        bool invariant = true;
        for (int beta = 0; beta < k && invariant; ++beta) {
            std::vector<cplx> prod = env.embed(a.mul(x, onb_alg[beta]));
            std::vector<cplx> residual = prod;
            for (int gamma = 0; gamma < k; ++gamma) {
                cplx c = dot(onb[gamma], prod);
                m(gamma, beta) = c;
                for (int i = 0; i < n; ++i) residual[i] -= c * onb[gamma][i];
            }
            if (vec_norm(residual) > 1e-7 * (1.0 + vec_norm(prod))) invariant = false;
        }
        if (!invariant) { last_issue = "center not invariant under multiplication"; continue; }
        if (m.hermiticity_defect() > 1e-7) { last_issue = "central element not self-adjoint"; continue; }

        EigenResult eig = hermitian_eigen(m, 1e-6);
        double scale = 1.0;
        for (double v : eig.values) scale = std::max(scale, std::abs(v));
        bool distinct = true;
        for (int i = 0; i + 1 < k; ++i)
            if (eig.values[i + 1] - eig.values[i] <= 1e-6 * scale) distinct = false;
        if (!distinct) { last_issue = "degenerate central spectrum"; continue; }

        std::vector<std::vector<cplx>> idems;
        std::vector<int> dims;
        bool ok = true;
        for (int i = 0; i < k && ok; ++i) {
            std::vector<cplx> u(n, cplx{0.0, 0.0});
            for (int beta = 0; beta < k; ++beta)
                for (int t2 = 0; t2 < n; ++t2) u[t2] += eig.vectors(beta, i) * onb_alg[beta][t2];
            std::vector<cplx> uu = a.mul(u, u);
            cplx num = 0.0, den = 0.0;
            for (int t2 = 0; t2 < n; ++t2) {
                num += std::conj(u[t2]) * uu[t2];
                den += std::conj(u[t2]) * u[t2];
            }
            if (std::abs(den) < 1e-18 || std::abs(num) < 1e-12 * std::abs(den)) { ok = false; break; }
            cplx alpha = num / den;
            std::vector<cplx> p(n);
            for (int t2 = 0; t2 < n; ++t2) p[t2] = u[t2] / alpha;
            // verify idempotency
            std::vector<cplx> pp = a.mul(p, p);
            double defect = 0.0;
            for (int t2 = 0; t2 < n; ++t2) defect = std::max(defect, std::abs(pp[t2] - p[t2]));
            if (defect > 1e-7) { ok = false; break; }
            cplx tr = a.regular_trace(p);
            double d2 = tr.real();
            if (std::abs(tr.imag()) > 1e-6) fail("NotSemisimpleDetected", "complex block trace");
            double rounded = std::round(d2);
            if (std::abs(d2 - rounded) > 1e-6)
                fail("RoundingFailure", "block trace ", d2, " is not near an integer");
            int di = static_cast<int>(std::round(std::sqrt(rounded)));
            if (di * di != static_cast<int>(rounded))
                fail("NotSemisimpleDetected", "block rank ", rounded, " is not a perfect square");
            dims.push_back(di);
            idems.push_back(std::move(p));
        }
        if (!ok) { last_issue = "defective idempotent"; continue; }

        // pairwise orthogonality and completeness
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                std::vector<cplx> pij = a.mul(idems[i], idems[j]);
                for (int t2 = 0; t2 < n; ++t2)
                    if (std::abs(pij[t2]) > 1e-7)
                        fail("NotSemisimpleDetected", "idempotents ", i, ",", j, " not orthogonal");
            }
        std::vector<cplx> total(n, cplx{0.0, 0.0});
        for (const auto& p : idems)
            for (int t2 = 0; t2 < n; ++t2) total[t2] += p[t2];
        for (int t2 = 0; t2 < n; ++t2)
            if (std::abs(total[t2] - a.unit[t2]) > 1e-7)
                fail("NotSemisimpleDetected", "idempotents do not sum to the unit");

        int sum = 0;
        for (int d : dims) sum += d * d;
        if (sum != n) fail("NotSemisimpleDetected", "sum of d_i^2 = ", sum, " but dim = ", n);

        std::vector<int> order(k);
        for (int i = 0; i < k; ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return dims[i] < dims[j]; });
        WedderburnResult res;
        res.center_dim = k;
        for (int i : order) {
            res.blocks.push_back(dims[i]);
            res.idempotents.push_back(idems[i]);
        }
        return res;
    }
    fail("DegenerateProjection", "all retries exhausted: ", last_issue);
}

} // namespace gdual
