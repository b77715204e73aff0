#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "gdual/matrix.hpp"

namespace gdual {

struct EigenResult {
    std::vector<double> values; // ascending
    CMatrix vectors;            // columns, unitary
};

/**
 * Cyclic Jacobi eigensolver for complex Hermitian matrices.
 *
 * Each rotation works on a 2x2 principal block [[a, b],[conj(b), d]]: the
 * phase of b is absorbed by a diagonal unitary and the remaining real
 * symmetric block is annihilated by a classical Jacobi rotation.  The sweep
 * order (p < q, row-major) is fixed, so results are deterministic.
 */
inline EigenResult hermitian_eigen(const CMatrix& m, double tol = 1e-9) {
    if (!m.is_square()) fail("ShapeMismatch", "hermitian_eigen on non-square matrix");
    int n = m.rows();
    if (m.hermiticity_defect() > tol)
        fail("NotHermitian", "defect ", m.hermiticity_defect(), " exceeds tol ", tol);

    CMatrix a = (m + m.adjoint()) * cplx{0.5, 0.0};
    CMatrix v = CMatrix::identity(n);

    auto off_norm = [&]() {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) s += std::norm(a(i, j));
        return std::sqrt(s);
    };

    double scale = std::max(a.norm_fro(), 1e-300);
    const double conv = 1e-15 * scale;
    for (int sweep = 0; sweep < 60 && off_norm() > conv; ++sweep) {
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                cplx apq = a(p, q);
                double abs_apq = std::abs(apq);
                if (abs_apq <= 1e-18 * scale) continue;
                double app = a(p, p).real();
                double aqq = a(q, q).real();
                cplx phase = apq / abs_apq; // e^{i phi}
                // real rotation zeroing [[app, |apq|],[|apq|, aqq]]
                double tau = (aqq - app) / (2.0 * abs_apq);
                double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;
                // 2x2 unitary: column p -> (c, -s*conj(phase)), column q -> (s, c*conj(phase))
                cplx up_p = c, uq_p = -s * std::conj(phase);
                cplx up_q = s, uq_q = c * std::conj(phase);
                for (int k = 0; k < n; ++k) { // A <- A * U
                    cplx akp = a(k, p), akq = a(k, q);
                    a(k, p) = akp * up_p + akq * uq_p;
                    a(k, q) = akp * up_q + akq * uq_q;
                }
                for (int k = 0; k < n; ++k) { // A <- U^* A
                    cplx apk = a(p, k), aqk = a(q, k);
                    a(p, k) = std::conj(up_p) * apk + std::conj(uq_p) * aqk;
                    a(q, k) = std::conj(up_q) * apk + std::conj(uq_q) * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (int k = 0; k < n; ++k) { // V <- V * U
                    cplx vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = vkp * up_p + vkq * uq_p;
                    v(k, q) = vkp * up_q + vkq * uq_q;
                }
            }
        }
    }

    EigenResult res;
    res.values.resize(n);
    for (int i = 0; i < n; ++i) res.values[i] = a(i, i).real();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return res.values[i] < res.values[j]; });
    std::vector<double> sorted(n);
    CMatrix vs(n, n);
    for (int j = 0; j < n; ++j) {
        sorted[j] = res.values[order[j]];
        for (int i = 0; i < n; ++i) vs(i, j) = v(i, order[j]);
    }
    res.values = std::move(sorted);
    res.vectors = std::move(vs);
    return res;
}

// Group near-equal eigenvalues; returns the list of (mean, multiplicity).
inline std::vector<std::pair<double, int>> cluster_eigenvalues(
    const std::vector<double>& vals, double gap) {
    std::vector<std::pair<double, int>> clusters;
    for (double v : vals) {
        if (!clusters.empty() && std::abs(v - clusters.back().first) <= gap) {
            auto& [mean, count] = clusters.back();
            mean = (mean * count + v) / (count + 1);
            ++count;
        } else {
            clusters.emplace_back(v, 1);
        }
    }
    return clusters;
}

} // namespace gdual
