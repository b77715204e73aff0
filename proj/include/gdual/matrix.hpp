#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "gdual/error.hpp"
#include "gdual/rng.hpp"
#include "gdual/scalar.hpp"

namespace gdual {

// Dense complex matrix, row-major.  Sizes here are tiny (a few hundred at
// most), so everything is straightforward O(n^3) kernels.
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static CMatrix identity(int n) {
        CMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    cplx& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const cplx& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    const std::vector<cplx>& data() const { return a_; }
    std::vector<cplx>& data() { return a_; }

    CMatrix operator*(const CMatrix& o) const {
        if (cols_ != o.rows_) fail("ShapeMismatch", "matmul ", rows_, "x", cols_, " * ", o.rows_, "x", o.cols_);
        CMatrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i) {
            for (int k = 0; k < cols_; ++k) {
                cplx aik = (*this)(i, k);
                if (aik == cplx{0.0, 0.0}) continue;
                const cplx* brow = &o.a_[static_cast<std::size_t>(k) * o.cols_];
                cplx* rrow = &r.a_[static_cast<std::size_t>(i) * o.cols_];
                for (int j = 0; j < o.cols_; ++j) rrow[j] += aik * brow[j];
            }
        }
        return r;
    }

    CMatrix operator+(const CMatrix& o) const {
        check_same_shape(o);
        CMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
        return r;
    }

    CMatrix operator-(const CMatrix& o) const {
        check_same_shape(o);
        CMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
        return r;
    }

    CMatrix operator*(cplx s) const {
        CMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
        return r;
    }

    CMatrix adjoint() const {
        CMatrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
        return r;
    }

    CMatrix transpose() const {
        CMatrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    CMatrix conj() const {
        CMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = std::conj(a_[i]);
        return r;
    }

    cplx trace() const {
        cplx t = 0.0;
        for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
        return t;
    }

    double norm_inf() const {
        double m = 0.0;
        for (const cplx& z : a_) m = std::max(m, std::abs(z));
        return m;
    }

    double norm_fro() const {
        double s = 0.0;
        for (const cplx& z : a_) s += std::norm(z);
        return std::sqrt(s);
    }

    bool is_square() const { return rows_ == cols_; }

    double hermiticity_defect() const {
        double m = 0.0;
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        return m;
    }

    double unitarity_defect() const {
        CMatrix g = adjoint() * (*this);
        for (int i = 0; i < g.rows(); ++i) g(i, i) -= 1.0;
        return g.norm_inf();
    }

    // Kronecker product; (A kron B)(e_i kron e_j) = A e_i kron B e_j with the
    // (i,j) index flattened row-major.
    CMatrix kron(const CMatrix& b) const {
        CMatrix r(rows_ * b.rows_, cols_ * b.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) {
                cplx aij = (*this)(i, j);
                if (aij == cplx{0.0, 0.0}) continue;
                for (int k = 0; k < b.rows_; ++k)
                    for (int l = 0; l < b.cols_; ++l)
                        r(i * b.rows_ + k, j * b.cols_ + l) = aij * b(k, l);
            }
        return r;
    }

private:
    void check_same_shape(const CMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            fail("ShapeMismatch", rows_, "x", cols_, " vs ", o.rows_, "x", o.cols_);
    }

    int rows_ = 0, cols_ = 0;
    std::vector<cplx> a_;
};

inline CMatrix operator*(cplx s, const CMatrix& m) { return m * s; }

inline cplx dot(const std::vector<cplx>& u, const std::vector<cplx>& v) {
    cplx s = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
    return s;
}

inline double vec_norm(const std::vector<cplx>& u) {
    double s = 0.0;
    for (const cplx& z : u) s += std::norm(z);
    return std::sqrt(s);
}

// LU decomposition with partial pivoting; solve and inverse.
class LU {
public:
    explicit LU(const CMatrix& m) : lu_(m), perm_(m.rows()) {
        if (!m.is_square()) fail("ShapeMismatch", "LU of non-square matrix");
        int n = m.rows();
        for (int i = 0; i < n; ++i) perm_[i] = i;
        for (int k = 0; k < n; ++k) {
            int p = k;
            double best = std::abs(lu_(k, k));
            for (int i = k + 1; i < n; ++i) {
                double v = std::abs(lu_(i, k));
                if (v > best) { best = v; p = i; }
            }
            if (best == 0.0) { singular_ = true; continue; }
            if (p != k) {
                std::swap(perm_[p], perm_[k]);
                for (int j = 0; j < n; ++j) std::swap(lu_(p, j), lu_(k, j));
            }
            for (int i = k + 1; i < n; ++i) {
                cplx f = lu_(i, k) / lu_(k, k);
                lu_(i, k) = f;
                for (int j = k + 1; j < n; ++j) lu_(i, j) -= f * lu_(k, j);
            }
        }
    }

    bool singular() const { return singular_; }

    std::vector<cplx> solve(const std::vector<cplx>& b) const {
        if (singular_) fail("SingularMatrix", "solve on singular system");
        int n = lu_.rows();
        std::vector<cplx> x(n);
        for (int i = 0; i < n; ++i) x[i] = b[perm_[i]];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < i; ++j) x[i] -= lu_(i, j) * x[j];
        for (int i = n - 1; i >= 0; --i) {
            for (int j = i + 1; j < n; ++j) x[i] -= lu_(i, j) * x[j];
            x[i] /= lu_(i, i);
        }
        return x;
    }

    CMatrix solve(const CMatrix& b) const {
        CMatrix r(b.rows(), b.cols());
        std::vector<cplx> col(b.rows());
        for (int j = 0; j < b.cols(); ++j) {
            for (int i = 0; i < b.rows(); ++i) col[i] = b(i, j);
            std::vector<cplx> x = solve(col);
            for (int i = 0; i < b.rows(); ++i) r(i, j) = x[i];
        }
        return r;
    }

    CMatrix inverse() const { return solve(CMatrix::identity(lu_.rows())); }

private:
    CMatrix lu_;
    std::vector<int> perm_;
    bool singular_ = false;
};

// Cholesky factor R (upper triangular) of a Hermitian positive definite
// matrix: G = R^* R.
inline CMatrix cholesky_upper(const CMatrix& g) {
    if (!g.is_square()) fail("ShapeMismatch", "cholesky of non-square matrix");
    int n = g.rows();
    CMatrix r(n, n);
    for (int j = 0; j < n; ++j) {
        cplx diag = g(j, j);
        for (int k = 0; k < j; ++k) diag -= std::conj(r(k, j)) * r(k, j);
        double d = diag.real();
        if (d <= 0.0) fail("NotPositiveDefinite", "pivot ", j, " value ", d);
        r(j, j) = std::sqrt(d);
        for (int i = j + 1; i < n; ++i) {
            cplx s = g(j, i);
            for (int k = 0; k < j; ++k) s -= std::conj(r(k, j)) * r(k, i);
            r(j, i) = s / r(j, j);
        }
    }
    return r;
}

// Orthonormal basis of the span of the given vectors (modified Gram-Schmidt
// with one re-orthogonalization pass).  Deterministic: input order decides
// which vectors survive.
inline std::vector<std::vector<cplx>> orthonormal_span(
    const std::vector<std::vector<cplx>>& cols, double rank_tol) {
    std::vector<std::vector<cplx>> basis;
    double scale = 0.0;
    for (const auto& c : cols) scale = std::max(scale, vec_norm(c));
    if (scale == 0.0) return basis;
    for (const auto& c : cols) {
        std::vector<cplx> v = c;
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& b : basis) {
                cplx coeff = dot(b, v);
                for (std::size_t i = 0; i < v.size(); ++i) v[i] -= coeff * b[i];
            }
        }
        double nv = vec_norm(v);
        if (nv > rank_tol * scale) {
            for (cplx& z : v) z /= nv;
            basis.push_back(std::move(v));
        }
    }
    return basis;
}

// Rank/kernel helper: feed rows of a linear system; the kernel of the system
// is the orthogonal complement of the row space.  Rows are buffered so rank
// decisions use the global scale of the system (a near-zero row arriving
// first must not turn its noise into basis directions).
class KernelAccumulator {
public:
    explicit KernelAccumulator(int n, double rank_tol) : n_(n), tol_(rank_tol) {}

    void add_row(std::vector<cplx> row) {
        // kernel is orthogonal to conj(row) under the Hermitian inner product
        for (cplx& z : row) z = std::conj(z);
        if (vec_norm(row) == 0.0) return;
        raw_.push_back(std::move(row));
        reduced_ = false;
    }

    int rank() const {
        reduce();
        return static_cast<int>(rows_.size());
    }

    // Orthonormal basis of the kernel: project the coordinate vectors off the
    // row space, then keep the n - rank largest residuals (pivoted, so evenly
    // spread kernel vectors are found reliably).
    std::vector<std::vector<cplx>> kernel() const {
        reduce();
        int want = n_ - rank();
        std::vector<std::vector<cplx>> residuals(n_);
        for (int j = 0; j < n_; ++j) {
            std::vector<cplx> v(n_, cplx{0.0, 0.0});
            v[j] = 1.0;
            for (int pass = 0; pass < 2; ++pass)
                for (const auto& b : rows_) {
                    cplx coeff = dot(b, v);
                    for (int i = 0; i < n_; ++i) v[i] -= coeff * b[i];
                }
            residuals[j] = std::move(v);
        }
        std::vector<std::vector<cplx>> basis;
        while (static_cast<int>(basis.size()) < want) {
            int pick = -1;
            double best = 1e-8; // well above row-space elimination noise
            for (int j = 0; j < n_; ++j) {
                double nv = vec_norm(residuals[j]);
                if (nv > best) { best = nv; pick = j; }
            }
            if (pick < 0) fail("RankDeficiency", "kernel basis incomplete");
            std::vector<cplx>& v = residuals[pick];
            double nv = vec_norm(v);
            for (cplx& z : v) z /= nv;
            for (int j = 0; j < n_; ++j) {
                if (j == pick) continue;
                cplx coeff = dot(v, residuals[j]);
                for (int i = 0; i < n_; ++i) residuals[j][i] -= coeff * v[i];
            }
            basis.push_back(v);
            residuals[pick].assign(n_, cplx{0.0, 0.0});
        }
        return basis;
    }

private:
    void reduce() const {
        if (reduced_) return;
        rows_.clear();
        double scale = 0.0;
        for (const auto& r : raw_) scale = std::max(scale, vec_norm(r));
        if (scale > 0.0) {
            for (const auto& r : raw_) {
                std::vector<cplx> v = r;
                for (int pass = 0; pass < 2; ++pass)
                    for (const auto& b : rows_) {
                        cplx coeff = dot(b, v);
                        for (int i = 0; i < n_; ++i) v[i] -= coeff * b[i];
                    }
                double nv = vec_norm(v);
                if (nv > tol_ * scale) {
                    for (cplx& z : v) z /= nv;
                    rows_.push_back(std::move(v));
                }
            }
        }
        reduced_ = true;
    }

    int n_;
    double tol_;
    std::vector<std::vector<cplx>> raw_;
    mutable bool reduced_ = true;
    mutable std::vector<std::vector<cplx>> rows_;
};

inline CMatrix random_unitary(int n, Rng& rng) {
    std::vector<std::vector<cplx>> cols;
    cols.reserve(n);
    for (int j = 0; j < n; ++j) {
        std::vector<cplx> c(n);
        for (int i = 0; i < n; ++i) c[i] = rng.cgauss();
        cols.push_back(std::move(c));
    }
    auto basis = orthonormal_span(cols, 1e-12);
    if (static_cast<int>(basis.size()) != n) fail("DegenerateDraw", "random unitary rank deficiency");
    CMatrix u(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) u(i, j) = basis[j][i];
    return u;
}

} // namespace gdual
