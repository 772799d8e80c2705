#pragma once

// Small dense matrix support for the regression engine: row-major storage
// and Cholesky factorization for the symmetric positive-definite systems
// IRLS produces. Sizes here are tiny (k <= a few dozen), so no BLAS.

#include <cmath>
#include <cstddef>
#include <vector>

namespace noticescope::detail {

class Matrix {
  public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    double& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
    double operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<double>& data() const { return data_; }

  private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<double> data_;
};

// In-place lower Cholesky factor of a symmetric positive-definite matrix.
// Returns false on a non-positive pivot (not SPD / rank-deficient).
inline bool cholesky_factor(Matrix& a) {
    size_t n = a.rows();
    for (size_t j = 0; j < n; ++j) {
        double d = a(j, j);
        for (size_t k = 0; k < j; ++k) d -= a(j, k) * a(j, k);
        if (!(d > 0.0) || !std::isfinite(d)) return false;
        double root = std::sqrt(d);
        a(j, j) = root;
        for (size_t i = j + 1; i < n; ++i) {
            double v = a(i, j);
            for (size_t k = 0; k < j; ++k) v -= a(i, k) * a(j, k);
            a(i, j) = v / root;
        }
    }
    // zero the strict upper triangle so the factor is self-contained
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) a(i, j) = 0.0;
    return true;
}

// Solves L L^T x = b given the lower factor.
inline std::vector<double> cholesky_solve(const Matrix& l, const std::vector<double>& b) {
    size_t n = l.rows();
    std::vector<double> x(b);
    for (size_t i = 0; i < n; ++i) {
        double v = x[i];
        for (size_t k = 0; k < i; ++k) v -= l(i, k) * x[k];
        x[i] = v / l(i, i);
    }
    for (size_t i = n; i-- > 0;) {
        double v = x[i];
        for (size_t k = i + 1; k < n; ++k) v -= l(k, i) * x[k];
        x[i] = v / l(i, i);
    }
    return x;
}

// (L L^T)^{-1} via n unit solves.
inline Matrix cholesky_inverse(const Matrix& l) {
    size_t n = l.rows();
    Matrix inv(n, n);
    std::vector<double> e(n, 0.0);
    for (size_t j = 0; j < n; ++j) {
        e[j] = 1.0;
        std::vector<double> col = cholesky_solve(l, e);
        e[j] = 0.0;
        for (size_t i = 0; i < n; ++i) inv(i, j) = col[i];
    }
    return inv;
}

}  // namespace noticescope::detail
