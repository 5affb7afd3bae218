#pragma once

// Dense exact linear algebra over a field scalar (Q, Q(i), F_p).
// Sizes here are desk scale (<= a few hundred); plain Gaussian elimination
// with exact division is all we need.

#include <cassert>
#include <cstddef>
#include <optional>
#include <vector>

#include "octa/scalar.hpp"

namespace octa {

template <FieldScalar K>
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows, std::vector<K>(cols, K(0))) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    K& operator()(std::size_t i, std::size_t j) { return a_[i][j]; }
    const K& operator()(std::size_t i, std::size_t j) const { return a_[i][j]; }

    std::vector<K>& row(std::size_t i) { return a_[i]; }
    const std::vector<K>& row(std::size_t i) const { return a_[i]; }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        assert(x.cols_ == y.rows_);
        Matrix z(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                if (is_zero(x(i, k))) continue;
                for (std::size_t j = 0; j < y.cols_; ++j)
                    z(i, j) += x(i, k) * y(k, j);
            }
        return z;
    }

    friend Matrix operator*(const K& s, const Matrix& x) {
        Matrix z = x;
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t j = 0; j < x.cols_; ++j) z(i, j) = s * z(i, j);
        return z;
    }

    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        assert(x.rows_ == y.rows_ && x.cols_ == y.cols_);
        Matrix z = x;
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t j = 0; j < x.cols_; ++j) z(i, j) += y(i, j);
        return z;
    }

    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        assert(x.rows_ == y.rows_ && x.cols_ == y.cols_);
        Matrix z = x;
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t j = 0; j < x.cols_; ++j) z(i, j) -= y(i, j);
        return z;
    }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) return false;
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t j = 0; j < x.cols_; ++j)
                if (!(x(i, j) == y(i, j))) return false;
        return true;
    }

    bool is_zero_matrix() const {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!is_zero(a_[i][j])) return false;
        return true;
    }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = a_[i][j];
        return t;
    }

    // Reduced row echelon form in place; returns pivot columns.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t sel = r;
            while (sel < rows_ && is_zero(a_[sel][c])) ++sel;
            if (sel == rows_) continue;
            std::swap(a_[sel], a_[r]);
            K inv = inverse(a_[r][c]);
            for (std::size_t j = c; j < cols_; ++j) a_[r][j] = a_[r][j] * inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || is_zero(a_[i][c])) continue;
                K f = a_[i][c];
                for (std::size_t j = c; j < cols_; ++j) a_[i][j] -= f * a_[r][j];
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::vector<K>> a_;
};

template <FieldScalar K>
std::size_t rank(Matrix<K> m) {
    return m.rref().size();
}

// Basis of the right kernel {v : m v = 0}, one column vector per basis element.
template <FieldScalar K>
std::vector<std::vector<K>> kernel_basis(Matrix<K> m) {
    const std::size_t n = m.cols();
    std::vector<std::size_t> pivots = m.rref();
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<K>> basis;
    for (std::size_t freec = 0; freec < n; ++freec) {
        if (is_pivot[freec]) continue;
        std::vector<K> v(n, K(0));
        v[freec] = K(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, freec);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Does b lie in the column span of m?
template <FieldScalar K>
bool in_column_span(const Matrix<K>& m, const std::vector<K>& b) {
    Matrix<K> aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    Matrix<K> base = m;
    return rank(std::move(base)) == rank(std::move(aug));
}

// Solve m x = b; nullopt when inconsistent (any solution is returned).
template <FieldScalar K>
std::optional<std::vector<K>> solve(Matrix<K> m, std::vector<K> b) {
    const std::size_t n = m.cols();
    Matrix<K> aug(m.rows(), n + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n) = b[i];
    }
    std::vector<std::size_t> pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == n) return std::nullopt;
    std::vector<K> x(n, K(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, n);
    return x;
}

// Stack column vectors into a matrix.
template <FieldScalar K>
Matrix<K> from_columns(std::size_t dim, const std::vector<std::vector<K>>& cols) {
    Matrix<K> m(dim, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < dim; ++i) m(i, j) = cols[j][i];
    return m;
}

}  // namespace octa
