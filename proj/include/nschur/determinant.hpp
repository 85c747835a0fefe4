#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "nschur/rational_function.hpp"
#include "nschur/real.hpp"

namespace nschur {

template <class T>
using Matrix = std::vector<std::vector<T>>;

template <class T>
Matrix<T> zero_matrix(std::size_t rows, std::size_t cols) {
    return Matrix<T>(rows, std::vector<T>(cols, T(0)));
}

template <class T>
Matrix<T> identity_matrix(std::size_t n) {
    Matrix<T> m = zero_matrix<T>(n, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = T(1);
    return m;
}

template <class T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
    const std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
    Matrix<T> c = zero_matrix<T>(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == T(0)) continue;
            for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

inline void require_square(std::size_t rows, std::size_t cols) {
    if (rows != cols) throw Error("determinant of a non-square matrix");
}

/// Gaussian elimination over the rationals.
inline BigRational det_rational(Matrix<BigRational> m) {
    const std::size_t n = m.size();
    for (const auto& row : m) require_square(n, row.size());
    BigRational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            BigRational f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

/// Bareiss fraction-free elimination; every division is exact.
inline Polynomial fraction_free_det(Matrix<Polynomial> m) {
    const std::size_t n = m.size();
    for (const auto& row : m) require_square(n, row.size());
    if (n == 0) return Polynomial(1);
    int sign = 1;
    Polynomial prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t pivot = k + 1;
            while (pivot < n && m[pivot][k].is_zero()) ++pivot;
            if (pivot == n) return Polynomial{};
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Polynomial v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                auto q = divide_exact(v, prev);
                if (!q) throw Error("fraction_free_det: inexact Bareiss division");
                m[i][j] = std::move(*q);
            }
            m[i][k] = Polynomial{};
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

/// Determinant of a matrix of rational functions.
///
/// Constant matrices go through rational elimination. Otherwise each row is
/// multiplied by the common denominator of its entries and the resulting
/// polynomial matrix goes through Bareiss.
inline RationalFunction det(const Matrix<RationalFunction>& m) {
    const std::size_t n = m.size();
    for (const auto& row : m) require_square(n, row.size());
    bool constant = true;
    for (const auto& row : m)
        for (const auto& e : row) constant = constant && e.is_constant();
    if (constant) {
        Matrix<BigRational> q = zero_matrix<BigRational>(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) q[i][j] = m[i][j].constant_value();
        return RationalFunction(det_rational(std::move(q)));
    }
    Matrix<Polynomial> p(n);
    RationalFunction scale(1);
    for (std::size_t i = 0; i < n; ++i) {
        RationalFunction common(1);
        std::vector<RationalFunction::Factor> fs;
        for (const auto& e : m[i]) {
            for (const auto& f : e.denominator_factors()) {
                bool found = false;
                for (auto& g : fs)
                    if (g.base == f.base) {
                        g.exponent = std::max(g.exponent, f.exponent);
                        found = true;
                    }
                if (!found) fs.push_back(f);
            }
        }
        Polynomial rowden(1);
        for (const auto& f : fs) rowden *= f.base.pow(static_cast<unsigned>(f.exponent));
        for (const auto& e : m[i]) {
            RationalFunction lifted = e * RationalFunction(rowden);
            p[i].push_back(lifted.as_polynomial());
        }
        scale *= RationalFunction(Polynomial(1), rowden);
    }
    return RationalFunction(fraction_free_det(std::move(p))) * scale;
}

/// Inverse by Gauss-Jordan elimination over a field-like scalar type.
template <class T>
Matrix<T> inverse(Matrix<T> m) {
    const std::size_t n = m.size();
    Matrix<T> inv = identity_matrix<T>(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == T(0)) ++pivot;
        if (pivot == n) throw Error("inverse of a singular matrix");
        std::swap(m[pivot], m[col]);
        std::swap(inv[pivot], inv[col]);
        T p = m[col][col];
        for (std::size_t c = 0; c < n; ++c) {
            m[col][c] = m[col][c] / p;
            inv[col][c] = inv[col][c] / p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == T(0)) continue;
            T f = m[r][col];
            for (std::size_t c = 0; c < n; ++c) {
                m[r][c] -= f * m[col][c];
                inv[r][c] -= f * inv[col][c];
            }
        }
    }
    return inv;
}

/// LU with partial pivoting for floating-point matrices.
inline Real det_numeric(Matrix<Real> m) {
    const std::size_t n = m.size();
    Real det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (rabs(m[r][col]) > rabs(m[pivot][col])) pivot = r;
        if (m[pivot][col] == Real(0)) return Real(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            Real f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

}  // namespace nschur
