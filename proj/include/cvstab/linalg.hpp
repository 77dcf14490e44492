// Copyright 2026 The cvstab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cvstab::linalg {

/// Dense row-major matrix. The algorithms below are written for an exact field
/// (e.g. Scalar); they compare against zero without tolerance.
template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Row-reduces `m` in place to reduced row-echelon form with unit pivots and
/// drops zero rows. Returns the pivot column of each surviving row.
template <class T>
std::vector<std::size_t> rref(Matrix<T> &m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) {
        return pivots;
    }
    const std::size_t cols = m.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) {
            ++p;
        }
        if (p == m.size()) {
            continue;
        }
        std::swap(m[r], m[p]);
        T inv = T(1) / m[r][c];
        for (auto &x : m[r]) {
            x *= inv;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) {
                continue;
            }
            T f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) {
                m[i][j] -= f * m[r][j];
            }
        }
        pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    return pivots;
}

template <class T>
std::size_t rank(Matrix<T> m) {
    return rref(m).size();
}

/// Basis of { v : m v = 0 } for a matrix with `cols` columns, one basis vector
/// per free column (free variable set to 1, the others to 0).
template <class T>
Matrix<T> nullspace(Matrix<T> m, std::size_t cols) {
    for (const auto &row : m) {
        if (row.size() != cols) {
            throw std::invalid_argument("nullspace: ragged matrix");
        }
    }
    auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) {
        is_pivot[p] = true;
    }
    Matrix<T> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        std::vector<T> v(cols, T(0));
        v[free] = T(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            v[pivots[r]] = -m[r][free];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Gauss-Jordan inverse of a square nonsingular matrix.
template <class T>
Matrix<T> inverse(const Matrix<T> &a) {
    const std::size_t n = a.size();
    Matrix<T> aug(n, std::vector<T>(2 * n, T(0)));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) {
            throw std::invalid_argument("inverse: matrix is not square");
        }
        for (std::size_t j = 0; j < n; ++j) {
            aug[i][j] = a[i][j];
        }
        aug[i][n + i] = T(1);
    }
    auto pivots = rref(aug);
    if (pivots.size() != n || (n > 0 && pivots.back() != n - 1)) {
        throw std::invalid_argument("inverse: matrix is singular");
    }
    Matrix<T> out(n, std::vector<T>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out[i][j] = aug[i][n + j];
        }
    }
    return out;
}

template <class T>
Matrix<T> transpose(const Matrix<T> &a, std::size_t cols) {
    Matrix<T> out(cols, std::vector<T>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            out[j][i] = a[i][j];
        }
    }
    return out;
}

template <class T>
Matrix<T> multiply(const Matrix<T> &a, const Matrix<T> &b, std::size_t b_cols) {
    Matrix<T> out(a.size(), std::vector<T>(b_cols, T(0)));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t l = 0; l < b.size(); ++l) {
            if (a[i][l] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b_cols; ++j) {
                out[i][j] += a[i][l] * b[l][j];
            }
        }
    }
    return out;
}

/// Moore-Penrose pseudoinverse over an exact field, via a full-rank
/// factorization a = c f (c: columns of a at the pivots, f: nonzero rref rows).
/// Returns a `cols` x `a.size()` matrix.
template <class T>
Matrix<T> pseudoinverse(const Matrix<T> &a, std::size_t cols) {
    Matrix<T> f = a;
    auto pivots = rref(f);
    const std::size_t r = pivots.size();
    if (r == 0) {
        return Matrix<T>(cols, std::vector<T>(a.size(), T(0)));
    }
    Matrix<T> c(a.size(), std::vector<T>(r));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            c[i][j] = a[i][pivots[j]];
        }
    }
    // a+ = f^T (f f^T)^-1 (c^T c)^-1 c^T
    Matrix<T> ft = transpose(f, cols);
    Matrix<T> ct = transpose(c, r);
    Matrix<T> fft_inv = inverse(multiply(f, ft, r));
    Matrix<T> ctc_inv = inverse(multiply(ct, c, r));
    Matrix<T> left = multiply(ft, fft_inv, r);
    Matrix<T> right = multiply(ctc_inv, ct, a.size());
    return multiply(left, right, a.size());
}

}  // namespace cvstab::linalg
