#pragma once

// Dense exact linear algebra over Q: reduced row echelon form, kernels, solving.

#include <optional>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace simpcoh {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;  // row-major

inline Matrix zero_matrix(std::size_t rows, std::size_t cols) { return Matrix(rows, Vector(cols, 0)); }

inline std::size_t columns(const Matrix& A, std::size_t fallback = 0) { return A.empty() ? fallback : A[0].size(); }

inline Vector multiply(const Matrix& A, const Vector& x) {
    Vector r(A.size(), 0);
    for (std::size_t i = 0; i < A.size(); ++i) {
        if (A[i].size() != x.size()) throw ArityMismatch("matrix and vector sizes differ");
        for (std::size_t j = 0; j < x.size(); ++j)
            if (A[i][j] != 0 && x[j] != 0) r[i] += A[i][j] * x[j];
    }
    return r;
}

inline Matrix transpose(const Matrix& A, std::size_t cols) {
    Matrix T = zero_matrix(cols, A.size());
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) T[j][i] = A[i][j];
    return T;
}

struct Echelon {
    Matrix R;                       // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column of row i
};

inline Echelon rref(Matrix A) {
    Echelon e;
    const std::size_t rows = A.size(), cols = columns(A);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && A[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(A[p], A[r]);
        Rational inv = 1 / A[r][c];
        for (auto& x : A[r]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || A[i][c] == 0) continue;
            Rational f = A[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (A[r][j] != 0) A[i][j] -= f * A[r][j];
        }
        e.pivots.push_back(c);
        ++r;
    }
    A.resize(r);
    e.R = std::move(A);
    return e;
}

inline std::size_t rank(const Matrix& A) { return rref(A).pivots.size(); }

/// Basis of {x : A x = 0}; cols is needed when A has no rows.
inline std::vector<Vector> kernel_basis(const Matrix& A, std::size_t cols) {
    auto e = rref(A);
    std::vector<char> is_pivot(cols, 0);
    for (auto p : e.pivots) is_pivot[p] = 1;
    std::vector<Vector> out;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vector v(cols, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.R[i][f];
        out.push_back(std::move(v));
    }
    return out;
}

/// Some x with A x = b, if one exists.
inline std::optional<Vector> solve(const Matrix& A, const Vector& b, std::size_t cols) {
    if (A.size() != b.size()) throw ArityMismatch("right side has the wrong length");
    Matrix aug = A;
    for (std::size_t i = 0; i < aug.size(); ++i) {
        aug[i].resize(cols);
        aug[i].push_back(b[i]);
    }
    auto e = rref(std::move(aug));
    Vector x(cols, 0);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] == cols) return std::nullopt;
        x[e.pivots[i]] = e.R[i][cols];
    }
    return x;
}

/// The columns of A as vectors.
inline std::vector<Vector> column_vectors(const Matrix& A, std::size_t cols) { return transpose(A, cols); }

}  // namespace simpcoh
