#pragma once

/**
 * Exact linear programming over Q.
 *
 * solve_standard_form minimizes c.x subject to A x = b, x >= 0 with a dense
 * two-phase tableau simplex and Bland's rule, so it terminates without any
 * anti-cycling heuristics. The dual y solves B^T y = c_B for the final basis.
 *
 * minimize_over_vertices is the brute-force oracle for A x <= b: it solves
 * every square subsystem and keeps the best feasible point.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "linalg.hpp"

namespace simpcoh {

enum class LPStatus { optimal, infeasible, unbounded };

inline const char* to_string(LPStatus s) {
    switch (s) {
        case LPStatus::optimal: return "optimal";
        case LPStatus::infeasible: return "infeasible";
        default: return "unbounded";
    }
}

struct LPResult {
    LPStatus status = LPStatus::infeasible;
    Rational value = 0;
    Vector x;  // primal optimizer
    Vector y;  // dual multipliers, one per row: A^T y <= c and b.y = value
    std::uint64_t pivots = 0;
};

namespace detail {

struct Tableau {
    Matrix T;                    // rows 0..m-1 constraints, last column the right side
    std::vector<std::size_t> basis;
    std::uint64_t pivots = 0;

    void pivot(std::size_t r, std::size_t c) {
        const std::size_t w = T[r].size();
        Rational inv = 1 / T[r][c];
        for (auto& x : T[r]) x *= inv;
        for (std::size_t i = 0; i < T.size(); ++i) {
            if (i == r || T[i][c] == 0) continue;
            Rational f = T[i][c];
            for (std::size_t j = 0; j < w; ++j)
                if (T[r][j] != 0) T[i][j] -= f * T[r][j];
        }
        basis[r] = c;
        ++pivots;
    }

    // Bland's rule on the costs over columns [0, usable). Returns false if unbounded.
    bool optimize(const Vector& cost, std::size_t usable) {
        const std::size_t m = basis.size();
        const std::size_t rhs = T[0].size() - 1;
        while (true) {
            std::optional<std::size_t> enter;
            for (std::size_t j = 0; j < usable && !enter; ++j) {
                if (std::find(basis.begin(), basis.end(), j) != basis.end()) continue;
                Rational reduced = cost[j];
                for (std::size_t i = 0; i < m; ++i)
                    if (T[i][j] != 0) reduced -= cost[basis[i]] * T[i][j];
                if (reduced < 0) enter = j;
            }
            if (!enter) return true;
            std::optional<std::size_t> leave;
            Rational best;
            for (std::size_t i = 0; i < m; ++i) {
                if (T[i][*enter] <= 0) continue;
                Rational ratio = T[i][rhs] / T[i][*enter];
                if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (!leave) return false;
            pivot(*leave, *enter);
        }
    }
};

}  // namespace detail

inline LPResult solve_standard_form(const Matrix& A, const Vector& b, const Vector& c) {
    const std::size_t m = A.size(), n = c.size();
    if (b.size() != m) throw ArityMismatch("right side has the wrong length");
    for (const auto& row : A)
        if (row.size() != n) throw ArityMismatch("constraint row has the wrong length");

    // Phase 1 on [A | I] with artificial columns n .. n+m-1, rows signed so b >= 0.
    detail::Tableau tab;
    for (std::size_t i = 0; i < m; ++i) {
        Vector row(n + m + 1, 0);
        const bool flip = b[i] < 0;
        for (std::size_t j = 0; j < n; ++j) row[j] = flip ? Rational(-A[i][j]) : A[i][j];
        row[n + i] = 1;
        row[n + m] = flip ? Rational(-b[i]) : b[i];
        tab.T.push_back(std::move(row));
        tab.basis.push_back(n + i);
    }
    LPResult res;
    if (m > 0) {
        Vector phase1(n + m, 0);
        for (std::size_t i = 0; i < m; ++i) phase1[n + i] = 1;
        tab.optimize(phase1, n + m);
        for (std::size_t i = 0; i < m; ++i)
            if (tab.basis[i] >= n && tab.T[i][n + m] != 0) {
                res.pivots = tab.pivots;
                return res;
            }
        // Drive artificials out of the basis; rows where that is impossible are redundant.
        std::vector<std::size_t> redundant;
        for (std::size_t i = 0; i < m; ++i) {
            if (tab.basis[i] < n) continue;
            std::optional<std::size_t> col;
            for (std::size_t j = 0; j < n && !col; ++j)
                if (tab.T[i][j] != 0) col = j;
            if (col) tab.pivot(i, *col);
            else redundant.push_back(i);
        }
        for (auto it = redundant.rbegin(); it != redundant.rend(); ++it) {
            tab.T.erase(tab.T.begin() + static_cast<std::ptrdiff_t>(*it));
            tab.basis.erase(tab.basis.begin() + static_cast<std::ptrdiff_t>(*it));
        }
    }
    Vector cost(n + m, 0);
    for (std::size_t j = 0; j < n; ++j) cost[j] = c[j];
    if (!tab.basis.empty() && !tab.optimize(cost, n)) {
        res.status = LPStatus::unbounded;
        res.pivots = tab.pivots;
        return res;
    }
    if (tab.basis.empty())
        for (std::size_t j = 0; j < n; ++j)
            if (c[j] < 0) {
                res.status = LPStatus::unbounded;
                return res;
            }
    res.status = LPStatus::optimal;
    res.pivots = tab.pivots;
    res.x.assign(n, 0);
    for (std::size_t i = 0; i < tab.basis.size(); ++i) res.x[tab.basis[i]] = tab.T[i][n + m];
    for (std::size_t j = 0; j < n; ++j) res.value += c[j] * res.x[j];

    // Duals from B^T y = c_B over the original rows.
    Matrix BT = zero_matrix(tab.basis.size(), m);
    Vector cB;
    for (std::size_t k = 0; k < tab.basis.size(); ++k) {
        for (std::size_t i = 0; i < m; ++i) BT[k][i] = A[i][tab.basis[k]];
        cB.push_back(c[tab.basis[k]]);
    }
    auto y = solve(BT, cB, m);
    if (!y) throw LawViolation("final basis is singular");
    res.y = std::move(*y);
    return res;
}

/// Checks a primal-dual pair for min c.x, A x = b, x >= 0 exactly.
inline bool verify_standard_form(const Matrix& A, const Vector& b, const Vector& c, const LPResult& r) {
    if (r.status != LPStatus::optimal) return false;
    for (const auto& v : r.x)
        if (v < 0) return false;
    if (multiply(A, r.x) != b) return false;
    auto ATy = multiply(transpose(A, c.size()), r.y);
    for (std::size_t j = 0; j < c.size(); ++j)
        if (ATy[j] > c[j]) return false;
    Rational primal = 0, dual = 0;
    for (std::size_t j = 0; j < c.size(); ++j) primal += c[j] * r.x[j];
    for (std::size_t i = 0; i < b.size(); ++i) dual += b[i] * r.y[i];
    return primal == r.value && dual == r.value;
}

/// Minimum of c.x over the vertices of {A x <= b}; none when no vertex is feasible.
inline std::optional<Rational> minimize_over_vertices(const Matrix& A, const Vector& b, const Vector& c) {
    const std::size_t m = A.size(), n = c.size();
    if (n > m) return std::nullopt;
    std::optional<Rational> best;
    std::vector<char> pick(m, 0);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(n), 1);
    do {
        Matrix S;
        Vector rhs;
        for (std::size_t i = 0; i < m; ++i)
            if (pick[i]) {
                S.push_back(A[i]);
                rhs.push_back(b[i]);
            }
        if (rank(S) != n) continue;
        auto x = solve(S, rhs, n);
        auto Ax = multiply(A, *x);
        bool feasible = true;
        for (std::size_t i = 0; i < m && feasible; ++i) feasible = Ax[i] <= b[i];
        if (!feasible) continue;
        Rational v = 0;
        for (std::size_t j = 0; j < n; ++j) v += c[j] * (*x)[j];
        if (!best || v < *best) best = v;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return best;
}

}  // namespace simpcoh
