#pragma once

/**
 * Rational cohomology of truncated sets and the canonical semi-norm
 * ||[z]|| = min over b of ||z + d* b||_inf, solved exactly as a Chebyshev LP.
 *
 * The LP dual of that problem is a chain w with boundary zero in the complex,
 * ||w||_1 <= 1 and <z, w> equal to the optimum. That chain is the certificate;
 * checking it needs no solver.
 *
 * In full mode cochains live on all simplices, degenerate ones included. In
 * normalized mode they vanish on degenerate simplices and only nondegenerate
 * simplices index rows and columns.
 */

#include <algorithm>
#include <string>
#include <vector>

#include "cochain.hpp"
#include "lp.hpp"

namespace simpcoh {

enum class CochainMode { full, normalized };

inline const char* to_string(CochainMode m) { return m == CochainMode::full ? "full" : "normalized"; }

/// Simplices of dimension q used as coordinates.
inline std::vector<Index> cochain_index(const SimplicialSet& K, int q, CochainMode mode) {
    if (q < 0) return {};
    if (mode == CochainMode::normalized) return nondegenerate(K, q);
    std::vector<Index> all(K.size(q));
    for (Index s = 0; s < all.size(); ++s) all[s] = s;
    return all;
}

/// The matrix of d* : C^n -> C^{n+1}; rows index (n+1)-simplices, columns n-simplices.
inline Matrix coboundary_matrix(const SimplicialSet& K, int n, CochainMode mode) {
    if (n + 1 > K.dim_cap()) throw CapExceeded("coboundary out of degree " + std::to_string(n) + " needs cap " + std::to_string(n + 1));
    auto rows = cochain_index(K, n + 1, mode);
    auto cols = cochain_index(K, n, mode);
    std::vector<long> pos(K.size(n), -1);
    for (std::size_t j = 0; j < cols.size(); ++j) pos[cols[j]] = static_cast<long>(j);
    Matrix D = zero_matrix(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int i = 0; i <= n + 1; ++i) {
            long j = pos[K.face(n + 1, i, rows[r])];
            if (j >= 0) D[r][static_cast<std::size_t>(j)] += i % 2 ? -1 : 1;
        }
    return D;
}

/// Coordinates of a cochain in the chosen mode.
inline Vector restrict_cochain(const SimplicialSet& K, const RationalCochain& c, CochainMode mode) {
    if (c.values.size() != K.size(c.degree)) throw ArityMismatch("cochain has the wrong length");
    Vector v;
    for (Index s : cochain_index(K, c.degree, mode)) v.push_back(c[s]);
    if (mode == CochainMode::normalized)
        for (Index s = 0; s < K.size(c.degree); ++s)
            if (c[s] != 0 && is_degenerate(K, c.degree, s)) throw InvalidArgument("cochain is not normalized");
    return v;
}

inline RationalCochain extend_cochain(const SimplicialSet& K, int degree, const Vector& v, CochainMode mode) {
    RationalCochain c{degree, std::vector<Rational>(K.size(degree), 0)};
    auto idx = cochain_index(K, degree, mode);
    for (std::size_t j = 0; j < idx.size(); ++j) c[idx[j]] = v[j];
    return c;
}

/// H^n with a basis of representative cocycles, complementing a basis of coboundaries.
struct Cohomology {
    int degree = 0;
    CochainMode mode = CochainMode::full;
    std::vector<Index> index;
    std::vector<Vector> boundaries;
    std::vector<Vector> representatives;

    std::size_t betti() const { return representatives.size(); }

    /// Coordinates of [z] in the representative basis; throws if z is not a cocycle.
    Vector coordinates(const SimplicialSet& K, const RationalCochain& z) const {
        auto v = restrict_cochain(K, z, mode);
        Matrix cols;
        for (const auto& b : boundaries) cols.push_back(b);
        for (const auto& r : representatives) cols.push_back(r);
        auto x = solve(transpose(cols, index.size()), v, cols.size());
        if (!x) throw InvalidArgument("not a cocycle");
        return Vector(x->begin() + static_cast<std::ptrdiff_t>(boundaries.size()), x->end());
    }

    RationalCochain representative(const SimplicialSet& K, const Vector& coords) const {
        Vector v(index.size(), 0);
        for (std::size_t i = 0; i < coords.size(); ++i)
            for (std::size_t j = 0; j < v.size(); ++j) v[j] += coords[i] * representatives[i][j];
        return extend_cochain(K, degree, v, mode);
    }
};

inline Cohomology cohomology(const SimplicialSet& K, int n, CochainMode mode = CochainMode::full) {
    Cohomology H;
    H.degree = n;
    H.mode = mode;
    H.index = cochain_index(K, n, mode);
    const std::size_t dim = H.index.size();
    auto Z = kernel_basis(coboundary_matrix(K, n, mode), dim);
    if (n > 0) {
        auto D = coboundary_matrix(K, n - 1, mode);
        H.boundaries = rref(transpose(D, cochain_index(K, n - 1, mode).size())).R;
    }
    Matrix span = H.boundaries;
    for (auto& z : Z) {
        span.push_back(z);
        if (rank(span) == span.size()) {
            H.representatives.push_back(z);
        } else {
            span.pop_back();
        }
    }
    return H;
}

struct SeminormCertificate {
    int degree = 0;
    CochainMode mode = CochainMode::full;
    Rational value = 0;
    RationalCochain primitive;   // b, of degree n - 1
    RationalCochain optimizer;   // z + d* b
    FormalSum<Index> dual;       // cycle w with ||w||_1 <= 1 and <z, w> = value
    std::uint64_t pivots = 0;
};

inline bool is_cocycle_q(const SimplicialSet& K, const RationalCochain& z, CochainMode mode) {
    if (z.degree + 1 > K.dim_cap()) return true;
    auto v = multiply(coboundary_matrix(K, z.degree, mode), restrict_cochain(K, z, mode));
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

/// Minimizes ||z + d* b||_inf by an exact LP.
inline SeminormCertificate seminorm(const SimplicialSet& K, const RationalCochain& z, CochainMode mode = CochainMode::full) {
    const int n = z.degree;
    if (!is_cocycle_q(K, z, mode)) throw InvalidArgument("z is not a cocycle");
    auto rows = cochain_index(K, n, mode);
    auto zv = restrict_cochain(K, z, mode);
    Matrix D = n > 0 ? coboundary_matrix(K, n - 1, mode) : zero_matrix(rows.size(), 0);
    const std::size_t r = rows.size(), k = n > 0 ? cochain_index(K, n - 1, mode).size() : 0;

    // Variables b+ (k), b- (k), t, s1 (r), s2 (r).
    const std::size_t nv = 2 * k + 1 + 2 * r;
    Matrix A = zero_matrix(2 * r, nv);
    Vector rhs(2 * r, 0), cost(nv, 0);
    cost[2 * k] = 1;
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            A[i][j] = D[i][j];
            A[i][k + j] = -D[i][j];
            A[r + i][j] = -D[i][j];
            A[r + i][k + j] = D[i][j];
        }
        A[i][2 * k] = -1;
        A[r + i][2 * k] = -1;
        A[i][2 * k + 1 + i] = 1;
        A[r + i][2 * k + 1 + r + i] = 1;
        rhs[i] = -zv[i];
        rhs[r + i] = zv[i];
    }
    auto lp = solve_standard_form(A, rhs, cost);
    if (lp.status != LPStatus::optimal) throw LawViolation(std::string("semi-norm LP ended ") + to_string(lp.status));

    SeminormCertificate cert;
    cert.degree = n;
    cert.mode = mode;
    cert.value = lp.value;
    cert.pivots = lp.pivots;
    Vector b(k, 0);
    for (std::size_t j = 0; j < k; ++j) b[j] = lp.x[j] - lp.x[k + j];
    cert.primitive = n > 0 ? extend_cochain(K, n - 1, b, mode) : RationalCochain{-1, {}};
    auto Db = multiply(D, b);
    Vector opt(r);
    for (std::size_t i = 0; i < r; ++i) opt[i] = zv[i] + (k ? Db[i] : Rational(0));
    cert.optimizer = extend_cochain(K, n, opt, mode);
    for (std::size_t i = 0; i < r; ++i) cert.dual.add(rows[i], lp.y[r + i] - lp.y[i]);
    return cert;
}

/// Independent check of a certificate against z.
inline bool verify_certificate(const SimplicialSet& K, const RationalCochain& z, const SeminormCertificate& c) {
    const int n = z.degree;
    auto zv = restrict_cochain(K, z, c.mode);
    auto opt = restrict_cochain(K, c.optimizer, c.mode);
    // Primal: optimizer = z + d* b and its sup norm is the value.
    Vector expect = zv;
    if (n > 0) {
        auto Db = multiply(coboundary_matrix(K, n - 1, c.mode), restrict_cochain(K, c.primitive, c.mode));
        for (std::size_t i = 0; i < expect.size(); ++i) expect[i] += Db[i];
    }
    if (expect != opt) return false;
    Rational sup = 0;
    for (const auto& x : opt) sup = std::max(sup, abs_value(x));
    if (sup != c.value) return false;
    // Dual: w is a cycle, ||w||_1 <= 1 and <z, w> = value.
    if (c.dual.l1_norm() > 1) return false;
    auto rows = cochain_index(K, n, c.mode);
    Vector w(rows.size(), 0);
    for (std::size_t i = 0; i < rows.size(); ++i) w[i] = c.dual.coefficient(rows[i]);
    if (n > 0) {
        auto D = coboundary_matrix(K, n - 1, c.mode);
        auto dw = multiply(transpose(D, cochain_index(K, n - 1, c.mode).size()), w);
        if (std::any_of(dw.begin(), dw.end(), [](const Rational& x) { return x != 0; })) return false;
    }
    Rational pairing = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) pairing += zv[i] * w[i];
    return pairing == c.value;
}

/// The semi-norm LP in inequality form over (b, t), with b restricted to pivot columns of d*
/// so the feasible region has vertices; solved by brute-force vertex enumeration.
inline Rational seminorm_by_vertices(const SimplicialSet& K, const RationalCochain& z, CochainMode mode = CochainMode::full) {
    const int n = z.degree;
    auto zv = restrict_cochain(K, z, mode);
    std::vector<std::size_t> keep;
    Matrix D;
    if (n > 0) {
        D = coboundary_matrix(K, n - 1, mode);
        keep = rref(D).pivots;
    }
    const std::size_t d = keep.size();
    Matrix A;
    Vector rhs;
    for (std::size_t i = 0; i < zv.size(); ++i)
        for (int sign : {1, -1}) {
            Vector row(d + 1, 0);
            for (std::size_t j = 0; j < d; ++j) row[j] = sign * D[i][keep[j]];
            row[d] = -1;
            A.push_back(std::move(row));
            rhs.push_back(sign == 1 ? Rational(-zv[i]) : zv[i]);
        }
    Vector cost(d + 1, 0);
    cost[d] = 1;
    auto v = minimize_over_vertices(A, rhs, cost);
    if (!v) throw LawViolation("semi-norm polyhedron has no vertex");
    return *v;
}

struct IsometryReport {
    int degree = 0;
    CochainMode mode = CochainMode::full;
    std::size_t source_betti = 0;  // of the domain of f
    std::size_t target_betti = 0;
    Matrix induced;                // f* in representative coordinates, rows = domain classes
    bool bijective = false;
    bool isometric = false;        // bijective and every sampled norm preserved
    bool nonincreasing = true;     // ||f* z|| <= ||z|| on every sample
    std::vector<std::pair<Rational, Rational>> norms;  // (||[z]||, ||f*[z]||)
};

/// Compares H^n(L) and H^n(K) through f* for f : K -> L on the classes with
/// coordinates in {-range, ..., range}, up to max_samples of them.
inline IsometryReport isometry_report(const SimplicialSet& K, const SimplicialSet& L, const SimplicialMap& f, int n,
                                      CochainMode mode = CochainMode::full, int range = 1, std::size_t max_samples = 64) {
    IsometryReport rep;
    rep.degree = n;
    rep.mode = mode;
    auto HK = cohomology(K, n, mode);
    auto HL = cohomology(L, n, mode);
    rep.source_betti = HK.betti();
    rep.target_betti = HL.betti();
    Matrix cols;
    for (std::size_t i = 0; i < HL.betti(); ++i) {
        Vector e(HL.betti(), 0);
        e[i] = 1;
        cols.push_back(HK.coordinates(K, pullback(K, f, HL.representative(L, e))));
    }
    rep.induced = transpose(cols, HK.betti());
    rep.bijective = HK.betti() == HL.betti() && rank(cols) == HL.betti();

    std::vector<int> digit(HL.betti(), -range);
    while (!digit.empty() && rep.norms.size() < max_samples) {
        if (std::any_of(digit.begin(), digit.end(), [](int x) { return x != 0; })) {
            Vector coords(digit.begin(), digit.end());
            auto z = HL.representative(L, coords);
            Rational a = seminorm(L, z, mode).value;
            Rational b = seminorm(K, pullback(K, f, z), mode).value;
            rep.norms.emplace_back(a, b);
            if (b > a) rep.nonincreasing = false;
        }
        std::size_t j = 0;
        while (j < digit.size() && ++digit[j] > range) digit[j++] = -range;
        if (j == digit.size()) break;
    }
    rep.isometric = rep.bijective && std::all_of(rep.norms.begin(), rep.norms.end(), [](const auto& p) { return p.first == p.second; });
    return rep;
}

}  // namespace simpcoh
