#pragma once

/**
 * Models of classifying spaces built over the Delta-set Gamma_M of strictly
 * increasing tuples below M:
 *
 *  - the Milnor construction, as left orbits of the free pi-set E(pi);
 *  - the Segal category C_M whose nerve is the free simplicial set on BC x Gamma_M;
 *  - the action of pi-valued 0-cochains on B(pi) x Gamma_M and its orbit set.
 */

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "category.hpp"

namespace simpcoh {

/// A simplex of E(pi) or of a product with Gamma: group labels plus Gamma tuple.
struct LabelledKey {
    std::vector<int> labels;
    std::vector<int> gamma;
    auto operator<=>(const LabelledKey&) const = default;
};

/// E(pi) x Gamma_M: simplices (g0..gn, k0<..<kn); pi acts on the left.
inline Tabulated<LabelledKey> milnor_total(const FiniteGroup& G, int M, int cap) {
    std::vector<std::vector<LabelledKey>> levels(static_cast<std::size_t>(cap) + 1);
    auto gamma = gamma_truncated(M, cap);
    for (int n = 0; n <= cap; ++n) {
        std::size_t count = 1;
        for (int i = 0; i <= n; ++i) count *= static_cast<std::size_t>(G.order());
        for (std::size_t code = 0; code < count; ++code) {
            std::vector<int> g;
            std::size_t c = code;
            for (int i = 0; i <= n; ++i) {
                g.push_back(static_cast<int>(c % static_cast<std::size_t>(G.order())));
                c /= static_cast<std::size_t>(G.order());
            }
            std::reverse(g.begin(), g.end());
            for (const auto& k : gamma.keys[static_cast<std::size_t>(n)]) levels[static_cast<std::size_t>(n)].push_back({g, k});
        }
        std::sort(levels[static_cast<std::size_t>(n)].begin(), levels[static_cast<std::size_t>(n)].end());
    }
    auto face = [](int, int i, const LabelledKey& k) {
        return LabelledKey{detail::erase_at(k.labels, i), detail::erase_at(k.gamma, i)};
    };
    return tabulate(Kind::delta, cap, std::move(levels), face, [](int, int, const LabelledKey& k) { return k; });
}

/// The bar form [g0^-1 g1 | g1^-1 g2 | ...] of an orbit.
inline std::vector<int> bar_form(const FiniteGroup& G, const std::vector<int>& g) {
    std::vector<int> bar;
    for (std::size_t i = 1; i < g.size(); ++i) bar.push_back(G.op(G.inverse(g[i - 1]), g[i]));
    return bar;
}

/// The Milnor model: orbits of E(pi) x Gamma_M under left multiplication.
/// Simplices are ordered by (bar form, Gamma tuple).
struct MilnorModel {
    SimplicialSet set;                  // a Delta-set
    std::vector<std::vector<LabelledKey>> keys;  // (bar form, Gamma tuple) per simplex
};

inline MilnorModel milnor_space(const FiniteGroup& G, int M, int cap) {
    auto E = milnor_total(G, M, cap);
    // Canonical representative of an orbit: translate so that g0 is the unit.
    auto canonical = [&G](const LabelledKey& k) { return LabelledKey{bar_form(G, k.labels), k.gamma}; };
    std::vector<std::vector<LabelledKey>> sorted(static_cast<std::size_t>(cap) + 1);
    std::vector<std::map<LabelledKey, Index>> pos(static_cast<std::size_t>(cap) + 1);
    std::vector<std::vector<Index>> cls(static_cast<std::size_t>(cap) + 1);
    for (int n = 0; n <= cap; ++n) {
        auto& p = pos[static_cast<std::size_t>(n)];
        for (const auto& k : E.keys[static_cast<std::size_t>(n)]) p.emplace(canonical(k), 0);
        for (auto& [key, idx] : p) {
            idx = static_cast<Index>(sorted[static_cast<std::size_t>(n)].size());
            sorted[static_cast<std::size_t>(n)].push_back(key);
        }
        for (const auto& k : E.keys[static_cast<std::size_t>(n)]) cls[static_cast<std::size_t>(n)].push_back(p.at(canonical(k)));
    }
    auto Q = quotient(E.set, cls);
    // Translate quotient indices (first-occurrence order) to sorted order.
    std::vector<std::vector<Index>> to_sorted(static_cast<std::size_t>(cap) + 1), from_sorted(static_cast<std::size_t>(cap) + 1);
    for (int n = 0; n <= cap; ++n) {
        to_sorted[static_cast<std::size_t>(n)].resize(Q.set.size(n));
        from_sorted[static_cast<std::size_t>(n)].resize(Q.set.size(n));
        for (Index s = 0; s < E.set.size(n); ++s) {
            Index q = Q.projection.at(n, s), c = cls[static_cast<std::size_t>(n)][s];
            to_sorted[static_cast<std::size_t>(n)][q] = c;
            from_sorted[static_cast<std::size_t>(n)][c] = q;
        }
    }
    auto T = tabulate(
        Kind::delta, cap, sorted,
        [&](int n, int i, const LabelledKey& k) {
            Index q = from_sorted[static_cast<std::size_t>(n)][pos[static_cast<std::size_t>(n)].at(k)];
            return sorted[static_cast<std::size_t>(n) - 1][to_sorted[static_cast<std::size_t>(n) - 1][Q.set.face(n, i, q)]];
        },
        [](int, int, const LabelledKey& k) { return k; },
        [](int, const LabelledKey& k) { return "[" + detail::join(k.labels) + "](" + detail::join(k.gamma) + ")"; });
    return {std::move(T.set), std::move(T.keys)};
}

/// Whether the Milnor model is isomorphic to B(pi) x Gamma_M via the bar form.
inline bool bar_iso_check(const FiniteGroup& G, int M, int cap) {
    auto mil = milnor_space(G, M, cap);
    auto B = classifying_keyed(G, cap);
    auto Gam = gamma_truncated(M, cap);
    auto P = product(forget(B.set), Gam.set);
    SimplicialMap::Maps m;
    for (int n = 0; n <= cap; ++n) {
        Table t;
        for (const auto& k : mil.keys[static_cast<std::size_t>(n)]) {
            Index b = B.find(n, NerveKey{0, k.labels});
            t.push_back(P.pair(n, b, Gam.find(n, k.gamma)));
        }
        m.push_back(std::move(t));
    }
    try {
        SimplicialMap f(mil.set, P.set, std::move(m));
        return f.is_bijective(P.set);
    } catch (const LawViolation&) {
        return false;
    }
}

/// |B(pi) x Gamma_M| in dimension n: |pi|^n * C(M, n+1).
inline long long milnor_count(int order, int M, int n) {
    long long r = binomial(M, n + 1);
    for (int i = 0; i < n; ++i) r *= order;
    return r;
}

// ---------------------------------------------------------------------------

/**
 * The category C_M: objects (c, k) with k < M, indexed c * M + k. There is an
 * arrow (f, k, k') : (c, k) -> (c', k') for every f : c -> c' when k < k', and
 * only the identity when k = k'.
 */
struct SegalCategory {
    FiniteCategory category;
    int M = 0;
    /// Arrow index of (f, k, k2); identities are also listed under (identity arrow, k, k).
    std::map<std::tuple<int, int, int>, int> arrow_of;
};

inline SegalCategory segal_category(const FiniteCategory& C, int M) {
    SegalCategory out;
    out.M = M;
    std::vector<FiniteCategory::Arrow> arrows;
    std::vector<std::tuple<int, int, int>> data;  // (f or -1 - object, k, k')
    std::vector<int> ids;
    for (int c = 0; c < C.object_count(); ++c)
        for (int k = 0; k < M; ++k) {
            ids.push_back(static_cast<int>(arrows.size()));
            out.arrow_of[{-1 - c, k, k}] = static_cast<int>(arrows.size());
            arrows.push_back({c * M + k, c * M + k});
            data.emplace_back(-1 - c, k, k);
        }
    for (int f = 0; f < C.arrow_count(); ++f)
        for (int k = 0; k < M; ++k)
            for (int k2 = k + 1; k2 < M; ++k2) {
                out.arrow_of[{f, k, k2}] = static_cast<int>(arrows.size());
                arrows.push_back({C.source(f) * M + k, C.target(f) * M + k2});
                data.emplace_back(f, k, k2);
            }
    int n = static_cast<int>(arrows.size());
    std::vector<int> then(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (arrows[static_cast<std::size_t>(a)].target != arrows[static_cast<std::size_t>(b)].source) continue;
            auto [fa, ka, ka2] = data[static_cast<std::size_t>(a)];
            auto [fb, kb, kb2] = data[static_cast<std::size_t>(b)];
            int r;
            if (fa < 0) r = b;
            else if (fb < 0) r = a;
            else r = out.arrow_of.at({C.then(fa, fb), ka, kb2});
            then[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b)] = r;
        }
    // Relabel identity keys so that arrow_of can be queried with the underlying identity arrow.
    for (int c = 0; c < C.object_count(); ++c)
        for (int k = 0; k < M; ++k) out.arrow_of[{C.identity(c), k, k}] = out.arrow_of.at({-1 - c, k, k});
    out.category = FiniteCategory(C.object_count() * M, std::move(arrows), std::move(then), std::move(ids));
    return out;
}

struct SegalReport {
    bool iso_free = false;       // B C_M is the free simplicial set on BC x Gamma_M
    bool core_matches = false;   // its core is BC x Gamma_M
    std::vector<long long> counts;      // |B C_M| per dimension
    std::vector<long long> predicted;   // sum_l C(m, l) |BC_l| C(M, l+1)
};

inline SegalReport segal_check(const FiniteCategory& C, int M, int cap) {
    SegalReport rep;
    auto S = segal_category(C, M);
    auto BCM = nerve_keyed(S.category, cap);
    auto BC = nerve_keyed(C, cap);
    auto Gam = gamma_truncated(M, cap);
    auto P = product(forget(BC.set), Gam.set);
    auto F = free_simplicial(P.set, cap);
    SimplicialMap::Maps m;
    for (int q = 0; q <= cap; ++q) {
        Table t;
        for (const auto& k : F.keys[static_cast<std::size_t>(q)]) {
            Index x = k.base / static_cast<Index>(Gam.set.size(k.base_dim));
            Index g = k.base % static_cast<Index>(Gam.set.size(k.base_dim));
            const auto& nk = BC.keys[static_cast<std::size_t>(k.base_dim)][x];
            const auto& gk = Gam.keys[static_cast<std::size_t>(k.base_dim)][g];
            auto object_at = [&](int v) {
                int c = v == 0 ? nk.object : C.target(nk.arrows[static_cast<std::size_t>(v) - 1]);
                return c;
            };
            NerveKey out;
            out.object = object_at(k.surjection[0]) * M + gk[static_cast<std::size_t>(k.surjection[0])];
            for (int i = 0; i < q; ++i) {
                int a = k.surjection[static_cast<std::size_t>(i)], b = k.surjection[static_cast<std::size_t>(i) + 1];
                if (a == b)
                    out.arrows.push_back(S.arrow_of.at({C.identity(object_at(a)), gk[static_cast<std::size_t>(a)], gk[static_cast<std::size_t>(a)]}));
                else
                    out.arrows.push_back(S.arrow_of.at({nk.arrows[static_cast<std::size_t>(a)], gk[static_cast<std::size_t>(a)], gk[static_cast<std::size_t>(b)]}));
            }
            t.push_back(BCM.find(q, out));
        }
        m.push_back(std::move(t));
    }
    try {
        SimplicialMap f(F.set, BCM.set, std::move(m));
        rep.iso_free = f.is_bijective(BCM.set);
    } catch (const LawViolation&) {
        rep.iso_free = false;
    }
    auto cr = core(BCM.set);
    rep.core_matches = true;
    for (int q = 0; q <= cap; ++q)
        if (cr.set.size(q) != P.set.size(q)) rep.core_matches = false;
    for (int q = 0; q <= cap; ++q) {
        rep.counts.push_back(static_cast<long long>(BCM.set.size(q)));
        long long pred = 0;
        for (int l = 0; l <= q; ++l) pred += binomial(q, l) * static_cast<long long>(BC.set.size(l)) * binomial(M, l + 1);
        rep.predicted.push_back(pred);
    }
    return rep;
}

// ---------------------------------------------------------------------------

/// The automorphism a(c) of B(pi) x Gamma_M for c : [0, M) -> pi:
/// g_i |-> c(k_{i-1})^-1 g_i c(k_i).
inline SimplicialMap cochain_action(const FiniteGroup& G, int M, int cap, const std::vector<int>& c) {
    if (c.size() != static_cast<std::size_t>(M)) throw ArityMismatch("0-cochain needs M values");
    auto B = classifying_keyed(G, cap);
    auto Gam = gamma_truncated(M, cap);
    auto P = product(forget(B.set), Gam.set);
    SimplicialMap::Maps m;
    for (int n = 0; n <= cap; ++n) {
        Table t(P.set.size(n));
        for (Index b = 0; b < B.set.size(n); ++b)
            for (Index g = 0; g < Gam.set.size(n); ++g) {
                const auto& k = Gam.keys[static_cast<std::size_t>(n)][g];
                NerveKey nk = B.keys[static_cast<std::size_t>(n)][b];
                for (int i = 1; i <= n; ++i) {
                    auto u = static_cast<std::size_t>(i);
                    nk.arrows[u - 1] = G.op(G.op(G.inverse(c[static_cast<std::size_t>(k[u - 1])]), nk.arrows[u - 1]),
                                            c[static_cast<std::size_t>(k[u])]);
                }
                t[P.pair(n, b, g)] = P.pair(n, B.find(n, nk), g);
            }
        m.push_back(std::move(t));
    }
    return SimplicialMap(P.set, P.set, std::move(m));
}

struct ActionQuotientReport {
    bool automorphisms = false;  // every generator a(c) is a simplicial automorphism
    bool right_action = false;   // a(c) a(c') = a(c' c) on sampled pairs
    bool iso_quotient = false;   // orbit set is isomorphic to B(pi/kappa) x Gamma_M
    std::vector<std::size_t> orbit_counts;
};

/// Orbits of B(pi) x Gamma_M under all kappa-valued 0-cochains, by union-find
/// over the generators that are nontrivial at a single point.
inline ActionQuotientReport cochain_action_quotient(const FiniteGroup& G, const std::vector<int>& kappa, int M, int cap) {
    ActionQuotientReport rep;
    auto Qg = quotient_group(G, kappa);
    auto B = classifying_keyed(G, cap);
    auto Gam = gamma_truncated(M, cap);
    auto P = product(forget(B.set), Gam.set);
    std::vector<std::vector<Index>> parent(static_cast<std::size_t>(cap) + 1);
    for (int n = 0; n <= cap; ++n) {
        parent[static_cast<std::size_t>(n)].resize(P.set.size(n));
        std::iota(parent[static_cast<std::size_t>(n)].begin(), parent[static_cast<std::size_t>(n)].end(), 0);
    }
    auto find = [&](int n, Index x) {
        auto& p = parent[static_cast<std::size_t>(n)];
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    };
    rep.automorphisms = true;
    std::vector<SimplicialMap> gens;
    for (int k = 0; k < M; ++k)
        for (int x : kappa) {
            std::vector<int> c(static_cast<std::size_t>(M), G.unit());
            c[static_cast<std::size_t>(k)] = x;
            try {
                auto a = cochain_action(G, M, cap, c);
                if (!a.is_bijective(P.set)) rep.automorphisms = false;
                gens.push_back(a);
                for (int n = 0; n <= cap; ++n)
                    for (Index s = 0; s < P.set.size(n); ++s) {
                        Index r1 = find(n, s), r2 = find(n, a.at(n, s));
                        if (r1 != r2) parent[static_cast<std::size_t>(n)][std::max(r1, r2)] = std::min(r1, r2);
                    }
            } catch (const LawViolation&) {
                rep.automorphisms = false;
            }
        }
    // Right action: compose two generators at different points and compare with the product cochain.
    rep.right_action = true;
    for (int x : kappa)
        for (int y : kappa) {
            std::vector<int> c(static_cast<std::size_t>(M), G.unit()), d(static_cast<std::size_t>(M), G.unit()), dc(static_cast<std::size_t>(M), G.unit());
            c[0] = x;
            d[0] = y;
            if (M > 1) {
                c[static_cast<std::size_t>(M) - 1] = y;
                d[static_cast<std::size_t>(M) - 1] = x;
            }
            for (int k = 0; k < M; ++k) dc[static_cast<std::size_t>(k)] = G.op(d[static_cast<std::size_t>(k)], c[static_cast<std::size_t>(k)]);
            auto ac = cochain_action(G, M, cap, c), ad = cochain_action(G, M, cap, d), adc = cochain_action(G, M, cap, dc);
            if (compose(P.set, P.set, ac, ad) != adc) rep.right_action = false;
        }
    std::vector<std::vector<Index>> cls(static_cast<std::size_t>(cap) + 1);
    for (int n = 0; n <= cap; ++n)
        for (Index s = 0; s < P.set.size(n); ++s) cls[static_cast<std::size_t>(n)].push_back(find(n, s));
    auto Q = quotient(P.set, cls);
    for (int n = 0; n <= cap; ++n) rep.orbit_counts.push_back(Q.set.size(n));
    // Compare with B(pi/kappa) x Gamma_M through the projection of group labels.
    auto Bq = classifying_keyed(Qg.group, cap);
    auto Pq = product(forget(Bq.set), Gam.set);
    SimplicialMap::Maps m;
    for (int n = 0; n <= cap; ++n) {
        Table t(Q.set.size(n));
        for (Index b = 0; b < B.set.size(n); ++b)
            for (Index g = 0; g < Gam.set.size(n); ++g) {
                NerveKey nk = B.keys[static_cast<std::size_t>(n)][b];
                for (auto& a : nk.arrows) a = Qg.projection[static_cast<std::size_t>(a)];
                t[Q.projection.at(n, P.pair(n, b, g))] = Pq.pair(n, Bq.find(n, nk), g);
            }
        m.push_back(std::move(t));
    }
    try {
        SimplicialMap f(Q.set, Pq.set, std::move(m));
        rep.iso_quotient = f.is_bijective(Pq.set);
    } catch (const LawViolation&) {
        rep.iso_quotient = false;
    }
    return rep;
}

}  // namespace simpcoh
