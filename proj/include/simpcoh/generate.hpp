#pragma once

/**
 * Standard constructions: simplices, boundaries, horns, skeleta, products,
 * quotients, the forgetful functor to Delta-sets and its left adjoint, and the
 * core of a simplicial set.
 */

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "simplicial_set.hpp"

namespace simpcoh {

namespace detail {

inline std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

inline std::vector<int> erase_at(std::vector<int> v, int i) {
    v.erase(v.begin() + i);
    return v;
}

inline std::vector<int> repeat_at(std::vector<int> v, int i) {
    v.insert(v.begin() + i, v[static_cast<std::size_t>(i)]);
    return v;
}

inline Tabulated<std::vector<int>> monotone_subset(int n, int cap, const std::function<bool(const MonotoneMap&)>& keep) {
    std::vector<std::vector<std::vector<int>>> levels(static_cast<std::size_t>(cap) + 1);
    for (int m = 0; m <= cap; ++m)
        for (auto& f : enumerate_monotone(m, n))
            if (keep(f)) levels[static_cast<std::size_t>(m)].push_back(f.values());
    return tabulate(
        Kind::simplicial, cap, std::move(levels), [](int, int i, const std::vector<int>& k) { return erase_at(k, i); },
        [](int, int i, const std::vector<int>& k) { return repeat_at(k, i); },
        [](int, const std::vector<int>& k) { return join(k); });
}

inline std::vector<int> image_of(const MonotoneMap& f) {
    std::vector<int> im;
    for (int x : f.values())
        if (im.empty() || im.back() != x) im.push_back(x);
    return im;
}

}  // namespace detail

/// Delta[n]: m-simplices are the monotone maps [m] -> [n], in lexicographic order.
inline SimplicialSet standard_simplex(int n, int cap) {
    return detail::monotone_subset(n, cap, [](const MonotoneMap&) { return true; }).set;
}

inline Tabulated<std::vector<int>> standard_simplex_keyed(int n, int cap) {
    return detail::monotone_subset(n, cap, [](const MonotoneMap&) { return true; });
}

/// The boundary of Delta[n]: maps that are not surjective.
inline SimplicialSet boundary(int n, int cap) {
    return detail::monotone_subset(n, cap, [n](const MonotoneMap& f) { return f.image_size() < n + 1; }).set;
}

/// The horn Lambda^k[n]: maps whose image misses a vertex other than k.
inline SimplicialSet horn(int n, int k, int cap) {
    if (k < 0 || k > n) throw InvalidArgument("horn index out of range");
    return detail::monotone_subset(n, cap,
                                   [n, k](const MonotoneMap& f) {
                                       auto im = detail::image_of(f);
                                       for (int v = 0; v <= n; ++v)
                                           if (v != k && !std::binary_search(im.begin(), im.end(), v)) return true;
                                       return false;
                                   })
        .set;
}

/// A sub-object given by a predicate closed under the structure maps, with its inclusion.
struct Subset {
    SimplicialSet set;
    SimplicialMap inclusion;
    std::vector<Table> members;  // members[q][new index] = old index
};

inline Subset subset(const SimplicialSet& K, const std::vector<std::vector<char>>& keep) {
    std::vector<std::vector<Index>> levels(static_cast<std::size_t>(K.dim_cap()) + 1);
    for (int q = 0; q <= K.dim_cap(); ++q)
        for (Index s = 0; s < K.size(q); ++s)
            if (keep[static_cast<std::size_t>(q)][s]) levels[static_cast<std::size_t>(q)].push_back(s);
    auto members = levels;
    auto t = tabulate(
        K.kind(), K.dim_cap(), std::move(levels), [&](int q, int i, Index s) { return K.face(q, i, s); },
        [&](int q, int i, Index s) { return K.degeneracy(q, i, s); },
        [&](int q, Index s) { return K.has_labels() ? K.label(q, s) : std::string(); });
    SimplicialMap inc(t.set, K, t.keys);
    return {std::move(t.set), std::move(inc), std::move(members)};
}

/// sk_n K: simplices whose nondegenerate part has dimension <= n.
inline Subset skeleton(const SimplicialSet& K, int n) {
    std::vector<std::vector<char>> keep(static_cast<std::size_t>(K.dim_cap()) + 1);
    for (int q = 0; q <= K.dim_cap(); ++q) {
        keep[static_cast<std::size_t>(q)].resize(K.size(q));
        for (Index s = 0; s < K.size(q); ++s)
            keep[static_cast<std::size_t>(q)][s] = q <= n || ez_decompose(K, q, s).base_dim <= n;
    }
    return subset(K, keep);
}

/// Levelwise product with its two projections.
struct Product {
    SimplicialSet set;
    SimplicialMap first;
    SimplicialMap second;
    Index pair(int q, Index a, Index b) const { return a * static_cast<Index>(right_sizes[static_cast<std::size_t>(q)]) + b; }
    std::vector<std::size_t> right_sizes;
};

inline Product product(const SimplicialSet& K, const SimplicialSet& L) {
    if (K.kind() != L.kind()) throw InvalidArgument("product needs two sets of the same kind");
    int cap = std::min(K.dim_cap(), L.dim_cap());
    std::vector<std::size_t> card, rs;
    SimplicialSet::Faces faces(static_cast<std::size_t>(cap) + 1);
    SimplicialSet::Degeneracies degens;
    for (int q = 0; q <= cap; ++q) {
        card.push_back(K.size(q) * L.size(q));
        rs.push_back(L.size(q));
    }
    auto pr = [&](int q, Index a, Index b) { return a * static_cast<Index>(L.size(q)) + b; };
    for (int q = 1; q <= cap; ++q)
        for (int i = 0; i <= q; ++i) {
            Table t(card[static_cast<std::size_t>(q)]);
            for (Index a = 0; a < K.size(q); ++a)
                for (Index b = 0; b < L.size(q); ++b) t[pr(q, a, b)] = pr(q - 1, K.face(q, i, a), L.face(q, i, b));
            faces[static_cast<std::size_t>(q)].push_back(std::move(t));
        }
    if (!K.is_delta()) {
        degens.resize(static_cast<std::size_t>(cap));
        for (int q = 0; q < cap; ++q)
            for (int i = 0; i <= q; ++i) {
                Table t(card[static_cast<std::size_t>(q)]);
                for (Index a = 0; a < K.size(q); ++a)
                    for (Index b = 0; b < L.size(q); ++b)
                        t[pr(q, a, b)] = pr(q + 1, K.degeneracy(q, i, a), L.degeneracy(q, i, b));
                degens[static_cast<std::size_t>(q)].push_back(std::move(t));
            }
    }
    SimplicialSet::Labels labels;
    if (K.has_labels() || L.has_labels()) {
        labels.resize(static_cast<std::size_t>(cap) + 1);
        for (int q = 0; q <= cap; ++q)
            for (Index a = 0; a < K.size(q); ++a)
                for (Index b = 0; b < L.size(q); ++b)
                    labels[static_cast<std::size_t>(q)].push_back("(" + K.label(q, a) + "|" + L.label(q, b) + ")");
    }
    SimplicialSet P(K.kind(), cap, card, std::move(faces), std::move(degens), std::move(labels));
    SimplicialMap::Maps m1, m2;
    for (int q = 0; q <= cap; ++q) {
        Table t1(card[static_cast<std::size_t>(q)]), t2(card[static_cast<std::size_t>(q)]);
        for (Index a = 0; a < K.size(q); ++a)
            for (Index b = 0; b < L.size(q); ++b) {
                t1[pr(q, a, b)] = a;
                t2[pr(q, a, b)] = b;
            }
        m1.push_back(std::move(t1));
        m2.push_back(std::move(t2));
    }
    SimplicialMap f1(P, K, std::move(m1)), f2(P, L, std::move(m2));
    return {std::move(P), std::move(f1), std::move(f2), std::move(rs)};
}

/// Restricts the cap of a set.
inline SimplicialSet truncate(const SimplicialSet& K, int cap) {
    if (cap > K.dim_cap()) throw CapExceeded("cannot raise the dimension cap");
    std::vector<std::size_t> card(K.cardinalities().begin(), K.cardinalities().begin() + cap + 1);
    SimplicialSet::Faces f(K.face_tables().begin(), K.face_tables().begin() + cap + 1);
    SimplicialSet::Degeneracies d;
    if (!K.is_delta()) d.assign(K.degeneracy_tables().begin(), K.degeneracy_tables().begin() + cap);
    SimplicialSet::Labels l;
    if (K.has_labels()) l.assign(K.labels().begin(), K.labels().begin() + cap + 1);
    return SimplicialSet(K.kind(), cap, std::move(card), std::move(f), std::move(d), std::move(l));
}

/// The underlying Delta-set (forgets degeneracies).
inline SimplicialSet forget(const SimplicialSet& K) {
    if (K.is_delta()) return K;
    return SimplicialSet(Kind::delta, K.dim_cap(), K.cardinalities(), K.face_tables(), {}, K.labels());
}

/**
 * Quotient by a levelwise partition compatible with all structure maps.
 * cls[q][s] is the class of s; classes are renumbered by first occurrence.
 */
struct Quotient {
    SimplicialSet set;
    SimplicialMap projection;
};

inline Quotient quotient(const SimplicialSet& K, const std::vector<std::vector<Index>>& cls) {
    std::vector<std::vector<Index>> rep(cls.size());
    std::vector<std::vector<Index>> renum(cls.size());
    for (std::size_t q = 0; q < cls.size(); ++q) {
        std::map<Index, Index> seen;
        renum[q].resize(cls[q].size());
        for (Index s = 0; s < cls[q].size(); ++s) {
            auto [it, fresh] = seen.emplace(cls[q][s], static_cast<Index>(rep[q].size()));
            if (fresh) rep[q].push_back(s);
            renum[q][s] = it->second;
        }
    }
    int cap = K.dim_cap();
    std::vector<std::size_t> card;
    for (auto& r : rep) card.push_back(r.size());
    SimplicialSet::Faces faces(static_cast<std::size_t>(cap) + 1);
    for (int q = 1; q <= cap; ++q)
        for (int i = 0; i <= q; ++i) {
            Table t(card[static_cast<std::size_t>(q)], 0);
            std::vector<char> set(t.size(), 0);
            for (Index s = 0; s < K.size(q); ++s) {
                Index c = renum[static_cast<std::size_t>(q)][s];
                Index v = renum[static_cast<std::size_t>(q) - 1][K.face(q, i, s)];
                if (set[c] && t[c] != v) throw LawViolation("partition is not compatible with d" + std::to_string(i));
                t[c] = v;
                set[c] = 1;
            }
            faces[static_cast<std::size_t>(q)].push_back(std::move(t));
        }
    SimplicialSet::Degeneracies degens;
    if (!K.is_delta()) {
        degens.resize(static_cast<std::size_t>(cap));
        for (int q = 0; q < cap; ++q)
            for (int i = 0; i <= q; ++i) {
                Table t(card[static_cast<std::size_t>(q)], 0);
                std::vector<char> set(t.size(), 0);
                for (Index s = 0; s < K.size(q); ++s) {
                    Index c = renum[static_cast<std::size_t>(q)][s];
                    Index v = renum[static_cast<std::size_t>(q) + 1][K.degeneracy(q, i, s)];
                    if (set[c] && t[c] != v) throw LawViolation("partition is not compatible with s" + std::to_string(i));
                    t[c] = v;
                    set[c] = 1;
                }
                degens[static_cast<std::size_t>(q)].push_back(std::move(t));
            }
    }
    SimplicialSet Q(K.kind(), cap, std::move(card), std::move(faces), std::move(degens));
    SimplicialMap p(K, Q, renum);
    return {std::move(Q), std::move(p)};
}

/// The circle Delta[1] / boundary: one vertex, one nondegenerate edge.
inline SimplicialSet circle(int cap) {
    auto D = standard_simplex_keyed(1, cap);
    std::vector<std::vector<Index>> cls(static_cast<std::size_t>(cap) + 1);
    for (int q = 0; q <= cap; ++q)
        for (Index s = 0; s < D.set.size(q); ++s) {
            const auto& k = D.keys[static_cast<std::size_t>(q)][s];
            bool constant = k.front() == k.back();
            cls[static_cast<std::size_t>(q)].push_back(constant ? 0 : s + 1);
        }
    return quotient(D.set, cls).set;
}

/// Disjoint union of two sets of the same kind.
inline SimplicialSet disjoint_union(const SimplicialSet& K, const SimplicialSet& L) {
    if (K.kind() != L.kind()) throw InvalidArgument("union needs two sets of the same kind");
    int cap = std::min(K.dim_cap(), L.dim_cap());
    std::vector<std::size_t> card;
    for (int q = 0; q <= cap; ++q) card.push_back(K.size(q) + L.size(q));
    SimplicialSet::Faces faces(static_cast<std::size_t>(cap) + 1);
    for (int q = 1; q <= cap; ++q)
        for (int i = 0; i <= q; ++i) {
            Table t;
            for (Index s = 0; s < K.size(q); ++s) t.push_back(K.face(q, i, s));
            for (Index s = 0; s < L.size(q); ++s) t.push_back(static_cast<Index>(K.size(q - 1)) + L.face(q, i, s));
            faces[static_cast<std::size_t>(q)].push_back(std::move(t));
        }
    SimplicialSet::Degeneracies degens;
    if (!K.is_delta()) {
        degens.resize(static_cast<std::size_t>(cap));
        for (int q = 0; q < cap; ++q)
            for (int i = 0; i <= q; ++i) {
                Table t;
                for (Index s = 0; s < K.size(q); ++s) t.push_back(K.degeneracy(q, i, s));
                for (Index s = 0; s < L.size(q); ++s)
                    t.push_back(static_cast<Index>(K.size(q + 1)) + L.degeneracy(q, i, s));
                degens[static_cast<std::size_t>(q)].push_back(std::move(t));
            }
    }
    return SimplicialSet(K.kind(), cap, std::move(card), std::move(faces), std::move(degens));
}

// ---------------------------------------------------------------------------
// Delta-sets and the free simplicial set on them.

/// Key of a simplex of the free simplicial set: (dimension l, simplex, surjection [m] -> [l]).
struct FreeKey {
    int base_dim = 0;
    Index base = 0;
    std::vector<int> surjection;
    auto operator<=>(const FreeKey&) const = default;
};

/// The free simplicial set on a Delta-set D, truncated at cap.
inline Tabulated<FreeKey> free_simplicial(const SimplicialSet& D, int cap) {
    if (!D.is_delta()) throw InvalidArgument("free simplicial set needs a Delta-set");
    std::vector<std::vector<FreeKey>> levels(static_cast<std::size_t>(cap) + 1);
    for (int m = 0; m <= cap; ++m)
        for (int l = 0; l <= std::min(m, D.dim_cap()); ++l)
            for (Index s = 0; s < D.size(l); ++s)
                for (auto& rho : enumerate_surjective(m, l)) levels[static_cast<std::size_t>(m)].push_back({l, s, rho.values()});
    auto act = [&D](const FreeKey& k, const MonotoneMap& theta) {
        MonotoneMap rho(k.base_dim, k.surjection);
        auto [epi, mono] = epi_mono_factor(compose(rho, theta));
        return FreeKey{epi.target(), structure_map(D, mono, k.base), epi.values()};
    };
    return tabulate(
        Kind::simplicial, cap, std::move(levels),
        [&](int q, int i, const FreeKey& k) { return act(k, MonotoneMap::face(q, i)); },
        [&](int q, int i, const FreeKey& k) { return act(k, MonotoneMap::degeneracy(q, i)); });
}

/// The sub-Delta-set of faces of nondegenerate simplices.
struct Core {
    SimplicialSet set;         // a Delta-set
    std::vector<Table> members;  // members[q][core index] = index in K
};

inline Core core(const SimplicialSet& K) {
    int cap = K.dim_cap();
    std::vector<std::vector<char>> keep(static_cast<std::size_t>(cap) + 1);
    for (int q = 0; q <= cap; ++q) keep[static_cast<std::size_t>(q)].assign(K.size(q), 0);
    for (int q = cap; q >= 0; --q)
        for (Index s = 0; s < K.size(q); ++s) {
            if (!keep[static_cast<std::size_t>(q)][s] && !is_degenerate(K, q, s)) keep[static_cast<std::size_t>(q)][s] = 1;
            if (keep[static_cast<std::size_t>(q)][s] && q > 0)
                for (int i = 0; i <= q; ++i) keep[static_cast<std::size_t>(q) - 1][K.face(q, i, s)] = 1;
        }
    std::vector<std::vector<Index>> levels(static_cast<std::size_t>(cap) + 1);
    for (int q = 0; q <= cap; ++q)
        for (Index s = 0; s < K.size(q); ++s)
            if (keep[static_cast<std::size_t>(q)][s]) levels[static_cast<std::size_t>(q)].push_back(s);
    auto t = tabulate(Kind::delta, cap, levels, [&](int q, int i, Index s) { return K.face(q, i, s); },
                      [](int, int, Index s) { return s; });
    return {std::move(t.set), std::move(levels)};
}

/// Theta: free(core K) -> K, (s, rho) |-> rho*(s), with bijectivity.
struct CoreTheta {
    Core core;
    Tabulated<FreeKey> free;
    SimplicialMap theta;
    bool surjective = false;
    bool bijective = false;
};

inline CoreTheta core_theta(const SimplicialSet& K) {
    if (K.is_delta()) throw InvalidArgument("core needs a simplicial set");
    CoreTheta out{core(K), {}, {}, false, false};
    out.free = free_simplicial(out.core.set, K.dim_cap());
    SimplicialMap::Maps m;
    std::vector<std::vector<char>> hit(static_cast<std::size_t>(K.dim_cap()) + 1);
    for (int q = 0; q <= K.dim_cap(); ++q) {
        hit[static_cast<std::size_t>(q)].assign(K.size(q), 0);
        Table t;
        for (const auto& k : out.free.keys[static_cast<std::size_t>(q)]) {
            Index base = out.core.members[static_cast<std::size_t>(k.base_dim)][k.base];
            Index x = structure_map(K, MonotoneMap(k.base_dim, k.surjection), base);
            t.push_back(x);
            hit[static_cast<std::size_t>(q)][x] = 1;
        }
        m.push_back(std::move(t));
    }
    out.theta = SimplicialMap(out.free.set, K, std::move(m));
    out.surjective = std::all_of(hit.begin(), hit.end(),
                                 [](const std::vector<char>& h) { return std::all_of(h.begin(), h.end(), [](char c) { return c; }); });
    out.bijective = out.surjective && out.theta.is_injective();
    return out;
}

/// Whether the nondegenerate simplices are closed under faces.
inline bool has_nondegenerate_core(const SimplicialSet& K) {
    for (int q = 1; q <= K.dim_cap(); ++q)
        for (Index s = 0; s < K.size(q); ++s)
            if (!is_degenerate(K, q, s))
                for (int i = 0; i <= q; ++i)
                    if (is_degenerate(K, q - 1, K.face(q, i, s))) return false;
    return true;
}

/// Counts pairs (surjection, nondegenerate simplex) realizing each simplex; the
/// Eilenberg-Zilber lemma says every count is 1.
inline bool ez_unique(const SimplicialSet& K, int max_dim) {
    for (int q = 0; q <= std::min(max_dim, K.dim_cap()); ++q) {
        std::vector<int> count(K.size(q), 0);
        for (int l = 0; l <= q; ++l) {
            auto nd = nondegenerate(K, l);
            for (auto& rho : enumerate_surjective(q, l))
                for (Index s : nd) ++count[structure_map(K, rho, s)];
        }
        for (Index s = 0; s < K.size(q); ++s) {
            if (count[s] != 1) return false;
            auto d = ez_decompose(K, q, s);
            if (structure_map(K, d.epi, d.base) != s || is_degenerate(K, d.base_dim, d.base) || !d.epi.is_surjective())
                return false;
        }
    }
    return true;
}

/// Gamma truncated to vertices 0 .. M-1: strictly increasing tuples.
inline Tabulated<std::vector<int>> gamma_truncated(int M, int cap) {
    std::vector<std::vector<std::vector<int>>> levels(static_cast<std::size_t>(cap) + 1);
    for (int q = 0; q <= cap; ++q)
        for (auto& f : enumerate_injective(q, M - 1)) levels[static_cast<std::size_t>(q)].push_back(f.values());
    if (M <= 0)
        for (auto& l : levels) l.clear();
    return tabulate(
        Kind::delta, cap, std::move(levels), [](int, int i, const std::vector<int>& k) { return detail::erase_at(k, i); },
        [](int, int, const std::vector<int>& k) { return k; }, [](int, const std::vector<int>& k) { return detail::join(k); });
}

}  // namespace simpcoh
