#pragma once

/**
 * Finite categories, their nerves, and ordered simplicial complexes.
 *
 * Composition is written in path order: then(f, g) is "f followed by g" and is
 * defined when target(f) == source(g). For a group viewed as a one-object
 * category, then(g, h) = g * h.
 */

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "generate.hpp"
#include "group.hpp"

namespace simpcoh {

class FiniteCategory {
public:
    struct Arrow {
        int source = 0;
        int target = 0;
    };

    FiniteCategory() = default;

    /// then_table[f * arrows + g] = f followed by g, or -1 when not composable.
    FiniteCategory(int objects, std::vector<Arrow> arrows, std::vector<int> then_table, std::vector<int> identities)
        : objects_(objects), arrows_(std::move(arrows)), then_(std::move(then_table)), ids_(std::move(identities)) {
        const int n = arrow_count();
        if (then_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
            throw ArityMismatch("composition table must have arrows^2 entries");
        if (ids_.size() != static_cast<std::size_t>(objects_)) throw ArityMismatch("need one identity per object");
        for (const auto& a : arrows_)
            if (a.source < 0 || a.source >= objects_ || a.target < 0 || a.target >= objects_)
                throw ArityMismatch("arrow endpoint out of range");
        for (int f = 0; f < n; ++f)
            for (int g = 0; g < n; ++g) {
                int h = then(f, g);
                bool composable = arrows_[static_cast<std::size_t>(f)].target == arrows_[static_cast<std::size_t>(g)].source;
                if (composable != (h >= 0)) throw LawViolation("composition defined exactly on composable pairs fails");
                if (h >= 0 && (source(h) != source(f) || target(h) != target(g)))
                    throw LawViolation("composite has wrong endpoints");
            }
        for (int x = 0; x < objects_; ++x) {
            int i = ids_[static_cast<std::size_t>(x)];
            if (i < 0 || i >= n || source(i) != x || target(i) != x) throw LawViolation("identity has wrong endpoints");
        }
        for (int f = 0; f < n; ++f) {
            if (then(identity(source(f)), f) != f || then(f, identity(target(f))) != f)
                throw LawViolation("identity law fails for arrow " + std::to_string(f));
            for (int g = 0; g < n; ++g) {
                int fg = then(f, g);
                if (fg < 0) continue;
                for (int h = 0; h < n; ++h) {
                    int gh = then(g, h);
                    if (gh < 0) continue;
                    if (then(fg, h) != then(f, gh))
                        throw LawViolation("associativity fails at (" + std::to_string(f) + "," + std::to_string(g) + "," +
                                           std::to_string(h) + ")");
                }
            }
        }
    }

    static FiniteCategory from_group(const FiniteGroup& G) {
        std::vector<Arrow> arrows(static_cast<std::size_t>(G.order()), Arrow{0, 0});
        return FiniteCategory(1, std::move(arrows), G.table(), {G.unit()});
    }

    /// The poset [n] = {0 < ... < n} as a category; arrows (i, j) with i <= j.
    static FiniteCategory ordinal(int n) {
        std::vector<Arrow> arrows;
        std::map<std::pair<int, int>, int> idx;
        for (int i = 0; i <= n; ++i)
            for (int j = i; j <= n; ++j) {
                idx[{i, j}] = static_cast<int>(arrows.size());
                arrows.push_back({i, j});
            }
        int m = static_cast<int>(arrows.size());
        std::vector<int> then(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), -1);
        for (int f = 0; f < m; ++f)
            for (int g = 0; g < m; ++g)
                if (arrows[static_cast<std::size_t>(f)].target == arrows[static_cast<std::size_t>(g)].source)
                    then[static_cast<std::size_t>(f) * static_cast<std::size_t>(m) + static_cast<std::size_t>(g)] =
                        idx[{arrows[static_cast<std::size_t>(f)].source, arrows[static_cast<std::size_t>(g)].target}];
        std::vector<int> ids;
        for (int i = 0; i <= n; ++i) ids.push_back(idx[{i, i}]);
        return FiniteCategory(n + 1, std::move(arrows), std::move(then), std::move(ids));
    }

    int object_count() const { return objects_; }
    int arrow_count() const { return static_cast<int>(arrows_.size()); }
    int source(int f) const { return arrows_[static_cast<std::size_t>(f)].source; }
    int target(int f) const { return arrows_[static_cast<std::size_t>(f)].target; }
    int identity(int x) const { return ids_[static_cast<std::size_t>(x)]; }
    int then(int f, int g) const {
        return then_[static_cast<std::size_t>(f) * static_cast<std::size_t>(arrows_.size()) + static_cast<std::size_t>(g)];
    }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const std::vector<int>& then_table() const { return then_; }
    const std::vector<int>& identities() const { return ids_; }

private:
    int objects_ = 0;
    std::vector<Arrow> arrows_;
    std::vector<int> then_;
    std::vector<int> ids_;
};

/// Key of a nerve simplex: a vertex (object) or a string of composable arrows.
struct NerveKey {
    int object = 0;
    std::vector<int> arrows;
    // Lexicographic in the arrow string; objects order the vertices.
    auto operator<=>(const NerveKey& o) const {
        if (auto c = arrows <=> o.arrows; c != 0) return c;
        return object <=> o.object;
    }
    bool operator==(const NerveKey&) const = default;
};

/// The nerve truncated at cap. Dimension 0 lists objects, dimension n >= 1 the
/// composable strings (p1, ..., pn) in lexicographic order.
inline Tabulated<NerveKey> nerve_keyed(const FiniteCategory& C, int cap) {
    std::vector<std::vector<NerveKey>> levels(static_cast<std::size_t>(cap) + 1);
    for (int x = 0; x < C.object_count(); ++x) levels[0].push_back({x, {}});
    if (cap >= 1)
        for (int f = 0; f < C.arrow_count(); ++f) levels[1].push_back({C.source(f), {f}});
    for (int n = 2; n <= cap; ++n)
        for (const auto& k : levels[static_cast<std::size_t>(n) - 1])
            for (int f = 0; f < C.arrow_count(); ++f)
                if (C.source(f) == C.target(k.arrows.back())) {
                    NerveKey e = k;
                    e.arrows.push_back(f);
                    levels[static_cast<std::size_t>(n)].push_back(std::move(e));
                }
    for (auto& l : levels) std::sort(l.begin(), l.end());
    auto vertex = [&C](const NerveKey& k, int i) {
        if (i == 0) return k.object;
        return C.target(k.arrows[static_cast<std::size_t>(i) - 1]);
    };
    auto face = [&C](int n, int i, const NerveKey& k) {
        if (n == 1) return NerveKey{i == 0 ? C.target(k.arrows[0]) : C.source(k.arrows[0]), {}};
        NerveKey r;
        if (i == 0) {
            r.arrows.assign(k.arrows.begin() + 1, k.arrows.end());
        } else if (i == n) {
            r.arrows.assign(k.arrows.begin(), k.arrows.end() - 1);
        } else {
            r.arrows = k.arrows;
            auto u = static_cast<std::size_t>(i);
            r.arrows[u - 1] = C.then(k.arrows[u - 1], k.arrows[u]);
            r.arrows.erase(r.arrows.begin() + i);
        }
        r.object = C.source(r.arrows.front());
        return r;
    };
    auto degen = [&C, vertex](int, int i, const NerveKey& k) {
        NerveKey r = k;
        r.arrows.insert(r.arrows.begin() + i, C.identity(vertex(k, i)));
        r.object = C.source(r.arrows.front());
        return r;
    };
    auto label = [](int n, const NerveKey& k) {
        if (n == 0) return "o" + std::to_string(k.object);
        return "[" + detail::join(k.arrows) + "]";
    };
    return tabulate(Kind::simplicial, cap, std::move(levels), face, degen, label);
}

inline SimplicialSet nerve(const FiniteCategory& C, int cap) { return nerve_keyed(C, cap).set; }

/// B(pi) as the nerve of the one-object category.
inline Tabulated<NerveKey> classifying_keyed(const FiniteGroup& G, int cap) {
    return nerve_keyed(FiniteCategory::from_group(G), cap);
}

inline SimplicialSet classifying_space(const FiniteGroup& G, int cap) { return classifying_keyed(G, cap).set; }

/// A face-closed family of simplices, each listed in its local vertex order.
class OrderedComplex {
public:
    OrderedComplex(int vertices, std::vector<std::vector<int>> simplices) : vertices_(vertices) {
        for (int v = 0; v < vertices; ++v) ordered_.insert({v});
        for (auto& s : simplices) {
            if (s.empty()) throw InvalidArgument("empty simplex");
            std::set<int> distinct(s.begin(), s.end());
            if (distinct.size() != s.size()) throw InvalidArgument("a simplex lists a vertex twice");
            for (int v : s)
                if (v < 0 || v >= vertices) throw InvalidArgument("vertex out of range");
            // Every sublist, with the inherited order, is a face.
            std::size_t n = s.size();
            for (unsigned mask = 1; mask < (1u << n); ++mask) {
                std::vector<int> f;
                for (std::size_t i = 0; i < n; ++i)
                    if (mask & (1u << i)) f.push_back(s[i]);
                ordered_.insert(f);
            }
        }
        std::map<std::set<int>, std::vector<int>> seen;
        for (const auto& s : ordered_) {
            auto [it, fresh] = seen.emplace(std::set<int>(s.begin(), s.end()), s);
            if (!fresh) throw LawViolation("local orders disagree on a shared face");
        }
    }

    int vertex_count() const { return vertices_; }
    const std::set<std::vector<int>>& simplices() const { return ordered_; }
    int dimension() const {
        int d = 0;
        for (const auto& s : ordered_) d = std::max(d, static_cast<int>(s.size()) - 1);
        return d;
    }

private:
    int vertices_;
    std::set<std::vector<int>> ordered_;
};

/// The Delta-set of ordered simplices.
inline Tabulated<std::vector<int>> ordered_delta(const OrderedComplex& S, int cap) {
    std::vector<std::vector<std::vector<int>>> levels(static_cast<std::size_t>(cap) + 1);
    for (const auto& s : S.simplices())
        if (static_cast<int>(s.size()) - 1 <= cap) levels[s.size() - 1].push_back(s);
    return tabulate(
        Kind::delta, cap, std::move(levels), [](int, int i, const std::vector<int>& k) { return detail::erase_at(k, i); },
        [](int, int, const std::vector<int>& k) { return k; }, [](int, const std::vector<int>& k) { return detail::join(k); });
}

/// The simplicial set of monotone sequences along local orders.
inline Tabulated<std::vector<int>> ordered_simplicial(const OrderedComplex& S, int cap) {
    std::vector<std::vector<std::vector<int>>> levels(static_cast<std::size_t>(cap) + 1);
    for (const auto& s : S.simplices()) {
        int l = static_cast<int>(s.size()) - 1;
        for (int m = l; m <= cap; ++m)
            for (auto& rho : enumerate_surjective(m, l)) {
                std::vector<int> seq;
                for (int x : rho.values()) seq.push_back(s[static_cast<std::size_t>(x)]);
                levels[static_cast<std::size_t>(m)].push_back(seq);
            }
    }
    for (auto& l : levels) std::sort(l.begin(), l.end());
    return tabulate(
        Kind::simplicial, cap, std::move(levels),
        [](int, int i, const std::vector<int>& k) { return detail::erase_at(k, i); },
        [](int, int i, const std::vector<int>& k) { return detail::repeat_at(k, i); },
        [](int, const std::vector<int>& k) { return detail::join(k); });
}

/// Checks that the monotone-sequence model agrees with the free simplicial set
/// on the ordered Delta-set, via (s, rho) |-> s o rho.
inline bool ordered_models_agree(const OrderedComplex& S, int cap) {
    auto D = ordered_delta(S, cap);
    auto F = free_simplicial(D.set, cap);
    auto T = ordered_simplicial(S, cap);
    SimplicialMap::Maps m;
    for (int q = 0; q <= cap; ++q) {
        Table t;
        for (const auto& k : F.keys[static_cast<std::size_t>(q)]) {
            const auto& s = D.keys[static_cast<std::size_t>(k.base_dim)][k.base];
            std::vector<int> seq;
            for (int x : k.surjection) seq.push_back(s[static_cast<std::size_t>(x)]);
            t.push_back(T.find(q, seq));
        }
        m.push_back(std::move(t));
    }
    try {
        SimplicialMap f(F.set, T.set, std::move(m));
        return f.is_bijective(T.set);
    } catch (const LawViolation&) {
        return false;
    }
}

}  // namespace simpcoh
