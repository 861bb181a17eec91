#pragma once

/**
 * Kan extension checks, homotopies of simplices, minimality, Postnikov
 * quotients and the fundamental group of a one-vertex Kan set.
 *
 * All answers are relative to the dimension cap and the search budget; a
 * search that runs out of budget reports `undecided` instead of guessing.
 */

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "category.hpp"
#include "extension.hpp"
#include "generate.hpp"

namespace simpcoh {

// ---------------------------------------------------------------------------
// Kan condition

struct HornWitness {
    int n = 0;
    int k = 0;
    std::vector<Index> faces;  // faces[i] for i != k; the entry at k is unused
};

struct KanReport {
    SearchStatus status = SearchStatus::none;  // found = an unfillable horn exists
    int cap = 0;
    int max_dim = 0;
    std::uint64_t horns = 0;
    std::vector<HornWitness> unfillable;
    bool is_kan() const { return status == SearchStatus::none; }
};

/**
 * Enumerates every map Lambda^k[n] -> K for 1 <= n <= max_dim, as compatible
 * families (y_i)_{i != k} with d_i y_j = d_{j-1} y_i for i < j, and looks for a
 * filler x with d_i x = y_i.
 */
inline KanReport kan_check(const SimplicialSet& K, int max_dim, std::uint64_t budget = default_budget,
                           std::size_t max_witnesses = 8) {
    if (K.is_delta()) throw InvalidArgument("the Kan condition is checked on simplicial sets");
    if (max_dim >= K.dim_cap()) throw CapExceeded("Kan check needs max_dim below the dimension cap");
    KanReport rep;
    rep.cap = K.dim_cap();
    rep.max_dim = max_dim;
    std::uint64_t states = 0;
    for (int n = 1; n <= max_dim; ++n)
        for (int k = 0; k <= n; ++k) {
            std::set<std::vector<Index>> fillable;
            for (Index x = 0; x < K.size(n); ++x) {
                std::vector<Index> f;
                for (int i = 0; i <= n; ++i) f.push_back(i == k ? 0 : K.face(n, i, x));
                fillable.insert(f);
            }
            std::vector<Index> y(static_cast<std::size_t>(n) + 1, 0);
            bool out_of_budget = false;
            std::function<void(int)> rec = [&](int i) {
                if (out_of_budget) return;
                if (i > n) {
                    ++rep.horns;
                    if (!fillable.count(y)) {
                        rep.status = SearchStatus::found;
                        if (rep.unfillable.size() < max_witnesses) rep.unfillable.push_back({n, k, y});
                    }
                    return;
                }
                if (i == k) {
                    rec(i + 1);
                    return;
                }
                for (Index c = 0; c < K.size(n - 1); ++c) {
                    if (++states > budget) {
                        out_of_budget = true;
                        return;
                    }
                    bool ok = true;
                    if (n >= 2)
                        for (int j = 0; j < i && ok; ++j)
                            if (j != k) ok = K.face(n - 1, j, c) == K.face(n - 1, i - 1, y[static_cast<std::size_t>(j)]);
                    if (!ok) continue;
                    y[static_cast<std::size_t>(i)] = c;
                    rec(i + 1);
                }
            };
            rec(0);
            if (out_of_budget) {
                if (rep.status != SearchStatus::found) rep.status = SearchStatus::undecided;
                return rep;
            }
        }
    return rep;
}

// ---------------------------------------------------------------------------
// Homotopy of simplices relative to the boundary

struct HomotopyResult {
    SearchStatus status = SearchStatus::none;
    std::optional<SimplicialMap> homotopy;  // Delta[q] x Delta[1] -> K
    std::uint64_t states = 0;
};

/**
 * Searches for H : Delta[q] x Delta[1] -> K with H = i_s on the 0 end, i_t on
 * the 1 end and i_s o pr on the boundary of Delta[q] times Delta[1]. When a base
 * map p : K -> B is given the homotopy must also satisfy p H = p i_s pr
 * (the fiberwise variant). K must have cap >= q + 1. The caller is responsible
 * for K being Kan; see homotopic_simplices_checked.
 */
inline HomotopyResult homotopic_simplices(const SimplicialSet& K, int q, Index s, Index t,
                                          std::uint64_t budget = default_budget,
                                          const SimplicialMap* base_map = nullptr) {
    if (K.dim_cap() < q + 1) throw CapExceeded("homotopy search needs dimension q + 1");
    HomotopyResult res;
    for (int i = 0; i <= q && q > 0; ++i)
        if (K.face(q, i, s) != K.face(q, i, t)) return res;  // different boundaries: not homotopic rel boundary
    auto A = standard_simplex_keyed(q, q + 1);
    auto I = standard_simplex_keyed(1, q + 1);
    auto P = product(A.set, I.set);
    auto decode = [&](int m, Index x) {
        Index a = x / static_cast<Index>(I.set.size(m)), b = x % static_cast<Index>(I.set.size(m));
        return std::pair<const std::vector<int>&, const std::vector<int>&>(A.keys[static_cast<std::size_t>(m)][a],
                                                                            I.keys[static_cast<std::size_t>(m)][b]);
    };
    auto on_end = [&](int m, Index x) -> std::optional<Index> {
        auto [alpha, beta] = decode(m, x);
        MonotoneMap a(q, alpha);
        if (beta.back() == 0) return structure_map(K, a, s);
        if (beta.front() == 1) return structure_map(K, a, t);
        if (!a.is_surjective()) return structure_map(K, a, s);
        return std::nullopt;
    };
    ExtensionProblem pb;
    pb.domain = &P.set;
    pb.target = &K;
    pb.fixed = on_end;
    if (base_map)
        pb.allowed = [&](int m, Index x, Index c) {
            auto [alpha, beta] = decode(m, x);
            (void)beta;
            return base_map->at(m, c) == base_map->at(m, structure_map(K, MonotoneMap(q, alpha), s));
        };
    auto [r, h] = find_extension(pb, budget);
    res.status = r.status;
    res.states = r.states;
    res.homotopy = h;
    return res;
}

/// Refuses inputs that are not Kan below the cap.
inline HomotopyResult homotopic_simplices_checked(const SimplicialSet& K, int q, Index s, Index t,
                                                  std::uint64_t budget = default_budget) {
    auto kan = kan_check(K, K.dim_cap() - 1, budget);
    if (!kan.is_kan()) throw InvalidArgument("homotopy of simplices is only defined for Kan sets");
    return homotopic_simplices(K, q, s, t, budget);
}

struct MinimalityReport {
    SearchStatus status = SearchStatus::none;  // found = distinct homotopic simplices exist
    std::optional<std::pair<Simplex, Simplex>> witness;
    bool is_minimal() const { return status == SearchStatus::none; }
};

inline MinimalityReport is_minimal(const SimplicialSet& K, int max_dim, std::uint64_t budget = default_budget) {
    MinimalityReport rep;
    for (int q = 0; q <= max_dim; ++q)
        for (Index s = 0; s < K.size(q); ++s)
            for (Index t = s + 1; t < K.size(q); ++t) {
                auto h = homotopic_simplices(K, q, s, t, budget);
                if (h.status == SearchStatus::found) {
                    rep.status = SearchStatus::found;
                    rep.witness = {{q, s}, {q, t}};
                    return rep;
                }
                if (h.status == SearchStatus::undecided) rep.status = SearchStatus::undecided;
            }
    return rep;
}

// ---------------------------------------------------------------------------
// Postnikov quotients

struct PostnikovQuotient {
    int level = 0;
    SimplicialSet set;
    SimplicialMap projection;
};

/// K(n): simplices identified when all their n-dimensional pullbacks agree.
inline PostnikovQuotient postnikov_quotient(const SimplicialSet& K, int n) {
    if (n > K.dim_cap()) throw CapExceeded("Postnikov level above the dimension cap");
    std::vector<std::vector<Index>> cls(static_cast<std::size_t>(K.dim_cap()) + 1);
    for (int q = 0; q <= K.dim_cap(); ++q) {
        auto thetas = enumerate_monotone(n, q);
        std::map<std::vector<Index>, Index> ids;
        for (Index s = 0; s < K.size(q); ++s) {
            std::vector<Index> sig;
            for (const auto& th : thetas) sig.push_back(structure_map(K, th, s));
            auto [it, fresh] = ids.emplace(sig, static_cast<Index>(ids.size()));
            cls[static_cast<std::size_t>(q)].push_back(it->second);
        }
    }
    auto Q = quotient(K, cls);
    return {n, std::move(Q.set), std::move(Q.projection)};
}

/// p_{m,n} : K(m) -> K(n) for m >= n.
inline SimplicialMap postnikov_connecting(const SimplicialSet& K, const PostnikovQuotient& Qm, const PostnikovQuotient& Qn) {
    if (Qm.level < Qn.level) throw InvalidArgument("connecting maps go down the tower");
    SimplicialMap::Maps maps;
    for (int q = 0; q <= K.dim_cap(); ++q) {
        Table t(Qm.set.size(q), 0);
        std::vector<char> set(t.size(), 0);
        for (Index s = 0; s < K.size(q); ++s) {
            Index a = Qm.projection.at(q, s), b = Qn.projection.at(q, s);
            if (set[a] && t[a] != b) throw LawViolation("m-equivalence does not refine n-equivalence");
            t[a] = b;
            set[a] = 1;
        }
        maps.push_back(std::move(t));
    }
    return SimplicialMap(Qm.set, Qn.set, std::move(maps));
}

struct PostnikovReport {
    bool compatible = true;        // ~_n is preserved by every theta*
    bool skeleton_bijective = true;  // p_n restricted to sk_n is a bijection onto sk_n K(n)
    bool tower_laws = true;        // p_{m,n} p_m = p_n and p_{m,n} p_{m',m} = p_{m',n}
    bool singletons_low = true;    // classes in dimensions <= n are singletons
};

inline PostnikovReport check_postnikov(const SimplicialSet& K, int max_level) {
    PostnikovReport rep;
    std::vector<PostnikovQuotient> tower;
    for (int n = 0; n <= max_level; ++n) tower.push_back(postnikov_quotient(K, n));
    const int cap = K.dim_cap();
    for (const auto& Q : tower) {
        const int n = Q.level;
        for (int q = 0; q <= cap; ++q) {
            // Compatibility: equivalent simplices have equivalent pullbacks along every theta.
            std::map<Index, Index> rep_of;
            for (Index s = 0; s < K.size(q); ++s) rep_of.emplace(Q.projection.at(q, s), s);
            for (Index s = 0; s < K.size(q); ++s) {
                Index r = rep_of.at(Q.projection.at(q, s));
                if (q <= n && r != s) rep.singletons_low = false;
                for (int m = 0; m <= cap; ++m)
                    for (const auto& th : enumerate_monotone(m, q))
                        if (Q.projection.at(m, structure_map(K, th, s)) != Q.projection.at(m, structure_map(K, th, r)))
                            rep.compatible = false;
            }
        }
        auto skK = skeleton(K, n);
        auto skQ = skeleton(Q.set, n);
        for (int q = 0; q <= cap; ++q) {
            std::set<Index> image;
            for (Index s : skK.members[static_cast<std::size_t>(q)]) image.insert(Q.projection.at(q, s));
            std::set<Index> target(skQ.members[static_cast<std::size_t>(q)].begin(), skQ.members[static_cast<std::size_t>(q)].end());
            if (image != target || image.size() != skK.members[static_cast<std::size_t>(q)].size()) rep.skeleton_bijective = false;
        }
    }
    for (int m = 0; m <= max_level; ++m)
        for (int n = 0; n <= m; ++n) {
            auto pmn = postnikov_connecting(K, tower[static_cast<std::size_t>(m)], tower[static_cast<std::size_t>(n)]);
            if (compose(K, tower[static_cast<std::size_t>(n)].set, pmn, tower[static_cast<std::size_t>(m)].projection) !=
                tower[static_cast<std::size_t>(n)].projection)
                rep.tower_laws = false;
            for (int mp = m; mp <= max_level; ++mp) {
                auto pmpm = postnikov_connecting(K, tower[static_cast<std::size_t>(mp)], tower[static_cast<std::size_t>(m)]);
                auto pmpn = postnikov_connecting(K, tower[static_cast<std::size_t>(mp)], tower[static_cast<std::size_t>(n)]);
                if (compose(tower[static_cast<std::size_t>(mp)].set, tower[static_cast<std::size_t>(n)].set, pmn, pmpm) != pmpn)
                    rep.tower_laws = false;
            }
        }
    return rep;
}

// ---------------------------------------------------------------------------
// Fundamental group

struct FundamentalGroup {
    FiniteGroup group;
    std::vector<int> class_of_edge;  // edge index -> group element
    bool well_defined = true;        // products independent of representatives and fillers
};

/// pi_1 of a one-vertex Kan set: homotopy classes of edges; the product of
/// [r] and [s] is [d1 w] for any w with d2 w = r and d0 w = s.
inline FundamentalGroup fundamental_group(const SimplicialSet& K, std::uint64_t budget = default_budget) {
    if (K.size(0) != 1) throw InvalidArgument("fundamental group needs exactly one vertex");
    if (K.dim_cap() < 3) throw CapExceeded("fundamental group needs dimension cap >= 3");
    if (!kan_check(K, 2, budget).is_kan()) throw InvalidArgument("fundamental group needs a Kan set");
    const std::size_t E = K.size(1);
    std::vector<int> cls(E, -1);
    int count = 0;
    for (Index a = 0; a < E; ++a) {
        if (cls[a] >= 0) continue;
        cls[a] = count;
        for (Index b = a + 1; b < E; ++b) {
            if (cls[b] >= 0) continue;
            auto h = homotopic_simplices(K, 1, a, b, budget);
            if (h.status == SearchStatus::undecided) throw InvalidArgument("homotopy search exceeded the budget");
            if (h.status == SearchStatus::found) cls[b] = count;
        }
        ++count;
    }
    FundamentalGroup out;
    std::vector<int> table(static_cast<std::size_t>(count) * static_cast<std::size_t>(count), -1);
    for (Index w = 0; w < K.size(2); ++w) {
        int r = cls[K.face(2, 2, w)], s = cls[K.face(2, 0, w)], p = cls[K.face(2, 1, w)];
        int& slot = table[static_cast<std::size_t>(r) * static_cast<std::size_t>(count) + static_cast<std::size_t>(s)];
        if (slot >= 0 && slot != p) out.well_defined = false;
        slot = p;
    }
    for (int x : table)
        if (x < 0) out.well_defined = false;
    if (!out.well_defined) throw LawViolation("edge products are not well defined");
    out.group = FiniteGroup(count, std::move(table), "pi1");
    out.class_of_edge = std::move(cls);
    return out;
}

/// For a minimal one-vertex Kan set: K(1) = B pi_1 through spine tuples.
inline bool f_group_check(const SimplicialSet& K, const FundamentalGroup& pi1) {
    auto Q = postnikov_quotient(K, 1);
    auto B = classifying_keyed(pi1.group, K.dim_cap());
    SimplicialMap::Maps maps;
    for (int q = 0; q <= K.dim_cap(); ++q) {
        Table t(Q.set.size(q), 0);
        for (Index s = 0; s < K.size(q); ++s) {
            NerveKey key{0, {}};
            for (int i = 1; i <= q; ++i)
                key.arrows.push_back(pi1.class_of_edge[structure_map(K, MonotoneMap(q, {i - 1, i}), s)]);
            t[Q.projection.at(q, s)] = B.find(q, key);
        }
        maps.push_back(std::move(t));
    }
    try {
        SimplicialMap f(Q.set, B.set, std::move(maps));
        return f.is_bijective(B.set);
    } catch (const LawViolation&) {
        return false;
    }
}

/// Whether g |-> [edge g] is an isomorphism pi -> pi_1(B pi).
inline bool pi1_of_classifying_matches(const FiniteGroup& G, const FundamentalGroup& pi1) {
    auto B = classifying_keyed(G, 3);
    std::vector<int> h;
    for (int g = 0; g < G.order(); ++g) h.push_back(pi1.class_of_edge[B.find(1, NerveKey{0, {g}})]);
    return pi1.group.order() == G.order() && is_homomorphism(G, pi1.group, h) &&
           std::set<int>(h.begin(), h.end()).size() == h.size();
}

}  // namespace simpcoh
