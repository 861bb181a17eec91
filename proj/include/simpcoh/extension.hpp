#pragma once

/**
 * Exhaustive search for simplicial maps P -> K extending prescribed values.
 *
 * A map out of P is determined by its values on nondegenerate simplices,
 * subject only to face compatibility (faces that are degenerate are read
 * through their Eilenberg-Zilber decomposition). The search assigns the
 * nondegenerate simplices dimension by dimension and backtracks. Every
 * assignment counts against a budget; running out yields `undecided`.
 */

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "simplicial_set.hpp"

namespace simpcoh {

inline constexpr std::uint64_t default_budget = 10'000'000;

enum class SearchStatus { found, none, undecided };

inline const char* to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::found: return "found";
        case SearchStatus::none: return "none";
        default: return "undecided";
    }
}

struct ExtensionProblem {
    const SimplicialSet* domain = nullptr;
    const SimplicialSet* target = nullptr;
    /// Prescribed value of a simplex of P, if any.
    std::function<std::optional<Index>(int q, Index x)> fixed;
    /// Extra admissibility test for a candidate value (e.g. lying over a base).
    std::function<bool(int q, Index x, Index candidate)> allowed;
};

struct SearchResult {
    SearchStatus status = SearchStatus::none;
    std::uint64_t states = 0;
    std::size_t solutions = 0;
};

/// Reorders nondegenerate simplices so that each one comes right after the
/// last simplex its faces depend on. Constraints are then checked as early as
/// possible instead of only after a whole dimension has been assigned.
inline std::vector<std::pair<int, Index>> constraint_order(const SimplicialSet& P,
                                                           const std::vector<std::vector<EZDecomposition>>& ez,
                                                           const std::vector<std::pair<int, Index>>& by_dimension) {
    std::map<std::pair<int, Index>, std::size_t> pos;
    for (std::size_t i = 0; i < by_dimension.size(); ++i) pos[by_dimension[i]] = i;
    std::vector<std::vector<std::size_t>> dependents(by_dimension.size());
    std::vector<std::size_t> missing(by_dimension.size(), 0);
    for (std::size_t i = 0; i < by_dimension.size(); ++i) {
        auto [q, x] = by_dimension[i];
        if (q == 0) continue;
        std::vector<std::size_t> deps;
        for (int k = 0; k <= q; ++k) {
            const auto& d = ez[static_cast<std::size_t>(q - 1)][P.face(q, k, x)];
            deps.push_back(pos.at({d.base_dim, d.base}));
        }
        std::sort(deps.begin(), deps.end());
        deps.erase(std::unique(deps.begin(), deps.end()), deps.end());
        missing[i] = deps.size();
        for (auto j : deps) dependents[j].push_back(i);
    }
    std::vector<std::pair<int, Index>> out;
    std::vector<char> placed(by_dimension.size(), 0);
    std::vector<std::size_t> stack;
    auto place = [&](std::size_t i) {
        stack.push_back(i);
        while (!stack.empty()) {
            auto j = stack.back();
            stack.pop_back();
            if (placed[j]) continue;
            placed[j] = 1;
            out.push_back(by_dimension[j]);
            for (auto k : dependents[j])
                if (--missing[k] == 0) stack.push_back(k);
        }
    };
    for (std::size_t i = 0; i < by_dimension.size(); ++i)
        if (!placed[i] && missing[i] == 0) place(i);
    return out;
}

/**
 * Calls on_solution for each extension (as a validated SimplicialMap) until it
 * returns false. Returns found if at least one solution was reported.
 */
inline SearchResult search_extensions(const ExtensionProblem& pb, std::uint64_t budget,
                                      const std::function<bool(const SimplicialMap&)>& on_solution) {
    const SimplicialSet& P = *pb.domain;
    const SimplicialSet& K = *pb.target;
    if (P.is_delta() || K.is_delta()) throw InvalidArgument("extension search needs simplicial sets");
    const int cap = std::min(P.dim_cap(), K.dim_cap());
    if (cap < P.dim_cap()) throw CapExceeded("target cap below the domain cap");

    std::vector<std::vector<EZDecomposition>> ez(static_cast<std::size_t>(cap) + 1);
    std::vector<std::pair<int, Index>> order;
    for (int q = 0; q <= cap; ++q)
        for (Index x = 0; x < P.size(q); ++x) {
            ez[static_cast<std::size_t>(q)].push_back(ez_decompose(P, q, x));
            if (ez[static_cast<std::size_t>(q)].back().base_dim == q) order.emplace_back(q, x);
        }
    order = constraint_order(P, ez, order);
    // Candidates in K indexed by face tuples.
    std::vector<std::map<std::vector<Index>, std::vector<Index>>> by_faces(static_cast<std::size_t>(cap) + 1);
    for (int q = 1; q <= cap; ++q)
        for (Index t = 0; t < K.size(q); ++t) {
            std::vector<Index> f;
            for (int i = 0; i <= q; ++i) f.push_back(K.face(q, i, t));
            by_faces[static_cast<std::size_t>(q)][f].push_back(t);
        }
    std::vector<Index> all_vertices(K.size(0));
    for (Index v = 0; v < all_vertices.size(); ++v) all_vertices[v] = v;

    std::vector<std::vector<Index>> val(static_cast<std::size_t>(cap) + 1);
    for (int q = 0; q <= cap; ++q) val[static_cast<std::size_t>(q)].assign(P.size(q), 0);
    auto value_of = [&](int q, Index x) {
        const auto& d = ez[static_cast<std::size_t>(q)][x];
        if (d.base_dim == q) return val[static_cast<std::size_t>(q)][x];
        return structure_map(K, d.epi, val[static_cast<std::size_t>(d.base_dim)][d.base]);
    };

    SearchResult res;
    bool stop = false;
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
        if (stop) return;
        if (pos == order.size()) {
            SimplicialMap::Maps m;
            for (int q = 0; q <= cap; ++q) {
                Table t(P.size(q));
                for (Index x = 0; x < t.size(); ++x) t[x] = value_of(q, x);
                m.push_back(std::move(t));
            }
            ++res.solutions;
            if (!on_solution(SimplicialMap(P, K, std::move(m)))) stop = true;
            return;
        }
        auto [q, x] = order[pos];
        const std::vector<Index>* cands = &all_vertices;
        static const std::vector<Index> empty;
        if (q > 0) {
            std::vector<Index> f;
            for (int i = 0; i <= q; ++i) f.push_back(value_of(q - 1, P.face(q, i, x)));
            auto it = by_faces[static_cast<std::size_t>(q)].find(f);
            cands = it == by_faces[static_cast<std::size_t>(q)].end() ? &empty : &it->second;
        }
        std::optional<Index> fix = pb.fixed ? pb.fixed(q, x) : std::nullopt;
        for (Index c : *cands) {
            if (fix && c != *fix) continue;
            if (pb.allowed && !pb.allowed(q, x, c)) continue;
            if (++res.states > budget) {
                stop = true;
                res.status = SearchStatus::undecided;
                return;
            }
            val[static_cast<std::size_t>(q)][x] = c;
            rec(pos + 1);
            if (stop) return;
        }
    };
    rec(0);
    if (res.status != SearchStatus::undecided) res.status = res.solutions ? SearchStatus::found : SearchStatus::none;
    return res;
}

/// First extension, if any.
inline std::pair<SearchResult, std::optional<SimplicialMap>> find_extension(const ExtensionProblem& pb,
                                                                            std::uint64_t budget = default_budget) {
    std::optional<SimplicialMap> out;
    auto r = search_extensions(pb, budget, [&](const SimplicialMap& f) {
        out = f;
        return false;
    });
    if (out) r.status = SearchStatus::found;
    return {r, out};
}

}  // namespace simpcoh
