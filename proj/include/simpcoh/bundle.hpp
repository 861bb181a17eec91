#pragma once

/**
 * Bundles with fiber K(pi, n), n >= 2: pullbacks, special trivializations,
 * the canonical local system, translations and their cocycles D_f, the action
 * of normalized cochains a(c) = f(d* c), and the homotopies between translations.
 *
 * A bundle is given by E, B, p and, for each vertex v of B, an isomorphism
 * phi_v : K(pi, n) -> F_v onto the fiber over v. The group pi_v of n-simplices
 * of F_v is identified with pi through phi_v, so every stalk of the local
 * system is the same concrete group.
 *
 * Special trivializations are found by exhaustive search over maps
 * Delta[q] x K(pi, n) -> E; they are computed once per nondegenerate simplex
 * of B and pulled back along Eilenberg-Zilber epimorphisms for the others.
 */

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cochain.hpp"
#include "eilenberg_maclane.hpp"
#include "extension.hpp"

namespace simpcoh {

/// A constant m-simplex on vertex v.
inline Index degenerate_vertex(const SimplicialSet& K, int m, Index v) { return structure_map(K, MonotoneMap::constant(m, 0, 0), v); }

struct BundleData {
    SimplicialSet total;
    SimplicialSet base;
    SimplicialMap projection;
    EMModel fiber;
    std::vector<SimplicialMap> vertex_iso;  // phi_v : K(pi, n) -> E, one per vertex of the base
};

/// Delta[q] x K(pi, n) with key lookup for the Delta[q] coordinate.
struct Prism {
    int q = 0;
    Tabulated<std::vector<int>> simplex;
    Product product;

    Index pair(int m, const MonotoneMap& theta, Index u) const {
        return product.pair(m, simplex.find(m, theta.values()), u);
    }
    MonotoneMap theta(int m, Index x) const {
        return MonotoneMap(q, simplex.keys[static_cast<std::size_t>(m)][x / static_cast<Index>(product.right_sizes[static_cast<std::size_t>(m)])]);
    }
    Index fiber_coordinate(int m, Index x) const { return x % static_cast<Index>(product.right_sizes[static_cast<std::size_t>(m)]); }
};

inline Prism make_prism(const EMModel& em, int q) {
    auto D = standard_simplex_keyed(q, em.dim_cap());
    auto P = product(D.set, em.set());
    return {q, std::move(D), std::move(P)};
}

/// t(g) : (theta, u) |-> (theta, theta*(g) + u) on Delta[q] x K(pi, n), for g a q-simplex.
inline SimplicialMap translation_action(const Prism& P, const EMModel& em, Index g) {
    SimplicialMap::Maps maps;
    for (int m = 0; m <= P.product.set.dim_cap(); ++m) {
        Table t(P.product.set.size(m));
        for (Index x = 0; x < t.size(); ++x) {
            auto th = P.theta(m, x);
            t[x] = P.pair(m, th, em.add(m, structure_map(em.set(), th, g), P.fiber_coordinate(m, x)));
        }
        maps.push_back(std::move(t));
    }
    return SimplicialMap(P.product.set, P.product.set, std::move(maps));
}

// ---------------------------------------------------------------------------
// Constructions

/// The pull-back i*E = {(e, a) : p(e) = i(a)} with its projections to A and E.
struct Pullback {
    SimplicialSet total;
    SimplicialMap projection;  // to A
    SimplicialMap to_total;    // to E
    std::vector<std::vector<std::pair<Index, Index>>> keys;
};

inline Pullback pullback_bundle(const SimplicialSet& E, const SimplicialMap& p, const SimplicialSet& A, const SimplicialMap& i) {
    const int cap = std::min(E.dim_cap(), A.dim_cap());
    using Key = std::pair<Index, Index>;
    std::vector<std::vector<Key>> levels(static_cast<std::size_t>(cap) + 1);
    for (int q = 0; q <= cap; ++q) {
        std::map<Index, std::vector<Index>> over;
        for (Index e = 0; e < E.size(q); ++e) over[p.at(q, e)].push_back(e);
        for (Index a = 0; a < A.size(q); ++a) {
            auto it = over.find(i.at(q, a));
            if (it == over.end()) continue;
            for (Index e : it->second) levels[static_cast<std::size_t>(q)].push_back({e, a});
        }
        std::sort(levels[static_cast<std::size_t>(q)].begin(), levels[static_cast<std::size_t>(q)].end());
    }
    auto T = tabulate(
        E.kind(), cap, std::move(levels), [&](int q, int k, const Key& x) { return Key{E.face(q, k, x.first), A.face(q, k, x.second)}; },
        [&](int q, int k, const Key& x) { return Key{E.degeneracy(q, k, x.first), A.degeneracy(q, k, x.second)}; });
    SimplicialMap::Maps to_a, to_e;
    for (int q = 0; q <= cap; ++q) {
        Table ta, te;
        for (const auto& [e, a] : T.keys[static_cast<std::size_t>(q)]) {
            ta.push_back(a);
            te.push_back(e);
        }
        to_a.push_back(std::move(ta));
        to_e.push_back(std::move(te));
    }
    SimplicialMap pa(T.set, A, std::move(to_a)), pe(T.set, E, std::move(to_e));
    return {std::move(T.set), std::move(pa), std::move(pe), std::move(T.keys)};
}

/// B x_L K(pi, n): simplices (s, u), where u is read in the stalk at the leading vertex of s.
/// Face and degeneracy maps change the leading vertex only for d0, which moves
/// the coordinates along the inverse of the leading edge map.
inline BundleData twisted_product(const SimplicialSet& B, const LocalSystem<GroupCoefficients>& L, const EMModel& em) {
    if (!(L.coefficients().group == em.group())) throw InvalidArgument("local system and fiber use different groups");
    const int cap = std::min(B.dim_cap(), em.dim_cap());
    using Key = std::pair<Index, Index>;
    std::vector<std::vector<Key>> levels(static_cast<std::size_t>(cap) + 1);
    for (int q = 0; q <= cap; ++q)
        for (Index s = 0; s < B.size(q); ++s)
            for (Index u = 0; u < em.set().size(q); ++u) levels[static_cast<std::size_t>(q)].push_back({s, u});
    auto apply = [&](int q, const std::vector<int>& h, Index u) {
        auto v = em.cocycle(q, u);
        for (auto& x : v) x = h[static_cast<std::size_t>(x)];
        return em.find(q, v);
    };
    auto T = tabulate(
        Kind::simplicial, cap, std::move(levels),
        [&](int q, int i, const Key& x) {
            Index u = em.set().face(q, i, x.second);
            if (i == 0) u = apply(q - 1, invert_permutation(L.edge(leading_edge(B, q, x.first))), u);
            return Key{B.face(q, i, x.first), u};
        },
        [&](int q, int i, const Key& x) { return Key{B.degeneracy(q, i, x.first), em.set().degeneracy(q, i, x.second)}; });
    SimplicialMap::Maps pm;
    for (int q = 0; q <= cap; ++q) {
        Table t;
        for (const auto& k : T.keys[static_cast<std::size_t>(q)]) t.push_back(k.first);
        pm.push_back(std::move(t));
    }
    SimplicialMap p(T.set, B, std::move(pm));
    std::vector<SimplicialMap> iso;
    for (Index v = 0; v < B.size(0); ++v) {
        SimplicialMap::Maps m;
        for (int q = 0; q <= cap; ++q) {
            Table t;
            for (Index u = 0; u < em.set().size(q); ++u) t.push_back(T.find(q, {degenerate_vertex(B, q, v), u}));
            m.push_back(std::move(t));
        }
        iso.emplace_back(em.set(), T.set, std::move(m));
    }
    return {std::move(T.set), B, std::move(p), em, std::move(iso)};
}

/// The product bundle B x K(pi, n).
inline BundleData product_bundle(const SimplicialSet& B, const EMModel& em) {
    return twisted_product(B, LocalSystem<GroupCoefficients>::constant(B, GroupCoefficients(em.group())), em);
}

/// Searches isomorphisms K(pi, n) -> F_v for every vertex v (used when a bundle comes without them).
inline std::optional<std::vector<SimplicialMap>> find_vertex_isos(const SimplicialSet& E, const SimplicialSet& B,
                                                                  const SimplicialMap& p, const EMModel& em,
                                                                  std::uint64_t budget = default_budget) {
    std::vector<SimplicialMap> out;
    for (Index v = 0; v < B.size(0); ++v) {
        std::vector<std::size_t> fiber_size(static_cast<std::size_t>(E.dim_cap()) + 1, 0);
        for (int q = 0; q <= E.dim_cap(); ++q)
            for (Index e = 0; e < E.size(q); ++e)
                if (p.at(q, e) == degenerate_vertex(B, q, v)) ++fiber_size[static_cast<std::size_t>(q)];
        ExtensionProblem pb{&em.set(), &E, {}, [&](int q, Index, Index c) { return p.at(q, c) == degenerate_vertex(B, q, v); }};
        std::optional<SimplicialMap> found;
        search_extensions(pb, budget, [&](const SimplicialMap& f) {
            if (!f.is_injective()) return true;
            for (int q = 0; q <= f.dim_cap(); ++q)
                if (f.maps()[static_cast<std::size_t>(q)].size() != fiber_size[static_cast<std::size_t>(q)]) return true;
            found = f;
            return false;
        });
        if (!found) return std::nullopt;
        out.push_back(std::move(*found));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Special trivializations

struct TrivializationSearch {
    SearchStatus status = SearchStatus::none;
    std::vector<SimplicialMap> trivializations;  // maps Delta[q] x K -> E over i_sigma
};

/**
 * Special trivializations over the q-simplex sigma: maps t : Delta[q] x K -> E
 * with p t(theta, u) = theta* sigma, bijective onto each fiber, and equal to
 * phi_v on the fiber over vertex 0. At most `limit` are returned.
 */
inline TrivializationSearch special_trivializations(const BundleData& b, const Prism& P, Index sigma, std::size_t limit,
                                                    std::uint64_t budget = default_budget) {
    const int q = P.q;
    const SimplicialSet& E = b.total;
    const SimplicialSet& D = P.product.set;
    const int cap = D.dim_cap();
    if (E.dim_cap() < cap) throw CapExceeded("total space cap below the fiber cap");
    const Index v = leading_vertex(b.base, q, sigma);
    std::vector<std::vector<Index>> over(static_cast<std::size_t>(cap) + 1);
    std::vector<std::map<Index, std::size_t>> fiber_size(static_cast<std::size_t>(cap) + 1);
    for (int m = 0; m <= cap; ++m) {
        for (const auto& th : P.simplex.keys[static_cast<std::size_t>(m)])
            over[static_cast<std::size_t>(m)].push_back(structure_map(b.base, MonotoneMap(q, th), sigma));
        for (Index e = 0; e < E.size(m); ++e) ++fiber_size[static_cast<std::size_t>(m)][b.projection.at(m, e)];
    }
    auto base_of = [&](int m, Index x) {
        return over[static_cast<std::size_t>(m)][x / static_cast<Index>(P.product.right_sizes[static_cast<std::size_t>(m)])];
    };
    ExtensionProblem pb;
    pb.domain = &D;
    pb.target = &E;
    pb.fixed = [&](int m, Index x) -> std::optional<Index> {
        auto th = P.theta(m, x);
        if (th.values().back() != 0) return std::nullopt;
        return b.vertex_iso[v].at(m, P.fiber_coordinate(m, x));
    };
    pb.allowed = [&](int m, Index x, Index c) { return b.projection.at(m, c) == base_of(m, x); };
    TrivializationSearch out;
    auto r = search_extensions(pb, budget, [&](const SimplicialMap& t) {
        for (int m = 0; m <= cap; ++m) {
            const std::size_t ks = P.product.right_sizes[static_cast<std::size_t>(m)];
            for (Index a = 0; a < P.simplex.keys[static_cast<std::size_t>(m)].size(); ++a) {
                std::vector<Index> img;
                for (Index u = 0; u < ks; ++u) img.push_back(t.at(m, P.product.pair(m, a, u)));
                std::sort(img.begin(), img.end());
                if (std::adjacent_find(img.begin(), img.end()) != img.end()) return true;
                auto it = fiber_size[static_cast<std::size_t>(m)].find(over[static_cast<std::size_t>(m)][a]);
                if (it == fiber_size[static_cast<std::size_t>(m)].end() || it->second != ks) return true;
            }
        }
        out.trivializations.push_back(t);
        return out.trivializations.size() < limit;
    });
    if (r.status == SearchStatus::undecided && out.trivializations.empty())
        out.status = SearchStatus::undecided;
    else
        out.status = out.trivializations.empty() ? SearchStatus::none : SearchStatus::found;
    return out;
}

struct LocalTrivialityReport {
    SearchStatus status = SearchStatus::found;  // found = trivial over every simplex
    std::optional<Simplex> failure;
};

/// Local triviality; simplices of B are checked through their nondegenerate parts.
inline LocalTrivialityReport local_triviality(const BundleData& b, std::uint64_t budget = default_budget) {
    LocalTrivialityReport rep;
    const int cap = std::min(b.base.dim_cap(), b.fiber.dim_cap());
    for (int q = 0; q <= cap; ++q) {
        auto P = make_prism(b.fiber, q);
        for (Index s : nondegenerate(b.base, q)) {
            auto r = special_trivializations(b, P, s, 1, budget);
            if (r.status != SearchStatus::found) {
                rep.status = r.status;
                rep.failure = Simplex{q, s};
                return rep;
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Bundles with fiber K(pi, n)

class KBundle {
public:
    using Coefficients = GroupCoefficients;
    using System = LocalSystem<GroupCoefficients>;

    explicit KBundle(BundleData data, std::uint64_t budget = default_budget) : d_(std::move(data)) {
        n_ = d_.fiber.degree();
        if (n_ < 2) throw InvalidArgument("bundle cocycles need fiber degree n >= 2");
        cap_ = std::min({d_.base.dim_cap(), d_.total.dim_cap(), d_.fiber.dim_cap()});
        if (d_.vertex_iso.size() != d_.base.size(0)) throw ArityMismatch("need one fiber isomorphism per vertex");
        for (int q = 0; q <= cap_; ++q) prisms_.push_back(make_prism(d_.fiber, q));
        ez_.resize(static_cast<std::size_t>(cap_) + 1);
        for (int q = 0; q <= cap_; ++q)
            for (Index s = 0; s < d_.base.size(q); ++s) {
                ez_[static_cast<std::size_t>(q)].push_back(ez_decompose(d_.base, q, s));
                if (ez_[static_cast<std::size_t>(q)].back().base_dim != q) continue;
                auto r = special_trivializations(d_, prisms_[static_cast<std::size_t>(q)], s, 1, budget);
                if (r.status != SearchStatus::found)
                    throw LawViolation("no special trivialization over simplex (" + std::to_string(q) + "," + std::to_string(s) + ")");
                add_chart(q, s, std::move(r.trivializations.front()));
            }
        for (Index v = 0; v < d_.base.size(0); ++v) {
            std::unordered_map<Index, Index> inv;
            for (Index u = 0; u < d_.fiber.set().size(n_); ++u) inv[d_.vertex_iso[v].at(n_, u)] = u;
            phi_inverse_.push_back(std::move(inv));
        }
        system_.emplace(extract_local_system());
    }

    const SimplicialSet& total() const { return d_.total; }
    const SimplicialSet& base() const { return d_.base; }
    const SimplicialMap& projection() const { return d_.projection; }
    const EMModel& fiber() const { return d_.fiber; }
    const BundleData& data() const { return d_; }
    int degree() const { return n_; }
    int dim_cap() const { return cap_; }
    const System& local_system() const { return *system_; }
    const Coefficients& coefficients() const { return system_->coefficients(); }
    const Prism& prism(int q) const { return prisms_[static_cast<std::size_t>(q)]; }

    /// The special trivialization over a nondegenerate simplex, as a map Delta[q] x K -> E.
    const SimplicialMap& chart(int q, Index sigma) const { return charts_.at({q, sigma}).t; }

    /// t_sigma(theta, u) for theta : [m] -> [q].
    Index trivialize(int q, Index sigma, const MonotoneMap& theta, Index u) const {
        const auto& z = ez_[static_cast<std::size_t>(q)][sigma];
        const auto& c = charts_.at({z.base_dim, z.base});
        int m = theta.source();
        return c.t.at(m, prisms_[static_cast<std::size_t>(z.base_dim)].pair(m, compose(z.epi, theta), u));
    }

    /// The fiber coordinate u with t_sigma(theta, u) = e.
    Index coordinate(int q, Index sigma, const MonotoneMap& theta, Index e) const {
        const auto& z = ez_[static_cast<std::size_t>(q)][sigma];
        const auto& c = charts_.at({z.base_dim, z.base});
        int m = theta.source();
        Index a = prisms_[static_cast<std::size_t>(z.base_dim)].simplex.find(m, compose(z.epi, theta).values());
        return c.inverse[static_cast<std::size_t>(m)][a].at(e);
    }

    /// The automorphism pi_{v_j} -> pi_{v_0} along the edge from vertex 0 to vertex j of sigma.
    const std::vector<int>& transport(int q, Index sigma, int j) const {
        return system_->edge(structure_map(d_.base, MonotoneMap(q, {0, j}), sigma));
    }

    /// c(sigma): the cocycle of Delta[q] obtained from c by pulling back along i_sigma and
    /// transporting all values to the leading vertex.
    Index local_cocycle(const GroupCochain& c, int q, Index sigma) const {
        std::vector<int> u;
        for (const auto& S : d_.fiber.nondegenerate_simplices(q))
            u.push_back(transport(q, sigma, S[0])[static_cast<std::size_t>(c[structure_map(d_.base, MonotoneMap(q, S), sigma)])]);
        return d_.fiber.find(q, u);
    }

    /// The unique translation with D_f = c.
    SimplicialMap translation(const GroupCochain& c) const {
        check_cocycle(c, n_);
        SimplicialMap::Maps maps;
        for (int m = 0; m <= cap_; ++m) {
            std::vector<Index> local(d_.base.size(m));
            for (Index s = 0; s < local.size(); ++s) local[s] = local_cocycle(c, m, s);
            Table t(d_.total.size(m));
            auto id = MonotoneMap::identity(m);
            for (Index e = 0; e < t.size(); ++e) {
                Index s = d_.projection.at(m, e);
                Index u = coordinate(m, s, id, e);
                t[e] = trivialize(m, s, id, d_.fiber.add(m, local[s], u));
            }
            maps.push_back(std::move(t));
        }
        return SimplicialMap(d_.total, d_.total, std::move(maps));
    }

    /// d(f_sigma): the q-simplex g of K with t^-1 f t = t(g) over sigma.
    Index local_translation(const SimplicialMap& f, int q, Index sigma) const {
        auto id = MonotoneMap::identity(q);
        return coordinate(q, sigma, id, f.at(q, trivialize(q, sigma, id, d_.fiber.zero(q))));
    }

    /// D_f, read in pi through the vertex isomorphisms.
    GroupCochain extract_D(const SimplicialMap& f) const {
        GroupCochain D{n_, {}};
        for (Index s = 0; s < d_.base.size(n_); ++s) D.values.push_back(d_.fiber.element_of(local_translation(f, n_, s)));
        return D;
    }

    /// Whether f is an automorphism over B that restricts to t(d(f_sigma)) in every special chart.
    bool is_translation(const SimplicialMap& f) const {
        if (!f.is_bijective(d_.total)) return false;
        for (int m = 0; m <= cap_; ++m)
            for (Index e = 0; e < d_.total.size(m); ++e)
                if (d_.projection.at(m, f.at(m, e)) != d_.projection.at(m, e)) return false;
        for (const auto& [key, c] : charts_) {
            auto [q, sigma] = key;
            Index g = local_translation(f, q, sigma);
            const auto& P = prisms_[static_cast<std::size_t>(q)];
            for (int m = 0; m <= cap_; ++m)
                for (Index x = 0; x < P.product.set.size(m); ++x) {
                    auto th = P.theta(m, x);
                    Index expect = d_.fiber.add(m, structure_map(d_.fiber.set(), th, g), P.fiber_coordinate(m, x));
                    if (coordinate(q, sigma, th, f.at(m, c.t.at(m, x))) != expect) return false;
                }
        }
        return true;
    }

    /// a(c) = f(d* c) for a normalized (n-1)-cochain c.
    SimplicialMap act(const GroupCochain& c) const {
        if (c.degree != n_ - 1) throw ArityMismatch("a(c) needs an (n-1)-cochain");
        if (!is_normalized(d_.base, coefficients(), c)) throw InvalidArgument("c is not normalized");
        return translation(coboundary(d_.base, *system_, c));
    }

    void check_cocycle(const GroupCochain& c, int degree) const {
        if (c.degree != degree || c.values.size() != d_.base.size(degree)) throw ArityMismatch("cochain of the wrong shape");
        if (!is_normalized(d_.base, coefficients(), c)) throw InvalidArgument("cochain is not normalized");
        if (degree + 1 <= d_.base.dim_cap() && !is_cocycle(d_.base, *system_, c)) throw InvalidArgument("cochain is not a cocycle");
    }

private:
    struct Chart {
        SimplicialMap t;
        std::vector<std::vector<std::unordered_map<Index, Index>>> inverse;  // [m][theta] e -> u
    };

    void add_chart(int q, Index s, SimplicialMap t) {
        const auto& P = prisms_[static_cast<std::size_t>(q)];
        Chart c{std::move(t), {}};
        for (int m = 0; m <= cap_; ++m) {
            std::vector<std::unordered_map<Index, Index>> level(P.simplex.keys[static_cast<std::size_t>(m)].size());
            for (Index x = 0; x < P.product.set.size(m); ++x)
                level[x / static_cast<Index>(P.product.right_sizes[static_cast<std::size_t>(m)])][c.t.at(m, x)] = P.fiber_coordinate(m, x);
            c.inverse.push_back(std::move(level));
        }
        charts_.emplace(std::pair<int, Index>{q, s}, std::move(c));
    }

    // e* = h^-1, where h : pi_v -> pi_w is read off the special trivialization over e at vertex 1.
    System extract_local_system() const {
        std::vector<std::vector<int>> edges;
        const auto& G = d_.fiber.group();
        for (Index e = 0; e < (cap_ >= 1 ? d_.base.size(1) : 0); ++e) {
            Index w = d_.base.face(1, 0, e);
            std::vector<int> h(static_cast<std::size_t>(G.order()));
            for (int g = 0; g < G.order(); ++g) {
                Index x = trivialize(1, e, MonotoneMap::constant(n_, 1, 1), d_.fiber.simplex_of(g));
                h[static_cast<std::size_t>(g)] = d_.fiber.element_of(phi_inverse_[w].at(x));
            }
            edges.push_back(invert_permutation(h));
        }
        return System(d_.base, GroupCoefficients(G), std::move(edges));
    }

    BundleData d_;
    int n_ = 0;
    int cap_ = 0;
    std::vector<Prism> prisms_;
    std::vector<std::vector<EZDecomposition>> ez_;
    std::map<std::pair<int, Index>, Chart> charts_;
    std::vector<std::unordered_map<Index, Index>> phi_inverse_;
    std::optional<System> system_;
};

/// Translations are the identity over sk_{n-1} B.
inline bool identity_over_low_skeleton(const KBundle& b, const SimplicialMap& f) {
    for (int m = 0; m <= b.dim_cap(); ++m)
        for (Index e = 0; e < b.total().size(m); ++e) {
            Index s = b.projection().at(m, e);
            if (ez_decompose(b.base(), m, s).base_dim <= b.degree() - 1 && f.at(m, e) != e) return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// Transitivity of the cochain action

/// Whether i_sigma restricted to sk_m Delta[q] is injective (hence an isomorphism onto its image).
inline bool free_in_dimension(const SimplicialSet& B, int q, Index sigma, int m) {
    for (int k = 0; k <= B.dim_cap(); ++k) {
        std::map<Index, int> seen;
        for (const auto& th : enumerate_monotone(k, q)) {
            if (th.image_size() > m + 1) continue;
            if (!seen.emplace(structure_map(B, th, sigma), 0).second) return false;
        }
    }
    return true;
}

struct TransitivityResult {
    bool free = false;
    std::optional<GroupCochain> cochain;  // c with a(c)(tau) = tau'
    bool verified = false;
};

/**
 * For tau, tau' over the same q-simplex sigma, free in dimension n - 1: the
 * difference z' - z of their chart coordinates is a cocycle of Delta[q]; the
 * cone from vertex 0 gives a normalized primitive d, which is transported to a
 * cochain c of B supported on the image of i_sigma.
 */
inline TransitivityResult transitivity_act(const KBundle& b, int q, Index tau, Index tau2) {
    const SimplicialSet& B = b.base();
    const EMModel& em = b.fiber();
    const int n = b.degree();
    const auto& G = em.group();
    Index sigma = b.projection().at(q, tau);
    if (b.projection().at(q, tau2) != sigma) throw InvalidArgument("simplices lie over different base simplices");
    TransitivityResult res;
    res.free = free_in_dimension(B, q, sigma, n - 1);
    if (!res.free) return res;
    auto id = MonotoneMap::identity(q);
    auto z = em.cocycle(q, b.coordinate(q, sigma, id, tau));
    auto z2 = em.cocycle(q, b.coordinate(q, sigma, id, tau2));
    std::map<std::vector<int>, int> diff;
    const auto& top = em.nondegenerate_simplices(q);
    for (std::size_t i = 0; i < top.size(); ++i) diff[top[i]] = G.op(z2[i], G.inverse(z[i]));
    GroupCochain c = zero_cochain(B, b.coefficients(), n - 1);
    for (const auto& S : subsets(q, n)) {
        int value = G.unit();
        if (S[0] != 0) {
            std::vector<int> T{0};
            T.insert(T.end(), S.begin(), S.end());
            value = diff.at(T);
        }
        auto back = invert_permutation(b.transport(q, sigma, S[0]));
        c[structure_map(B, MonotoneMap(q, S), sigma)] = back[static_cast<std::size_t>(value)];
    }
    res.verified = b.act(c).at(q, tau) == tau2;
    res.cochain = std::move(c);
    return res;
}

/// Independent check: some normalized (n-1)-cochain moves tau to tau' (exhaustive).
inline bool exists_acting_cochain(const KBundle& b, int q, Index tau, Index tau2) {
    const auto nd = nondegenerate(b.base(), b.degree() - 1);
    const int order = b.fiber().group().order();
    GroupCochain c = zero_cochain(b.base(), b.coefficients(), b.degree() - 1);
    std::vector<int> digit(nd.size(), 0);
    while (true) {
        for (std::size_t i = 0; i < nd.size(); ++i) c[nd[i]] = digit[i];
        if (b.act(c).at(q, tau) == tau2) return true;
        std::size_t j = 0;
        while (j < digit.size() && ++digit[j] == order) digit[j++] = 0;
        if (j == digit.size()) return false;
    }
}

// ---------------------------------------------------------------------------
// Homotopies between translations

struct TranslationHomotopy {
    SimplicialMap homotopy;          // E x Delta[1] -> E
    bool ends = false;               // f(c) at 0, f(d) at 1
    bool over_base = false;          // p H = p pr
    bool constant_low = false;       // H = pr over sk_{n-2} B
    bool system_pulled_back = false; // pi(p_1) = pr* pi(p)
};

/**
 * For c - d = d* b with b normalized: h = f(d* b_0 + pr* d) on the bundle
 * E x Delta[1] -> B x Delta[1], where b_0 is b on B x {0} and zero elsewhere,
 * composed with the projection to E.
 */
inline TranslationHomotopy translations_homotopy(const KBundle& b, const GroupCochain& c, const GroupCochain& d,
                                                 const GroupCochain& prim, std::uint64_t budget = default_budget) {
    const auto& coeff = b.coefficients();
    const int n = b.degree();
    b.check_cocycle(c, n);
    b.check_cocycle(d, n);
    if (prim.degree != n - 1 || !is_normalized(b.base(), coeff, prim)) throw InvalidArgument("primitive must be a normalized (n-1)-cochain");
    if (subtract(coeff, c, d) != coboundary(b.base(), b.local_system(), prim)) throw InvalidArgument("c - d is not the coboundary of b");

    const int cap = b.dim_cap();
    auto I = standard_simplex_keyed(1, cap);
    auto E1 = product(b.total(), I.set);
    auto B1 = product(b.base(), I.set);
    SimplicialMap::Maps pm;
    for (int m = 0; m <= cap; ++m) {
        Table t(E1.set.size(m));
        for (Index x = 0; x < t.size(); ++x) t[x] = B1.pair(m, b.projection().at(m, E1.first.at(m, x)), E1.second.at(m, x));
        pm.push_back(std::move(t));
    }
    SimplicialMap p1(E1.set, B1.set, std::move(pm));
    std::vector<SimplicialMap> iso;
    for (Index v = 0; v < B1.set.size(0); ++v) {
        Index bv = B1.first.at(0, v);
        int end = I.keys[0][B1.second.at(0, v)][0];
        SimplicialMap::Maps m;
        for (int k = 0; k <= cap; ++k) {
            Table t;
            Index e = I.find(k, std::vector<int>(static_cast<std::size_t>(k) + 1, end));
            for (Index u = 0; u < b.fiber().set().size(k); ++u) t.push_back(E1.pair(k, b.data().vertex_iso[bv].at(k, u), e));
            m.push_back(std::move(t));
        }
        iso.emplace_back(b.fiber().set(), E1.set, std::move(m));
    }
    KBundle b1(BundleData{E1.set, B1.set, p1, b.fiber(), std::move(iso)}, budget);

    TranslationHomotopy out;
    out.system_pulled_back = b1.local_system().edges() == b.local_system().pullback(B1.set, B1.first).edges();

    GroupCochain b0 = zero_cochain(B1.set, coeff, n - 1);
    for (Index x = 0; x < B1.set.size(n - 1); ++x) {
        const auto& beta = I.keys[static_cast<std::size_t>(n - 1)][B1.second.at(n - 1, x)];
        if (beta.back() == 0) b0[x] = prim[B1.first.at(n - 1, x)];
    }
    auto total = add(coeff, coboundary(B1.set, b1.local_system(), b0), pullback(B1.set, B1.first, d));
    auto h = b1.translation(total);
    out.homotopy = compose(E1.set, b.total(), E1.first, h);

    auto fc = b.translation(c), fd = b.translation(d);
    out.ends = out.over_base = out.constant_low = true;
    for (int m = 0; m <= cap; ++m) {
        Index zero_end = I.find(m, std::vector<int>(static_cast<std::size_t>(m) + 1, 0));
        Index one_end = I.find(m, std::vector<int>(static_cast<std::size_t>(m) + 1, 1));
        for (Index e = 0; e < b.total().size(m); ++e) {
            if (out.homotopy.at(m, E1.pair(m, e, zero_end)) != fc.at(m, e)) out.ends = false;
            if (out.homotopy.at(m, E1.pair(m, e, one_end)) != fd.at(m, e)) out.ends = false;
        }
        for (Index x = 0; x < E1.set.size(m); ++x) {
            Index e = E1.first.at(m, x);
            if (b.projection().at(m, out.homotopy.at(m, x)) != b.projection().at(m, e)) out.over_base = false;
            if (ez_decompose(b.base(), m, b.projection().at(m, e)).base_dim <= n - 2 && out.homotopy.at(m, x) != e)
                out.constant_low = false;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Example bundles

/// ({0} x K) u (Delta[1] x {0}) u ({1} x K) inside Delta[1] x K(pi, n): its fiber
/// over the vertices is K(pi, n), but it is not trivial over the edge.
inline BundleData non_locally_trivial_example(const EMModel& em) {
    auto D = standard_simplex_keyed(1, em.dim_cap());
    auto P = product(D.set, em.set());
    std::vector<std::vector<char>> keep(static_cast<std::size_t>(em.dim_cap()) + 1);
    for (int m = 0; m <= em.dim_cap(); ++m)
        for (Index x = 0; x < P.set.size(m); ++x) {
            const auto& th = D.keys[static_cast<std::size_t>(m)][P.first.at(m, x)];
            keep[static_cast<std::size_t>(m)].push_back(th.front() == th.back() || P.second.at(m, x) == em.zero(m));
        }
    auto S = subset(P.set, keep);
    auto p = compose(S.set, D.set, P.first, S.inclusion);
    std::vector<SimplicialMap> iso;
    for (int v = 0; v < 2; ++v) {
        SimplicialMap::Maps m;
        for (int k = 0; k <= em.dim_cap(); ++k) {
            Table t;
            Index th = D.find(k, std::vector<int>(static_cast<std::size_t>(k) + 1, v));
            for (Index u = 0; u < em.set().size(k); ++u) {
                Index x = P.pair(k, th, u);
                const auto& mem = S.members[static_cast<std::size_t>(k)];
                t.push_back(static_cast<Index>(std::lower_bound(mem.begin(), mem.end(), x) - mem.begin()));
            }
            m.push_back(std::move(t));
        }
        iso.emplace_back(em.set(), S.set, std::move(m));
    }
    return {std::move(S.set), std::move(D.set), std::move(p), em, std::move(iso)};
}

}  // namespace simpcoh
