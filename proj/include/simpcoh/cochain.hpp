#pragma once

/**
 * Cochains with values in a local system, and rational chains.
 *
 * A local system assigns to every edge e (from vertex d1 e to vertex d0 e) an
 * isomorphism e* : pi(d0 e) -> pi(d1 e). All stalks are the same abstract
 * group; the edge maps carry the twisting. The coboundary of an n-cochain is
 *
 *   (dc)(s) = e_s*( c(d0 s) ) + sum_{i=1}^{n+1} (-1)^i c(di s)
 *
 * where e_s is the leading edge of s.
 */

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "group.hpp"
#include "rational.hpp"
#include "simplicial_set.hpp"

namespace simpcoh {

/// Coefficients in a finite abelian group; automorphisms are permutation tables.
struct GroupCoefficients {
    using Element = int;
    using Automorphism = std::vector<int>;

    FiniteGroup group;

    explicit GroupCoefficients(FiniteGroup g) : group(std::move(g)) {
        if (!group.is_abelian()) throw InvalidArgument("cochain coefficients must be abelian");
    }
    Element zero() const { return group.unit(); }
    Element add(Element a, Element b) const { return group.op(a, b); }
    Element neg(Element a) const { return group.inverse(a); }
    Element times(long k, Element a) const { return group.power(a, k); }
    bool is_zero(Element a) const { return a == group.unit(); }
    Automorphism identity() const { return identity_table(group.order()); }
    Element apply(const Automorphism& h, Element a) const { return h[static_cast<std::size_t>(a)]; }
    Automorphism compose(const Automorphism& g, const Automorphism& h) const { return compose_tables(g, h); }
    bool valid(const Automorphism& h) const { return is_automorphism(group, h); }
    std::string describe() const { return group.name(); }
};

/// Rational coefficients; automorphisms are nonzero scalars.
struct RationalCoefficients {
    using Element = Rational;
    using Automorphism = Rational;

    Element zero() const { return 0; }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element neg(const Element& a) const { return -a; }
    Element times(long k, const Element& a) const { return a * k; }
    bool is_zero(const Element& a) const { return a == 0; }
    Automorphism identity() const { return 1; }
    Element apply(const Automorphism& h, const Element& a) const { return h * a; }
    Automorphism compose(const Automorphism& g, const Automorphism& h) const { return g * h; }
    bool valid(const Automorphism& h) const { return h != 0; }
    std::string describe() const { return "Q"; }
};

/// The leading vertex theta* s for theta : [0] -> [n], 0 |-> 0.
inline Index leading_vertex(const SimplicialSet& K, int n, Index s) { return structure_map(K, MonotoneMap(n, {0}), s); }

/// The leading edge of an n-simplex, n >= 1: the edge through vertices 0 and 1.
inline Index leading_edge(const SimplicialSet& K, int n, Index s) {
    if (n < 1) throw InvalidArgument("a vertex has no leading edge");
    return structure_map(K, MonotoneMap(n, {0, 1}), s);
}

template <class C>
class LocalSystem {
public:
    using Automorphism = typename C::Automorphism;

    LocalSystem(const SimplicialSet& K, C coeff, std::vector<Automorphism> edge_maps)
        : coeff_(std::move(coeff)), edges_(std::move(edge_maps)) {
        if (K.dim_cap() < 1) {
            if (!edges_.empty()) throw ArityMismatch("no edges below dimension 1");
            return;
        }
        if (edges_.size() != K.size(1)) throw ArityMismatch("need one automorphism per edge");
        for (const auto& h : edges_)
            if (!coeff_.valid(h)) throw LawViolation("edge map is not an automorphism");
        if (!K.is_delta())
            for (Index v = 0; v < K.size(0); ++v)
                if (edges_[K.degeneracy(0, 0, v)] != coeff_.identity())
                    throw LawViolation("degenerate edge at vertex " + std::to_string(v) + " must act as the identity");
        if (K.dim_cap() >= 2)
            for (Index w = 0; w < K.size(2); ++w) {
                const auto& rho = edges_[K.face(2, 2, w)];
                const auto& sigma = edges_[K.face(2, 0, w)];
                const auto& tau = edges_[K.face(2, 1, w)];
                if (coeff_.compose(rho, sigma) != tau)
                    throw LawViolation("edge maps are not compatible on 2-simplex " + std::to_string(w));
            }
    }

    static LocalSystem constant(const SimplicialSet& K, C coeff) {
        std::vector<Automorphism> e(K.dim_cap() >= 1 ? K.size(1) : 0, coeff.identity());
        return LocalSystem(K, std::move(coeff), std::move(e));
    }

    const C& coefficients() const { return coeff_; }
    const Automorphism& edge(Index e) const { return edges_[e]; }
    const std::vector<Automorphism>& edges() const { return edges_; }

    /// Pullback along f : L -> K.
    LocalSystem pullback(const SimplicialSet& L, const SimplicialMap& f) const {
        std::vector<Automorphism> e;
        if (L.dim_cap() >= 1)
            for (Index x = 0; x < L.size(1); ++x) e.push_back(edges_[f.at(1, x)]);
        return LocalSystem(L, coeff_, std::move(e));
    }

private:
    C coeff_;
    std::vector<Automorphism> edges_;
};

template <class C>
struct Cochain {
    using Element = typename C::Element;
    int degree = 0;
    std::vector<Element> values;

    const Element& operator[](Index s) const { return values[s]; }
    Element& operator[](Index s) { return values[s]; }
    bool operator==(const Cochain&) const = default;
};

template <class C>
Cochain<C> zero_cochain(const SimplicialSet& K, const C& coeff, int n) {
    return {n, std::vector<typename C::Element>(K.size(n), coeff.zero())};
}

template <class C>
Cochain<C> add(const C& coeff, const Cochain<C>& a, const Cochain<C>& b) {
    if (a.degree != b.degree || a.values.size() != b.values.size()) throw ArityMismatch("cochains of different shape");
    Cochain<C> r = a;
    for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] = coeff.add(a.values[i], b.values[i]);
    return r;
}

template <class C>
Cochain<C> negate(const C& coeff, const Cochain<C>& a) {
    Cochain<C> r = a;
    for (auto& v : r.values) v = coeff.neg(v);
    return r;
}

template <class C>
Cochain<C> subtract(const C& coeff, const Cochain<C>& a, const Cochain<C>& b) {
    return add(coeff, a, negate(coeff, b));
}

/// The twisted coboundary.
template <class C>
Cochain<C> coboundary(const SimplicialSet& K, const LocalSystem<C>& L, const Cochain<C>& c) {
    const int n = c.degree;
    if (c.values.size() != K.size(n)) throw ArityMismatch("cochain length differs from the number of simplices");
    if (n + 1 > K.dim_cap()) throw CapExceeded("coboundary needs dimension " + std::to_string(n + 1));
    const C& coeff = L.coefficients();
    Cochain<C> r{n + 1, {}};
    r.values.reserve(K.size(n + 1));
    for (Index s = 0; s < K.size(n + 1); ++s) {
        auto v = coeff.apply(L.edge(leading_edge(K, n + 1, s)), c[K.face(n + 1, 0, s)]);
        for (int i = 1; i <= n + 1; ++i) {
            auto x = c[K.face(n + 1, i, s)];
            v = coeff.add(v, i % 2 ? coeff.neg(x) : x);
        }
        r.values.push_back(v);
    }
    return r;
}

template <class C>
bool is_cocycle(const SimplicialSet& K, const LocalSystem<C>& L, const Cochain<C>& c) {
    auto d = coboundary(K, L, c);
    for (const auto& v : d.values)
        if (!L.coefficients().is_zero(v)) return false;
    return true;
}

/// Zero on every degenerate simplex.
template <class C>
bool is_normalized(const SimplicialSet& K, const C& coeff, const Cochain<C>& c) {
    for (Index s = 0; s < K.size(c.degree); ++s)
        if (is_degenerate(K, c.degree, s) && !coeff.is_zero(c[s])) return false;
    return true;
}

/// Pullback along f : L -> K.
template <class C>
Cochain<C> pullback(const SimplicialSet& L, const SimplicialMap& f, const Cochain<C>& c) {
    Cochain<C> r{c.degree, {}};
    for (Index s = 0; s < L.size(c.degree); ++s) r.values.push_back(c[f.at(c.degree, s)]);
    return r;
}

using RationalCochain = Cochain<RationalCoefficients>;
using GroupCochain = Cochain<GroupCoefficients>;

inline RationalCochain rational_cochain(int degree, std::vector<Rational> values) { return {degree, std::move(values)}; }

inline RationalCochain trivial_coboundary(const SimplicialSet& K, const RationalCochain& c) {
    return coboundary(K, LocalSystem<RationalCoefficients>::constant(K, {}), c);
}

/// Sup norm of a rational cochain.
inline Rational sup_norm(const RationalCochain& c) {
    Rational m = 0;
    for (const auto& v : c.values) m = std::max(m, abs_value(v));
    return m;
}

// ---------------------------------------------------------------------------
// Rational chains.

/// A finite formal sum of keys with rational coefficients; zero terms are dropped.
template <class Key>
class FormalSum {
public:
    void add(const Key& k, const Rational& a) {
        if (a == 0) return;
        auto [it, fresh] = terms_.emplace(k, a);
        if (!fresh) {
            it->second += a;
            if (it->second == 0) terms_.erase(it);
        }
    }
    void add(const FormalSum& o, const Rational& scale = 1) {
        for (const auto& [k, a] : o.terms_) add(k, a * scale);
    }
    FormalSum scaled(const Rational& s) const {
        FormalSum r;
        r.add(*this, s);
        return r;
    }
    template <class F>
    auto map_keys(F f) const {
        FormalSum<decltype(f(std::declval<Key>()))> r;
        for (const auto& [k, a] : terms_) r.add(f(k), a);
        return r;
    }
    Rational l1_norm() const {
        Rational n = 0;
        for (const auto& [k, a] : terms_) n += abs_value(a);
        return n;
    }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::map<Key, Rational>& terms() const { return terms_; }
    Rational coefficient(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    bool operator==(const FormalSum&) const = default;

private:
    std::map<Key, Rational> terms_;
};

/// A chain of simplices of one dimension of a finite set.
struct Chain {
    int degree = 0;
    FormalSum<Index> terms;
};

inline Chain boundary(const SimplicialSet& K, const Chain& c) {
    if (c.degree == 0) return {0, {}};
    Chain r{c.degree - 1, {}};
    for (const auto& [s, a] : c.terms.terms())
        for (int i = 0; i <= c.degree; ++i) r.terms.add(K.face(c.degree, i, s), i % 2 ? Rational(-a) : a);
    return r;
}

inline Rational evaluate(const RationalCochain& z, const Chain& c) {
    if (z.degree != c.degree) throw ArityMismatch("pairing of different degrees");
    Rational r = 0;
    for (const auto& [s, a] : c.terms.terms()) r += a * z[s];
    return r;
}

}  // namespace simpcoh
