#pragma once

/**
 * Averaging a cocycle over a finite group acting by automorphisms homotopic
 * to the identity. The mean is the uniform average over the group. Each
 * simplicial homotopy H from id to a(g) gives the cochain homotopy
 * k(g)(c)(tau) = c(H_* P tau), P the prism operator of K x Delta[1], and
 * gamma - c = d* kappa with kappa the mean of k(g)(c).
 */

#include <vector>

#include "category.hpp"
#include "cochain.hpp"
#include "generate.hpp"

namespace simpcoh {

/// A homotopy K x Delta[1] -> K, stored on the product.
struct SimplicialHomotopy {
    Product cylinder;                  // K x Delta[1]
    Tabulated<std::vector<int>> interval;  // Delta[1] with monotone keys
    SimplicialMap map;

    Index at(int q, Index s, const std::vector<int>& alpha) const {
        return map.at(q, cylinder.pair(q, s, interval.find(q, alpha)));
    }
};

inline SimplicialHomotopy make_homotopy(const SimplicialSet& K,
                                        const std::function<Index(int q, Index s, const std::vector<int>& alpha)>& fn) {
    auto I = standard_simplex_keyed(1, K.dim_cap());
    auto P = product(K, I.set);
    SimplicialMap::Maps m;
    for (int q = 0; q <= K.dim_cap(); ++q) {
        Table t(P.set.size(q));
        for (Index s = 0; s < K.size(q); ++s)
            for (Index b = 0; b < I.set.size(q); ++b) t[P.pair(q, s, b)] = fn(q, s, I.keys[static_cast<std::size_t>(q)][b]);
        m.push_back(std::move(t));
    }
    SimplicialMap H(P.set, K, std::move(m));
    return {std::move(P), std::move(I), std::move(H)};
}

/// The restriction of H to the end e of the interval.
inline SimplicialMap homotopy_end(const SimplicialSet& K, const SimplicialHomotopy& H, int e) {
    SimplicialMap::Maps m;
    for (int q = 0; q <= K.dim_cap(); ++q) {
        Table t;
        for (Index s = 0; s < K.size(q); ++s) t.push_back(H.at(q, s, std::vector<int>(static_cast<std::size_t>(q) + 1, e)));
        m.push_back(std::move(t));
    }
    return SimplicialMap(K, K, std::move(m));
}

/// H_* P(tau) = sum_i (-1)^i H(s_i tau, zeta_i), zeta_i = 0..0 1..1 with i + 1 zeros.
inline Chain prism_image(const SimplicialSet& K, const SimplicialHomotopy& H, int m, Index tau) {
    if (m + 1 > K.dim_cap()) throw CapExceeded("prism needs dimension " + std::to_string(m + 1));
    Chain c{m + 1, {}};
    for (int i = 0; i <= m; ++i) {
        std::vector<int> zeta(static_cast<std::size_t>(m) + 2, 1);
        for (int j = 0; j <= i; ++j) zeta[static_cast<std::size_t>(j)] = 0;
        c.terms.add(H.at(m + 1, K.degeneracy(m, i, tau), zeta), i % 2 ? -1 : 1);
    }
    return c;
}

/// k(c)(tau) = c(H_* P tau); satisfies a* c - c = k(d* c) + d* k(c) when H runs from id to a.
inline RationalCochain homotopy_cochain(const SimplicialSet& K, const SimplicialHomotopy& H, const RationalCochain& c) {
    if (c.degree == 0) return {-1, {}};
    RationalCochain k{c.degree - 1, {}};
    for (Index t = 0; t < K.size(c.degree - 1); ++t) k.values.push_back(evaluate(c, prism_image(K, H, c.degree - 1, t)));
    return k;
}

/// Conjugation h |-> g h g^-1 on B(pi) and the homotopy from the identity given
/// by the natural transformation with component g^-1.
inline std::pair<SimplicialMap, SimplicialHomotopy> conjugation_homotopy(const FiniteGroup& G, int g, int cap) {
    auto B = classifying_keyed(G, cap);
    auto C = FiniteCategory::from_group(G);
    const int eta = G.inverse(g);
    auto phi = [&](int h) { return G.op(G.op(g, h), G.inverse(g)); };
    for (int h = 0; h < G.order(); ++h)
        if (C.then(h, eta) != C.then(eta, phi(h))) throw LawViolation("conjugation is not natural");
    auto image = [&](int q, Index s, const std::vector<int>* alpha) {
        if (q == 0) return s;
        NerveKey k = B.keys[static_cast<std::size_t>(q)][s];
        for (int i = 1; i <= q; ++i) {
            int& a = k.arrows[static_cast<std::size_t>(i) - 1];
            int from = alpha ? (*alpha)[static_cast<std::size_t>(i) - 1] : 1;
            int to = alpha ? (*alpha)[static_cast<std::size_t>(i)] : 1;
            a = from == to ? (from == 0 ? a : phi(a)) : C.then(a, eta);
        }
        return B.find(q, k);
    };
    SimplicialMap::Maps m;
    for (int q = 0; q <= cap; ++q) {
        Table t;
        for (Index s = 0; s < B.set.size(q); ++s) t.push_back(image(q, s, nullptr));
        m.push_back(std::move(t));
    }
    SimplicialMap a(B.set, B.set, std::move(m));
    auto H = make_homotopy(B.set, [&](int q, Index s, const std::vector<int>& alpha) { return image(q, s, &alpha); });
    return {std::move(a), std::move(H)};
}

/// gamma(s) = mean over g of c(a(g) s).
inline RationalCochain finite_group_mean(const SimplicialSet& K, const std::vector<SimplicialMap>& actions, const RationalCochain& c) {
    if (actions.empty()) throw InvalidArgument("empty group");
    for (const auto& a : actions)
        if (!a.is_bijective(K)) throw InvalidArgument("action is not by automorphisms");
    const Rational w(1, static_cast<int>(actions.size()));
    RationalCochain gamma{c.degree, std::vector<Rational>(K.size(c.degree), 0)};
    for (const auto& a : actions)
        for (Index s = 0; s < K.size(c.degree); ++s) gamma[s] += w * c[a.at(c.degree, s)];
    return gamma;
}

struct GroupAverage {
    RationalCochain gamma;
    RationalCochain kappa;  // gamma - c = d* kappa
    bool invariant = false;
    bool cohomologous = false;
    bool norm_bounded = false;
};

/// The averaged cocycle with its primitive; homotopies[i] must run from id to actions[i].
inline GroupAverage finite_group_average(const SimplicialSet& K, const std::vector<SimplicialMap>& actions,
                                         const std::vector<SimplicialHomotopy>& homotopies, const RationalCochain& c) {
    if (actions.size() != homotopies.size()) throw ArityMismatch("one homotopy per group element");
    if (c.degree + 1 <= K.dim_cap() && sup_norm(trivial_coboundary(K, c)) != 0) throw InvalidArgument("c is not a cocycle");
    for (std::size_t i = 0; i < actions.size(); ++i) {
        if (!(homotopy_end(K, homotopies[i], 0) == SimplicialMap::identity(K))) throw InvalidArgument("homotopy does not start at the identity");
        if (!(homotopy_end(K, homotopies[i], 1) == actions[i])) throw InvalidArgument("homotopy does not end at the action");
    }
    GroupAverage r;
    r.gamma = finite_group_mean(K, actions, c);
    const Rational w(1, static_cast<int>(actions.size()));
    if (c.degree == 0) {
        r.kappa = {-1, {}};
    } else {
        r.kappa = {c.degree - 1, std::vector<Rational>(K.size(c.degree - 1), 0)};
        for (const auto& H : homotopies) {
            auto k = homotopy_cochain(K, H, c);
            for (Index t = 0; t < k.values.size(); ++t) r.kappa[t] += w * k[t];
        }
    }
    r.invariant = true;
    for (const auto& a : actions)
        for (Index s = 0; s < K.size(c.degree); ++s)
            if (r.gamma[a.at(c.degree, s)] != r.gamma[s]) r.invariant = false;
    RationalCochain diff = r.gamma;
    for (Index s = 0; s < diff.values.size(); ++s) diff[s] -= c[s];
    if (c.degree == 0) {
        r.cohomologous = sup_norm(diff) == 0;
    } else {
        r.cohomologous = trivial_coboundary(K, r.kappa) == diff;
    }
    r.norm_bounded = sup_norm(r.gamma) <= sup_norm(c);
    return r;
}

}  // namespace simpcoh
