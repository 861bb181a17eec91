#pragma once

/**
 * Truncated Eilenberg-MacLane sets K(pi, n). A q-simplex is a normalized
 * n-cocycle of Delta[q], stored as its values on the (n+1)-element subsets of
 * [q] in lexicographic order.
 *
 * Cocycles are enumerated through a basis of the kernel: the values on subsets
 * containing 0 are free and the cocycle condition on {0} u S determines the
 * value on S. For n = 1 and nonabelian pi the condition u(a,c) = u(a,b) u(b,c)
 * plays the same role.
 */

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cochain.hpp"
#include "generate.hpp"

namespace simpcoh {

/// (k)-element subsets of [q] in lexicographic order.
inline std::vector<std::vector<int>> subsets(int q, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > q + 1) return out;
    for (auto& f : enumerate_injective(k - 1, q)) out.push_back(f.values());
    if (k == 0) out.push_back({});
    return out;
}

class EMModel {
public:
    EMModel(FiniteGroup group, int n, int cap) : group_(std::move(group)), n_(n) {
        if (n < 1) throw InvalidArgument("K(pi, n) needs n >= 1");
        if (n > 1 && !group_.is_abelian()) throw InvalidArgument("K(pi, n) with n > 1 needs an abelian group");
        for (int q = 0; q <= cap; ++q) {
            subsets_.push_back(subsets(q, n + 1));
            std::map<std::vector<int>, int> pos;
            for (std::size_t i = 0; i < subsets_.back().size(); ++i) pos[subsets_.back()[i]] = static_cast<int>(i);
            position_.push_back(std::move(pos));
        }
        std::vector<std::vector<std::vector<int>>> levels;
        for (int q = 0; q <= cap; ++q) levels.push_back(enumerate_cocycles(q));
        auto act = [this](int q, const std::vector<int>& u, const MonotoneMap& theta) { return pull(q, u, theta); };
        table_ = tabulate(
            Kind::simplicial, cap, std::move(levels),
            [act](int q, int i, const std::vector<int>& u) { return act(q, u, MonotoneMap::face(q, i)); },
            [act](int q, int i, const std::vector<int>& u) { return act(q, u, MonotoneMap::degeneracy(q, i)); });
    }

    const SimplicialSet& set() const { return table_.set; }
    const FiniteGroup& group() const { return group_; }
    int degree() const { return n_; }
    int dim_cap() const { return table_.set.dim_cap(); }

    /// The cocycle table of a q-simplex.
    const std::vector<int>& cocycle(int q, Index s) const { return table_.keys[static_cast<std::size_t>(q)][s]; }
    Index find(int q, const std::vector<int>& u) const { return table_.find(q, u); }
    const std::vector<std::vector<int>>& nondegenerate_simplices(int q) const { return subsets_[static_cast<std::size_t>(q)]; }

    /// Value of a cocycle of Delta[q] on the monotone map alpha : [n] -> [q]; zero when alpha is not injective.
    int value(int q, const std::vector<int>& u, const MonotoneMap& alpha) const {
        if (!alpha.is_injective()) return group_.unit();
        return u[static_cast<std::size_t>(position_[static_cast<std::size_t>(q)].at(alpha.values()))];
    }

    /// The n-simplex corresponding to g under K(pi,n)_n = pi.
    Index simplex_of(int g) const { return find(n_, {g}); }
    int element_of(Index s) const { return cocycle(n_, s)[0]; }
    Index zero(int q) const { return find(q, std::vector<int>(subsets_[static_cast<std::size_t>(q)].size(), group_.unit())); }

    /// Pointwise sum of two q-simplices.
    Index add(int q, Index a, Index b) const {
        auto u = cocycle(q, a);
        const auto& v = cocycle(q, b);
        for (std::size_t i = 0; i < u.size(); ++i) u[i] = group_.op(u[i], v[i]);
        return find(q, u);
    }
    Index negate(int q, Index a) const {
        auto u = cocycle(q, a);
        for (auto& x : u) x = group_.inverse(x);
        return find(q, u);
    }

    /// theta* u for theta : [m] -> [q].
    std::vector<int> pull(int q, const std::vector<int>& u, const MonotoneMap& theta) const {
        int m = theta.source();
        std::vector<int> r;
        for (const auto& S : subsets_[static_cast<std::size_t>(m)]) {
            std::vector<int> im;
            for (int x : S) im.push_back(theta(x));
            r.push_back(value(q, u, MonotoneMap(q, im)));
        }
        return r;
    }

    /// All normalized n-cocycles of Delta[q].
    std::vector<std::vector<int>> enumerate_cocycles(int q) const {
        const auto& subs = subsets_[static_cast<std::size_t>(q)];
        std::vector<std::size_t> free;
        for (std::size_t i = 0; i < subs.size(); ++i)
            if (subs[i][0] == 0) free.push_back(i);
        std::vector<std::vector<int>> out;
        std::vector<int> digits(free.size(), 0);
        const int p = group_.order();
        while (true) {
            std::vector<int> u(subs.size(), group_.unit());
            for (std::size_t j = 0; j < free.size(); ++j) u[free[j]] = digits[j];
            for (std::size_t i = 0; i < subs.size(); ++i) {
                if (subs[i][0] == 0) continue;
                std::vector<int> T{0};
                T.insert(T.end(), subs[i].begin(), subs[i].end());
                u[i] = solve_face(q, u, T);
            }
            out.push_back(std::move(u));
            std::size_t j = 0;
            while (j < digits.size() && ++digits[j] == p) digits[j++] = 0;
            if (j == digits.size()) break;
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Whether a table satisfies the cocycle condition on every (n+1)-face.
    bool is_cocycle_table(int q, const std::vector<int>& u) const {
        for (const auto& T : subsets(q, n_ + 2)) {
            auto face = [&](int i) {
                std::vector<int> S = T;
                S.erase(S.begin() + i);
                return u[static_cast<std::size_t>(position_[static_cast<std::size_t>(q)].at(S))];
            };
            if (n_ == 1 && !group_.is_abelian()) {
                if (face(1) != group_.op(face(2), face(0))) return false;
            } else {
                int s = group_.unit();
                for (int i = 0; i <= n_ + 1; ++i) s = group_.op(s, i % 2 ? group_.inverse(face(i)) : face(i));
                if (s != group_.unit()) return false;
            }
        }
        return true;
    }

private:
    // Value on T minus its vertex 0 forced by the cocycle condition on T.
    int solve_face(int q, const std::vector<int>& u, const std::vector<int>& T) const {
        auto face = [&](int i) {
            std::vector<int> S = T;
            S.erase(S.begin() + i);
            return u[static_cast<std::size_t>(position_[static_cast<std::size_t>(q)].at(S))];
        };
        if (n_ == 1 && !group_.is_abelian()) return group_.op(group_.inverse(face(2)), face(1));  // u(b,c) = u(a,b)^-1 u(a,c)
        // u(S) = - sum_{i>=1} (-1)^i u(T - t_i)
        int s = group_.unit();
        for (int i = 1; i <= n_ + 1; ++i) s = group_.op(s, i % 2 ? face(i) : group_.inverse(face(i)));
        return s;
    }

    FiniteGroup group_;
    int n_;
    std::vector<std::vector<std::vector<int>>> subsets_;
    std::vector<std::map<std::vector<int>, int>> position_;
    Tabulated<std::vector<int>> table_;
};

/// Decides whether c : pi -> pi, read as an n-cochain of K(pi, n), is a
/// cocycle. For n = 1 and nonabelian pi the condition is c(u1) = c(u2) c(u0).
inline bool is_cocycle_on_em(const FiniteGroup& G, int n, const std::vector<int>& c) {
    if (c.size() != static_cast<std::size_t>(G.order())) throw ArityMismatch("map needs one value per element");
    if (c[static_cast<std::size_t>(G.unit())] != G.unit()) throw InvalidArgument("c must send 0 to 0");
    EMModel K(G, n, n + 1);
    const auto& S = K.set();
    for (Index u = 0; u < S.size(n + 1); ++u) {
        auto val = [&](int i) { return c[static_cast<std::size_t>(K.element_of(S.face(n + 1, i, u)))]; };
        if (n == 1 && !G.is_abelian()) {
            if (val(1) != G.op(val(2), val(0))) return false;
        } else {
            int s = G.unit();
            for (int i = 0; i <= n + 1; ++i) s = G.op(s, i % 2 ? G.inverse(val(i)) : val(i));
            if (s != G.unit()) return false;
        }
    }
    return true;
}

/// The unique map f : K -> K(pi, n) with f*(iota) = z: f(s)(alpha) = z(alpha* s).
inline SimplicialMap map_from_cocycle(const SimplicialSet& K, const GroupCochain& z, const EMModel& em) {
    const int n = em.degree();
    if (z.degree != n) throw ArityMismatch("cocycle degree differs from the model degree");
    GroupCoefficients coeff(em.group());
    if (!is_normalized(K, coeff, z)) throw InvalidArgument("z is not normalized");
    if (n + 1 <= K.dim_cap() && !is_cocycle(K, LocalSystem<GroupCoefficients>::constant(K, coeff), z))
        throw InvalidArgument("z is not a cocycle");
    int cap = std::min(K.dim_cap(), em.dim_cap());
    SimplicialMap::Maps m;
    for (int q = 0; q <= cap; ++q) {
        Table t;
        const auto& subs = em.nondegenerate_simplices(q);
        for (Index s = 0; s < K.size(q); ++s) {
            std::vector<int> u;
            for (const auto& S : subs) u.push_back(z[structure_map(K, MonotoneMap(q, S), s)]);
            t.push_back(em.find(q, u));
        }
        m.push_back(std::move(t));
    }
    return SimplicialMap(K, em.set(), std::move(m));
}

/// z(f) = f*(iota): the n-cochain s |-> f(s) read in K(pi,n)_n = pi.
inline GroupCochain cocycle_of_map(const SimplicialSet& K, const SimplicialMap& f, const EMModel& em) {
    GroupCochain z{em.degree(), {}};
    for (Index s = 0; s < K.size(em.degree()); ++s) z.values.push_back(em.element_of(f.at(em.degree(), s)));
    return z;
}

/// s(h) : K(pi', n) -> K(pi, n), post-composition with a homomorphism h.
inline SimplicialMap induced_map_s(const EMModel& source, const EMModel& target, const std::vector<int>& h) {
    if (!is_homomorphism(source.group(), target.group(), h)) throw InvalidArgument("h is not a homomorphism");
    if (source.degree() != target.degree()) throw ArityMismatch("models of different degree");
    int cap = std::min(source.dim_cap(), target.dim_cap());
    SimplicialMap::Maps m;
    for (int q = 0; q <= cap; ++q) {
        Table t;
        for (Index s = 0; s < source.set().size(q); ++s) {
            auto u = source.cocycle(q, s);
            for (auto& x : u) x = h[static_cast<std::size_t>(x)];
            t.push_back(target.find(q, u));
        }
        m.push_back(std::move(t));
    }
    return SimplicialMap(source.set(), target.set(), std::move(m));
}

}  // namespace simpcoh
