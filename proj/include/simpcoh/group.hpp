#pragma once

/**
 * Finite groups given by multiplication tables. Elements are 0 .. order-1.
 * Finite abelian coefficient groups are built as products of cyclic groups;
 * the element index is then the mixed-radix code of the component tuple.
 */

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace simpcoh {

class FiniteGroup {
public:
    FiniteGroup() : FiniteGroup(1, {0}) {}

    /// mul[a * order + b] = a * b.
    FiniteGroup(int order, std::vector<int> mul, std::string name = "") : order_(order), mul_(std::move(mul)), name_(std::move(name)) {
        if (order_ < 1) throw InvalidArgument("group order must be positive");
        if (mul_.size() != static_cast<std::size_t>(order_) * static_cast<std::size_t>(order_))
            throw ArityMismatch("multiplication table must have order^2 entries");
        for (int x : mul_)
            if (x < 0 || x >= order_) throw ArityMismatch("multiplication table entry out of range");
        for (int a = 0; a < order_; ++a)
            for (int b = 0; b < order_; ++b)
                for (int c = 0; c < order_; ++c)
                    if (op(op(a, b), c) != op(a, op(b, c)))
                        throw LawViolation("associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                           std::to_string(c) + ")");
        unit_ = -1;
        for (int e = 0; e < order_ && unit_ < 0; ++e) {
            bool ok = true;
            for (int a = 0; a < order_ && ok; ++a) ok = op(e, a) == a && op(a, e) == a;
            if (ok) unit_ = e;
        }
        if (unit_ < 0) throw LawViolation("no identity element");
        inv_.assign(static_cast<std::size_t>(order_), -1);
        for (int a = 0; a < order_; ++a)
            for (int b = 0; b < order_; ++b)
                if (op(a, b) == unit_ && op(b, a) == unit_) inv_[static_cast<std::size_t>(a)] = b;
        for (int a = 0; a < order_; ++a)
            if (inv_[static_cast<std::size_t>(a)] < 0) throw LawViolation("element " + std::to_string(a) + " has no inverse");
    }

    static FiniteGroup cyclic(int n) {
        std::vector<int> mul;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) mul.push_back((a + b) % n);
        FiniteGroup g(n, std::move(mul), "Z/" + std::to_string(n));
        g.moduli_ = {n};
        return g;
    }

    /// Z/m1 x ... x Z/mk; element index = c1 + m1 * (c2 + m2 * (...)).
    static FiniteGroup cyclic_product(const std::vector<int>& moduli) {
        if (moduli.empty()) return cyclic(1);
        FiniteGroup g = cyclic(moduli[0]);
        std::string name = g.name();
        for (std::size_t i = 1; i < moduli.size(); ++i) {
            g = product(g, cyclic(moduli[i]));
            name += "xZ/" + std::to_string(moduli[i]);
        }
        g.name_ = name;
        g.moduli_ = moduli;
        return g;
    }

    /// Direct product; the pair (a, b) has index a + |G| * b.
    static FiniteGroup product(const FiniteGroup& G, const FiniteGroup& H) {
        int n = G.order() * H.order();
        std::vector<int> mul(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                int a = G.op(x % G.order(), y % G.order());
                int b = H.op(x / G.order(), y / G.order());
                mul[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y)] = a + G.order() * b;
            }
        return FiniteGroup(n, std::move(mul), G.name() + "x" + H.name());
    }

    /// The symmetric group on n letters, permutations in lexicographic order,
    /// (a * b)(i) = a(b(i)).
    static FiniteGroup symmetric(int n) {
        std::vector<std::vector<int>> perms;
        std::vector<int> p(static_cast<std::size_t>(n));
        std::iota(p.begin(), p.end(), 0);
        do perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        int order = static_cast<int>(perms.size());
        std::vector<int> mul;
        for (auto& a : perms)
            for (auto& b : perms) {
                std::vector<int> c(static_cast<std::size_t>(n));
                for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(b[static_cast<std::size_t>(i)])];
                mul.push_back(static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin()));
            }
        return FiniteGroup(order, std::move(mul), "S" + std::to_string(n));
    }

    int order() const { return order_; }
    int unit() const { return unit_; }
    int op(int a, int b) const { return mul_[static_cast<std::size_t>(a) * static_cast<std::size_t>(order_) + static_cast<std::size_t>(b)]; }
    int inverse(int a) const { return inv_[static_cast<std::size_t>(a)]; }
    const std::vector<int>& table() const { return mul_; }
    const std::string& name() const { return name_; }
    /// Cyclic factors when built from them, otherwise empty.
    const std::vector<int>& moduli() const { return moduli_; }

    bool is_abelian() const {
        for (int a = 0; a < order_; ++a)
            for (int b = 0; b < order_; ++b)
                if (op(a, b) != op(b, a)) return false;
        return true;
    }

    /// a^k for any integer k.
    int power(int a, long k) const {
        if (k < 0) return power(inverse(a), -k);
        int r = unit_;
        for (long i = 0; i < k; ++i) r = op(r, a);
        return r;
    }

    bool operator==(const FiniteGroup& o) const { return order_ == o.order_ && mul_ == o.mul_; }

private:
    int order_ = 1;
    std::vector<int> mul_{0};
    std::string name_;
    std::vector<int> moduli_;
    int unit_ = 0;
    std::vector<int> inv_{0};
};

/// Whether h: G -> H (as a table) respects multiplication.
inline bool is_homomorphism(const FiniteGroup& G, const FiniteGroup& H, const std::vector<int>& h) {
    if (h.size() != static_cast<std::size_t>(G.order())) return false;
    for (int x : h)
        if (x < 0 || x >= H.order()) return false;
    for (int a = 0; a < G.order(); ++a)
        for (int b = 0; b < G.order(); ++b)
            if (h[static_cast<std::size_t>(G.op(a, b))] != H.op(h[static_cast<std::size_t>(a)], h[static_cast<std::size_t>(b)]))
                return false;
    return true;
}

inline bool is_automorphism(const FiniteGroup& G, const std::vector<int>& h) {
    if (!is_homomorphism(G, G, h)) return false;
    std::vector<int> s = h;
    std::sort(s.begin(), s.end());
    return std::adjacent_find(s.begin(), s.end()) == s.end();
}

inline std::vector<int> invert_permutation(const std::vector<int>& h) {
    std::vector<int> r(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) r[static_cast<std::size_t>(h[i])] = static_cast<int>(i);
    return r;
}

/// (g o h)(x) = g(h(x)).
inline std::vector<int> compose_tables(const std::vector<int>& g, const std::vector<int>& h) {
    std::vector<int> r(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) r[i] = g[static_cast<std::size_t>(h[i])];
    return r;
}

inline std::vector<int> identity_table(int n) {
    std::vector<int> r(static_cast<std::size_t>(n));
    std::iota(r.begin(), r.end(), 0);
    return r;
}

/// All automorphisms of G by brute force over permutations fixing the unit.
inline std::vector<std::vector<int>> automorphisms(const FiniteGroup& G) {
    std::vector<int> rest;
    for (int a = 0; a < G.order(); ++a)
        if (a != G.unit()) rest.push_back(a);
    std::vector<std::vector<int>> out;
    do {
        std::vector<int> h(static_cast<std::size_t>(G.order()));
        h[static_cast<std::size_t>(G.unit())] = G.unit();
        std::size_t k = 0;
        for (int a = 0; a < G.order(); ++a)
            if (a != G.unit()) h[static_cast<std::size_t>(a)] = rest[k++];
        if (is_homomorphism(G, G, h)) out.push_back(h);
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

/// G / N for a normal subgroup N, with the projection table.
struct QuotientGroup {
    FiniteGroup group;
    std::vector<int> projection;
};

inline QuotientGroup quotient_group(const FiniteGroup& G, const std::vector<int>& normal) {
    std::vector<char> in(static_cast<std::size_t>(G.order()), 0);
    for (int x : normal) in.at(static_cast<std::size_t>(x)) = 1;
    if (!in[static_cast<std::size_t>(G.unit())]) throw InvalidArgument("subgroup must contain the unit");
    for (int a = 0; a < G.order(); ++a)
        for (int b = 0; b < G.order(); ++b)
            if (in[static_cast<std::size_t>(a)] && in[static_cast<std::size_t>(b)] && !in[static_cast<std::size_t>(G.op(a, b))])
                throw InvalidArgument("not a subgroup");
    for (int g = 0; g < G.order(); ++g)
        for (int a = 0; a < G.order(); ++a)
            if (in[static_cast<std::size_t>(a)] && !in[static_cast<std::size_t>(G.op(G.op(g, a), G.inverse(g)))])
                throw InvalidArgument("subgroup is not normal");
    std::vector<int> proj(static_cast<std::size_t>(G.order()), -1);
    std::vector<int> reps;
    for (int g = 0; g < G.order(); ++g) {
        if (proj[static_cast<std::size_t>(g)] >= 0) continue;
        int c = static_cast<int>(reps.size());
        reps.push_back(g);
        for (int a = 0; a < G.order(); ++a)
            if (in[static_cast<std::size_t>(a)]) proj[static_cast<std::size_t>(G.op(g, a))] = c;
    }
    int n = static_cast<int>(reps.size());
    std::vector<int> mul;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            mul.push_back(proj[static_cast<std::size_t>(G.op(reps[static_cast<std::size_t>(x)], reps[static_cast<std::size_t>(y)]))]);
    return {FiniteGroup(n, std::move(mul), G.name() + "/N"), std::move(proj)};
}

}  // namespace simpcoh
