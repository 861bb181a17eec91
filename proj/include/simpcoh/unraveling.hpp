#pragma once

/**
 * Unravelings K x Gamma, the chains c_n(tau, tau') of Delta[n] x Gamma, the
 * maps k_n, averaging over Gamma and the cochain homotopy h between p* m* and
 * the identity.
 *
 * Gamma = Delta[infinity] as a Delta-set: n-simplices are strictly increasing
 * tuples of naturals. Averaging operators are iterated Banach limits; they are
 * evaluated only on stabilizing functions, where every such limit is forced:
 * a function is T-stabilizing if its value at a tuple k only depends on
 * rep_T(k), the tuple whose entries >= T are replaced by T, T+1, ... in order.
 * On those the iterated limit is the value at (T, T+1, ..., T+n).
 */

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "cochain.hpp"
#include "generate.hpp"

namespace simpcoh {

using Tuple = std::vector<int>;

/// Entries >= T replaced by T, T+1, ... in order.
inline Tuple stabilize(const Tuple& k, int T) {
    Tuple r = k;
    int next = T;
    for (auto& x : r)
        if (x >= T) x = next++;
    return r;
}

inline bool strictly_increasing(const Tuple& k) { return std::adjacent_find(k.begin(), k.end(), std::greater_equal<int>()) == k.end(); }

/// All strictly increasing tuples of the given length with entries below bound.
inline std::vector<Tuple> increasing_tuples(int length, int bound) {
    std::vector<Tuple> out;
    if (length == 0) return {{}};
    if (length > bound) return out;
    for (const auto& f : enumerate_injective(length - 1, bound - 1)) out.push_back(f.values());
    return out;
}

/// Tuples in stabilized form: a prefix below T followed by T, T+1, ...
inline std::vector<Tuple> stable_representatives(int length, int T) {
    std::vector<Tuple> out;
    for (int j = 0; j <= std::min(length, T); ++j)
        for (auto prefix : increasing_tuples(j, T)) {
            for (int i = 0; i < length - j; ++i) prefix.push_back(T + i);
            out.push_back(std::move(prefix));
        }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Stabilizing functions and averaging

/// A bounded function on Gamma_{arity-1} stored on stabilized representatives.
class StabilizingFunction {
public:
    StabilizingFunction(int arity, int threshold, std::map<Tuple, Rational> table)
        : arity_(arity), T_(threshold), table_(std::move(table)) {
        for (const auto& k : stable_representatives(arity_, T_))
            if (!table_.count(k)) throw ArityMismatch("missing value at a stabilized tuple");
    }

    /// Samples fn at stabilized tuples after checking fn(k) = fn(rep_T(k)) on all tuples
    /// with entries below T + arity + probe. Throws NotStabilizing otherwise.
    static StabilizingFunction from(int arity, int threshold, const std::function<Rational(const Tuple&)>& fn, int probe = 3) {
        std::map<Tuple, Rational> table;
        for (const auto& k : stable_representatives(arity, threshold)) table.emplace(k, fn(k));
        for (const auto& k : increasing_tuples(arity, threshold + arity + probe))
            if (fn(k) != table.at(stabilize(k, threshold)))
                throw NotStabilizing("function is not " + std::to_string(threshold) + "-stabilizing");
        return StabilizingFunction(arity, threshold, std::move(table));
    }

    /// The least threshold up to max_threshold at which fn stabilizes on the probe box.
    static StabilizingFunction detect(int arity, const std::function<Rational(const Tuple&)>& fn, int max_threshold, int probe = 3) {
        for (int T = 0; T <= max_threshold; ++T) {
            try {
                return from(arity, T, fn, probe);
            } catch (const NotStabilizing&) {
            }
        }
        throw NotStabilizing("no threshold up to " + std::to_string(max_threshold));
    }

    static StabilizingFunction constant(int arity, const Rational& a) {
        return from(arity, 0, [a](const Tuple&) { return a; });
    }

    int arity() const { return arity_; }
    int threshold() const { return T_; }
    Rational operator()(const Tuple& k) const {
        if (static_cast<int>(k.size()) != arity_ || !strictly_increasing(k)) throw ArityMismatch("not a simplex of Gamma");
        return table_.at(stabilize(k, T_));
    }

    /// The iterated limit m_n(f).
    Rational average() const {
        Tuple k;
        for (int i = 0; i < arity_; ++i) k.push_back(T_ + i);
        return table_.at(k);
    }

    /// d_i* f on Gamma_{arity}.
    StabilizingFunction face_pullback(int i) const {
        auto self = *this;
        return from(arity_ + 1, T_, [self, i](const Tuple& k) {
            Tuple r = k;
            r.erase(r.begin() + i);
            return self(r);
        });
    }

    Rational sup_norm() const {
        Rational m = 0;
        for (const auto& [k, v] : table_) m = std::max(m, abs_value(v));
        return m;
    }

private:
    int arity_;
    int T_;
    std::map<Tuple, Rational> table_;
};

// ---------------------------------------------------------------------------
// Unraveling

struct Unraveling {
    SimplicialSet set;       // Delta-set K x Gamma_M
    SimplicialMap projection;
    Product product;
};

inline Unraveling unravel(const SimplicialSet& K, int M) {
    auto G = gamma_truncated(M, K.dim_cap());
    auto P = product(forget(K), G.set);
    return {P.set, P.first, P};
}

/// Cochains on K x Gamma (trivial rational coefficients) that are T-stabilizing in Gamma.
struct StableCochain {
    int degree = 0;
    int threshold = 0;
    std::vector<std::map<Tuple, Rational>> values;  // per simplex of K, on stabilized tuples

    Rational operator()(Index s, const Tuple& k) const { return values[s].at(stabilize(k, threshold)); }
};

inline StableCochain stable_cochain(const SimplicialSet& K, int degree, int threshold,
                                    const std::function<Rational(Index, const Tuple&)>& fn) {
    StableCochain c{degree, threshold, {}};
    auto reps = stable_representatives(degree + 1, threshold);
    for (Index s = 0; s < K.size(degree); ++s) {
        std::map<Tuple, Rational> m;
        for (const auto& k : reps) m.emplace(k, fn(s, k));
        c.values.push_back(std::move(m));
    }
    return c;
}

/// p*(g)(s, k) = g(s).
inline StableCochain pullback_to_unraveling(const SimplicialSet& K, const RationalCochain& g) {
    return stable_cochain(K, g.degree, 0, [&](Index s, const Tuple&) { return g[s]; });
}

/// (d* f)(s, k) = sum (-1)^i f(d_i s, d_i k); stabilization is preserved.
inline StableCochain coboundary(const SimplicialSet& K, const StableCochain& f) {
    const int n = f.degree;
    if (n + 1 > K.dim_cap()) throw CapExceeded("coboundary needs dimension " + std::to_string(n + 1));
    return stable_cochain(K, n + 1, f.threshold, [&](Index s, const Tuple& k) {
        Rational v = 0;
        for (int i = 0; i <= n + 1; ++i) {
            Tuple r = k;
            r.erase(r.begin() + i);
            Rational x = f(K.face(n + 1, i, s), r);
            v += i % 2 ? Rational(-x) : x;
        }
        return v;
    });
}

/// m_*(f)(s) = m_n(k |-> f(s, k)).
inline RationalCochain average_cochain(const StableCochain& f) {
    RationalCochain r{f.degree, {}};
    Tuple top;
    for (int i = 0; i <= f.degree; ++i) top.push_back(f.threshold + i);
    for (const auto& m : f.values) r.values.push_back(m.at(top));
    return r;
}

inline Rational sup_norm(const StableCochain& f) {
    Rational m = 0;
    for (const auto& v : f.values)
        for (const auto& [k, x] : v) m = std::max(m, abs_value(x));
    return m;
}

/// Random T-stabilizing function with small integer values on the stabilized tuples.
inline StabilizingFunction random_stabilizing(int arity, int threshold, std::mt19937_64& rng, int range = 3) {
    std::uniform_int_distribution<int> d(-range, range);
    std::map<Tuple, Rational> table;
    for (const auto& k : stable_representatives(arity, threshold)) table.emplace(k, d(rng));
    return StabilizingFunction(arity, threshold, std::move(table));
}

/// Random stabilizing cochain; with zero_tail it vanishes on tuples reaching the threshold,
/// so it is supported on finitely many Gamma-columns.
inline StableCochain random_stable_cochain(const SimplicialSet& K, int degree, int threshold, std::mt19937_64& rng,
                                           bool zero_tail = false, int range = 3) {
    std::uniform_int_distribution<int> d(-range, range);
    return stable_cochain(K, degree, threshold, [&](Index, const Tuple& k) {
        if (zero_tail && !k.empty() && k.back() >= threshold) return Rational(0);
        return Rational(d(rng));
    });
}

// ---------------------------------------------------------------------------
// The chains c_n(tau, tau') in Delta[n] x Gamma

/// A simplex (theta, gamma) of Delta[n] x Gamma: theta : [m] -> [n] monotone, gamma in Gamma_m.
using PrismKey = std::pair<Tuple, Tuple>;
using PrismChain = FormalSum<PrismKey>;

inline PrismChain prism_boundary(const PrismChain& c) {
    PrismChain r;
    for (const auto& [key, a] : c.terms()) {
        const int m = static_cast<int>(key.second.size()) - 1;
        if (m == 0) continue;
        for (int i = 0; i <= m; ++i) {
            PrismKey f = key;
            f.first.erase(f.first.begin() + i);
            f.second.erase(f.second.begin() + i);
            r.add(f, i % 2 ? Rational(-a) : a);
        }
    }
    return r;
}

/// Adds (w, apex) as the last vertex of every simplex.
inline PrismChain prism_cone(const PrismChain& c, int w, int apex) {
    PrismChain r;
    for (const auto& [key, a] : c.terms()) {
        if (!key.first.empty() && key.first.back() > w) throw InvalidArgument("cone vertex below the last Delta coordinate");
        if (!key.second.empty() && key.second.back() >= apex) throw InvalidArgument("apex must be strictly larger than every vertex");
        PrismKey k = key;
        k.first.push_back(w);
        k.second.push_back(apex);
        r.add(k, a);
    }
    return r;
}

/// (delta_i x id)_*: the Delta coordinate is pushed along d(i) : [n-1] -> [n].
inline PrismChain push_face(const PrismChain& c, int i) {
    return c.map_keys([i](const PrismKey& k) {
        PrismKey r = k;
        for (auto& v : r.first)
            if (v >= i) ++v;
        return r;
    });
}

inline int max_vertex(const PrismChain& c) {
    int m = -1;
    for (const auto& [k, a] : c.terms())
        if (!k.second.empty()) m = std::max(m, k.second.back());
    return m;
}

/// B(0) = 2, B(n) = 2 + 2(n+1) B(n-1).
inline Rational cn_norm_bound(int n) { return n == 0 ? Rational(2) : Rational(2) + Rational(2 * (n + 1)) * cn_norm_bound(n - 1); }

/// Where the cone step of c_n puts its apex in Gamma.
enum class ApexPolicy {
    minimal,  // smallest vertex strictly larger than every vertex of the cycle
    uniform,  // max(tau u tau') + n + 1, a function of the largest input entry only
};

/**
 * c_n(tau, tau') = (-1)^{n+1} cone(R) with R the right side of the boundary
 * condition, coned from Delta vertex n. Under the uniform policy the apex lies
 * above every vertex of R since vertices of c_m stay below max + m + 2.
 */
class UnravelingChains {
public:
    explicit UnravelingChains(ApexPolicy policy = ApexPolicy::minimal, int vertex_cap = -1)
        : policy_(policy), cap_(vertex_cap) {}

    ApexPolicy policy() const { return policy_; }

    const PrismChain& cn(const Tuple& tau, const Tuple& tau2) {
        if (tau.size() != tau2.size() || tau.empty()) throw ArityMismatch("c_n needs two simplices of the same dimension");
        if (!strictly_increasing(tau) || !strictly_increasing(tau2)) throw InvalidArgument("not a simplex of Gamma");
        auto key = std::make_pair(tau, tau2);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        const int n = static_cast<int>(tau.size()) - 1;
        PrismChain R = right_side(tau, tau2);
        if (!prism_boundary(R).empty()) throw LawViolation("right side of the boundary condition is not a cycle");
        int apex = policy_ == ApexPolicy::uniform ? std::max(tau.back(), tau2.back()) + n + 1 : max_vertex(R) + 1;
        if (cap_ >= 0 && apex >= cap_) throw CapExceeded("no vertex headroom for the apex " + std::to_string(apex));
        PrismChain c = prism_cone(R, n, apex).scaled(n % 2 ? 1 : -1);
        return memo_.emplace(key, std::move(c)).first->second;
    }

    /// (iota_n, tau) - (iota_n, tau') - sum' (delta_i x id)_* c_{n-1}(d_i tau, d_i tau').
    PrismChain right_side(const Tuple& tau, const Tuple& tau2) {
        const int n = static_cast<int>(tau.size()) - 1;
        Tuple iota;
        for (int i = 0; i <= n; ++i) iota.push_back(i);
        PrismChain R;
        R.add(PrismKey{iota, tau}, 1);
        R.add(PrismKey{iota, tau2}, -1);
        for (int i = 0; n > 0 && i <= n; ++i) {
            Tuple a = tau, b = tau2;
            a.erase(a.begin() + i);
            b.erase(b.begin() + i);
            R.add(push_face(cn(a, b), i), i % 2 ? Rational(1) : Rational(-1));
        }
        return R;
    }

private:
    ApexPolicy policy_;
    int cap_;
    std::map<std::pair<Tuple, Tuple>, PrismChain> memo_;
};

// ---------------------------------------------------------------------------
// k_n and the homotopy h

/// A simplex (s, gamma) of K x Gamma; the dimension is gamma.size() - 1.
using UnravelKey = std::pair<Index, Tuple>;
using UnravelChain = FormalSum<UnravelKey>;

/// k_n(s, tau, tau') = (i_s x id)_* c_n(tau, tau').
inline UnravelChain kn(const SimplicialSet& K, UnravelingChains& chains, Index s, const Tuple& tau, const Tuple& tau2) {
    const int n = static_cast<int>(tau.size()) - 1;
    return chains.cn(tau, tau2).map_keys([&](const PrismKey& k) {
        return UnravelKey{structure_map(K, MonotoneMap(n, k.first), s), k.second};
    });
}

inline UnravelChain unravel_boundary(const SimplicialSet& K, const UnravelChain& c) {
    UnravelChain r;
    for (const auto& [key, a] : c.terms()) {
        const int m = static_cast<int>(key.second.size()) - 1;
        if (m == 0) continue;
        for (int i = 0; i <= m; ++i) {
            Tuple g = key.second;
            g.erase(g.begin() + i);
            r.add(UnravelKey{K.face(m, i, key.first), g}, i % 2 ? Rational(-a) : a);
        }
    }
    return r;
}

inline Rational evaluate(const StableCochain& f, const UnravelChain& c) {
    Rational r = 0;
    for (const auto& [key, a] : c.terms()) r += a * f(key.first, key.second);
    return r;
}

/// h_{n+1}(f)(s, tau) = m_n<tau'> f(k_n(s, tau, tau')) for f of degree n + 1. With uniform apexes
/// the function of tau' is constant once every entry of tau' is at least max(T, max tau + 1): each
/// simplex of k_n(s, tau, tau') is a face of tau or of tau' followed by apexes above all of them.
inline Rational homotopy_h(const SimplicialSet& K, UnravelingChains& chains, const StableCochain& f, Index s, const Tuple& tau) {
    const int n = f.degree - 1;
    if (n < 0) return 0;
    if (chains.policy() != ApexPolicy::uniform) throw InvalidArgument("h needs uniform apexes");
    if (static_cast<int>(tau.size()) != n + 1) throw ArityMismatch("h needs a simplex of dimension deg f - 1");
    int T = std::max(f.threshold, tau.back() + 1);
    Tuple far;
    for (int i = 0; i <= n; ++i) far.push_back(T + i);
    return evaluate(f, kn(K, chains, s, tau, far));
}

struct MainHomotopyReport {
    bool identity = true;        // f - p* m* f = h(d* f) + d* h(f) at every tested point
    Rational max_h_norm = 0;     // largest |h(d* f)| seen
    Rational f_norm = 0;
    std::size_t points = 0;
};

/// Checks the homotopy identity for a stabilizing n-cochain f at every (s, tau) with entries below M.
inline MainHomotopyReport check_main_homotopy(const SimplicialSet& K, const StableCochain& f, int M) {
    UnravelingChains chains(ApexPolicy::uniform);
    const int n = f.degree;
    auto df = coboundary(K, f);
    auto mf = average_cochain(f);
    MainHomotopyReport rep;
    rep.f_norm = sup_norm(f);
    for (Index s = 0; s < K.size(n); ++s)
        for (const auto& tau : increasing_tuples(n + 1, M)) {
            Rational lhs = f(s, tau) - mf[s];
            Rational hdf = homotopy_h(K, chains, df, s, tau);
            Rational dhf = 0;
            for (int i = 0; n > 0 && i <= n; ++i) {
                Tuple t = tau;
                t.erase(t.begin() + i);
                Rational x = homotopy_h(K, chains, f, K.face(n, i, s), t);
                dhf += i % 2 ? Rational(-x) : x;
            }
            if (lhs != hdf + dhf) rep.identity = false;
            rep.max_h_norm = std::max(rep.max_h_norm, abs_value(hdf));
            ++rep.points;
        }
    return rep;
}

}  // namespace simpcoh
