#pragma once

/**
 * Verification suites. Each suite runs a family of exact checks and records
 * one line per check, with a witness for every failure. Suite ids follow the
 * lemma labels; a few extra ids cover the supporting machinery.
 */

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "averaging.hpp"
#include "bundle.hpp"
#include "classifying.hpp"
#include "io.hpp"
#include "postnikov.hpp"
#include "seminorm.hpp"
#include "unraveling.hpp"

namespace simpcoh {

struct SuiteOptions {
    int cap = 3;
    int M = 4;
    int max_n = 2;
    std::uint64_t budget = default_budget;
    std::uint64_t seed = 1;
    std::optional<SimplicialSet> input;
    std::string input_name;
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string witness;
};

struct VerificationReport {
    std::string suite;
    Json params;
    std::vector<CheckResult> checks;
    double seconds = 0;

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
    }
    void check(std::string name, bool pass, std::string witness = "") {
        checks.push_back({std::move(name), pass, pass ? "" : std::move(witness)});
    }
    /// Runs fn and records an exception as a failed check.
    void guarded(const std::string& name, const std::function<void()>& fn) {
        try {
            fn();
        } catch (const std::exception& e) {
            check(name, false, std::string("exception: ") + e.what());
        }
    }

    Json to_json(bool with_timing = true) const {
        Json j;
        j["suite"] = suite;
        j["params"] = params;
        j["passed"] = passed();
        Json cs = Json::array();
        for (const auto& c : checks) {
            Json x;
            x["check"] = c.name;
            x["pass"] = c.pass;
            if (!c.pass) x["witness"] = c.witness;
            cs.push_back(std::move(x));
        }
        j["checks"] = std::move(cs);
        if (with_timing) j["seconds"] = seconds;
        return j;
    }
};

namespace suites {

inline std::string ref(int q, Index s) { return "(" + std::to_string(q) + "," + std::to_string(s) + ")"; }

/// A random face-closed complex on `vertices` vertices with simplices up to max_dim.
inline OrderedComplex random_complex(std::mt19937_64& rng, int vertices, int max_dim, int count) {
    std::uniform_int_distribution<int> dim(1, max_dim), vert(0, vertices - 1);
    std::vector<std::vector<int>> simplices;
    for (int i = 0; i < count; ++i) {
        std::set<int> s;
        int d = dim(rng);
        while (static_cast<int>(s.size()) < std::min(d + 1, vertices)) s.insert(vert(rng));
        simplices.emplace_back(s.begin(), s.end());
    }
    return OrderedComplex(vertices, simplices);
}

inline std::vector<std::pair<std::string, FiniteGroup>> small_groups(int max_order) {
    std::vector<std::pair<std::string, FiniteGroup>> out;
    for (int n = 1; n <= max_order; ++n) out.emplace_back("Z/" + std::to_string(n), FiniteGroup::cyclic(n));
    if (max_order >= 4) out.emplace_back("Z/2xZ/2", FiniteGroup::cyclic_product({2, 2}));
    if (max_order >= 6) out.emplace_back("S3", FiniteGroup::symmetric(3));
    return out;
}

inline std::vector<GroupCochain> all_normalized(const SimplicialSet& B, const GroupCoefficients& coeff, int n) {
    auto nd = nondegenerate(B, n);
    std::vector<GroupCochain> out;
    std::vector<int> digit(nd.size(), 0);
    const int order = coeff.group.order();
    while (true) {
        GroupCochain c = zero_cochain(B, coeff, n);
        for (std::size_t i = 0; i < nd.size(); ++i) c[nd[i]] = digit[i];
        out.push_back(c);
        std::size_t j = 0;
        while (j < digit.size() && ++digit[j] == order) digit[j++] = 0;
        if (j == digit.size()) break;
    }
    return out;
}

/// Delta[2] with edge maps 01 -> h, 12 -> id, 02 -> h: a lawful nonconstant local system.
inline LocalSystem<GroupCoefficients> skewed_system(const Tabulated<std::vector<int>>& D2, const GroupCoefficients& coeff,
                                                    const std::vector<int>& h) {
    std::vector<std::vector<int>> e(D2.set.size(1), coeff.identity());
    e[D2.find(1, {0, 1})] = h;
    e[D2.find(1, {0, 2})] = h;
    return LocalSystem<GroupCoefficients>(D2.set, coeff, std::move(e));
}

/// K(Z/2,2) product bundles over small bases and a twisted K(Z/3,2) bundle over Delta[2].
inline std::vector<std::pair<std::string, KBundle>> bundle_cases(const SuiteOptions& o) {
    std::vector<std::pair<std::string, KBundle>> out;
    EMModel em(FiniteGroup::cyclic(2), 2, o.cap);
    std::vector<std::pair<std::string, SimplicialSet>> bases = {{"Delta[1]", standard_simplex(1, o.cap)},
                                                                {"Delta[2]", standard_simplex(2, o.cap)},
                                                                {"boundary Delta[3]", boundary(3, o.cap)},
                                                                {"circle", circle(o.cap)}};
    for (auto& [name, B] : bases) out.emplace_back(name + " x K(Z/2,2)", KBundle(product_bundle(B, em), o.budget));
    EMModel em3(FiniteGroup::cyclic(3), 2, o.cap);
    GroupCoefficients c3(em3.group());
    auto D2 = standard_simplex_keyed(2, o.cap);
    out.emplace_back("Delta[2] twisted K(Z/3,2)", KBundle(twisted_product(D2.set, skewed_system(D2, c3, {0, 2, 1}), em3), o.budget));
    return out;
}

// ---------------------------------------------------------------------------

inline void ez(const SuiteOptions& o, VerificationReport& r) {
    if (o.input) {
        r.check("ez unique on " + o.input_name, ez_unique(*o.input, o.input->dim_cap()), o.input_name);
        return;
    }
    for (const auto& [name, G] : small_groups(4)) r.check("ez unique on B" + name, ez_unique(classifying_space(G, 4), 4), "B" + name);
    std::mt19937_64 rng(o.seed);
    for (int i = 0; i < 3; ++i) {
        auto S = ordered_simplicial(random_complex(rng, 5, 3, 4), 4).set;
        auto text = dump(to_json(S));
        auto back = set_from_json(parse_json(text));
        r.check("random set " + std::to_string(i) + " round trip", dump(to_json(back)) == text);
        r.check("ez unique on random set " + std::to_string(i), ez_unique(back, 4), text);
    }
}

inline void cocycle_hom(const SuiteOptions&, VerificationReport& r) {
    std::vector<std::tuple<std::string, FiniteGroup, int>> cases = {
        {"Z/2", FiniteGroup::cyclic(2), 2}, {"Z/3", FiniteGroup::cyclic(3), 2}, {"Z/4", FiniteGroup::cyclic(4), 2},
        {"Z/2xZ/2", FiniteGroup::cyclic_product({2, 2}), 2}, {"Z/4", FiniteGroup::cyclic(4), 1},
        {"S3", FiniteGroup::symmetric(3), 1}};
    for (const auto& [name, G, n] : cases) {
        const int p = G.order();
        std::vector<int> c(static_cast<std::size_t>(p), G.unit());
        std::vector<int> free;
        for (int g = 0; g < p; ++g)
            if (g != G.unit()) free.push_back(g);
        std::size_t total = 0, agree = 0;
        std::string witness;
        std::vector<int> digit(free.size(), 0);
        while (true) {
            for (std::size_t i = 0; i < free.size(); ++i) c[static_cast<std::size_t>(free[i])] = digit[i];
            bool cocycle = is_cocycle_on_em(G, n, c), hom = is_homomorphism(G, G, c);
            ++total;
            if (cocycle == hom) ++agree;
            else if (witness.empty()) witness = "c = " + detail::join(c);
            std::size_t j = 0;
            while (j < digit.size() && ++digit[j] == p) digit[j++] = 0;
            if (j == digit.size()) break;
        }
        r.check(name + " n=" + std::to_string(n) + ": cocycle iff homomorphism over " + std::to_string(total) + " maps",
                agree == total, witness);
    }
}

inline void em_facts(const SuiteOptions&, VerificationReport& r) {
    for (int order : {2, 3}) {
        const int n = 2;
        EMModel K(FiniteGroup::cyclic(order), n, n + 2);
        const auto& S = K.set();
        std::string tag = "K(Z/" + std::to_string(order) + ",2)";
        r.check(tag + ": |K_n| = |pi|", S.size(n) == static_cast<std::size_t>(order));
        bool only_zero = true;
        for (Index s = 0; s < S.size(n); ++s) only_zero &= is_degenerate(S, n, s) == (s == K.zero(n));
        r.check(tag + ": 0_n is the only degenerate n-simplex", only_zero);
        auto kan = kan_check(S, n + 1);
        r.check(tag + ": Kan through dimension 3 at cap 4", kan.is_kan(),
                kan.unfillable.empty() ? std::string(to_string(kan.status)) : "horn in dimension " + std::to_string(kan.unfillable.front().n));
        bool laws = true;
        std::string witness;
        for (int q = 0; q <= n + 2 && laws; ++q)
            for (Index a = 0; a < S.size(q) && laws; ++a) {
                if (K.add(q, a, K.zero(q)) != a || K.add(q, a, K.negate(q, a)) != K.zero(q)) {
                    laws = false;
                    witness = ref(q, a);
                }
                for (Index b = 0; b < S.size(q) && laws; ++b) {
                    if (K.add(q, a, b) != K.add(q, b, a)) laws = false;
                    for (int i = 0; i <= q && laws && q > 0; ++i)
                        if (S.face(q, i, K.add(q, a, b)) != K.add(q - 1, S.face(q, i, a), S.face(q, i, b))) laws = false;
                    for (int i = 0; i < q && laws; ++i)
                        if (S.degeneracy(q - 1, i, K.add(q - 1, S.face(q, 0, a), S.face(q, 0, b))) !=
                            K.add(q, S.degeneracy(q - 1, i, S.face(q, 0, a)), S.degeneracy(q - 1, i, S.face(q, 0, b))))
                            laws = false;
                    if (!laws) witness = ref(q, a) + " + " + ref(q, b);
                }
            }
        r.check(tag + ": simplicial abelian group laws", laws, witness);
        bool assoc = true;
        for (Index a = 0; a < S.size(3); ++a)
            for (Index b = 0; b < S.size(3); ++b)
                for (Index c = 0; c < S.size(3); c += 3) assoc &= K.add(3, K.add(3, a, b), c) == K.add(3, a, K.add(3, b, c));
        r.check(tag + ": addition associative in dimension 3", assoc);
    }
}

inline void kan(const SuiteOptions& o, VerificationReport& r) {
    if (o.input) {
        auto rep = kan_check(*o.input, o.input->dim_cap() - 1, o.budget);
        std::string w = rep.unfillable.empty() ? std::string(to_string(rep.status)) : "horn " + std::to_string(rep.unfillable.front().k) + " in dimension " + std::to_string(rep.unfillable.front().n);
        r.check("Kan condition on " + o.input_name, rep.is_kan(), w);
        return;
    }
    for (const auto& [name, G] : small_groups(4)) r.check("B" + name + " is Kan", kan_check(classifying_space(G, 4), 3, o.budget).is_kan());
    r.check("Delta[1] is not Kan", !kan_check(standard_simplex(1, 3), 2, o.budget).is_kan());
}

inline void postnikov(const SuiteOptions& o, VerificationReport& r) {
    std::vector<std::pair<std::string, SimplicialSet>> sets;
    if (o.input) sets.emplace_back(o.input_name, *o.input);
    else {
        for (const auto& [name, G] : small_groups(3)) sets.emplace_back("B" + name, classifying_space(G, 4));
        sets.emplace_back("K(Z/2,2)", EMModel(FiniteGroup::cyclic(2), 2, 4).set());
    }
    for (const auto& [name, K] : sets) {
        auto rep = check_postnikov(K, K.dim_cap() - 1);
        r.check(name + ": ~n is a compatible equivalence relation", rep.compatible);
        r.check(name + ": p_n bijective on sk_n", rep.skeleton_bijective);
        r.check(name + ": tower composition laws", rep.tower_laws);
        r.check(name + ": K(n) trivial below", rep.singletons_low);
    }
}

inline void f_group(const SuiteOptions& o, VerificationReport& r) {
    for (const auto& [name, G] : small_groups(6)) {
        for (int cap = 3; cap <= std::max(3, std::min(o.cap, 4)); ++cap) {
            auto B = classifying_space(G, cap);
            r.guarded("pi1(B" + name + ") cap " + std::to_string(cap), [&] {
                auto pi = fundamental_group(B, o.budget);
                r.check("pi1(B" + name + ") = " + name + " at cap " + std::to_string(cap), pi1_of_classifying_matches(G, pi));
                r.check("K(1) = B pi1 for B" + name + " at cap " + std::to_string(cap), f_group_check(B, pi));
            });
        }
    }
}

inline void milnor(const SuiteOptions& o, VerificationReport& r) {
    const int M = std::min(o.M, 5);
    for (int order = 1; order <= 3; ++order)
        for (int m = 1; m <= M; ++m) {
            auto G = FiniteGroup::cyclic(order);
            auto mil = milnor_space(G, m, 3);
            bool counts = true;
            for (int n = 0; n <= 3; ++n) counts &= static_cast<long long>(mil.set.size(n)) == milnor_count(order, m, n);
            std::string tag = "Z/" + std::to_string(order) + " M=" + std::to_string(m);
            r.check(tag + ": levelwise counts", counts);
            r.check(tag + ": milnor model iso B pi x Gamma_M with faces", bar_iso_check(G, m, 3));
        }
}

inline void segal(const SuiteOptions& o, VerificationReport& r) {
    const int M = std::min(o.M, 5);
    for (int order = 1; order <= 3; ++order)
        for (int m = 1; m <= M; ++m) {
            auto rep = segal_check(FiniteCategory::from_group(FiniteGroup::cyclic(order)), m, 3);
            std::string tag = "BZ/" + std::to_string(order) + " M=" + std::to_string(m);
            r.check(tag + ": B C_M free on its core", rep.iso_free);
            r.check(tag + ": core = B C x Gamma_M", rep.core_matches);
            r.check(tag + ": counts", rep.counts == rep.predicted);
        }
    auto rep = segal_check(FiniteCategory::ordinal(1), std::min(M, 3), 3);
    r.check("[1]: free on its core", rep.iso_free && rep.core_matches);
}

inline void ndc(const SuiteOptions&, VerificationReport& r) {
    std::vector<std::pair<std::string, SimplicialSet>> good = {
        {"Delta[2]", standard_simplex(2, 3)},
        {"Delta[1]xDelta[1]", product(standard_simplex(1, 3), standard_simplex(1, 3)).set},
        {"circle", circle(3)},
        {"B(Z/2)", classifying_space(FiniteGroup::cyclic(2), 3)}};
    for (const auto& [name, K] : good) {
        bool ndc = has_nondegenerate_core(K);
        auto ct = core_theta(K);
        r.check(name + ": free on its core iff nondegenerate core", ndc == ct.bijective && ct.surjective);
    }
    auto D = standard_simplex_keyed(2, 3);
    std::vector<std::vector<Index>> cls(4);
    for (int q = 0; q <= 3; ++q)
        for (Index s = 0; s < D.set.size(q); ++s) {
            const auto& k = D.keys[static_cast<std::size_t>(q)][s];
            cls[static_cast<std::size_t>(q)].push_back(k.back() <= 1 ? D.find(q, std::vector<int>(k.size(), 0)) : s);
        }
    auto S = quotient(D.set, cls).set;
    auto ct = core_theta(S);
    r.check("collapsed edge: degenerate face, theta onto but not injective", !has_nondegenerate_core(S) && ct.surjective && !ct.bijective);
}

inline void nice_quotient(const SuiteOptions& o, VerificationReport& r) {
    const int M = std::min(o.M, 4);
    auto rep = cochain_action_quotient(FiniteGroup::cyclic(4), {0, 2}, M, 3);
    r.check("Z/4, kappa={0,2}: a(c) are automorphisms", rep.automorphisms);
    r.check("Z/4, kappa={0,2}: right action", rep.right_action);
    r.check("Z/4, kappa={0,2}: orbit set = B(pi/kappa) x Gamma_M", rep.iso_quotient);
    auto s3 = cochain_action_quotient(FiniteGroup::symmetric(3), {0, 3, 4}, std::min(M, 3), 2);
    r.check("S3, kappa=A3: right action a(c) a(c') = a(c' c)", s3.automorphisms && s3.right_action);
    r.check("S3, kappa=A3: orbit set = B(Z/2) x Gamma_M", s3.iso_quotient);
}

inline void coherence(const SuiteOptions& o, VerificationReport& r) {
    std::mt19937_64 rng(o.seed);
    r.check("constant 7 averages to 7", StabilizingFunction::constant(3, 7).average() == 7);
    auto f = StabilizingFunction::detect(2, [](const Tuple& k) { return Rational(k[0] == 0 ? 1 : 0); }, 4);
    r.check("indicator of k0 = 0 averages to 0", f.average() == 0);
    bool threw = false;
    try {
        StabilizingFunction::detect(1, [](const Tuple& k) { return Rational(k[0] % 2 ? -1 : 1); }, 8);
    } catch (const NotStabilizing&) {
        threw = true;
    }
    r.check("(-1)^k0 is rejected as not stabilizing", threw);
    for (int arity = 1; arity <= 3; ++arity) {
        std::size_t ok = 0, total = 0, normed = 0;
        std::string witness;
        for (int t = 0; t < 1000; ++t) {
            auto g = random_stabilizing(arity, t % 5, rng);
            ++total;
            bool good = true;
            for (int i = 0; i <= arity; ++i) good &= g.face_pullback(i).average() == g.average();
            if (abs_value(g.average()) <= g.sup_norm()) ++normed;
            if (good) ++ok;
            else if (witness.empty()) witness = "function " + std::to_string(t) + " threshold " + std::to_string(t % 5);
        }
        r.check("m_n d_i* = m_{n-1} on 1000 functions of arity " + std::to_string(arity), ok == total, witness);
        r.check("|m(f)| <= ||f|| on 1000 functions of arity " + std::to_string(arity), normed == total);
    }
}

inline void averaging_cochain(const SuiteOptions& o, VerificationReport& r) {
    std::mt19937_64 rng(o.seed);
    std::vector<std::pair<std::string, SimplicialSet>> sets = {{"Delta[1]", standard_simplex(1, 3)},
                                                               {"BZ/2", classifying_space(FiniteGroup::cyclic(2), 3)}};
    for (const auto& [name, K] : sets)
        for (int n = 0; n <= 2; ++n) {
            std::size_t map_ok = 0, norm_ok = 0, total = 0;
            for (int t = 0; t < 1000; ++t) {
                auto f = random_stable_cochain(K, n, t % 4, rng, t % 2 == 1);
                ++total;
                if (average_cochain(coboundary(K, f)) == trivial_coboundary(K, average_cochain(f))) ++map_ok;
                if (sup_norm(average_cochain(f)) <= sup_norm(f)) ++norm_ok;
            }
            RationalCochain g{n, {}};
            std::uniform_int_distribution<int> d(-5, 5);
            for (Index s = 0; s < K.size(n); ++s) g.values.push_back(Rational(d(rng), 3));
            std::string tag = name + " degree " + std::to_string(n);
            r.check(tag + ": m_* d* = d* m_* on 1000 cochains", map_ok == total);
            r.check(tag + ": ||m_* f|| <= ||f||", norm_ok == total);
            r.check(tag + ": m_* p* = id", average_cochain(pullback_to_unraveling(K, g)) == g);
        }
}

inline void cn(const SuiteOptions& o, VerificationReport& r) {
    const int bound = std::max(o.M, 1);
    for (auto policy : {ApexPolicy::minimal, ApexPolicy::uniform}) {
        UnravelingChains ch(policy);
        std::string pname = policy == ApexPolicy::minimal ? "minimal apex" : "uniform apex";
        for (int n = 0; n <= o.max_n; ++n) {
            bool boundary_ok = true, norm_ok = true;
            Rational largest = 0;
            std::string witness;
            auto ts = increasing_tuples(n + 1, bound);
            for (const auto& a : ts)
                for (const auto& b : ts) {
                    const auto& c = ch.cn(a, b);
                    if (prism_boundary(c) != ch.right_side(a, b) && boundary_ok) {
                        boundary_ok = false;
                        witness = "tau=" + detail::join(a) + " tau'=" + detail::join(b);
                    }
                    largest = std::max(largest, c.l1_norm());
                    norm_ok &= c.l1_norm() <= cn_norm_bound(n);
                }
            std::string tag = "c_" + std::to_string(n) + " (" + pname + ", entries < " + std::to_string(bound) + ")";
            r.check(tag + ": boundary condition", boundary_ok, witness);
            r.check(tag + ": l1 norm " + largest.str() + " <= B(" + std::to_string(n) + ") = " + cn_norm_bound(n).str(), norm_ok);
        }
    }
    UnravelingChains ch;
    r.check("c_0((3),(5)) has norm <= 2", ch.cn({3}, {5}).l1_norm() <= 2);
}

inline void kn(const SuiteOptions& o, VerificationReport& r) {
    const int bound = std::max(o.M, 1);
    std::vector<std::pair<std::string, SimplicialSet>> sets = {{"Delta[1]", standard_simplex(1, 4)},
                                                               {"BZ/2", classifying_space(FiniteGroup::cyclic(2), 4)}};
    for (const auto& [name, K] : sets) {
        UnravelingChains ch;
        for (int n = 0; n <= o.max_n; ++n) {
            bool ok = true, norms = true;
            std::string witness;
            auto ts = increasing_tuples(n + 1, bound);
            for (Index s = 0; s < K.size(n); ++s)
                for (const auto& a : ts)
                    for (const auto& b : ts) {
                        auto k = kn(K, ch, s, a, b);
                        norms &= k.l1_norm() <= ch.cn(a, b).l1_norm();
                        UnravelChain expect;
                        expect.add(UnravelKey{s, a}, 1);
                        expect.add(UnravelKey{s, b}, -1);
                        for (int i = 0; n > 0 && i <= n; ++i) {
                            Tuple fa = a, fb = b;
                            fa.erase(fa.begin() + i);
                            fb.erase(fb.begin() + i);
                            expect.add(kn(K, ch, K.face(n, i, s), fa, fb), i % 2 ? 1 : -1);
                        }
                        if (unravel_boundary(K, k) != expect && ok) {
                            ok = false;
                            witness = "sigma=" + ref(n, s) + " tau=" + detail::join(a) + " tau'=" + detail::join(b);
                        }
                    }
            std::string tag = name + " k_" + std::to_string(n);
            r.check(tag + ": special homotopy identity", ok, witness);
            r.check(tag + ": ||k_n|| <= ||c_n||", norms);
        }
    }
}

inline void main_homotopy(const SuiteOptions& o, VerificationReport& r) {
    std::mt19937_64 rng(o.seed);
    auto K = standard_simplex(1, 3);
    const int M = o.M;
    for (int n = 0; n <= o.max_n; ++n) {
        for (int t = 0; t < 6; ++t) {
            auto f = random_stable_cochain(K, n, 1 + t % 4, rng, t % 2 == 0);
            auto rep = check_main_homotopy(K, f, M);
            std::string tag = "Delta[1] degree " + std::to_string(n) + " cochain " + std::to_string(t);
            r.check(tag + ": id - p*m* = h d* + d* h at " + std::to_string(rep.points) + " points", rep.identity);
            r.check(tag + ": |h(d* f)| <= B(n) ||d* f||", rep.max_h_norm <= cn_norm_bound(n) * sup_norm(coboundary(K, f)));
        }
        RationalCochain g{n, {}};
        for (Index s = 0; s < K.size(n); ++s) g.values.push_back(Rational(static_cast<int>(s) - 2, 3));
        r.check("Delta[1] degree " + std::to_string(n) + ": pullback case", check_main_homotopy(K, pullback_to_unraveling(K, g), M).identity);
    }
}

inline void translation_cocycle(const SuiteOptions& o, VerificationReport& r) {
    for (const auto& [name, b] : bundle_cases(o)) {
        const auto& B = b.base();
        const auto& coeff = b.coefficients();
        bool ok = true;
        std::string witness;
        for (const auto& c : all_normalized(B, coeff, b.degree())) {
            if (!is_cocycle(B, b.local_system(), c)) continue;
            auto D = b.extract_D(b.translation(c));
            if (!(is_normalized(B, coeff, D) && is_cocycle(B, b.local_system(), D)) && ok) {
                ok = false;
                witness = name;
            }
        }
        r.check(name + ": D_f is a normalized cocycle for every translation", ok, witness);
    }
}

inline void cocycles_translations(const SuiteOptions& o, VerificationReport& r) {
    for (const auto& [name, b] : bundle_cases(o)) {
        const auto& B = b.base();
        const auto& coeff = b.coefficients();
        bool is_tr = true, recovers = true, low = true;
        for (const auto& c : all_normalized(B, coeff, b.degree())) {
            if (!is_cocycle(B, b.local_system(), c)) continue;
            auto f = b.translation(c);
            is_tr &= b.is_translation(f);
            recovers &= b.extract_D(f) == c;
            low &= identity_over_low_skeleton(b, f);
        }
        r.check(name + ": f(c) is a translation", is_tr);
        r.check(name + ": D(f(c)) = c", recovers);
        r.check(name + ": f(c) is the identity over sk_{n-1}", low);
        r.check(name + ": f(0) = id", b.translation(zero_cochain(B, coeff, b.degree())) == SimplicialMap::identity(b.total()));
    }
}

inline void translations_composition(const SuiteOptions& o, VerificationReport& r) {
    for (const auto& [name, b] : bundle_cases(o)) {
        const auto& B = b.base();
        const auto& coeff = b.coefficients();
        std::vector<GroupCochain> cs;
        for (const auto& c : all_normalized(B, coeff, b.degree()))
            if (is_cocycle(B, b.local_system(), c)) cs.push_back(c);
        bool additive = true, composes = true;
        for (const auto& c : cs)
            for (const auto& d : cs) {
                auto fg = compose(b.total(), b.total(), b.translation(c), b.translation(d));
                additive &= b.extract_D(fg) == add(coeff, c, d);
                composes &= b.translation(add(coeff, c, d)) == fg;
            }
        r.check(name + ": D(f g) = D(f) + D(g)", additive);
        r.check(name + ": f(c + d) = f(c) f(d)", composes);
    }
}

inline void translations_homotopy_suite(const SuiteOptions& o, VerificationReport& r) {
    for (const auto& [name, b] : bundle_cases(o)) {
        const auto& B = b.base();
        const auto& coeff = b.coefficients();
        auto zero = zero_cochain(B, coeff, b.degree());
        bool ok = true;
        std::string witness;
        for (Index e : nondegenerate(B, 1)) {
            GroupCochain prim = zero_cochain(B, coeff, b.degree() - 1);
            prim[e] = 1;
            auto c = coboundary(B, b.local_system(), prim);
            auto H = translations_homotopy(b, c, zero, prim, o.budget);
            if (!(H.ends && H.over_base && H.constant_low && H.system_pulled_back) && ok) {
                ok = false;
                witness = name + " edge " + ref(1, e);
            }
        }
        r.check(name + ": f(c + d*b) homotopic to f(c) over the base", ok, witness);
    }
}

inline void transitivity(const SuiteOptions& o, VerificationReport& r) {
    for (const auto& [name, b] : bundle_cases(o)) {
        std::size_t free_pairs = 0, found = 0, agree = 0, total = 0;
        std::string witness;
        for (int q = 0; q <= 2; ++q)
            for (Index t = 0; t < b.total().size(q); ++t)
                for (Index t2 = 0; t2 < b.total().size(q); ++t2) {
                    if (b.projection().at(q, t) != b.projection().at(q, t2)) continue;
                    auto res = transitivity_act(b, q, t, t2);
                    if (!res.free) continue;
                    ++free_pairs;
                    if (res.verified) ++found;
                    else if (witness.empty()) witness = ref(q, t) + " -> " + ref(q, t2);
                    if (q == 2 && ++total <= 64 && exists_acting_cochain(b, q, t, t2)) ++agree;
                }
        r.check(name + ": acting cochain found for all " + std::to_string(free_pairs) + " free pairs", found == free_pairs, witness);
        r.check(name + ": exhaustive oracle agrees", agree == std::min<std::size_t>(total, 64));
    }
}

inline void invariant_cochains(const SuiteOptions& o, VerificationReport& r) {
    auto G = FiniteGroup::symmetric(3);
    auto K = classifying_space(G, 3);
    std::vector<SimplicialMap> actions;
    std::vector<SimplicialHomotopy> homotopies;
    for (int g = 0; g < G.order(); ++g) {
        auto [a, H] = conjugation_homotopy(G, g, 3);
        actions.push_back(std::move(a));
        homotopies.push_back(std::move(H));
    }
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int t = 0; t < 5; ++t) {
        RationalCochain b{1, std::vector<Rational>(K.size(1), 0)};
        for (Index s : nondegenerate(K, 1)) b[s] = d(rng);
        auto c = trivial_coboundary(K, b);
        auto res = finite_group_average(K, actions, homotopies, c);
        std::string tag = "S3 conjugation, cocycle " + std::to_string(t);
        r.check(tag + ": gamma invariant", res.invariant);
        r.check(tag + ": gamma - c = d* kappa", res.cohomologous);
        r.check(tag + ": ||gamma|| <= ||c||", res.norm_bounded);
    }
    RationalCochain b{1, std::vector<Rational>(K.size(1), 0)};
    b[nondegenerate(K, 1)[0]] = 1;
    auto c = trivial_coboundary(K, b);
    r.check("trivial group leaves c unchanged", finite_group_average(K, {actions[0]}, {homotopies[0]}, c).gamma == c);
}

inline void seminorm_lp(const SuiteOptions& o, VerificationReport& r) {
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<int> d(-4, 4);
    auto random_cocycle = [&](const SimplicialSet& K, int n) {
        RationalCochain z{n, std::vector<Rational>(K.size(n), 0)};
        for (Index s : nondegenerate(K, n)) z[s] = Rational(d(rng), 1 + (d(rng) & 1));
        return z;
    };
    std::size_t dual_ok = 0, oracle_ok = 0, instances = 0, max_constraints = 0;
    std::string witness;
    struct Case {
        std::string name;
        SimplicialSet K;
        int n;
        CochainMode mode;
    };
    std::vector<Case> cases = {{"boundary Delta[2] full", boundary(2, 2), 1, CochainMode::full},
                               {"boundary Delta[2] normalized", boundary(2, 2), 1, CochainMode::normalized},
                               {"boundary Delta[3] normalized", boundary(3, 3), 2, CochainMode::normalized},
                               {"circle full", circle(2), 1, CochainMode::full}};
    for (const auto& cs : cases)
        for (int t = 0; t < 25; ++t) {
            auto z = random_cocycle(cs.K, cs.n);
            if (!is_cocycle_q(cs.K, z, cs.mode)) continue;
            auto cert = seminorm(cs.K, z, cs.mode);
            ++instances;
            if (verify_certificate(cs.K, z, cert)) ++dual_ok;
            else if (witness.empty()) witness = cs.name + " " + dump(to_json(z));
            max_constraints = std::max(max_constraints, 2 * cochain_index(cs.K, cs.n, cs.mode).size());
            if (seminorm_by_vertices(cs.K, z, cs.mode) == cert.value) ++oracle_ok;
        }
    r.check("primal = dual exactly on " + std::to_string(instances) + " instances", dual_ok == instances, witness);
    r.check("LP value = vertex-enumeration oracle on all " + std::to_string(instances) + " instances (at most " +
                std::to_string(max_constraints) + " constraints each)",
            oracle_ok == instances && max_constraints <= 12);
    auto C = circle(2);
    RationalCochain z{1, std::vector<Rational>(C.size(1), 0)};
    z[nondegenerate(C, 1)[0]] = 1;
    r.check("circle degree-1 class has semi-norm 1", seminorm(C, z).value == 1 && seminorm(C, z, CochainMode::normalized).value == 1);
    bool zero = true;
    for (int t = 0; t < 20; ++t) {
        auto S = boundary(3, 3);
        RationalCochain b = random_cocycle(S, 1);
        zero &= seminorm(S, trivial_coboundary(S, b), CochainMode::normalized).value == 0;
        zero &= seminorm(boundary(2, 2), trivial_coboundary(boundary(2, 2), random_cocycle(boundary(2, 2), 0))).value == 0;
    }
    r.check("coboundaries have semi-norm 0", zero);
}

inline void isometry(const SuiteOptions& o, VerificationReport& r) {
    auto S = boundary(2, 2);
    auto id = isometry_report(S, S, SimplicialMap::identity(S), 1);
    r.check("identity on boundary Delta[2] is an isometric isomorphism", id.isometric);
    auto P = product(S, standard_simplex(0, 2));
    r.check("K x Delta[0] -> K is an isometric isomorphism", isometry_report(P.set, S, P.first, 1).isometric);
    auto S3 = boundary(3, 3);
    auto P3 = product(S3, standard_simplex(0, 3));
    r.check("boundary Delta[3] x Delta[0] -> boundary Delta[3] in degree 2",
            isometry_report(P3.set, S3, P3.first, 2, CochainMode::normalized).isometric);
    auto C = circle(2);
    ExtensionProblem pb{&S, &C, nullptr, nullptr};
    bool nonincreasing = true;
    std::size_t maps = 0;
    search_extensions(pb, o.budget, [&](const SimplicialMap& f) {
        nonincreasing &= isometry_report(S, C, f, 1).nonincreasing;
        ++maps;
        return true;
    });
    ExtensionProblem pb2{&C, &S, nullptr, nullptr};
    search_extensions(pb2, o.budget, [&](const SimplicialMap& f) {
        nonincreasing &= isometry_report(C, S, f, 1).nonincreasing;
        ++maps;
        return true;
    });
    for (int M = 2; M <= std::min(o.M, 5); ++M) {
        auto U = unravel(C, M);
        nonincreasing &= isometry_report(U.set, forget(C), U.projection, 1).nonincreasing;
        ++maps;
    }
    r.check("induced maps never increase semi-norms (" + std::to_string(maps) + " maps)", nonincreasing);
}

}  // namespace suites

using SuiteFn = std::function<void(const SuiteOptions&, VerificationReport&)>;

/// Lemma suites first, in the order `verify --all` runs them, then supporting suites.
inline const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
    static const std::vector<std::pair<std::string, SuiteFn>> table = {
        {"ez", suites::ez},
        {"cocycle-hom", suites::cocycle_hom},
        {"f-group", suites::f_group},
        {"milnor-space", suites::milnor},
        {"segal-space", suites::segal},
        {"ndc", suites::ndc},
        {"coherence", suites::coherence},
        {"averaging-cochain", suites::averaging_cochain},
        {"main-homotopy", suites::main_homotopy},
        {"translation-cocycle", suites::translation_cocycle},
        {"cocycles-translations", suites::cocycles_translations},
        {"translations-composition", suites::translations_composition},
        {"translations-homotopy", suites::translations_homotopy_suite},
        {"transitivity-bundle", suites::transitivity},
        {"invariant-cochains", suites::invariant_cochains},
        {"nice-quotient", suites::nice_quotient},
        {"em", suites::em_facts},
        {"kan", suites::kan},
        {"postnikov", suites::postnikov},
        {"cn", suites::cn},
        {"kn", suites::kn},
        {"seminorm-lp", suites::seminorm_lp},
        {"isometry", suites::isometry},
    };
    return table;
}

inline constexpr std::size_t lemma_suite_count = 16;

inline VerificationReport run_suite(const std::string& id, const SuiteOptions& o) {
    for (const auto& [name, fn] : suite_table())
        if (name == id) {
            VerificationReport r;
            r.suite = id;
            r.params = {{"cap", o.cap}, {"M", o.M}, {"max_n", o.max_n}, {"budget", o.budget}, {"seed", o.seed}};
            if (o.input) r.params["input"] = o.input_name;
            auto start = std::chrono::steady_clock::now();
            r.guarded(id, [&] { fn(o, r); });
            r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            return r;
        }
    throw InvalidArgument("unknown suite " + id);
}

}  // namespace simpcoh
