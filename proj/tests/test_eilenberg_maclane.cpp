#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "simpcoh/eilenberg_maclane.hpp"
#include "simpcoh/extension.hpp"

using namespace simpcoh;

namespace {

// Oracle: every normalized cochain of Delta[q], filtered by the cocycle condition.
std::size_t filtered_count(const FiniteGroup& G, int n, int q) {
    EMModel shape(G, n, q);
    auto subs = shape.nondegenerate_simplices(q);
    std::size_t total = 1, count = 0;
    for (std::size_t i = 0; i < subs.size(); ++i) total *= static_cast<std::size_t>(G.order());
    for (std::size_t code = 0; code < total; ++code) {
        std::vector<int> u;
        std::size_t c = code;
        for (std::size_t i = 0; i < subs.size(); ++i, c /= static_cast<std::size_t>(G.order()))
            u.push_back(static_cast<int>(c % static_cast<std::size_t>(G.order())));
        if (shape.is_cocycle_table(q, u)) ++count;
    }
    return count;
}

bool is_homomorphism_naive(const FiniteGroup& G, const std::vector<int>& c) {
    for (int a = 0; a < G.order(); ++a)
        for (int b = 0; b < G.order(); ++b)
            if (c[static_cast<std::size_t>(G.op(a, b))] != G.op(c[static_cast<std::size_t>(a)], c[static_cast<std::size_t>(b)])) return false;
    return true;
}

}  // namespace

TEST_CASE("sizes of K(Z/2, 2)") {
    EMModel K(FiniteGroup::cyclic(2), 2, 4);
    REQUIRE(K.set().size(0) == 1);
    REQUIRE(K.set().size(1) == 1);
    REQUIRE(K.set().size(2) == 2);
    REQUIRE(K.set().size(3) == 8);
    REQUIRE(K.set().size(4) == 64);
    REQUIRE(K.element_of(K.simplex_of(1)) == 1);
    REQUIRE_THROWS_AS(EMModel(FiniteGroup::symmetric(3), 2, 3), InvalidArgument);
}

TEST_CASE("kernel enumeration agrees with filtering") {
    for (int order : {2, 3, 4})
        for (int n = 1; n <= 2; ++n) {
            auto G = FiniteGroup::cyclic(order);
            EMModel K(G, n, 3);
            for (int q = 0; q <= 3; ++q) {
                REQUIRE(K.set().size(q) == filtered_count(G, n, q));
                for (Index s = 0; s < K.set().size(q); ++s) REQUIRE(K.is_cocycle_table(q, K.cocycle(q, s)));
            }
        }
    auto S3 = FiniteGroup::symmetric(3);
    EMModel K(S3, 1, 3);
    for (int q = 0; q <= 3; ++q) REQUIRE(K.set().size(q) == filtered_count(S3, 1, q));
    REQUIRE(K.set().size(2) == 36);
}

TEST_CASE("below the degree only the zero simplex exists") {
    for (int n = 1; n <= 3; ++n) {
        EMModel K(FiniteGroup::cyclic(3), n, n + 1);
        for (int q = 0; q < n; ++q) {
            REQUIRE(K.set().size(q) == 1);
            REQUIRE(K.zero(q) == 0);
        }
    }
}

TEST_CASE("zero is the only degenerate n-simplex") {
    for (int n = 1; n <= 3; ++n) {
        EMModel K(FiniteGroup::cyclic(4), n, n + 1);
        for (Index s = 0; s < K.set().size(n); ++s)
            REQUIRE(is_degenerate(K.set(), n, s) == (s == K.zero(n)));
        REQUIRE(ez_unique(K.set(), n + 1));
    }
}

TEST_CASE("addition commutes with structure maps") {
    for (int order : {2, 3, 4}) {
        EMModel K(FiniteGroup::cyclic(order), 2, 3);
        const auto& S = K.set();
        for (int q = 0; q <= 3; ++q)
            for (Index a = 0; a < S.size(q); ++a)
                for (Index b = 0; b < S.size(q); ++b)
                    for (int m = 0; m <= 3; ++m)
                        for (const auto& th : enumerate_monotone(m, q))
                            REQUIRE(structure_map(S, th, K.add(q, a, b)) ==
                                    K.add(m, structure_map(S, th, a), structure_map(S, th, b)));
    }
}

TEST_CASE("cochains of K(pi, n) from self maps are cocycles exactly for homomorphisms") {
    for (int order : {2, 3, 4}) {
        auto G = FiniteGroup::cyclic(order);
        std::vector<int> c(static_cast<std::size_t>(order), 0);
        // All maps with c(0) = 0.
        std::size_t total = 1;
        for (int i = 1; i < order; ++i) total *= static_cast<std::size_t>(order);
        for (int n = 1; n <= 2; ++n)
            for (std::size_t code = 0; code < total; ++code) {
                std::size_t r = code;
                for (int i = 1; i < order; ++i, r /= static_cast<std::size_t>(order))
                    c[static_cast<std::size_t>(i)] = static_cast<int>(r % static_cast<std::size_t>(order));
                REQUIRE(is_cocycle_on_em(G, n, c) == is_homomorphism_naive(G, c));
            }
    }
    auto Z4 = FiniteGroup::cyclic(4);
    REQUIRE(is_cocycle_on_em(Z4, 2, {0, 3, 2, 1}));
    REQUIRE(is_cocycle_on_em(FiniteGroup::cyclic(2), 2, {0, 0}));
    REQUIRE_THROWS_AS(is_cocycle_on_em(Z4, 2, {1, 0, 2, 3}), InvalidArgument);

    auto S3 = FiniteGroup::symmetric(3);
    std::vector<int> id = identity_table(6);
    REQUIRE(is_cocycle_on_em(S3, 1, id));
    int checked = 0;
    std::vector<int> f(6, 0);
    for (int code = 0; code < 7776; ++code) {
        int r = code;
        for (int i = 1; i < 6; ++i, r /= 6) f[static_cast<std::size_t>(i)] = r % 6;
        REQUIRE(is_cocycle_on_em(S3, 1, f) == is_homomorphism_naive(S3, f));
        ++checked;
    }
    REQUIRE(checked == 7776);
}

TEST_CASE("maps into K(Z/2, 2) from the boundary of Delta[3]") {
    auto G = FiniteGroup::cyclic(2);
    EMModel em(G, 2, 3);
    auto K = boundary(3, 3);
    GroupCoefficients coeff(G);
    auto L = LocalSystem<GroupCoefficients>::constant(K, coeff);
    auto nd = nondegenerate(K, 2);
    REQUIRE(nd.size() == 4);
    // Every normalized 2-cochain is a cocycle (no 3-simplices), so 16 of them.
    std::set<Table> seen;
    for (int code = 0; code < 16; ++code) {
        GroupCochain z = zero_cochain(K, coeff, 2);
        for (std::size_t i = 0; i < 4; ++i) z[nd[i]] = (code >> i) & 1;
        REQUIRE(is_cocycle(K, L, z));
        auto f = map_from_cocycle(K, z, em);
        REQUIRE(cocycle_of_map(K, f, em) == z);
        seen.insert(f.maps()[2]);
        // Uniqueness: the only extension with the prescribed values on 2-simplices.
        ExtensionProblem pb{&K, &em.set(), [&](int q, Index x) -> std::optional<Index> {
                                if (q == 2) return f.at(2, x);
                                return std::nullopt;
                            }, {}};
        std::size_t count = 0;
        auto r = search_extensions(pb, default_budget, [&](const SimplicialMap&) { return ++count < 5; });
        REQUIRE(r.status == SearchStatus::found);
        REQUIRE(count == 1);
    }
    REQUIRE(seen.size() == 16);
    // All maps K -> K(Z/2, 2) arise this way.
    std::size_t all = 0;
    search_extensions({&K, &em.set(), {}, {}}, default_budget, [&](const SimplicialMap&) { return ++all < 100; });
    REQUIRE(all == 16);
}

TEST_CASE("maps from a simplex correspond to group elements") {
    auto G = FiniteGroup::cyclic(3);
    EMModel em(G, 2, 3);
    auto D = standard_simplex_keyed(2, 3);
    GroupCoefficients coeff(G);
    for (int g = 0; g < 3; ++g) {
        GroupCochain z = zero_cochain(D.set, coeff, 2);
        z[D.find(2, {0, 1, 2})] = g;
        auto f = map_from_cocycle(D.set, z, em);
        REQUIRE(f.at(2, D.find(2, {0, 1, 2})) == em.simplex_of(g));
    }
    GroupCochain bad = zero_cochain(standard_simplex(3, 3), coeff, 2);
    bad[0] = 1;  // a degenerate 2-simplex
    REQUIRE_THROWS_AS(map_from_cocycle(standard_simplex(3, 3), bad, em), InvalidArgument);
}

TEST_CASE("induced maps between Eilenberg-MacLane sets") {
    auto Z2 = FiniteGroup::cyclic(2), Z4 = FiniteGroup::cyclic(4);
    EMModel k2(Z2, 2, 3), k4(Z4, 2, 3);
    auto id = induced_map_s(k4, k4, identity_table(4));
    REQUIRE(id == SimplicialMap::identity(k4.set()));
    auto red = induced_map_s(k4, k2, {0, 1, 0, 1});
    for (int q = 0; q <= 3; ++q) {
        std::set<Index> image(red.maps()[static_cast<std::size_t>(q)].begin(), red.maps()[static_cast<std::size_t>(q)].end());
        REQUIRE(image.size() == k2.set().size(q));
    }
    REQUIRE_FALSE(red.is_bijective(k2.set()));
    auto inc = induced_map_s(k2, k4, {0, 2});
    auto neg = induced_map_s(k4, k4, {0, 3, 2, 1});
    REQUIRE(neg.is_bijective(k4.set()));
    // s(h h') = s(h) s(h')
    REQUIRE(compose(k2.set(), k2.set(), red, compose(k2.set(), k4.set(), neg, inc)) ==
            induced_map_s(k2, k2, compose_tables({0, 1, 0, 1}, compose_tables({0, 3, 2, 1}, {0, 2}))));
    REQUIRE(compose(k4.set(), k4.set(), inc, red) == induced_map_s(k4, k4, {0, 2, 0, 2}));
    REQUIRE_THROWS_AS(induced_map_s(k4, k2, {0, 1, 1, 1}), InvalidArgument);
}
