#include <catch2/catch_amalgamated.hpp>

#include "simpcoh/classifying.hpp"

using namespace simpcoh;

TEST_CASE("groups validate their tables") {
    auto S3 = FiniteGroup::symmetric(3);
    REQUIRE(S3.order() == 6);
    REQUIRE_FALSE(S3.is_abelian());
    auto V = FiniteGroup::cyclic_product({2, 2});
    REQUIRE(V.order() == 4);
    REQUIRE(V.is_abelian());
    REQUIRE(automorphisms(V).size() == 6);
    REQUIRE(automorphisms(FiniteGroup::cyclic(4)).size() == 2);
    REQUIRE_THROWS_AS(FiniteGroup(2, {0, 1, 1, 1}), LawViolation);
    auto q = quotient_group(FiniteGroup::cyclic(4), {0, 2});
    REQUIRE(q.group.order() == 2);
    REQUIRE(is_homomorphism(FiniteGroup::cyclic(4), q.group, q.projection));
    REQUIRE(is_automorphism(FiniteGroup::cyclic(4), {0, 3, 2, 1}));
}

TEST_CASE("nerve of a group") {
    auto B = classifying_keyed(FiniteGroup::cyclic(3), 3);
    REQUIRE(B.set.size(2) == 9);
    REQUIRE(B.set.size(3) == 27);
    // d1 (g, h) = g h
    auto G = FiniteGroup::cyclic(3);
    for (int g = 0; g < 3; ++g)
        for (int h = 0; h < 3; ++h) {
            Index s = B.find(2, NerveKey{0, {g, h}});
            REQUIRE(B.keys[1][B.set.face(2, 1, s)].arrows == std::vector<int>{G.op(g, h)});
            REQUIRE(B.keys[1][B.set.face(2, 0, s)].arrows == std::vector<int>{h});
            REQUIRE(B.keys[1][B.set.face(2, 2, s)].arrows == std::vector<int>{g});
        }
    REQUIRE(ez_unique(B.set, 3));
}

TEST_CASE("nerve of an ordinal is the standard simplex") {
    for (int n = 0; n <= 3; ++n) {
        auto N = nerve(FiniteCategory::ordinal(n), 3);
        auto D = standard_simplex(n, 3);
        for (int q = 0; q <= 3; ++q) REQUIRE(N.size(q) == D.size(q));
    }
}

TEST_CASE("non-associative category is rejected") {
    // Two objects, arrows: id0, id1, f: 0->1, g: 0->1; make id0 then f = g.
    std::vector<FiniteCategory::Arrow> arrows{{0, 0}, {1, 1}, {0, 1}, {0, 1}};
    std::vector<int> then(16, -1);
    auto set = [&](int a, int b, int c) { then[static_cast<std::size_t>(a * 4 + b)] = c; };
    set(0, 0, 0);
    set(1, 1, 1);
    set(0, 2, 3);
    set(0, 3, 3);
    set(2, 1, 2);
    set(3, 1, 3);
    REQUIRE_THROWS_AS(FiniteCategory(2, arrows, then, {0, 1}), LawViolation);
}

TEST_CASE("ordered complexes give both models") {
    OrderedComplex S(4, {{0, 1, 2}, {2, 3}, {1, 3}});
    REQUIRE(ordered_models_agree(S, 3));
    auto D = ordered_delta(S, 3);
    REQUIRE(D.set.size(0) == 4);
    REQUIRE(D.set.size(1) == 5);
    REQUIRE(D.set.size(2) == 1);
    REQUIRE_THROWS_AS(OrderedComplex(3, {{0, 1, 2}, {2, 1}}), LawViolation);
}

TEST_CASE("Milnor model matches B(pi) x Gamma") {
    for (int order = 1; order <= 3; ++order)
        for (int M = 1; M <= 4; ++M) {
            auto G = FiniteGroup::cyclic(order);
            auto mil = milnor_space(G, M, 3);
            for (int n = 0; n <= 3; ++n) REQUIRE(static_cast<long long>(mil.set.size(n)) == milnor_count(order, M, n));
            REQUIRE(bar_iso_check(G, M, 3));
        }
    REQUIRE(bar_iso_check(FiniteGroup::symmetric(3), 3, 2));
}

TEST_CASE("Segal construction") {
    for (int order = 1; order <= 3; ++order)
        for (int M = 1; M <= 4; ++M) {
            auto rep = segal_check(FiniteCategory::from_group(FiniteGroup::cyclic(order)), M, 3);
            REQUIRE(rep.iso_free);
            REQUIRE(rep.core_matches);
            REQUIRE(rep.counts == rep.predicted);
        }
    auto rep = segal_check(FiniteCategory::ordinal(1), 3, 2);
    REQUIRE(rep.iso_free);
}

TEST_CASE("0-cochains act and the orbit set is the quotient model") {
    auto G = FiniteGroup::cyclic(4);
    auto rep = cochain_action_quotient(G, {0, 2}, 4, 3);
    REQUIRE(rep.automorphisms);
    REQUIRE(rep.right_action);
    REQUIRE(rep.iso_quotient);
    REQUIRE(rep.orbit_counts[2] == static_cast<std::size_t>(milnor_count(2, 4, 2)));
    auto S3 = FiniteGroup::symmetric(3);
    // A3 = {0, 3, 4} in lexicographic permutation order.
    auto rep2 = cochain_action_quotient(S3, {0, 3, 4}, 3, 2);
    REQUIRE(rep2.iso_quotient);
}
