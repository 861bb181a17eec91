#include <catch2/catch_amalgamated.hpp>

#include "simpcoh/eilenberg_maclane.hpp"
#include "simpcoh/postnikov.hpp"

using namespace simpcoh;

TEST_CASE("Kan condition") {
    REQUIRE(kan_check(standard_simplex(0, 3), 2).is_kan());
    for (int order = 1; order <= 4; ++order) REQUIRE(kan_check(classifying_space(FiniteGroup::cyclic(order), 4), 3).is_kan());
    REQUIRE(kan_check(classifying_space(FiniteGroup::cyclic_product({2, 2}), 4), 3).is_kan());
    REQUIRE(kan_check(classifying_space(FiniteGroup::symmetric(3), 3), 2).is_kan());

    auto D1 = standard_simplex_keyed(1, 3);
    auto rep = kan_check(D1.set, 2);
    REQUIRE(rep.status == SearchStatus::found);
    bool outer_horn = false;
    for (const auto& w : rep.unfillable)
        if (w.n == 2 && w.k == 0 && D1.keys[1][w.faces[2]] == std::vector<int>{0, 1} &&
            D1.keys[1][w.faces[1]] == std::vector<int>{0, 0})
            outer_horn = true;
    REQUIRE(outer_horn);
    REQUIRE_FALSE(kan_check(circle(3), 2).is_kan());
    REQUIRE_THROWS_AS(kan_check(standard_simplex(0, 2), 2), CapExceeded);
    REQUIRE(kan_check(D1.set, 2, 3).status == SearchStatus::undecided);
}

TEST_CASE("Eilenberg-MacLane sets are Kan") {
    REQUIRE(kan_check(EMModel(FiniteGroup::cyclic(2), 2, 4).set(), 3).is_kan());
    REQUIRE(kan_check(EMModel(FiniteGroup::cyclic(3), 1, 4).set(), 3).is_kan());
    REQUIRE(kan_check(EMModel(FiniteGroup::symmetric(3), 1, 3).set(), 2).is_kan());
}

TEST_CASE("homotopy of simplices") {
    auto B = classifying_keyed(FiniteGroup::cyclic(2), 3);
    Index e = B.find(1, NerveKey{0, {0}}), g = B.find(1, NerveKey{0, {1}});
    auto same = homotopic_simplices(B.set, 1, g, g);
    REQUIRE(same.status == SearchStatus::found);
    REQUIRE(homotopic_simplices(B.set, 1, e, g).status == SearchStatus::none);
    REQUIRE(homotopic_simplices(B.set, 0, 0, 0).status == SearchStatus::found);

    // Fiberwise over the identity reproduces the plain answer.
    auto id = SimplicialMap::identity(B.set);
    REQUIRE(homotopic_simplices(B.set, 1, g, g, default_budget, &id).status == SearchStatus::found);
    REQUIRE(homotopic_simplices(B.set, 1, e, g, default_budget, &id).status == SearchStatus::none);

    REQUIRE_THROWS_AS(homotopic_simplices_checked(standard_simplex(1, 3), 0, 0, 1), InvalidArgument);
    REQUIRE_THROWS_AS(homotopic_simplices(B.set, 3, 0, 0), CapExceeded);
}

namespace {

// The groupoid with two uniquely isomorphic objects: arrows id0, id1, a : 0 -> 1, b : 1 -> 0.
FiniteCategory chaotic_groupoid() {
    return FiniteCategory(2, {{0, 0}, {1, 1}, {0, 1}, {1, 0}},
                          {0, -1, 2, -1, -1, 1, -1, 3, -1, 2, -1, 0, 3, -1, 1, -1}, {0, 1});
}

}  // namespace

TEST_CASE("homotopy is an equivalence relation") {
    auto K = nerve(chaotic_groupoid(), 3);
    REQUIRE(kan_check(K, 2).is_kan());
    for (int q = 0; q <= 1; ++q) {
        const std::size_t n = K.size(q);
        std::vector<char> rel(n * n);
        for (Index a = 0; a < n; ++a)
            for (Index b = 0; b < n; ++b) rel[a * n + b] = homotopic_simplices(K, q, a, b).status == SearchStatus::found;
        for (Index a = 0; a < n; ++a) {
            REQUIRE(rel[a * n + a]);
            for (Index b = 0; b < n; ++b) {
                REQUIRE(rel[a * n + b] == rel[b * n + a]);
                for (Index c = 0; c < n; ++c)
                    if (rel[a * n + b] && rel[b * n + c]) REQUIRE(rel[a * n + c]);
            }
        }
    }
    // The two vertices are homotopic through the arrow a.
    REQUIRE(homotopic_simplices(K, 0, 0, 1).status == SearchStatus::found);
    auto BZ2 = classifying_space(FiniteGroup::cyclic(2), 3);
    for (Index a = 0; a < BZ2.size(1); ++a)
        for (Index b = 0; b < BZ2.size(1); ++b)
            REQUIRE((homotopic_simplices(BZ2, 1, a, b).status == SearchStatus::found) == (a == b));
}

TEST_CASE("minimality") {
    for (int order = 1; order <= 3; ++order) REQUIRE(is_minimal(classifying_space(FiniteGroup::cyclic(order), 3), 2).is_minimal());
    REQUIRE(is_minimal(EMModel(FiniteGroup::cyclic(2), 2, 3).set(), 2).is_minimal());
    REQUIRE(is_minimal(standard_simplex(0, 3), 2).is_minimal());
    // The nerve of the groupoid with two isomorphic objects is Kan but not minimal:
    // its two vertices are homotopic.
    auto K = nerve(chaotic_groupoid(), 3);
    auto rep = is_minimal(K, 1);
    REQUIRE(rep.status == SearchStatus::found);
    REQUIRE(rep.witness->first == Simplex{0, 0});
}

TEST_CASE("Postnikov quotients") {
    auto B = classifying_space(FiniteGroup::cyclic(2), 4);
    auto Q1 = postnikov_quotient(B, 1);
    for (int q = 0; q <= 4; ++q) REQUIRE(Q1.set.size(q) == B.size(q));
    auto Q0 = postnikov_quotient(B, 0);
    for (int q = 0; q <= 4; ++q) REQUIRE(Q0.set.size(q) == 1);

    auto rep = check_postnikov(B, 3);
    REQUIRE(rep.compatible);
    REQUIRE(rep.skeleton_bijective);
    REQUIRE(rep.tower_laws);
    REQUIRE(rep.singletons_low);

    EMModel em(FiniteGroup::cyclic(2), 2, 4);
    auto rep2 = check_postnikov(em.set(), 3);
    REQUIRE(rep2.compatible);
    REQUIRE(rep2.skeleton_bijective);
    REQUIRE(rep2.tower_laws);
    REQUIRE(rep2.singletons_low);
    // K(Z/2,2)(1) is a point; K(Z/2,2)(2) = K(Z/2,2) since cocycles are determined by 2-faces.
    REQUIRE(postnikov_quotient(em.set(), 1).set.size(3) == 1);
    REQUIRE(postnikov_quotient(em.set(), 2).set.size(3) == 8);

    auto P = product(standard_simplex(1, 3), circle(3)).set;
    auto rep3 = check_postnikov(P, 2);
    REQUIRE(rep3.compatible);
    REQUIRE(rep3.skeleton_bijective);
    REQUIRE(rep3.tower_laws);
}

TEST_CASE("fundamental group") {
    auto G = FiniteGroup::cyclic(2);
    auto B = classifying_keyed(G, 3);
    auto pi = fundamental_group(B.set);
    REQUIRE(pi.group.order() == 2);
    REQUIRE(pi1_of_classifying_matches(G, pi));
    Index gg = B.find(2, NerveKey{0, {1, 1}});
    REQUIRE(pi.class_of_edge[B.set.face(2, 1, gg)] == pi.group.unit());
    REQUIRE(f_group_check(B.set, pi));

    REQUIRE(fundamental_group(standard_simplex(0, 3)).group.order() == 1);

    for (const auto& H : {FiniteGroup::cyclic(3), FiniteGroup::cyclic(4), FiniteGroup::cyclic_product({2, 2}),
                          FiniteGroup::symmetric(3)}) {
        auto BH = classifying_space(H, 3);
        auto p = fundamental_group(BH);
        REQUIRE(pi1_of_classifying_matches(H, p));
        REQUIRE(f_group_check(BH, p));
    }
    EMModel em(FiniteGroup::cyclic(3), 2, 3);
    REQUIRE(fundamental_group(em.set()).group.order() == 1);
    REQUIRE_THROWS_AS(fundamental_group(standard_simplex(1, 3)), InvalidArgument);
    REQUIRE_THROWS_AS(fundamental_group(circle(3)), InvalidArgument);
}
