#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "simpcoh/generate.hpp"
#include "simpcoh/serialize.hpp"

using namespace simpcoh;

namespace {

std::size_t count_nondegenerate(const SimplicialSet& K, int q) { return nondegenerate(K, q).size(); }

}  // namespace

TEST_CASE("monotone maps factor as mono after epi") {
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; n <= 4; ++n)
            for (auto& f : enumerate_monotone(m, n)) {
                auto [epi, mono] = epi_mono_factor(f);
                REQUIRE(epi.is_surjective());
                REQUIRE(mono.is_injective());
                REQUIRE(compose(mono, epi) == f);
            }
    REQUIRE(enumerate_monotone(2, 3).size() == static_cast<std::size_t>(binomial(6, 3)));
    REQUIRE_THROWS_AS(MonotoneMap(2, {1, 0}), InvalidArgument);
    REQUIRE_THROWS_AS(compose(MonotoneMap::identity(2), MonotoneMap::identity(1)), InvalidArgument);
}

TEST_CASE("structure maps on Delta[n] are precomposition") {
    // Independent oracle: a simplex of Delta[n] is a monotone map and theta* is sigma o theta.
    for (int n = 0; n <= 3; ++n) {
        auto D = standard_simplex_keyed(n, 3);
        for (int q = 0; q <= 3; ++q)
            for (Index s = 0; s < D.set.size(q); ++s)
                for (int m = 0; m <= 3; ++m)
                    for (auto& theta : enumerate_monotone(m, q)) {
                        MonotoneMap sigma(n, D.keys[q][s]);
                        REQUIRE(structure_map(D.set, theta, s) == D.find(m, compose(sigma, theta).values()));
                    }
    }
}

TEST_CASE("structure maps are contravariant") {
    auto K = product(standard_simplex(1, 3), standard_simplex(2, 3)).set;
    for (int q = 0; q <= 3; ++q)
        for (Index s = 0; s < K.size(q); ++s)
            for (int m = 0; m <= 3; ++m)
                for (auto& theta : enumerate_monotone(m, q))
                    for (int l = 0; l <= 3; ++l)
                        for (auto& eta : enumerate_monotone(l, m))
                            REQUIRE(structure_map(K, compose(theta, eta), s) ==
                                    structure_map(K, eta, structure_map(K, theta, s)));
}

TEST_CASE("cardinalities of standard examples") {
    auto D1 = standard_simplex(1, 3);
    REQUIRE(D1.size(1) == 3);
    for (int n = 0; n <= 3; ++n) {
        auto D = standard_simplex(n, 4);
        for (int m = 0; m <= 4; ++m) REQUIRE(D.size(m) == static_cast<std::size_t>(binomial(m + n + 1, n)));
        auto C = core(D).set;
        for (int m = 0; m <= 4; ++m) REQUIRE(C.size(m) == static_cast<std::size_t>(binomial(n + 1, m + 1)));
    }
    auto B = boundary(2, 3);
    REQUIRE(count_nondegenerate(B, 0) + count_nondegenerate(B, 1) + count_nondegenerate(B, 2) == 6);
    auto H = horn(2, 1, 3);
    REQUIRE(count_nondegenerate(H, 0) + count_nondegenerate(H, 1) + count_nondegenerate(H, 2) == 5);
    auto P = product(standard_simplex(1, 3), standard_simplex(1, 3)).set;
    REQUIRE(P.size(2) == 16);
    REQUIRE(count_nondegenerate(P, 2) == 2);
    REQUIRE(count_nondegenerate(P, 3) == 0);
    auto S = circle(3);
    REQUIRE(S.size(0) == 1);
    REQUIRE(count_nondegenerate(S, 1) == 1);
}

TEST_CASE("Eilenberg-Zilber decomposition is unique") {
    REQUIRE(ez_unique(standard_simplex(2, 4), 4));
    REQUIRE(ez_unique(product(standard_simplex(1, 3), standard_simplex(2, 3)).set, 3));
    REQUIRE(ez_unique(circle(4), 4));
    REQUIRE(ez_unique(horn(3, 0, 3), 3));
}

TEST_CASE("skeleta keep low nondegenerate simplices") {
    auto D = standard_simplex(3, 3);
    auto sk = skeleton(D, 1);
    REQUIRE(count_nondegenerate(sk.set, 1) == 6);
    REQUIRE(count_nondegenerate(sk.set, 2) == 0);
    REQUIRE(sk.inclusion.is_injective());
}

TEST_CASE("free simplicial set on the core recovers a set with nondegenerate core") {
    for (auto K : {standard_simplex(2, 3), product(standard_simplex(1, 3), standard_simplex(1, 3)).set}) {
        REQUIRE(has_nondegenerate_core(K));
        auto ct = core_theta(K);
        REQUIRE(ct.bijective);
    }
    REQUIRE(core_theta(circle(3)).bijective);
    // Delta[2] with the edge 01 collapsed: a nondegenerate simplex with a degenerate face.
    auto D = standard_simplex_keyed(2, 3);
    std::vector<std::vector<Index>> cls(4);
    for (int q = 0; q <= 3; ++q)
        for (Index s = 0; s < D.set.size(q); ++s) {
            const auto& k = D.keys[q][s];
            cls[q].push_back(k.back() <= 1 ? D.find(q, std::vector<int>(k.size(), 0)) : s);
        }
    auto S = quotient(D.set, cls).set;
    REQUIRE_FALSE(has_nondegenerate_core(S));
    auto ct = core_theta(S);
    REQUIRE(ct.surjective);
    REQUIRE_FALSE(ct.bijective);
}

TEST_CASE("free simplicial set is left adjoint to forget on Delta-sets") {
    auto G = gamma_truncated(4, 3).set;
    auto F = free_simplicial(G, 3);
    // Every simplex of the free set is uniquely a degeneracy of a simplex of G.
    REQUIRE(ez_unique(F.set, 3));
    for (int q = 0; q <= 3; ++q) REQUIRE(nondegenerate(F.set, q).size() == G.size(q));
}

TEST_CASE("invalid tables are rejected with the failing identity") {
    auto D = standard_simplex(1, 2);
    auto faces = D.face_tables();
    std::swap(faces[2][0], faces[2][2]);
    try {
        SimplicialSet bad(Kind::simplicial, 2, D.cardinalities(), faces, D.degeneracy_tables());
        FAIL("accepted bad faces");
    } catch (const LawViolation& e) {
        REQUIRE(std::string(e.what()).find("fails") != std::string::npos);
    }
    auto short_faces = D.face_tables();
    short_faces[1].pop_back();
    REQUIRE_THROWS_AS(SimplicialSet(Kind::simplicial, 2, D.cardinalities(), short_faces, D.degeneracy_tables()),
                      ArityMismatch);
    REQUIRE_THROWS_AS(structure_map(D, MonotoneMap::constant(3, 0, 0), 0), CapExceeded);
}

TEST_CASE("serialization round trips byte for byte") {
    std::mt19937 rng(7);
    std::vector<SimplicialSet> sets{standard_simplex(2, 3), horn(2, 0, 3), forget(standard_simplex(1, 2)), circle(3)};
    for (const auto& K : sets) {
        std::string text = dump(to_json(K));
        auto L = set_from_json(parse_json(text));
        REQUIRE(L == K);
        REQUIRE(dump(to_json(L)) == text);
    }
    REQUIRE_THROWS_AS(set_from_json(parse_json("{\"kind\":\"cube\"}")), ParseError);
}

TEST_CASE("maps validate and compose") {
    auto P = product(standard_simplex(1, 2), standard_simplex(1, 2));
    auto id = SimplicialMap::identity(P.set);
    auto f = compose(P.set, standard_simplex(1, 2), P.first, id);
    REQUIRE(f == P.first);
    auto maps = P.first.maps();
    maps[1][0] = 2;
    REQUIRE_THROWS_AS(SimplicialMap(P.set, standard_simplex(1, 2), maps), LawViolation);
}
