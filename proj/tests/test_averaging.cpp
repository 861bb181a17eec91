#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "simpcoh/averaging.hpp"

using namespace simpcoh;

namespace {

RationalCochain random_cochain(const SimplicialSet& K, int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-4, 4);
    RationalCochain c{n, {}};
    for (Index s = 0; s < K.size(n); ++s) c.values.push_back(is_degenerate(K, n, s) ? Rational(0) : Rational(d(rng), 1 + (d(rng) & 1)));
    return c;
}

RationalCochain minus(RationalCochain a, const RationalCochain& b) {
    for (Index s = 0; s < a.values.size(); ++s) a[s] -= b[s];
    return a;
}

}  // namespace

TEST_CASE("prism homotopies give cochain homotopies", "[averaging]") {
    auto G = FiniteGroup::symmetric(3);
    std::mt19937_64 rng(2);
    for (int g = 0; g < G.order(); ++g) {
        auto [a, H] = conjugation_homotopy(G, g, 3);
        auto K = classifying_space(G, 3);
        CHECK(homotopy_end(K, H, 0) == SimplicialMap::identity(K));
        CHECK(homotopy_end(K, H, 1) == a);
        for (int n = 1; n <= 2; ++n) {
            auto c = random_cochain(K, n, rng);
            auto lhs = minus(pullback(K, a, c), c);
            auto rhs = homotopy_cochain(K, H, trivial_coboundary(K, c));
            auto dk = trivial_coboundary(K, homotopy_cochain(K, H, c));
            for (Index s = 0; s < rhs.values.size(); ++s) rhs[s] += dk[s];
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("finite group averages of cocycles", "[averaging]") {
    auto G = FiniteGroup::symmetric(3);
    auto K = classifying_space(G, 3);
    std::vector<SimplicialMap> actions;
    std::vector<SimplicialHomotopy> homotopies;
    for (int g = 0; g < G.order(); ++g) {
        auto [a, H] = conjugation_homotopy(G, g, 3);
        actions.push_back(std::move(a));
        homotopies.push_back(std::move(H));
    }
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 5; ++trial) {
        auto c = trivial_coboundary(K, random_cochain(K, 1, rng));
        auto r = finite_group_average(K, actions, homotopies, c);
        CHECK(r.invariant);
        CHECK(r.cohomologous);
        CHECK(r.norm_bounded);
    }
    // The trivial group leaves c alone.
    auto c = trivial_coboundary(K, random_cochain(K, 1, rng));
    auto [a0, H0] = conjugation_homotopy(G, G.unit(), 3);
    auto r = finite_group_average(K, {a0}, {H0}, c);
    CHECK(r.gamma == c);
    CHECK(sup_norm(r.kappa) == 0);
    CHECK_THROWS_AS(finite_group_average(K, actions, homotopies, random_cochain(K, 1, rng)), InvalidArgument);
    std::swap(homotopies[1], homotopies[2]);
    CHECK_THROWS_AS(finite_group_average(K, actions, homotopies, c), InvalidArgument);
}

TEST_CASE("uniform mean over a swap", "[averaging]") {
    auto P = standard_simplex(0, 2);
    auto K = disjoint_union(P, P);
    REQUIRE(K.size(0) == 2);
    SimplicialMap::Maps swap;
    for (int q = 0; q <= 2; ++q) swap.push_back({1, 0});
    std::vector<SimplicialMap> actions{SimplicialMap::identity(K), SimplicialMap(K, K, swap)};
    RationalCochain c{0, {Rational(3), Rational(0)}};
    auto gamma = finite_group_mean(K, actions, c);
    CHECK(gamma[0] == Rational(3, 2));
    CHECK(gamma[1] == Rational(3, 2));
    CHECK(sup_norm(gamma) <= sup_norm(c));
    SimplicialMap::Maps collapse;
    for (int q = 0; q <= 2; ++q) collapse.push_back({0, 0});
    CHECK_THROWS_AS(finite_group_mean(K, {SimplicialMap(K, K, collapse)}, c), InvalidArgument);
}
