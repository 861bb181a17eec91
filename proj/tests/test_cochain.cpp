#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "simpcoh/category.hpp"
#include "simpcoh/cochain.hpp"
#include "simpcoh/generate.hpp"

using namespace simpcoh;

namespace {

// Local system on B(pi) from a representation rho: edge g acts by rho(g).
template <class C>
LocalSystem<C> from_representation(const Tabulated<NerveKey>& B, C coeff, const std::vector<typename C::Automorphism>& rho) {
    std::vector<typename C::Automorphism> e;
    for (Index x = 0; x < B.set.size(1); ++x) e.push_back(rho[static_cast<std::size_t>(B.keys[1][x].arrows[0])]);
    return LocalSystem<C>(B.set, std::move(coeff), std::move(e));
}

GroupCochain random_group_cochain(const SimplicialSet& K, const FiniteGroup& G, int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> d(0, G.order() - 1);
    GroupCochain c{n, {}};
    for (Index s = 0; s < K.size(n); ++s) c.values.push_back(is_degenerate(K, n, s) ? G.unit() : d(rng));
    return c;
}

RationalCochain random_rational_cochain(const SimplicialSet& K, int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> d(-5, 5);
    RationalCochain c{n, {}};
    for (Index s = 0; s < K.size(n); ++s) c.values.push_back(rational(d(rng), 1 + (d(rng) + 5) % 3));
    return c;
}

}  // namespace

TEST_CASE("leading vertex and edge") {
    auto D = standard_simplex_keyed(3, 3);
    Index top = D.find(3, {0, 1, 2, 3});
    REQUIRE(D.keys[0][leading_vertex(D.set, 3, top)] == std::vector<int>{0});
    REQUIRE(D.keys[1][leading_edge(D.set, 3, top)] == std::vector<int>{0, 1});
    REQUIRE_THROWS_AS(leading_edge(D.set, 0, 0), InvalidArgument);

    auto B = classifying_keyed(FiniteGroup::cyclic(2), 3);
    for (int g = 0; g < 2; ++g)
        for (int h = 0; h < 2; ++h) {
            Index s = B.find(2, NerveKey{0, {g, h}});
            REQUIRE(B.keys[1][leading_edge(B.set, 2, s)].arrows == std::vector<int>{g});
        }
}

TEST_CASE("coboundary on an interval") {
    auto D = standard_simplex_keyed(1, 2);
    RationalCochain c{0, std::vector<Rational>(2)};
    c[D.find(0, {0})] = rational(2, 3);
    c[D.find(0, {1})] = rational(-5, 2);
    auto d = trivial_coboundary(D.set, c);
    REQUIRE(d[D.find(1, {0, 1})] == rational(-5, 2) - rational(2, 3));
    REQUIRE(d[D.find(1, {0, 0})] == 0);
    REQUIRE(trivial_coboundary(D.set, zero_cochain(D.set, RationalCoefficients{}, 0)) ==
            zero_cochain(D.set, RationalCoefficients{}, 1));
    REQUIRE_THROWS_AS(coboundary(D.set, LocalSystem<RationalCoefficients>::constant(D.set, {}),
                                 zero_cochain(D.set, RationalCoefficients{}, 2)),
                      CapExceeded);
}

TEST_CASE("coboundary squares to zero with trivial and twisted systems") {
    std::mt19937 rng(11);
    auto B3 = classifying_keyed(FiniteGroup::cyclic(3), 3);
    auto Z3 = GroupCoefficients(FiniteGroup::cyclic(3));
    auto L3 = LocalSystem<GroupCoefficients>::constant(B3.set, Z3);

    auto B2 = classifying_keyed(FiniteGroup::cyclic(2), 3);
    auto twisted = from_representation(B2, Z3, {{0, 1, 2}, {0, 2, 1}});
    auto sign = from_representation(B2, RationalCoefficients{}, {Rational(1), Rational(-1)});

    // S3 acting on Q by the sign; lexicographic permutations 012 021 102 120 201 210.
    auto BS3 = classifying_keyed(FiniteGroup::symmetric(3), 3);
    auto sgn = from_representation(BS3, RationalCoefficients{}, {1, -1, -1, 1, 1, -1});

    for (int trial = 0; trial < 5; ++trial)
        for (int n = 0; n <= 1; ++n) {
            auto c = random_group_cochain(B3.set, Z3.group, n, rng);
            auto dd = coboundary(B3.set, L3, coboundary(B3.set, L3, c));
            REQUIRE(dd == zero_cochain(B3.set, Z3, n + 2));

            auto t = random_group_cochain(B2.set, Z3.group, n, rng);
            auto d1 = coboundary(B2.set, twisted, t);
            REQUIRE(coboundary(B2.set, twisted, d1) == zero_cochain(B2.set, Z3, n + 2));
            REQUIRE(is_normalized(B2.set, Z3, d1));

            auto r = random_rational_cochain(B2.set, n, rng);
            REQUIRE(coboundary(B2.set, sign, coboundary(B2.set, sign, r)) ==
                    zero_cochain(B2.set, RationalCoefficients{}, n + 2));
            auto s = random_rational_cochain(BS3.set, n, rng);
            REQUIRE(coboundary(BS3.set, sgn, coboundary(BS3.set, sgn, s)) ==
                    zero_cochain(BS3.set, RationalCoefficients{}, n + 2));
        }
}

TEST_CASE("incompatible edge maps are rejected") {
    auto B2 = classifying_keyed(FiniteGroup::cyclic(2), 2);
    auto Z3 = GroupCoefficients(FiniteGroup::cyclic(3));
    // Edge 0 is degenerate and must act trivially.
    REQUIRE_THROWS_AS(from_representation(B2, Z3, {{0, 2, 1}, {0, 2, 1}}), LawViolation);
    // Z/3 does not act on Z/3 through the sign representation of Z/2 composed badly: 1 -> x2 on Z/4 is no automorphism.
    REQUIRE_THROWS_AS(from_representation(B2, GroupCoefficients(FiniteGroup::cyclic(4)), {{0, 1, 2, 3}, {0, 2, 0, 2}}),
                      LawViolation);
    // A non-homomorphism from Z/3 fails the 2-simplex condition.
    auto B3 = classifying_keyed(FiniteGroup::cyclic(3), 2);
    REQUIRE_THROWS_AS(from_representation(B3, RationalCoefficients{}, {Rational(1), Rational(2), Rational(2)}), LawViolation);
    REQUIRE_THROWS_AS(GroupCoefficients(FiniteGroup::symmetric(3)), InvalidArgument);
}

TEST_CASE("normalized cochains have normalized coboundaries") {
    std::mt19937 rng(5);
    auto K = product(standard_simplex(1, 3), standard_simplex(1, 3)).set;
    for (int n = 0; n <= 2; ++n) {
        auto c = random_rational_cochain(K, n, rng);
        for (Index s = 0; s < K.size(n); ++s)
            if (is_degenerate(K, n, s)) c[s] = 0;
        REQUIRE(is_normalized(K, RationalCoefficients{}, c));
        REQUIRE(is_normalized(K, RationalCoefficients{}, trivial_coboundary(K, c)));
    }
}

TEST_CASE("pullback commutes with coboundary") {
    std::mt19937 rng(3);
    auto P = product(standard_simplex(1, 3), standard_simplex(2, 3));
    auto c = random_rational_cochain(standard_simplex(2, 3), 1, rng);
    auto lhs = trivial_coboundary(P.set, pullback(P.set, P.second, c));
    auto rhs = pullback(P.set, P.second, trivial_coboundary(standard_simplex(2, 3), c));
    REQUIRE(lhs == rhs);
}

TEST_CASE("chains and norms") {
    auto D = standard_simplex(3, 3);
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> pick(0, 100), coef(-4, 4);
    for (int trial = 0; trial < 20; ++trial)
        for (int m = 1; m <= 3; ++m) {
            Chain x{m, {}};
            for (int k = 0; k < 5; ++k) x.terms.add(static_cast<Index>(pick(rng)) % D.size(m), coef(rng));
            REQUIRE(boundary(D, boundary(D, x)).terms.empty());
            REQUIRE(boundary(D, x).terms.l1_norm() <= (m + 1) * x.terms.l1_norm());
        }
    FormalSum<Index> s;
    s.add(0, 2);
    s.add(1, -3);
    REQUIRE(s.l1_norm() == 5);
    s.add(0, -2);
    REQUIRE(s.size() == 1);
    REQUIRE(FormalSum<Index>{}.l1_norm() == 0);
    REQUIRE(sup_norm(rational_cochain(0, {rational(-7, 2), 3})) == rational(7, 2));
}
