#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "simpcoh/category.hpp"
#include "simpcoh/extension.hpp"
#include "simpcoh/seminorm.hpp"
#include "simpcoh/unraveling.hpp"

using namespace simpcoh;

namespace {

RationalCochain random_normalized(const SimplicialSet& K, int n, std::mt19937_64& rng, int range = 4) {
    std::uniform_int_distribution<int> d(-range, range);
    RationalCochain c{n, std::vector<Rational>(K.size(n), 0)};
    for (Index s : nondegenerate(K, n)) c[s] = Rational(d(rng), 1 + (d(rng) & 1));
    return c;
}

RationalCochain add(RationalCochain a, const RationalCochain& b, const Rational& scale = 1) {
    for (Index s = 0; s < a.values.size(); ++s) a[s] += scale * b[s];
    return a;
}

}  // namespace

TEST_CASE("exact linear algebra", "[linalg]") {
    Matrix A{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    CHECK(rank(A) == 2);
    auto K = kernel_basis(A, 3);
    REQUIRE(K.size() == 1);
    CHECK(multiply(A, K[0]) == Vector{0, 0, 0});
    auto x = solve(A, {1, 2, 0}, 3);
    REQUIRE(x);
    CHECK(multiply(A, *x) == Vector{1, 2, 0});
    CHECK_FALSE(solve(A, {1, 3, 0}, 3));
    CHECK(kernel_basis({}, 2).size() == 2);
}

TEST_CASE("exact simplex method", "[lp]") {
    // min -x - y, x + 2y + s1 = 4, 3x + y + s2 = 6: optimum at (8/5, 6/5).
    Matrix A{{1, 2, 1, 0}, {3, 1, 0, 1}};
    Vector b{4, 6}, c{-1, -1, 0, 0};
    auto r = solve_standard_form(A, b, c);
    REQUIRE(r.status == LPStatus::optimal);
    CHECK(r.value == Rational(-14, 5));
    CHECK(verify_standard_form(A, b, c, r));
    // Same problem through vertex enumeration of x + 2y <= 4, 3x + y <= 6, x, y >= 0.
    Matrix I{{1, 2}, {3, 1}, {-1, 0}, {0, -1}};
    CHECK(minimize_over_vertices(I, {4, 6, 0, 0}, {-1, -1}) == Rational(-14, 5));

    CHECK(solve_standard_form({{1, 1}}, {-1}, {0, 0}).status == LPStatus::infeasible);
    CHECK(solve_standard_form({{1, -1}}, {0}, {-1, 0}).status == LPStatus::unbounded);
    // A redundant row is dropped and the duals stay valid.
    Matrix R{{1, 1, 1}, {2, 2, 2}};
    auto rr = solve_standard_form(R, {1, 2}, {1, 2, 3});
    REQUIRE(rr.status == LPStatus::optimal);
    CHECK(rr.value == 1);
    CHECK(verify_standard_form(R, {1, 2}, {1, 2, 3}, rr));
}

TEST_CASE("rational cohomology of small sets", "[cohomology]") {
    for (auto mode : {CochainMode::full, CochainMode::normalized}) {
        for (int n = 0; n <= 2; ++n) {
            auto D = standard_simplex(n, 3);
            CHECK(cohomology(D, 0, mode).betti() == 1);
            CHECK(cohomology(D, 1, mode).betti() == 0);
            CHECK(cohomology(D, 2, mode).betti() == 0);
        }
        auto S = boundary(2, 2);
        CHECK(cohomology(S, 0, mode).betti() == 1);
        CHECK(cohomology(S, 1, mode).betti() == 1);
        CHECK(cohomology(circle(2), 1, mode).betti() == 1);
        CHECK(cohomology(boundary(3, 3), 2, mode).betti() == 1);
        CHECK(cohomology(classifying_space(FiniteGroup::cyclic(3), 3), 1, mode).betti() == 0);
        auto E = disjoint_union(standard_simplex(0, 2), standard_simplex(0, 2));
        CHECK(cohomology(E, 0, mode).betti() == 2);
    }
    SimplicialSet empty = subset(standard_simplex(0, 2), {{0}, {0}, {0}}).set;
    CHECK(cohomology(empty, 0).betti() == 0);
    CHECK(cohomology(empty, 1).betti() == 0);
    CHECK_THROWS_AS(cohomology(circle(1), 1), CapExceeded);
}

TEST_CASE("semi-norms with certificates", "[seminorm]") {
    auto C = circle(2);
    RationalCochain z{1, std::vector<Rational>(C.size(1), 0)};
    z[nondegenerate(C, 1)[0]] = 1;
    for (auto mode : {CochainMode::full, CochainMode::normalized}) {
        auto cert = seminorm(C, z, mode);
        CHECK(cert.value == 1);
        CHECK(verify_certificate(C, z, cert));
        CHECK(seminorm_by_vertices(C, z, mode) == 1);
    }
    std::mt19937_64 rng(17);
    auto S = boundary(2, 2);
    auto S3 = boundary(3, 3);
    for (int trial = 0; trial < 40; ++trial) {
        // Coboundaries have semi-norm 0.
        auto b = random_normalized(S, 0, rng);
        CHECK(seminorm(S, trivial_coboundary(S, b)).value == 0);
        // Degree 1 on the triangle boundary: full mode has 12 constraints.
        auto z1 = random_normalized(S, 1, rng);
        for (auto mode : {CochainMode::full, CochainMode::normalized}) {
            auto cert = seminorm(S, z1, mode);
            CHECK(verify_certificate(S, z1, cert));
            CHECK(cert.value == seminorm_by_vertices(S, z1, mode));
            CHECK(cert.value <= sup_norm(z1));
        }
        // Degree 2 on the tetrahedron boundary, normalized: 8 constraints.
        auto z2 = random_normalized(S3, 2, rng);
        auto c2 = seminorm(S3, z2, CochainMode::normalized);
        CHECK(verify_certificate(S3, z2, c2));
        CHECK(c2.value == seminorm_by_vertices(S3, z2, CochainMode::normalized));
        CHECK(verify_certificate(S3, z2, seminorm(S3, z2, CochainMode::full)));
        // Semi-norm laws.
        auto w1 = random_normalized(S, 1, rng);
        CHECK(seminorm(S, add(z1, w1)).value <= seminorm(S, z1).value + seminorm(S, w1).value);
        CHECK(seminorm(S, add(z1, z1, Rational(-5, 2))).value == Rational(3, 2) * seminorm(S, z1).value);
    }
    auto notcocycle = RationalCochain{1, std::vector<Rational>(C.size(1), 0)};
    notcocycle[0] = 1;  // the degenerate edge
    CHECK_THROWS_AS(seminorm(C, notcocycle), InvalidArgument);
}

TEST_CASE("isometry reports", "[isometry]") {
    auto S = boundary(2, 2);
    auto id = isometry_report(S, S, SimplicialMap::identity(S), 1);
    CHECK(id.bijective);
    CHECK(id.isometric);
    auto P = product(S, standard_simplex(0, 2));
    auto pr = isometry_report(P.set, S, P.first, 1);
    CHECK(pr.bijective);
    CHECK(pr.isometric);
    CHECK(pr.norms.size() == 2);

    // Every map from the triangle boundary to the circle is norm-nonincreasing.
    auto C = circle(2);
    ExtensionProblem pb{&S, &C, nullptr, nullptr};
    std::size_t maps = 0;
    search_extensions(pb, default_budget, [&](const SimplicialMap& f) {
        auto r = isometry_report(S, C, f, 1);
        CHECK(r.nonincreasing);
        ++maps;
        return true;
    });
    CHECK(maps == 8);
}

TEST_CASE("unraveling projection in degree 1", "[isometry]") {
    auto S = forget(boundary(2, 2));
    auto U = unravel(boundary(2, 2), 4);
    auto r = isometry_report(U.set, S, U.projection, 1, CochainMode::full, 1);
    CHECK(r.target_betti == 1);
    CHECK(r.nonincreasing);

    // On the one-edge circle the truncations contract the generator, less and less as M grows.
    auto C = circle(2);
    Rational previous = 0;
    for (int M = 2; M <= 5; ++M) {
        auto V = unravel(C, M);
        auto q = isometry_report(V.set, forget(C), V.projection, 1);
        REQUIRE(q.bijective);
        CHECK(q.nonincreasing);
        Rational upstairs = q.norms.front().second / q.norms.front().first;
        CHECK(upstairs > previous);
        CHECK(upstairs < 1);
        previous = upstairs;
    }
}
