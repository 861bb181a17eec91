#include <catch2/catch_amalgamated.hpp>

#include "simpcoh/io.hpp"

using namespace simpcoh;

TEST_CASE("rationals and integers round trip", "[io]") {
    for (auto q : {Rational(0), Rational(-3, 7), Rational(5)}) REQUIRE(rational_from_json(rational_json(q)) == q);
    Integer big = Integer(1) << 100;
    REQUIRE(integer_json(big).is_string());
    REQUIRE(integer_from_json(integer_json(big)) == big);
    REQUIRE(rational_from_json(parse_json("[2, 4]")) == Rational(1, 2));
    REQUIRE_THROWS_AS(rational_from_json(parse_json("[1, 0]")), ParseError);
    REQUIRE_THROWS_AS(integer_from_json(parse_json("\"12a\"")), ParseError);
}

TEST_CASE("group names", "[io]") {
    REQUIRE(parse_group("Z/5").order() == 5);
    REQUIRE(parse_group("Z/2xZ/2").order() == 4);
    REQUIRE(parse_group("Z/2xZ/3").is_abelian());
    REQUIRE(parse_group("S3").order() == 6);
    REQUIRE_FALSE(parse_group("S3").is_abelian());
    for (const char* bad : {"", "Z/", "Z/0", "Q", "Z/2x", "S9"}) REQUIRE_THROWS_AS(parse_group(bad), ParseError);
    auto G = parse_group("S3");
    auto H = group_from_json(to_json(G));
    REQUIRE(H.table() == G.table());
}

TEST_CASE("category files", "[io]") {
    auto C = category_from_json(parse_json(R"({"objects": 2, "homs": [[0,0],[1,1],[0,1]],
        "compose": [[0,0,0],[1,1,1],[0,2,2],[2,1,2]], "identities": [0,1]})"));
    REQUIRE(nerve(C, 2).size(1) == 3);
    REQUIRE(nerve(C, 2).size(2) == 4);
    auto B = category_from_json(to_json(FiniteGroup::cyclic(3)));
    REQUIRE(nerve(B, 2).size(2) == 9);
    REQUIRE_THROWS_AS(category_from_json(parse_json(R"({"objects": 1})")), ParseError);
}

TEST_CASE("cochains and chains round trip", "[io]") {
    auto K = circle(2);
    RationalCochain c{1, std::vector<Rational>(K.size(1), 0)};
    c[nondegenerate(K, 1)[0]] = Rational(-2, 3);
    auto text = dump(to_json(c));
    auto back = rational_cochain_from_json(parse_json(text), K);
    REQUIRE(back == c);
    REQUIRE(dump(to_json(back)) == text);
    REQUIRE_THROWS_AS(rational_cochain_from_json(parse_json(R"({"degree": 1, "values": [[1, 99, [1, 1]]]})"), K), ParseError);
    REQUIRE_THROWS_AS(rational_cochain_from_json(parse_json(R"({"degree": 1, "values": [[0, 0, [1, 1]]]})"), K), ParseError);

    Chain z{1, {}};
    z.terms.add(nondegenerate(K, 1)[0], Rational(1, 2));
    auto j = to_json(z);
    REQUIRE(j["terms"][0].size() == 4);
    REQUIRE(j["terms"][0][3] == 2);
}

TEST_CASE("Eilenberg-MacLane models and certificates", "[io]") {
    EMModel em(FiniteGroup::cyclic(2), 2, 3);
    auto j = to_json(em);
    REQUIRE(set_from_json(j).size(3) == em.set().size(3));
    REQUIRE(j["cocycle_values"][2].size() == 2);
    REQUIRE(dump(to_json(set_from_json(j))) == dump(to_json(em.set())));

    auto K = circle(2);
    RationalCochain z{1, std::vector<Rational>(K.size(1), 0)};
    z[nondegenerate(K, 1)[0]] = 1;
    auto cert = to_json(seminorm(K, z));
    REQUIRE(rational_from_json(cert["value"]) == 1);
    REQUIRE(cert["mode"] == "full");
}

TEST_CASE("Eilenberg-MacLane files reload exactly", "[io]") {
    EMModel em(FiniteGroup::cyclic(3), 2, 3);
    auto text = dump(to_json(em));
    REQUIRE(dump(to_json(em_from_json(parse_json(text)))) == text);
    auto j = parse_json(text);
    j["degree"] = 1;
    REQUIRE_THROWS_AS(em_from_json(j), ParseError);
}
