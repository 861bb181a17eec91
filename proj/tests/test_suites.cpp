#include <catch2/catch_amalgamated.hpp>

#include "simpcoh/suites.hpp"

using namespace simpcoh;

namespace {

void require_green(const VerificationReport& r) {
    for (const auto& c : r.checks) {
        INFO(r.suite << ": " << c.name << " " << c.witness);
        CHECK(c.pass);
    }
    REQUIRE(!r.checks.empty());
}

}  // namespace

TEST_CASE("every suite passes at default parameters", "[suites]") {
    SuiteOptions o;
    for (const auto& [id, fn] : suite_table()) {
        DYNAMIC_SECTION(id) { require_green(run_suite(id, o)); }
    }
}

TEST_CASE("unknown suites are rejected", "[suites]") {
    REQUIRE_THROWS_AS(run_suite("nope", SuiteOptions{}), InvalidArgument);
}

TEST_CASE("reports serialize deterministically without timings", "[suites]") {
    SuiteOptions o;
    auto a = run_suite("cocycle-hom", o).to_json(false);
    auto b = run_suite("cocycle-hom", o).to_json(false);
    REQUIRE(a.dump() == b.dump());
    REQUIRE(a["passed"].get<bool>());
}

TEST_CASE("suites accept an input set", "[suites]") {
    SuiteOptions o;
    o.input = standard_simplex(1, 3);
    o.input_name = "Delta[1]";
    auto r = run_suite("kan", o);
    REQUIRE_FALSE(r.passed());
    REQUIRE(r.checks.front().witness.find("horn") != std::string::npos);
    o.input = classifying_space(FiniteGroup::cyclic(3), 3);
    REQUIRE(run_suite("kan", o).passed());
    REQUIRE(run_suite("ez", o).passed());
}
