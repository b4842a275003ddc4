#include <doctest.h>

#include "pfa/catalog.hpp"
#include "pfa/errors.hpp"
#include "pfa/json_io.hpp"
#include "pfa/random.hpp"
#include "pfa/representation.hpp"

using namespace pfa;

TEST_CASE("algebra files round-trip") {
    SplitMix64 rng(11);
    for (int it = 0; it < 20; ++it) {
        const auto abs = to_abstract(random_closure(rng));
        const auto text = emit_algebra_json(abs.algebra);
        const auto parsed = parse_algebra_json(text);
        CHECK(parsed.elements == abs.algebra.elements);
        CHECK(parsed.compose_tab == abs.algebra.compose_tab);
        CHECK(parsed.meet_tab == abs.algebra.meet_tab);
        CHECK(parsed.antidomain_tab == abs.algebra.antidomain_tab);
    }
}

TEST_CASE("algebra parse errors carry positions") {
    SUBCASE("unknown identifier") {
        const char* text = R"({"elements": ["0"], "compose": [["x"]], "meet": [["0"]], "antidomain": ["0"]})";
        try {
            (void)parse_algebra_json(text);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("compose[0][0]") != std::string::npos);
            CHECK(std::string(e.what()).find("'x'") != std::string::npos);
        }
    }
    SUBCASE("ragged table") {
        const char* text =
            R"({"elements": ["0", "a"], "compose": [["0", "a"], ["0"]], "meet": [["0","0"],["0","a"]], "antidomain": ["0","0"]})";
        try {
            (void)parse_algebra_json(text);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("compose[1]") != std::string::npos);
        }
    }
    SUBCASE("missing field") {
        CHECK_THROWS_AS((void)parse_algebra_json(R"({"elements": ["0"]})"), ParseError);
    }
}

TEST_CASE("partial-function files round-trip") {
    const auto [base, fns] = figure1_functions();
    const auto text = emit_pfun_json(base, fns);
    const auto parsed = parse_pfun_json(text);
    CHECK(parsed.base == base);
    REQUIRE(parsed.functions.size() == fns.size());
    for (size_t i = 0; i < fns.size(); ++i) {
        CHECK(parsed.functions[i].first == fns[i].first);
        CHECK(parsed.functions[i].second == fns[i].second);
    }
}

TEST_CASE("pfun parse errors") {
    CHECK_THROWS_AS((void)parse_pfun_json(R"({"base": ["a"]})"), ParseError);
    CHECK_THROWS_AS(
        (void)parse_pfun_json(R"({"base": ["a"], "functions": {"f": [["a", "b"]]}})"), ParseError);
    CHECK_THROWS_AS(
        (void)parse_pfun_json(R"({"base": ["a", "b"], "functions": {"f": [["a","a"],["a","b"]]}})"),
        ParseError);
}

TEST_CASE("catalog fixtures") {
    SUBCASE("figure1 has four base points and re-parses") {
        const auto fx = catalog_fixture("figure1");
        const auto parsed = parse_pfun_json(fx.contents);
        CHECK(parsed.base.size() == 4);
        CHECK(parsed.functions.size() == 4);
    }
    SUBCASE("figure2 has three base points") {
        const auto fx = catalog_fixture("figure2");
        CHECK(parse_pfun_json(fx.contents).base.size() == 3);
    }
    SUBCASE("boolean-0 is the one-element algebra") {
        const auto fx = catalog_fixture("boolean-0");
        CHECK(parse_algebra_json(fx.contents).n() == 1);
    }
    SUBCASE("boolean-3 validates and is accepted") {
        const auto alg = parse_algebra_json(catalog_fixture("boolean-3").contents);
        CHECK(validate(alg).passed);
        CHECK(decide_complete_representability(alg).completely_representable);
    }
    SUBCASE("truncation fixture re-parses and is closed") {
        const auto fx = catalog_fixture("example43-truncation-1");
        const auto parsed = parse_pfun_json(fx.contents);
        CHECK(parsed.base.size() == 3);
        CHECK(parsed.functions.size() == 9);
    }
    SUBCASE("fixtures are byte-stable") {
        for (const char* name : {"figure1", "figure2", "boolean-2", "example43-truncation-2"})
            CHECK(catalog_fixture(name).contents == catalog_fixture(name).contents);
    }
    SUBCASE("unknown names are rejected") {
        CHECK_THROWS_AS((void)catalog_fixture("figure3"), UnknownFixture);
        CHECK_THROWS_AS((void)catalog_fixture("boolean-99"), UnknownFixture);
    }
}

TEST_CASE("refutation and representation emission") {
    const auto alg = boolean_as_algebra(2);
    const auto verdict = decide_complete_representability(alg);
    REQUIRE(verdict.completely_representable);
    const auto text = emit_representation_json(*verdict.witness);
    const auto parsed = parse_pfun_json(text);
    CHECK(parsed.base.size() == 2);
    CHECK(parsed.functions.size() == 4);

    auto corrupt = alg;
    corrupt.compose_tab[static_cast<size_t>(0) * alg.n() + 1] = 3;
    const auto bad = decide_complete_representability(corrupt);
    REQUIRE_FALSE(bad.completely_representable);
    const auto rtext = emit_refutation_json(*bad.refutation, corrupt);
    CHECK(rtext.find("invalid_algebra") != std::string::npos);
}
