#include <doctest.h>

#include "test_helpers.hpp"

using namespace nktest;

TEST_CASE("expression parsing") {
    Polynomial p = pp("x^2*y - 3/2*y^3");
    REQUIRE(p.term_count() == 2);
    CHECK(p.terms().at(mono({2, 1})) == 1);
    CHECK(p.terms().at(mono({0, 3})) == make_rational(-3, 2));

    CHECK(pp("(x - y)^2") == pp("x^2 - 2*x*y + y^2"));

    CHECK_THROWS_AS(pp("x^-1"), parse_error);
    CHECK_THROWS_AS(pp("x^(2)"), parse_error);   // exponents are literals
    CHECK_THROWS_AS(pp("2x"), parse_error);      // implicit multiplication rejected
    CHECK_THROWS_AS(pp("x*"), parse_error);
    CHECK_THROWS_AS(pp("(x + y"), parse_error);
    CHECK_THROWS_AS(pp("q + 1"), parse_error);   // unknown identifier
}

TEST_CASE("parse errors carry positions") {
    try {
        pp("x + z");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line == 1);
        CHECK(e.column >= 5);
    }
}

TEST_CASE("problem files") {
    ProblemInstance inst = parse_problem_file("ring: x, y\nJ: x^2, y^2\n");
    CHECK(inst.ring->vars == std::vector<std::string>{"x", "y"});
    REQUIRE(inst.generators.size() == 2);
    CHECK(inst.generators[0] == pp("x^2", inst.ring));

    CHECK_THROWS_AS(parse_problem_file("ring: x, y\nJ: x^a, y^a\n"), parse_error);
    CHECK_THROWS_AS(parse_problem_file("J: x\n"), parse_error);          // missing ring
    CHECK_THROWS_AS(parse_problem_file("ring: x, x\nJ: x\n"), parse_error); // duplicate var
    CHECK_THROWS_AS(parse_problem_file("ring: x, y\n"), parse_error);    // no generators
    CHECK_THROWS_AS(parse_problem_file("ring: x\nJ: 0\n"), parse_error); // zero generator

    ProblemInstance meta =
        parse_problem_file("ring: x, y\nJ: x^2\nmeta: name=example-2.3-a2\n");
    CHECK(meta.id() == "example-2.3-a2");
    ProblemInstance round = parse_problem_file(format_problem_file(meta));
    CHECK(round.meta.at("name") == "example-2.3-a2");
    CHECK(round.generators[0] == meta.generators[0]);

    // Line numbers in diagnostics.
    try {
        parse_problem_file("ring: x, y\n# comment\nJ: x^^2\n");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line == 3);
    }
}

TEST_CASE("format/parse round trip on random polynomials") {
    Gen gen(424242);
    RingPtr ring = PolyRing::make({"x", "y", "z"});
    for (int i = 0; i < 80; ++i) {
        Polynomial p = gen.poly(ring, 6, 4);
        CHECK(parse_polynomial(format_polynomial(p), ring) == p);
    }
}

TEST_CASE("parser is total on junk input") {
    Gen gen(777);
    const std::string alphabet = "xy01+-*/^() \t.&q";
    for (int i = 0; i < 300; ++i) {
        std::string s;
        long len = gen.pick(0, 16);
        for (long k = 0; k < len; ++k) s += alphabet[gen.pick(0, alphabet.size() - 1)];
        try {
            (void)pp(s);
        } catch (const parse_error&) {
            // fine: positioned rejection is the contract
        }
    }
}
