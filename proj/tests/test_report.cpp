#include <doctest.h>

#include "nullkit/report.hpp"

#include "test_helpers.hpp"

using namespace nktest;

TEST_CASE("report serialization") {
    Report empty;
    empty.suite = "demo";
    empty.seed = 7;
    std::string j = empty.to_json();
    CHECK(j.find("\"records\": []") != std::string::npos);
    CHECK(j.find("\"ok\": true") != std::string::npos);

    Report r;
    r.suite = "demo";
    CheckRecord pass;
    pass.instance = "i1";
    pass.check = "c";
    pass.statement = "ex-2.3";
    pass.verdict = Verdict::Pass;
    r.add(pass);
    CHECK(r.to_json().find("\"verdict\": \"pass\"") != std::string::npos);
    CHECK(r.all_pass());

    CheckRecord fail;
    fail.instance = "i2";
    fail.check = "c";
    fail.statement = "ex-2.3";
    fail.verdict = Verdict::Fail;
    fail.witness = "x*y";
    r.add(fail);
    CHECK(r.to_json().find("\"witness\": \"x*y\"") != std::string::npos);
    CHECK_FALSE(r.all_pass());

    // Expected failures are asserted regressions and count as passing.
    r.records.back().expected = true;
    CHECK(r.all_pass());

    CHECK(emit_report(r, "text").find("fail(expected)") != std::string::npos);
    CHECK_THROWS_AS(emit_report(r, "yaml"), error);
}

TEST_CASE("json serialization ignores wall-clock fields") {
    Report a;
    a.suite = "demo";
    CheckRecord rec;
    rec.instance = "i";
    rec.check = "c";
    rec.statement = "s";
    rec.verdict = Verdict::Pass;
    rec.ms = 12.5;
    a.add(rec);
    Report b = a;
    b.records[0].ms = 99.0;
    CHECK(a.to_json() == b.to_json());
}
