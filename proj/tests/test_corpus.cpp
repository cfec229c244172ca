#include <doctest.h>

#include <fstream>

#include "nullkit/corpus.hpp"
#include "nullkit/suites.hpp"

#include "test_helpers.hpp"

using namespace nktest;

TEST_CASE("corpus generation is seed-deterministic") {
    GeneratorSpec spec;
    spec.arity = 2;
    spec.count = 3;
    spec.seed = 1;
    auto a = generate_corpus(spec);
    auto b = generate_corpus(spec);
    REQUIRE(a.size() == 3);
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(format_problem_file(a[i]) == format_problem_file(b[i]));

    spec.seed = 2;
    auto c = generate_corpus(spec);
    bool any_differ = false;
    for (std::size_t i = 0; i < a.size(); ++i)
        any_differ = any_differ || format_problem_file(a[i]) != format_problem_file(c[i]);
    CHECK(any_differ);
}

TEST_CASE("homogeneous corpora have equal-degree generators") {
    GeneratorSpec spec;
    spec.arity = 3;
    spec.homogeneous = true;
    spec.max_degree = 4;
    spec.count = 10;
    spec.seed = 99;
    for (const auto& inst : generate_corpus(spec)) {
        long long d = inst.generators.front().degree();
        for (const auto& g : inst.generators) {
            CHECK(g.is_homogeneous());
            CHECK(g.degree() == d);
        }
    }
}

TEST_CASE("corpus respects the exponent box and minimality") {
    GeneratorSpec spec;
    spec.arity = 4;
    spec.max_exponent = 6;
    spec.count = 20;
    spec.seed = 5;
    for (const auto& inst : generate_corpus(spec)) {
        auto ideal = MonomialIdeal::from_instance(inst);
        REQUIRE(ideal.has_value());
        for (const auto& g : ideal->gens)
            for (int e : g.exps) CHECK(e <= 6);
        // Antichain: no generator divides another.
        for (std::size_t i = 0; i < ideal->gens.size(); ++i)
            for (std::size_t j = 0; j < ideal->gens.size(); ++j)
                if (i != j) CHECK_FALSE(ideal->gens[i].divides(ideal->gens[j]));
    }
}

TEST_CASE("suites accept problem files in place of a corpus") {
    std::string dir = "/tmp/nullkit-suite-files";
    REQUIRE(std::system(("mkdir -p " + dir).c_str()) == 0);
    {
        std::ofstream f(dir + "/a.prob");
        f << "ring: x, y\nJ: x^2, y^2\nmeta: name=file-a\n";
    }
    {
        std::ofstream f(dir + "/b.prob");
        f << "ring: x, y, z\nJ: x^2, y^3, z\nmeta: name=file-b\n";
    }
    SuiteConfig config;
    config.suite = "skoda-random";
    config.files = {dir + "/a.prob", dir + "/b.prob"};
    Report r = run_suite(config);
    CHECK(r.records.size() == 6); // two instances, three powers each
    CHECK(r.all_pass());
    for (const auto& rec : r.records) CHECK(rec.instance.substr(0, 5) == "file-");

    {
        std::ofstream f(dir + "/bad.prob");
        f << "ring: x, y\nJ: x*y + 1\n";
    }
    config.files = {dir + "/bad.prob"};
    CHECK_THROWS_AS(run_suite(config), input_class_error);
}

TEST_CASE("suite names are exposed and dispatched") {
    for (const auto& name : suite_names()) {
        SuiteConfig config;
        config.suite = name;
        config.count = name == "degree-bound" ? 2 : 3;
        if (name == "oracle-cross") continue; // exercised by the acceptance run
        Report r = run_suite(config);
        CHECK(r.suite == name);
        CHECK(!r.records.empty());
    }
    SuiteConfig bad;
    bad.suite = "nope";
    CHECK_THROWS_AS(run_suite(bad), error);
}
