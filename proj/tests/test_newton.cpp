#include <doctest.h>

#include <algorithm>

#include "nullkit/multiplier.hpp"
#include "nullkit/oracles.hpp"

#include "test_helpers.hpp"

using namespace nktest;

namespace {

MonomialIdeal mi(std::vector<std::vector<int>> exps, int arity = 2) {
    std::vector<Monomial> ms;
    for (auto& e : exps) ms.emplace_back(std::move(e));
    return MonomialIdeal::make(affine_ring(arity), std::move(ms));
}

const FacetDatum* find_facet(const NewtonPolyhedron& np, std::vector<long long> normal) {
    for (const auto& f : np.facets)
        if (f.normal == normal) return &f;
    return nullptr;
}

} // namespace

TEST_CASE("newton polyhedra of pinned ideals") {
    // (x^2, y^2): one bounded facet u1 + u2 >= 2.
    NewtonPolyhedron np1 = newton_polyhedron(mi({{2, 0}, {0, 2}}));
    auto bounded1 = np1.bounded_facets();
    REQUIRE(bounded1.size() == 1);
    CHECK(bounded1[0]->normal == std::vector<long long>{1, 1});
    CHECK(bounded1[0]->offset == 2);

    // (x): the shifted hyperplane u1 >= 1 plus the coordinate facet u2 >= 0.
    NewtonPolyhedron np2 = newton_polyhedron(mi({{1, 0}}));
    REQUIRE(np2.facets.size() == 2);
    const FacetDatum* f10 = find_facet(np2, {1, 0});
    const FacetDatum* f01 = find_facet(np2, {0, 1});
    REQUIRE(f10 != nullptr);
    REQUIRE(f01 != nullptr);
    CHECK(f10->offset == 1);
    CHECK(f10->bounded);
    CHECK(f01->offset == 0);
    CHECK_FALSE(f01->bounded);

    // (x^2, y^3): bounded facet 3u1 + 2u2 >= 6 through (2,0) and (0,3).
    NewtonPolyhedron np3 = newton_polyhedron(mi({{2, 0}, {0, 3}}));
    auto bounded3 = np3.bounded_facets();
    REQUIRE(bounded3.size() == 1);
    CHECK(bounded3[0]->normal == std::vector<long long>{3, 2});
    CHECK(bounded3[0]->offset == 6);

    // Two facets sharing one support: (x^4, x^2 y, y^4).
    NewtonPolyhedron np4 = newton_polyhedron(mi({{4, 0}, {2, 1}, {0, 4}}));
    CHECK(np4.bounded_facets().size() == 2);
    CHECK(np4.vertices.size() == 3);
}

TEST_CASE("distinguished data of pinned ideals") {
    auto d1 = distinguished_data(mi({{3, 0}, {0, 3}}));
    REQUIRE(d1.size() == 1);
    CHECK(d1[0].support == std::vector<int>{0, 1});
    CHECK(d1[0].coefficient == 3);
    CHECK(d1[0].dimension == 0);
    CHECK(d1[0].degree == 1);

    auto d2 = distinguished_data(mi({{1, 0}}));
    REQUIRE(d2.size() == 1);
    CHECK(d2[0].support == std::vector<int>{0});
    CHECK(d2[0].coefficient == 1);
    CHECK(d2[0].dimension == 1);

    auto d3 = distinguished_data(mi({{2, 0}, {0, 3}}));
    REQUIRE(d3.size() == 1);
    CHECK(d3[0].coefficient == 6);

    // Unit ideal: no centers at all.
    CHECK(distinguished_data(mi({{0, 0}, {1, 2}})).empty());
}

TEST_CASE("facets support every generator and touch a vertex") {
    Gen gen(808);
    for (int iter = 0; iter < 40; ++iter) {
        int n = static_cast<int>(gen.pick(2, 4));
        std::vector<Monomial> ms;
        long m = gen.pick(1, 6);
        for (long i = 0; i < m; ++i) ms.push_back(gen.monomial(n, 6));
        MonomialIdeal ideal = MonomialIdeal::make(affine_ring(n), std::move(ms));
        NewtonPolyhedron np = newton_polyhedron(ideal);

        for (const auto& f : np.facets) {
            bool tight = false;
            for (const auto& g : ideal.gens) {
                CHECK(f.value_at(g) >= f.offset);
                tight = tight || f.value_at(g) == f.offset;
            }
            CHECK(tight);
            if (f.bounded) {
                bool vertex_on_facet = false;
                for (const auto& v : np.vertices)
                    vertex_on_facet = vertex_on_facet || f.value_at(v) == f.offset;
                CHECK(vertex_on_facet);
            }
        }
        // Generators all lie in the polyhedron.
        for (const auto& g : ideal.gens) CHECK(np.contains(g));
    }
}

TEST_CASE("facet membership agrees with the barycentric witness oracle") {
    Gen gen(909);
    for (int iter = 0; iter < 25; ++iter) {
        int n = static_cast<int>(gen.pick(2, 3));
        std::vector<Monomial> ms;
        long m = gen.pick(1, 4);
        for (long i = 0; i < m; ++i) ms.push_back(gen.monomial(n, 4));
        MonomialIdeal ideal = MonomialIdeal::make(affine_ring(n), std::move(ms));
        NewtonPolyhedron np = newton_polyhedron(ideal);

        for (int probe = 0; probe < 25; ++probe) {
            Monomial u = gen.monomial(n, 7);
            bool facet = np.contains(u);
            auto witness = closure_witness(u, ideal, 1);
            CHECK(facet == witness.has_value());
            if (witness) CHECK(verify_closure_witness(u, ideal, 1, *witness));
        }
    }
}

TEST_CASE("a boundary point needing denominator 3") {
    // J = (x^4, x*y^3): u = (2,2) sits on the facet u1 + u2 >= 4 and its only
    // barycentric representation is (1/3)(4,0) + (2/3)(1,3), so k = 3 is the
    // least power with x^(3u) in J^3. Hand-checked: (x^4)(x y^3)^2 = x^6 y^6.
    MonomialIdeal ideal = mi({{4, 0}, {1, 3}});
    Monomial u = mono({2, 2});
    CHECK(integral_closure_member(u, ideal, 1));
    CHECK_FALSE(monomial_power_member(u, ideal, 1));
    CHECK_FALSE(monomial_power_member(u.pow(2), ideal, 2));
    CHECK(monomial_power_member(u.pow(3), ideal, 3));
    auto witness = closure_witness(u, ideal, 1);
    REQUIRE(witness.has_value());
    CHECK(witness->denominator_lcm == 3);
    CHECK(verify_closure_witness(u, ideal, 1, *witness));
}

TEST_CASE("arity bound raises a resource error") {
    RingPtr big = PolyRing::make({"a", "b", "c", "d", "e", "f", "g"});
    std::vector<Monomial> ms = {Monomial::var(7, 0)};
    MonomialIdeal ideal{big, ms};
    CHECK_THROWS_AS(newton_polyhedron(ideal), resource_error);
}
