#include <doctest.h>

#include <algorithm>

#include "nullkit/groebner.hpp"

#include "test_helpers.hpp"

using namespace nktest;

namespace {

// Exhaustive S-polynomial check: the defining property of a Groebner basis.
bool all_s_polys_reduce(const GroebnerBasis& gb) {
    for (std::size_t i = 0; i < gb.basis.size(); ++i)
        for (std::size_t j = i + 1; j < gb.basis.size(); ++j) {
            Monomial l = lcm(gb.leads[i], gb.leads[j]);
            Rational ci = gb.basis[i].leading_term(gb.order).second;
            Rational cj = gb.basis[j].leading_term(gb.order).second;
            Polynomial s = gb.basis[i].times_term(l / gb.leads[i], Rational(1) / ci) -
                           gb.basis[j].times_term(l / gb.leads[j], Rational(1) / cj);
            if (!normal_form(s, gb).first.is_zero()) return false;
        }
    return true;
}

std::vector<std::string> basis_strings(const GroebnerBasis& gb) {
    std::vector<std::string> out;
    for (const auto& p : gb.basis) out.push_back(format_polynomial(p));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("normal form against a one-element basis") {
    GroebnerBasis gb = buchberger({pp("x^2 - y")}, MonomialOrder::lex(), false);
    auto [rem, quot] = normal_form(pp("x^2 + y"), gb);
    CHECK(rem == pp("2*y"));
    REQUIRE(quot.size() == 1);
    CHECK(quot[0] == pp("1"));

    // Membership gives remainder zero; an unreducible input is its own remainder.
    CHECK(normal_form(pp("x^2 - y"), gb).first.is_zero());
    GroebnerBasis gx = buchberger({pp("x")}, MonomialOrder::lex(), false);
    CHECK(normal_form(pp("y"), gx).first == pp("y"));
}

TEST_CASE("normal form is an exact division identity") {
    Gen gen(2024);
    RingPtr ring = ring_xy();
    for (int i = 0; i < 30; ++i) {
        std::vector<Polynomial> gens;
        long m = gen.pick(1, 3);
        for (long g = 0; g < m; ++g) {
            Polynomial cand = gen.poly(ring, 3, 3);
            gens.push_back(cand.is_zero() ? pp("x") : cand);
        }
        GroebnerBasis gb = buchberger(gens, MonomialOrder::grevlex(), false);
        Polynomial p = gen.poly(ring, 5, 4);
        auto [rem, quot] = normal_form(p, gb);
        Polynomial recon = rem;
        for (std::size_t k = 0; k < gb.basis.size(); ++k)
            recon = recon + quot[k] * gb.basis[k];
        CHECK(recon == p);
        for (const auto& [mterm, c] : rem.terms())
            for (const auto& lead : gb.leads) CHECK_FALSE(lead.divides(mterm));
    }
}

TEST_CASE("buchberger on pinned examples") {
    // Coprime lead monomials: already a basis.
    GroebnerBasis g1 = buchberger({pp("x^2"), pp("y^2")}, MonomialOrder::grevlex(), false);
    CHECK(basis_strings(g1) == std::vector<std::string>{"x^2", "y^2"});

    // Unit ideal.
    GroebnerBasis g2 = buchberger({pp("x"), pp("1 - x")}, MonomialOrder::grevlex(), false);
    CHECK(g2.is_unit());

    // Lex basis of (x^2 - y, y^2 - 1); hand S-polynomial reduces to zero.
    GroebnerBasis g3 =
        buchberger({pp("x^2 - y"), pp("y^2 - 1")}, MonomialOrder::lex(), false);
    auto s = basis_strings(g3);
    CHECK(std::find(s.begin(), s.end(), "x^2 - y") != s.end());
    CHECK(std::find(s.begin(), s.end(), "y^2 - 1") != s.end());
    CHECK(all_s_polys_reduce(g3));
}

TEST_CASE("reduced bases are unique under generator shuffles") {
    Gen gen(99);
    RingPtr ring = ring_xy();
    for (int i = 0; i < 15; ++i) {
        std::vector<Polynomial> gens;
        long m = gen.pick(2, 4);
        for (long g = 0; g < m; ++g) {
            Polynomial cand = gen.poly(ring, 3, 3);
            gens.push_back(cand.is_zero() ? pp("x + y") : cand);
        }
        GroebnerBasis a = buchberger(gens, MonomialOrder::grevlex(), false);
        std::reverse(gens.begin(), gens.end());
        GroebnerBasis b = buchberger(gens, MonomialOrder::grevlex(), false);
        CHECK(basis_strings(a) == basis_strings(b));
        CHECK(all_s_polys_reduce(a));
    }
}

TEST_CASE("traces expand exactly to the basis") {
    Gen gen(1717);
    RingPtr ring = ring_xy();
    for (int i = 0; i < 15; ++i) {
        std::vector<Polynomial> gens;
        long m = gen.pick(1, 3);
        for (long g = 0; g < m; ++g) {
            Polynomial cand = gen.poly(ring, 3, 2);
            gens.push_back(cand.is_zero() ? pp("x^2 + y") : cand);
        }
        GroebnerBasis gb = buchberger(gens, MonomialOrder::grevlex(), true);
        REQUIRE(gb.trace.has_value());
        for (std::size_t k = 0; k < gb.basis.size(); ++k) {
            Polynomial expand = Polynomial::zero(ring);
            for (std::size_t j = 0; j < gens.size(); ++j)
                expand = expand + (*gb.trace)[k][j] * gens[j];
            CHECK(expand == gb.basis[k]);
        }
    }
}

TEST_CASE("ideal membership") {
    Ideal I(ring_xy(), {pp("x^2"), pp("y^2")});
    CHECK_FALSE(ideal_member(pp("x*y"), I).first); // the square counterexample at a = 2
    auto [in1, cof1] = ideal_member(pp("x^3*y"), I, true);
    CHECK(in1);
    REQUIRE(cof1.has_value());
    Polynomial expand = (*cof1)[0] * pp("x^2") + (*cof1)[1] * pp("y^2");
    CHECK(expand == pp("x^3*y"));
    CHECK(ideal_member(pp("x^2*y^2"), I).first);
}

TEST_CASE("membership is monotone under multiplication") {
    Gen gen(2718);
    Ideal I(ring_xy(), {pp("x^2 - y"), pp("x*y")});
    Polynomial member = pp("x") * pp("x^2 - y") + pp("y") * pp("x*y");
    REQUIRE(ideal_member(member, I).first);
    for (int i = 0; i < 20; ++i) {
        Polynomial q = gen.poly(ring_xy(), 3, 2);
        CHECK(ideal_member(q * member, I).first);
    }
}

TEST_CASE("radical membership via the extended-ring trick") {
    Ideal I(ring_xy(), {pp("x^2")});
    CHECK(radical_member(pp("x"), I));
    CHECK_FALSE(ideal_member(pp("x"), I).first);
    CHECK_FALSE(radical_member(pp("y"), I));

    // One-sided check: p^k in I forces radical membership.
    Gen gen(5);
    for (int i = 0; i < 10; ++i) {
        Polynomial p = gen.poly(ring_xy(), 2, 2);
        if (p.is_zero()) continue;
        long k = gen.pick(1, 3);
        Ideal J(ring_xy(), {p.pow(static_cast<int>(k))});
        CHECK(radical_member(p, J));
    }
}

TEST_CASE("ideal powers") {
    Ideal I(ring_xy(), {pp("x"), pp("y")});
    Ideal sq = ideal_power(I, 2);
    std::vector<std::string> got;
    for (const auto& g : sq.gens) got.push_back(format_polynomial(g));
    std::sort(got.begin(), got.end());
    CHECK(got == std::vector<std::string>{"x*y", "x^2", "y^2"});

    Ideal first = ideal_power(I, 1);
    CHECK(first.gens.size() == 2);
    CHECK_THROWS_AS(ideal_power(I, 0), error);

    Ideal I2(ring_xy(), {pp("x^2"), pp("y^2")});
    Ideal sq2 = ideal_power(I2, 2);
    got.clear();
    for (const auto& g : sq2.gens) got.push_back(format_polynomial(g));
    std::sort(got.begin(), got.end());
    CHECK(got == std::vector<std::string>{"x^2*y^2", "x^4", "y^4"});
}

TEST_CASE("ideal intersection with brute-force membership oracle") {
    Ideal ix(ring_xy(), {pp("x")});
    Ideal iy(ring_xy(), {pp("y")});
    Ideal meet = intersect_ideals(ix, iy);
    // Oracle: a monomial x^i y^j of bidegree <= (3,3) lies in (x) cap (y)
    // exactly when i >= 1 and j >= 1, i.e. when x*y divides it.
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= 3; ++j) {
            Polynomial m(ring_xy(), mono({i, j}), 1);
            CHECK(ideal_member(m, meet).first == (i >= 1 && j >= 1));
        }

    Ideal same = intersect_ideals(ix, ix);
    CHECK(ideal_member(pp("x"), same).first);
    CHECK_FALSE(ideal_member(pp("1"), same).first);

    // (x, y) cap (x^2, y^2): cross-check membership on all monomials of
    // degree <= 4 against the two-sided definition.
    Ideal a(ring_xy(), {pp("x"), pp("y")});
    Ideal b(ring_xy(), {pp("x^2"), pp("y^2")});
    Ideal ab = intersect_ideals(a, b);
    for (const auto& m : monomials_up_to_degree(2, 4)) {
        Polynomial p(ring_xy(), m, 1);
        bool expect = ideal_member(p, a).first && ideal_member(p, b).first;
        CHECK(ideal_member(p, ab).first == expect);
    }
}

TEST_CASE("macaulay membership") {
    Ideal I(ring_xy(), {pp("x^2"), pp("y^2")});
    CHECK_FALSE(macaulay_member(pp("x*y"), I, 6));
    CHECK(macaulay_member(pp("x^2"), I, 2));
    CHECK_FALSE(macaulay_member(pp("x^4"), I, 2)); // cap below deg p: bounded test

    // Agreement with the Groebner route at a sufficient cap.
    Gen gen(31337);
    RingPtr ring = ring_xy();
    for (int i = 0; i < 30; ++i) {
        std::vector<Polynomial> gens;
        long m = gen.pick(2, 3);
        for (long g = 0; g < m; ++g) {
            Polynomial cand = gen.poly(ring, 3, 2);
            gens.push_back(cand.is_zero() ? pp("x") : cand);
        }
        Ideal J(ring, gens);
        Polynomial p = Polynomial::zero(ring);
        if (i % 2 == 0) {
            for (const auto& g : gens) p = p + gen.poly(ring, 2, 2) * g;
        } else {
            p = gen.poly(ring, 3, 3);
        }
        auto [member, cof] = ideal_member(p, J, true);
        long long cap = std::max<long long>(p.degree(), 0);
        if (member && cof)
            for (std::size_t j = 0; j < cof->size(); ++j)
                cap = std::max(cap, ((*cof)[j] * gens[j]).degree());
        if (!member) cap += 4;
        CHECK(macaulay_member(p, J, cap) == member);
    }
}

TEST_CASE("pair budget aborts with a resource error") {
    Budgets tiny;
    tiny.max_pairs = 1;
    RingPtr ring = PolyRing::make({"x", "y", "z"});
    std::vector<Polynomial> gens = {parse_polynomial("x^2 - y*z", ring),
                                    parse_polynomial("y^2 - x*z", ring),
                                    parse_polynomial("z^2 - x*y", ring)};
    CHECK_THROWS_AS(buchberger(gens, MonomialOrder::grevlex(), false, tiny), resource_error);
}
