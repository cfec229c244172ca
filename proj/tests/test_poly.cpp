#include <doctest.h>

#include "test_helpers.hpp"

using namespace nktest;

TEST_CASE("polynomial arithmetic matches hand expansion") {
    CHECK(pp("(x + y) * (x - y)") == pp("x^2 - y^2"));
    CHECK(pp("x^2 - y") + Polynomial::zero(ring_xy()) == pp("x^2 - y"));
    CHECK(pp("(x^2 - y) * (x^2 + y)") == pp("x^4 - y^2"));
}

TEST_CASE("arithmetic rejects mixed rings") {
    RingPtr other = PolyRing::make({"a", "b"});
    CHECK_THROWS_AS(pp("x") + pp("a", other), ring_error);
    CHECK_THROWS_AS(pp("x") * pp("a", other), ring_error);
}

TEST_CASE("partial derivatives") {
    CHECK(pp("x^3 * y").partial_derivative(0) == pp("3 * x^2 * y"));
    CHECK(pp("x^3").partial_derivative(1).is_zero());
    CHECK(pp("x^2 + 2 * x * y").partial_derivative(0) == pp("2 * x + 2 * y"));
    CHECK_THROWS_AS(pp("x").partial_derivative(2), error);
    CHECK_THROWS_AS(pp("x").partial_derivative(-1), error);
}

TEST_CASE("homogenization and dehomogenization") {
    RingPtr rx = PolyRing::make({"x"});
    Polynomial h = parse_polynomial("x + 1", rx).homogenize(1);
    RingPtr rtx = h.ring();
    CHECK(h == parse_polynomial("x + T0", rtx));

    Polynomial h2 = pp("x^2 + y").homogenize(2);
    CHECK(h2 == parse_polynomial("x^2 + T0*y", h2.ring()));

    Polynomial h3 = Polynomial::constant(rx, 1).homogenize(3);
    CHECK(h3 == parse_polynomial("T0^3", h3.ring()));

    CHECK_THROWS_AS(pp("x^2").homogenize(1), error);

    CHECK(parse_polynomial("T0^3", h3.ring()).dehomogenize() ==
          Polynomial::constant(rx, 1));
    CHECK(h2.dehomogenize() == pp("x^2 + y"));
    RingPtr rt = PolyRing::make({"T0", "x"});
    CHECK(parse_polynomial("T0*x - T0^2", rt).dehomogenize() ==
          parse_polynomial("x - 1", rx));
}

TEST_CASE("multidegree") {
    CHECK(pp("x^2 * y").multidegree() == std::vector<int>{2, 1});
    CHECK(pp("x^3 + y^5").multidegree() == std::vector<int>{3, 5});
    CHECK(Polynomial::zero(ring_xy()).multidegree() == std::vector<int>{0, 0});
}

TEST_CASE("ring axioms on randomized polynomials") {
    Gen gen(20240817);
    RingPtr ring = ring_xy();
    for (int i = 0; i < 60; ++i) {
        Polynomial a = gen.poly(ring, 4, 3);
        Polynomial b = gen.poly(ring, 4, 3);
        Polynomial c = gen.poly(ring, 4, 3);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("coefficients stay in canonical form") {
    Gen gen(7);
    RingPtr ring = ring_xy();
    for (int i = 0; i < 40; ++i) {
        Polynomial p = gen.poly(ring, 5, 3) * gen.poly(ring, 5, 3) + gen.poly(ring, 4, 2);
        for (const auto& [m, coeff] : p.terms()) {
            CHECK(coeff != 0);
            CHECK(coeff.get_den() > 0);
            CHECK(gcd(abs(coeff.get_num()), coeff.get_den()) == 1);
        }
    }
}

TEST_CASE("homogenize/dehomogenize round trip on random polynomials") {
    Gen gen(99);
    RingPtr ring = ring_xy();
    for (int i = 0; i < 40; ++i) {
        Polynomial p = gen.poly(ring, 5, 4);
        long long d = std::max<long long>(p.degree(), 0) + gen.pick(0, 3);
        Polynomial h = p.homogenize(d);
        CHECK(h.is_homogeneous());
        if (!h.is_zero()) CHECK(h.degree() == d);
        CHECK(h.dehomogenize() == p);
    }
}

TEST_CASE("mixed partials commute") {
    Gen gen(31);
    RingPtr ring = ring_xy();
    for (int i = 0; i < 40; ++i) {
        Polynomial p = gen.poly(ring, 6, 5);
        CHECK(p.partial_derivative(0).partial_derivative(1) ==
              p.partial_derivative(1).partial_derivative(0));
    }
}
