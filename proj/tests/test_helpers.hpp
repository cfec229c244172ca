// Shared helpers for the unit tests: small deterministic generators for
// polynomials and monomials, plus parsing shorthands.
#ifndef NULLKIT_TEST_HELPERS_HPP
#define NULLKIT_TEST_HELPERS_HPP

#include <random>

#include "nullkit/corpus.hpp"
#include "nullkit/parse.hpp"

namespace nktest {

using namespace nullkit;

inline RingPtr ring_xy() {
    static RingPtr r = PolyRing::make({"x", "y"});
    return r;
}

inline Polynomial pp(const std::string& text, const RingPtr& ring = ring_xy()) {
    return parse_polynomial(text, ring);
}

inline Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

struct Gen {
    explicit Gen(std::uint64_t seed) : rng(seed) {}
    std::mt19937_64 rng;

    long pick(long lo, long hi) {
        return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Monomial monomial(int arity, int max_exp) {
        std::vector<int> e(arity);
        for (auto& v : e) v = static_cast<int>(pick(0, max_exp));
        return Monomial(std::move(e));
    }

    Polynomial poly(const RingPtr& ring, int max_terms, int max_exp, long coeff_range = 5) {
        Polynomial p = Polynomial::zero(ring);
        long t = pick(0, max_terms);
        for (long i = 0; i < t; ++i) {
            long num = pick(-coeff_range, coeff_range);
            long den = pick(1, 3);
            p.add_term(monomial(ring->arity(), max_exp), make_rational(num, den));
        }
        return p;
    }
};

} // namespace nktest

#endif
