// monomial_ideal.hpp: monomial ideals with minimal (antichain) generators.
#ifndef NULLKIT_MONOMIAL_IDEAL_HPP
#define NULLKIT_MONOMIAL_IDEAL_HPP

#include <optional>
#include <vector>

#include "nullkit/parse.hpp"
#include "nullkit/poly.hpp"

namespace nullkit {

struct MonomialIdeal {
    RingPtr ring;
    std::vector<Monomial> gens; // divisibility antichain, sorted descending (degree, lex)

    static MonomialIdeal make(RingPtr ring, std::vector<Monomial> monomials);
    // nullopt if some generator has more than one term.
    static std::optional<MonomialIdeal> from_instance(const ProblemInstance& inst);

    int arity() const { return ring->arity(); }
    int generator_count() const { return static_cast<int>(gens.size()); }
    // p = min(m, n), the exponent factor in the containment statements.
    int min_mn() const { return std::min(generator_count(), arity()); }
    bool is_unit() const { return gens.size() == 1 && gens[0].is_one(); }

    bool contains(const Monomial& u) const {
        for (const auto& g : gens)
            if (g.divides(u)) return true;
        return false;
    }

    // Every monomial of p lies in the ideal (for monomial ideals this is
    // membership of the polynomial itself).
    bool contains_polynomial(const Polynomial& p) const {
        for (const auto& [m, c] : p.terms())
            if (!contains(m)) return false;
        return true;
    }

    MonomialIdeal power(int k) const;
    // Squarefree supports of the generators, re-minimalized.
    MonomialIdeal radical() const;

    std::vector<Polynomial> to_polynomials() const;
};

// Keep only divisibility-minimal monomials; output sorted descending
// (degree, lex) so reports and witnesses are stable.
std::vector<Monomial> minimalize_monomials(std::vector<Monomial> monomials);

// True iff u is a product of exactly k generators times a monomial, decided by
// depth-first search over generator multisets. Used by checks and as the
// counting side of the integral-closure oracle.
bool monomial_power_member(const Monomial& u, const MonomialIdeal& ideal, int k);

} // namespace nullkit

#endif
