// groebner.hpp: Buchberger engine with reduction traces, ideal membership,
// radical membership, powers, intersections, and a Macaulay-matrix membership
// test that serves as an independent linear-algebra oracle.
#ifndef NULLKIT_GROEBNER_HPP
#define NULLKIT_GROEBNER_HPP

#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "nullkit/linalg.hpp"
#include "nullkit/poly.hpp"

namespace nullkit {

// Reduced basis: monic elements, no term of one divisible by another's lead,
// stored ascending by lead monomial (this fixes division tie-breaking). When
// requested, `trace[i]` expresses basis[i] as an exact combination of the
// original generators: basis[i] = sum_j trace[i][j] * input[j].
struct GroebnerBasis {
    RingPtr ring;
    MonomialOrder order;
    std::vector<Polynomial> basis;
    std::vector<Monomial> leads; // cached lead monomials, ascending
    std::optional<std::vector<std::vector<Polynomial>>> trace;
    std::vector<Polynomial> inputs; // generators the trace refers to

    bool is_unit() const { return basis.size() == 1 && basis[0].is_one(); }
};

struct Ideal {
    RingPtr ring;
    std::vector<Polynomial> gens;

    Ideal(RingPtr r, std::vector<Polynomial> g) : ring(std::move(r)), gens(std::move(g)) {
        for (const auto& p : gens) require_same_ring(ring, p.ring(), "ideal generator");
    }

    // Cached per (order, with_trace); completed bases are immutable.
    const GroebnerBasis& groebner(const MonomialOrder& order, bool with_trace,
                                  const Budgets& budgets = {}) const;

private:
    mutable std::map<std::pair<std::string, bool>, std::shared_ptr<const GroebnerBasis>> cache_;
};

// Division with remainder: p = sum quotients[i]*G.basis[i] + remainder, and no
// term of the remainder is divisible by any lead of G. Deterministic: the
// first basis element (ascending lead order) whose lead divides is used.
std::pair<Polynomial, std::vector<Polynomial>> normal_form(const Polynomial& p,
                                                           const GroebnerBasis& g);

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                         bool with_trace, const Budgets& budgets = {});

// Membership via normal form; when true and the basis carries a trace, also
// returns cofactors c with p = sum c[j]*gens[j], re-verified by expansion.
std::pair<bool, std::optional<std::vector<Polynomial>>> ideal_member(
    const Polynomial& p, const Ideal& ideal, bool want_cofactors = false,
    const Budgets& budgets = {});

// True iff p vanishes on the zero set of the ideal: 1 in I + (1 - y*p) for a
// fresh variable y.
bool radical_member(const Polynomial& p, const Ideal& ideal, const Budgets& budgets = {});

// Generated by all k-fold products of generators.
Ideal ideal_power(const Ideal& ideal, int k);

// I cap J via t*I + (1-t)*J and elimination of t.
Ideal intersect_ideals(const Ideal& a, const Ideal& b, const Budgets& budgets = {});

// Bounded-degree membership by exact linear algebra: true iff p = sum c_j f_j
// with deg(c_j f_j) <= degree_cap. A cap below deg(p) simply yields false;
// this is a bounded test, not full membership.
bool macaulay_member(const Polynomial& p, const Ideal& ideal, long long degree_cap,
                     const Budgets& budgets = {});

// Monomials of the ring with total degree <= cap (resp. == deg), sorted
// ascending by (total degree, lex); shared by the Macaulay and certificate
// matrix builders.
std::vector<Monomial> monomials_up_to_degree(int arity, long long cap);
std::vector<Monomial> monomials_of_degree(int arity, long long deg);

} // namespace nullkit

#endif
