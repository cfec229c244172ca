// multiplier.hpp: integral closures, multiplier-type ideals and symbolic powers
// of coordinate subspaces, all through Newton-polyhedron facet inequalities.
//
// For a monomial ideal J with facet data (a, b):
//   x^u lies in the integral closure of J^l      iff <a,u> >= l*b on every facet;
//   x^u lies in the level-l multiplier ideal m(J,l) iff <a, u+1> > l*b on every
//     non-coordinate facet (the all-ones shift staying strictly inside l times
//     the polyhedron; coordinate facets hold automatically since u+1 > 0).
// The strict-interior criterion is the standard combinatorial formula for
// monomial multiplier ideals; the containment chains checked in the suites
// (J^l inside closure(J^l), m(J,l) inside closure(J^l), Skoda-type m(J,l)
// inside J^k) validate it against independent routes rather than assuming it.
#ifndef NULLKIT_MULTIPLIER_HPP
#define NULLKIT_MULTIPLIER_HPP

#include "nullkit/groebner.hpp"
#include "nullkit/newton.hpp"
#include "nullkit/threshold.hpp"

namespace nullkit {

struct MultiplierIdealQuery {
    MonomialIdeal base;
    long long level = 1; // >= 1
};

bool integral_closure_member(const Monomial& u, const NewtonPolyhedron& np, long long level);
bool integral_closure_member(const Monomial& u, const MonomialIdeal& ideal, long long level);
std::vector<Monomial> integral_closure_generators(const NewtonPolyhedron& np, long long level,
                                                  std::optional<long long> cap = std::nullopt,
                                                  const Budgets& budgets = {});

bool multiplier_ideal_member(const Monomial& u, const NewtonPolyhedron& np, long long level);
bool multiplier_ideal_member(const Monomial& u, const MultiplierIdealQuery& q);
std::vector<Monomial> multiplier_ideal_generators(const MultiplierIdealQuery& q,
                                                  std::optional<long long> cap = std::nullopt,
                                                  const Budgets& budgets = {});
std::vector<Monomial> multiplier_ideal_generators(const NewtonPolyhedron& np, long long level,
                                                  std::optional<long long> cap = std::nullopt,
                                                  const Budgets& budgets = {});

// Vanishing order >= r along the coordinate subspace {x_i = 0 : i in support}:
// every monomial must have support-degree at least r.
bool symbolic_power_member(const Polynomial& p, const std::vector<int>& support, long long r);
bool symbolic_power_member(const Monomial& u, const std::vector<int>& support, long long r);

// Same predicate by the derivative route: all partials of order < r in the
// support variables vanish on the subspace (membership of each partial in the
// subspace ideal is decided through the Groebner engine). Kept deliberately
// separate from the exponent-sum route; the two must agree.
bool symbolic_power_member_derivative(const Polynomial& p, const std::vector<int>& support,
                                      long long r, const Budgets& budgets = {});

// Minimal generators of the intersection of symbolic powers
// I^{<multiplier*r_j>} over the distinguished data.
std::vector<Monomial> symbolic_intersection_generators(
    const std::vector<DistinguishedDatum>& data, long long multiplier, int arity,
    std::optional<long long> cap = std::nullopt, const Budgets& budgets = {});

} // namespace nullkit

#endif
