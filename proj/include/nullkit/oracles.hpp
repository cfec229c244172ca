// oracles.hpp: independent cross-check routes for the combinatorial geometry.
//
// The facet machinery in newton.cpp is validated against membership witnesses
// that never look at facets:
//   - closure_witness solves the exact rational feasibility problem
//     "u in conv(generator exponents) + orthant" by basic-solution enumeration
//     (bounded polytope, so feasibility means some vertex exists); the witness
//     scaled by the lcm k of its denominators gives an exact factorization
//     x^{k u} in J^{k l}, verified in integer arithmetic.
//   - monomial_power_member (monomial_ideal.hpp) provides the counting route
//     x^{k u} in J^{k l} for concrete small k.
#ifndef NULLKIT_ORACLES_HPP
#define NULLKIT_ORACLES_HPP

#include <optional>

#include "nullkit/linalg.hpp"
#include "nullkit/monomial_ideal.hpp"

namespace nullkit {

struct ClosureWitness {
    std::vector<Rational> lambda; // barycentric weights over the generators, sum = level
    long long denominator_lcm = 1;
};

// Does u lie in level * (conv(exponents of J) + orthant)? Returns the exact
// rational certificate when it does, nullopt when the region excludes u.
std::optional<ClosureWitness> closure_witness(const Monomial& u, const MonomialIdeal& ideal,
                                              long long level = 1,
                                              const Budgets& budgets = {});

// Verifies x^{k u} in J^{k * level} for k = the witness denominator lcm, by
// exact integer arithmetic on the scaled weights.
bool verify_closure_witness(const Monomial& u, const MonomialIdeal& ideal, long long level,
                            const ClosureWitness& w);

} // namespace nullkit

#endif
