// newton.hpp: Newton polyhedra of monomial ideals and the valuation data they
// carry.
//
// The polyhedron of J is conv(generator exponents) + the non-negative orthant.
// Its facet inequalities <a,u> >= b with primitive a >= 0 are recovered exactly
// from supporting hyperplanes through size-n subsets of (generator exponents
// union coordinate directions). Facets with b > 0 are exactly the non-coordinate
// ones; each carries the monomial valuation v_a with v_a(J) = b, and its normal
// support names a coordinate subspace: together these are the centers and
// multiplicities of the exceptional components of the normalized blow-up along
// J. That correspondence is the standard Rees-valuation description of a
// monomial ideal; tests pin it against the (x^a, y^a) model, where the single
// center is the origin with multiplicity a.
#ifndef NULLKIT_NEWTON_HPP
#define NULLKIT_NEWTON_HPP

#include <vector>

#include "nullkit/monomial_ideal.hpp"

namespace nullkit {

struct FacetDatum {
    std::vector<long long> normal; // primitive, componentwise >= 0, not all zero
    long long offset = 0;          // min over generators g of <normal, exp g>
    bool bounded = false;          // false exactly for the coordinate facets u_i >= 0

    std::vector<int> support() const {
        std::vector<int> s;
        for (std::size_t i = 0; i < normal.size(); ++i)
            if (normal[i] > 0) s.push_back(static_cast<int>(i));
        return s;
    }
    long long value_at(const Monomial& u) const {
        long long v = 0;
        for (std::size_t i = 0; i < normal.size(); ++i) v += normal[i] * u[static_cast<int>(i)];
        return v;
    }
};

struct NewtonPolyhedron {
    int arity = 0;
    std::vector<Monomial> vertices;  // generator exponents that are vertices
    std::vector<FacetDatum> facets;  // complete irredundant list, coordinate facets included

    bool contains(const Monomial& u) const {
        for (const auto& f : facets)
            if (f.value_at(u) < f.offset) return false;
        return true;
    }
    std::vector<const FacetDatum*> bounded_facets() const {
        std::vector<const FacetDatum*> out;
        for (const auto& f : facets)
            if (f.bounded) out.push_back(&f);
        return out;
    }
};

// One distinguished center per non-coordinate facet: the coordinate subspace
// {x_i = 0 : i in support} with multiplicity the facet valuation of the ideal.
// Repetitions (several facets with one support) are kept.
struct DistinguishedDatum {
    std::vector<int> support;
    long long coefficient = 0;
    int dimension = 0; // arity - |support|
    int degree = 1;    // coordinate subspaces are linear
};

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal, int max_arity = 6,
                                   const Budgets& budgets = {});

std::vector<DistinguishedDatum> distinguished_data(const NewtonPolyhedron& np);
std::vector<DistinguishedDatum> distinguished_data(const MonomialIdeal& ideal);

} // namespace nullkit

#endif
