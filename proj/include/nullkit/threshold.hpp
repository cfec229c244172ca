// threshold.hpp: minimal monomial generators of regions {u >= 0 : A u >= t}
// with non-negative integer coefficient rows.
//
// Such regions are exactly the up-closed sets cut out by monomial valuations,
// which covers integral closures, multiplier-type ideals and symbolic-power
// intersections. Minimality of a candidate is decidable locally (u is a
// minimal generator iff u satisfies the constraints and no u - e_i does), so
// the enumeration never needs a pairwise antichain pass.
#ifndef NULLKIT_THRESHOLD_HPP
#define NULLKIT_THRESHOLD_HPP

#include <optional>
#include <vector>

#include "nullkit/monomial.hpp"

namespace nullkit {
struct Budgets;

struct ThresholdConstraint {
    std::vector<long long> coeffs; // componentwise >= 0
    long long threshold = 0;       // <coeffs, u> >= threshold

    long long value_at(const std::vector<int>& u) const {
        long long v = 0;
        for (std::size_t i = 0; i < coeffs.size(); ++i) v += coeffs[i] * u[i];
        return v;
    }
};

bool threshold_member(const std::vector<ThresholdConstraint>& cons, const Monomial& u);

// Every coordinate of a minimal generator is bounded by
// max_j ceil(t_j / a_{j,i}) (lowering a coordinate past that bound cannot
// leave the region), so enumeration over these intrinsic bounds is complete.
long long threshold_intrinsic_cap(const std::vector<ThresholdConstraint>& cons);

// Complete list of minimal generators. If `cap` is given and some generator
// needs a coordinate beyond it, throws cap_error instead of returning a
// silently truncated list.
std::vector<Monomial> minimal_threshold_generators(const std::vector<ThresholdConstraint>& cons,
                                                   int arity,
                                                   std::optional<long long> cap,
                                                   const Budgets& budgets);

} // namespace nullkit

#endif
