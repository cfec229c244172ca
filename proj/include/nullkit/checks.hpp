// checks.hpp: machine checks of the containment and degree statements for
// monomial ideals. Each check returns a verdict with a concrete witness
// monomial on failure; preconditions that a statement does not claim to cover
// yield a skipped verdict instead of a fabricated pass.
#ifndef NULLKIT_CHECKS_HPP
#define NULLKIT_CHECKS_HPP

#include <optional>
#include <string>
#include <vector>

#include "nullkit/multiplier.hpp"
#include "nullkit/report.hpp"

namespace nullkit {

struct CheckOutcome {
    Verdict verdict = Verdict::Skipped;
    std::string witness;
    std::string note;
};

// Skoda-type containment: the level-l multiplier ideal lies in J^k, claimed
// for l >= min(m, n) + k - 1.
CheckOutcome check_skoda(const MonomialIdeal& ideal, long long level, int k,
                         const Budgets& budgets = {});

// Intersection of symbolic powers at the given multiplier lies in J, claimed
// for multiplier >= min(m, n). With enforce_precondition=false the sweep runs
// at any multiplier (used to document the counterexample at multiplier 1).
CheckOutcome check_symbolic_in_ideal(const MonomialIdeal& ideal, long long multiplier,
                                     bool enforce_precondition = true,
                                     const Budgets& budgets = {});

// Intersection of symbolic powers at level l lies in the level-l multiplier
// ideal; claimed for every l >= 1.
CheckOutcome check_symbolic_in_multiplier(const MonomialIdeal& ideal, long long level,
                                          const Budgets& budgets = {});

struct LocalNullstellensatzOutcome {
    CheckOutcome ideal_inclusion;
    std::vector<std::pair<long long, CheckOutcome>> multiplier_inclusions;
};
LocalNullstellensatzOutcome check_local_nullstellensatz(const MonomialIdeal& ideal,
                                                        long long multiplier,
                                                        const std::vector<long long>& levels,
                                                        const Budgets& budgets = {});

// Integral closure of J^min(m,n) lies in J.
CheckOutcome check_brianconskoda(const MonomialIdeal& ideal, const Budgets& budgets = {});

// Distinguished centers of a projective monomial ideal (ring variables are the
// N = n+1 homogeneous coordinates) and the bound sum r_i * d^dim(Z_i) <= d^n.
struct ProjectiveDatum {
    std::vector<int> support;           // homogeneous coordinate indices cut out
    std::vector<long long> coefficients; // repetitions kept, sorted
    int dimension = 0;                  // dimension inside P^n
};
struct DegreeBoundOutcome {
    CheckOutcome outcome;
    std::vector<ProjectiveDatum> data;
    Integer sum = 0;
    Integer bound = 0;
    bool equality = false;
};
DegreeBoundOutcome check_degree_bound(const MonomialIdeal& ideal, long long degree,
                                      const Budgets& budgets = {});

// Report-only probe: does the radical power with exponent max(r_i) (instead of
// n * max(r_i)) already land in J? Never asserted; per-instance answer in the
// note ("suffices" / "needs-factor").
CheckOutcome corollary_exponent_probe(const MonomialIdeal& ideal, const Budgets& budgets = {});

} // namespace nullkit

#endif
