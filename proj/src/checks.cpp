#include "nullkit/checks.hpp"

#include <algorithm>
#include <map>

namespace nullkit {

namespace {

std::string witness_string(const RingPtr& ring, const Monomial& u) {
    return format_monomial(ring, u);
}

// Exact inclusion test "threshold region inside monomial ideal" that never
// enumerates the region's generators. The complement of J is the union of
// staircase boxes {u : u_i <= beta_i}, where each finite beta_i is g_i - 1 for
// some generator g (raising it further would admit that generator). The region
// escapes J exactly when one such box that avoids every generator admits a
// region point, and because the constraints are monotone that happens exactly
// when the box corner (with unbounded coordinates pushed to the per-coordinate
// constraint bound) satisfies them. The returned witness is shrunk
// coordinatewise from the last variable to the first, which keeps it out of J
// (the complement is down-closed) and makes it canonical.
std::optional<Monomial> region_escape_witness(const std::vector<ThresholdConstraint>& cons,
                                              const MonomialIdeal& ideal) {
    const int n = ideal.arity();
    constexpr long long kInf = -1;

    std::vector<std::vector<long long>> candidates(n);
    for (int i = 0; i < n; ++i) {
        candidates[i].push_back(kInf);
        std::vector<long long> vals;
        for (const auto& g : ideal.gens)
            if (g[i] >= 1) vals.push_back(g[i] - 1);
        std::sort(vals.begin(), vals.end(), std::greater<>());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        candidates[i].insert(candidates[i].end(), vals.begin(), vals.end());
    }

    // Coordinate bound that satisfies any single constraint on its own.
    std::vector<long long> solo(n, 0);
    for (const auto& c : cons) {
        if (c.threshold <= 0) continue;
        for (int i = 0; i < n; ++i)
            if (c.coeffs[i] > 0)
                solo[i] = std::max(solo[i], (c.threshold + c.coeffs[i] - 1) / c.coeffs[i]);
    }

    std::vector<long long> beta(n, kInf);
    std::optional<Monomial> found;

    auto box_escapes = [&]() -> bool {
        for (const auto& g : ideal.gens) {
            bool fits = true;
            for (int i = 0; i < n && fits; ++i)
                fits = beta[i] == kInf || g[i] <= beta[i];
            if (fits) return false; // box intersects the ideal
        }
        for (const auto& c : cons) {
            bool open = false; // some coordinate of the constraint is unbounded
            long long best = 0;
            for (int i = 0; i < n; ++i) {
                if (c.coeffs[i] == 0) continue;
                if (beta[i] == kInf) {
                    open = true;
                    break;
                }
                best += c.coeffs[i] * beta[i];
            }
            if (!open && best < c.threshold) return false;
        }
        return true;
    };

    auto build_witness = [&]() {
        std::vector<int> u(n);
        for (int i = 0; i < n; ++i)
            u[i] = static_cast<int>(beta[i] == kInf ? solo[i] : beta[i]);
        // Shrink from the last coordinate down; lowering keeps u outside J.
        for (int i = n - 1; i >= 0; --i) {
            long long need = 0;
            for (const auto& c : cons) {
                if (c.coeffs[i] == 0) continue;
                long long rest = 0;
                for (int k = 0; k < n; ++k)
                    if (k != i) rest += c.coeffs[k] * u[k];
                long long res = c.threshold - rest;
                if (res > 0) need = std::max(need, (res + c.coeffs[i] - 1) / c.coeffs[i]);
            }
            u[i] = static_cast<int>(need);
        }
        Monomial w{std::move(u)};
        if (!threshold_member(cons, w) || ideal.contains(w))
            throw internal_error("escape witness construction is inconsistent");
        return w;
    };

    auto rec = [&](auto&& self, int pos) -> bool {
        if (pos == n) {
            if (!box_escapes()) return false;
            found = build_witness();
            return true;
        }
        for (long long v : candidates[pos]) {
            beta[pos] = v;
            if (self(self, pos + 1)) return true;
        }
        beta[pos] = kInf;
        return false;
    };
    if (!ideal.is_unit()) rec(rec, 0);
    return found;
}

std::vector<ThresholdConstraint> symbolic_constraints(const std::vector<DistinguishedDatum>& data,
                                                      long long multiplier, int arity) {
    std::vector<ThresholdConstraint> cons;
    for (const auto& d : data) {
        ThresholdConstraint c;
        c.coeffs.assign(arity, 0);
        for (int i : d.support) c.coeffs[i] = 1;
        c.threshold = multiplier * d.coefficient;
        cons.push_back(std::move(c));
    }
    return cons;
}

} // namespace

CheckOutcome check_skoda(const MonomialIdeal& ideal, long long level, int k,
                         const Budgets& budgets) {
    const long long p = ideal.min_mn();
    if (level < p + k - 1)
        return {Verdict::Skipped, "",
                "level " + std::to_string(level) + " below min(m,n)+k-1 = " +
                    std::to_string(p + k - 1) + "; statement not claimed"};
    NewtonPolyhedron np = newton_polyhedron(ideal);
    std::vector<Monomial> gens =
        multiplier_ideal_generators(np, level, std::nullopt, budgets);
    MonomialIdeal jk = ideal.power(k);
    for (const auto& u : gens)
        if (!jk.contains(u))
            return {Verdict::Fail, witness_string(ideal.ring, u),
                    "multiplier-ideal generator escapes J^" + std::to_string(k)};
    return {Verdict::Pass, "",
            std::to_string(gens.size()) + " generators checked at level " +
                std::to_string(level)};
}

CheckOutcome check_symbolic_in_ideal(const MonomialIdeal& ideal, long long multiplier,
                                     bool enforce_precondition, const Budgets& budgets) {
    const long long p = ideal.min_mn();
    if (enforce_precondition && multiplier < p)
        return {Verdict::Skipped, "",
                "multiplier " + std::to_string(multiplier) + " below min(m,n) = " +
                    std::to_string(p) + "; statement not claimed"};
    (void)budgets;
    auto data = distinguished_data(ideal);
    auto cons = symbolic_constraints(data, multiplier, ideal.arity());
    if (auto escape = region_escape_witness(cons, ideal))
        return {Verdict::Fail, witness_string(ideal.ring, *escape),
                "symbolic-intersection element escapes J at multiplier " +
                    std::to_string(multiplier)};
    return {Verdict::Pass, "",
            "no escape over " + std::to_string(data.size()) + " centers at multiplier " +
                std::to_string(multiplier)};
}

CheckOutcome check_symbolic_in_multiplier(const MonomialIdeal& ideal, long long level,
                                          const Budgets& budgets) {
    if (level < 1) return {Verdict::Skipped, "", "level must be >= 1"};
    NewtonPolyhedron np = newton_polyhedron(ideal);
    auto data = distinguished_data(np);

    // Per-facet minimum: over {sum_{i in S} u_i >= level*r} the functional
    // <a, u + 1> attains its minimum at level*r times the cheapest support
    // coordinate, so the strict inequality for facet j follows already from
    // facet j's own symbolic constraint. If that certificate holds for every
    // facet, the intersection is included; otherwise fall back to the
    // generator sweep for a concrete witness.
    bool per_facet = true;
    auto bounded = np.bounded_facets();
    for (const auto* f : bounded) {
        long long cheapest = 0;
        long long shift = 0;
        for (long long a : f->normal) {
            if (a > 0) cheapest = cheapest == 0 ? a : std::min(cheapest, a);
            shift += a;
        }
        if (level * f->offset * cheapest + shift <= level * f->offset) {
            per_facet = false;
            break;
        }
    }
    if (per_facet)
        return {Verdict::Pass, "",
                "per-facet minimum certificate over " + std::to_string(bounded.size()) +
                    " facets at level " + std::to_string(level)};

    std::vector<Monomial> gens =
        symbolic_intersection_generators(data, level, ideal.arity(), std::nullopt, budgets);
    for (const auto& u : gens)
        if (!multiplier_ideal_member(u, np, level))
            return {Verdict::Fail, witness_string(ideal.ring, u),
                    "symbolic-intersection generator escapes the level-" +
                        std::to_string(level) + " multiplier ideal"};
    return {Verdict::Pass, "",
            std::to_string(gens.size()) + " generators checked at level " +
                std::to_string(level)};
}

LocalNullstellensatzOutcome check_local_nullstellensatz(const MonomialIdeal& ideal,
                                                        long long multiplier,
                                                        const std::vector<long long>& levels,
                                                        const Budgets& budgets) {
    LocalNullstellensatzOutcome out;
    out.ideal_inclusion = check_symbolic_in_ideal(ideal, multiplier, true, budgets);
    for (long long l : levels)
        out.multiplier_inclusions.emplace_back(l, check_symbolic_in_multiplier(ideal, l, budgets));
    return out;
}

CheckOutcome check_brianconskoda(const MonomialIdeal& ideal, const Budgets& budgets) {
    const long long p = ideal.min_mn();
    NewtonPolyhedron np = newton_polyhedron(ideal);
    std::vector<Monomial> gens = integral_closure_generators(np, p, std::nullopt, budgets);
    for (const auto& u : gens)
        if (!ideal.contains(u))
            return {Verdict::Fail, witness_string(ideal.ring, u),
                    "closure generator of J^" + std::to_string(p) + " escapes J"};
    return {Verdict::Pass, "",
            std::to_string(gens.size()) + " closure generators checked at power " +
                std::to_string(p)};
}

DegreeBoundOutcome check_degree_bound(const MonomialIdeal& ideal, long long degree,
                                      const Budgets& budgets) {
    const int nvars = ideal.arity(); // homogeneous coordinates of P^(nvars-1)
    const int dim_ambient = nvars - 1;
    if (nvars < 2)
        throw input_class_error("degree bound needs at least two homogeneous coordinates");
    if (degree < 1) throw input_class_error("degree bound needs degree >= 1");
    for (const auto& g : ideal.gens)
        if (g.degree() > degree)
            throw input_class_error("generator degree exceeds the declared degree");

    // Bring every generator to degree exactly `degree` by multiplying with all
    // complementary-degree monomials; the sections then sit in one linear
    // series, which is the situation the bound is stated for.
    std::vector<Monomial> padded;
    for (const auto& g : ideal.gens) {
        long long gap = degree - g.degree();
        if (gap == 0) {
            padded.push_back(g);
        } else {
            for (const auto& m : monomials_of_degree(nvars, gap)) padded.push_back(g * m);
        }
    }
    padded = minimalize_monomials(std::move(padded));

    // Distinguished data on every standard affine chart, with supports mapped
    // back to homogeneous coordinate indices.
    std::map<std::vector<int>, std::map<int, std::vector<long long>>> per_chart;
    for (int c = 0; c < nvars; ++c) {
        std::vector<Monomial> chart_gens;
        for (const auto& g : padded) {
            std::vector<int> e = g.exps;
            e.erase(e.begin() + c);
            chart_gens.emplace_back(std::move(e));
        }
        RingPtr chart_ring = drop_variable(ideal.ring, c);
        MonomialIdeal chart_ideal = MonomialIdeal::make(chart_ring, std::move(chart_gens));
        for (const auto& d : distinguished_data(chart_ideal)) {
            std::vector<int> proj_support;
            for (int q : d.support) proj_support.push_back(q < c ? q : q + 1);
            per_chart[proj_support][c].push_back(d.coefficient);
        }
    }

    DegreeBoundOutcome out;
    out.bound = pow_integer(to_integer(degree), static_cast<unsigned long>(dim_ambient));
    for (auto& [support, charts] : per_chart) {
        // The same center must look identical from every chart that sees it.
        std::vector<long long> merged;
        bool first = true;
        for (int c = 0; c < nvars; ++c) {
            if (std::find(support.begin(), support.end(), c) != support.end()) continue;
            auto it = charts.find(c);
            std::vector<long long> coeffs = it == charts.end() ? std::vector<long long>{}
                                                               : it->second;
            std::sort(coeffs.begin(), coeffs.end());
            if (first) {
                merged = coeffs;
                first = false;
            } else if (coeffs != merged) {
                throw internal_error("chart coefficient mismatch for a distinguished center");
            }
        }
        if (merged.empty()) continue;
        ProjectiveDatum pd;
        pd.support = support;
        pd.coefficients = merged;
        pd.dimension = dim_ambient - static_cast<int>(support.size());
        Integer weight = pow_integer(to_integer(degree), static_cast<unsigned long>(pd.dimension));
        for (long long r : merged) out.sum += to_integer(r) * weight;
        out.data.push_back(std::move(pd));
    }

    out.equality = out.sum == out.bound;
    if (out.sum <= out.bound) {
        out.outcome = {Verdict::Pass, "",
                       "sum " + to_string(out.sum) + " <= bound " + to_string(out.bound)};
    } else {
        out.outcome = {Verdict::Fail, "",
                       "sum " + to_string(out.sum) + " exceeds bound " + to_string(out.bound)};
    }
    (void)budgets;
    return out;
}

CheckOutcome corollary_exponent_probe(const MonomialIdeal& ideal, const Budgets& budgets) {
    auto data = distinguished_data(ideal);
    if (data.empty()) return {Verdict::Skipped, "", "no distinguished centers (unit ideal)"};
    long long max_coeff = 0;
    for (const auto& d : data) max_coeff = std::max(max_coeff, d.coefficient);
    if (max_coeff > 40)
        return {Verdict::Skipped, "",
                "probe skipped: max coefficient " + std::to_string(max_coeff) +
                    " too large to enumerate"};
    MonomialIdeal rad = ideal.radical();
    MonomialIdeal rad_pow = max_coeff == 1 ? rad : rad.power(static_cast<int>(max_coeff));
    bool suffices = true;
    for (const auto& u : rad_pow.gens)
        if (!ideal.contains(u)) {
            suffices = false;
            break;
        }
    (void)budgets;
    return {Verdict::Pass, "",
            suffices ? "exponent max-r suffices" : "exponent max-r needs the dimension factor"};
}

} // namespace nullkit
