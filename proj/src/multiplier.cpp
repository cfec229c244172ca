#include "nullkit/multiplier.hpp"

namespace nullkit {

namespace {

std::vector<ThresholdConstraint> closure_constraints(const NewtonPolyhedron& np,
                                                     long long level) {
    std::vector<ThresholdConstraint> cons;
    for (const auto* f : np.bounded_facets())
        cons.push_back({f->normal, level * f->offset});
    return cons;
}

// <a, u+1> > l*b  <=>  <a, u> >= l*b - <a, 1> + 1.
std::vector<ThresholdConstraint> multiplier_constraints(const NewtonPolyhedron& np,
                                                        long long level) {
    std::vector<ThresholdConstraint> cons;
    for (const auto* f : np.bounded_facets()) {
        long long shift = 0;
        for (long long a : f->normal) shift += a;
        cons.push_back({f->normal, level * f->offset - shift + 1});
    }
    return cons;
}

} // namespace

bool integral_closure_member(const Monomial& u, const NewtonPolyhedron& np, long long level) {
    if (level < 1) throw error("integral closure level must be >= 1");
    for (const auto* f : np.bounded_facets())
        if (f->value_at(u) < level * f->offset) return false;
    return true;
}

bool integral_closure_member(const Monomial& u, const MonomialIdeal& ideal, long long level) {
    return integral_closure_member(u, newton_polyhedron(ideal), level);
}

std::vector<Monomial> integral_closure_generators(const NewtonPolyhedron& np, long long level,
                                                  std::optional<long long> cap,
                                                  const Budgets& budgets) {
    if (level < 1) throw error("integral closure level must be >= 1");
    return minimal_threshold_generators(closure_constraints(np, level), np.arity, cap, budgets);
}

bool multiplier_ideal_member(const Monomial& u, const NewtonPolyhedron& np, long long level) {
    if (level < 1) throw error("multiplier ideal level must be >= 1");
    for (const auto* f : np.bounded_facets()) {
        long long shift = 0;
        for (long long a : f->normal) shift += a;
        if (f->value_at(u) + shift <= level * f->offset) return false;
    }
    return true;
}

bool multiplier_ideal_member(const Monomial& u, const MultiplierIdealQuery& q) {
    return multiplier_ideal_member(u, newton_polyhedron(q.base), q.level);
}

std::vector<Monomial> multiplier_ideal_generators(const NewtonPolyhedron& np, long long level,
                                                  std::optional<long long> cap,
                                                  const Budgets& budgets) {
    if (level < 1) throw error("multiplier ideal level must be >= 1");
    return minimal_threshold_generators(multiplier_constraints(np, level), np.arity, cap,
                                        budgets);
}

std::vector<Monomial> multiplier_ideal_generators(const MultiplierIdealQuery& q,
                                                  std::optional<long long> cap,
                                                  const Budgets& budgets) {
    return multiplier_ideal_generators(newton_polyhedron(q.base), q.level, cap, budgets);
}

bool symbolic_power_member(const Monomial& u, const std::vector<int>& support, long long r) {
    long long order = 0;
    for (int i : support) order += u[i];
    return order >= r;
}

bool symbolic_power_member(const Polynomial& p, const std::vector<int>& support, long long r) {
    if (r <= 0) return true;
    for (const auto& [m, c] : p.terms())
        if (!symbolic_power_member(m, support, r)) return false;
    return true;
}

bool symbolic_power_member_derivative(const Polynomial& p, const std::vector<int>& support,
                                      long long r, const Budgets& budgets) {
    if (r <= 0) return true;
    if (p.is_zero()) return true;
    RingPtr ring = p.ring();
    std::vector<Polynomial> subspace;
    for (int i : support) subspace.push_back(Polynomial::variable(ring, i));
    Ideal center(ring, std::move(subspace));

    // All mixed partials of order < r in the support variables.
    std::vector<int> alpha(support.size(), 0);
    auto rec = [&](auto&& self, std::size_t pos, long long left) -> bool {
        if (pos == support.size()) {
            Polynomial d = p;
            for (std::size_t i = 0; i < support.size(); ++i)
                for (int k = 0; k < alpha[i]; ++k) d = d.partial_derivative(support[i]);
            return ideal_member(d, center, false, budgets).first;
        }
        for (long long a = 0; a <= left; ++a) {
            alpha[pos] = static_cast<int>(a);
            if (!self(self, pos + 1, left - a)) return false;
        }
        alpha[pos] = 0;
        return true;
    };
    return rec(rec, 0, r - 1);
}

std::vector<Monomial> symbolic_intersection_generators(
    const std::vector<DistinguishedDatum>& data, long long multiplier, int arity,
    std::optional<long long> cap, const Budgets& budgets) {
    if (multiplier < 0) throw error("symbolic intersection multiplier must be >= 0");
    std::vector<ThresholdConstraint> cons;
    for (const auto& d : data) {
        ThresholdConstraint c;
        c.coeffs.assign(arity, 0);
        for (int i : d.support) c.coeffs[i] = 1;
        c.threshold = multiplier * d.coefficient;
        cons.push_back(std::move(c));
    }
    return minimal_threshold_generators(cons, arity, cap, budgets);
}

} // namespace nullkit
