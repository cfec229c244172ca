#include "nullkit/oracles.hpp"

#include <algorithm>

namespace nullkit {

std::optional<ClosureWitness> closure_witness(const Monomial& u, const MonomialIdeal& ideal,
                                              long long level, const Budgets& budgets) {
    const int n = ideal.arity();
    const int m = ideal.generator_count();

    // Feasibility of { lambda >= 0, sum lambda = level, G^T lambda <= u } by
    // enumerating basic solutions: the sum-equality plus m-1 further active
    // constraints chosen among {lambda_i = 0} and the n coordinate rows.
    const int total = m + n;
    std::vector<int> pick;
    std::optional<ClosureWitness> found;

    auto build_and_test = [&]() -> bool {
        QMatrix sys;
        std::vector<Rational> rhs;
        sys.emplace_back(m, Rational(1)); // sum lambda = level
        rhs.push_back(to_rational(level));
        for (int c : pick) {
            std::vector<Rational> row(m, Rational(0));
            if (c < m) {
                row[c] = 1;
                rhs.emplace_back(0);
            } else {
                int coord = c - m;
                for (int i = 0; i < m; ++i) row[i] = ideal.gens[i][coord];
                rhs.emplace_back(u[coord]);
            }
            sys.push_back(std::move(row));
        }
        auto sol = solve_particular(sys, rhs, budgets);
        if (!sol) return false;
        // Basic solutions of singular subsystems come back with free variables
        // zeroed; feasibility of the full system is what matters.
        for (const auto& l : *sol)
            if (l < 0) return false;
        std::vector<Rational> total_row(n, Rational(0));
        for (int coord = 0; coord < n; ++coord) {
            Rational acc(0);
            for (int i = 0; i < m; ++i) acc += (*sol)[i] * Rational(ideal.gens[i][coord]);
            if (acc > u[coord]) return false;
        }
        Rational s(0);
        for (const auto& l : *sol) s += l;
        if (s != to_rational(level)) return false;

        ClosureWitness w;
        w.lambda = *sol;
        Integer k = 1;
        for (const auto& l : w.lambda) k = lcm(k, l.get_den());
        if (!k.fits_slong_p()) return false;
        w.denominator_lcm = k.get_si();
        found = std::move(w);
        return true;
    };

    auto rec = [&](auto&& self, int start, int left) -> bool {
        if (left == 0) return build_and_test();
        for (int c = start; c <= total - left; ++c) {
            pick.push_back(c);
            if (self(self, c + 1, left - 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    if (m == 1) {
        pick.clear();
        build_and_test();
    } else {
        rec(rec, 0, m - 1);
    }
    return found;
}

bool verify_closure_witness(const Monomial& u, const MonomialIdeal& ideal, long long level,
                            const ClosureWitness& w) {
    const long long k = w.denominator_lcm;
    Integer count = 0;
    std::vector<Integer> sum(ideal.arity(), 0);
    for (std::size_t i = 0; i < w.lambda.size(); ++i) {
        Rational scaled = w.lambda[i] * to_rational(k);
        if (scaled.get_den() != 1 || scaled < 0) return false;
        Integer c = scaled.get_num();
        count += c;
        for (int j = 0; j < ideal.arity(); ++j) sum[j] += c * ideal.gens[i][j];
    }
    if (count != to_integer(k) * to_integer(level)) return false;
    for (int j = 0; j < ideal.arity(); ++j)
        if (sum[j] > to_integer(k) * to_integer(u[j])) return false;
    // x^{k u} = (product of generators with multiplicities) * remainder, i.e.
    // membership in J^{k*level} is witnessed by count and the componentwise bound.
    return true;
}

} // namespace nullkit
