#include "nullkit/certificate.hpp"

#include <algorithm>

namespace nullkit {

namespace {
constexpr std::size_t kUnforcedColumnLimit = 10000;
}

CertificateProblem CertificateProblem::from_instance(ProblemInstance inst) {
    if (inst.generators.empty()) throw error("certificate problem needs generators");
    CertificateProblem p;
    p.multidegrees.assign(inst.ring->arity(), 0);
    for (const auto& g : inst.generators) {
        p.max_degree = std::max(p.max_degree, g.degree());
        auto md = g.multidegree();
        for (std::size_t i = 0; i < md.size(); ++i)
            p.multidegrees[i] = std::max(p.multidegrees[i], md[i]);
    }
    if (p.max_degree < 1) throw error("certificate problem needs a non-constant generator");
    p.instance = std::move(inst);
    return p;
}

Certificate Certificate::make_verified(const std::vector<Polynomial>& gens,
                                       std::vector<Polynomial> cofactors) {
    if (gens.size() != cofactors.size())
        throw internal_error("certificate: cofactor count mismatch");
    Polynomial sum = Polynomial::zero(gens.front().ring());
    long long achieved = 0;
    for (std::size_t j = 0; j < gens.size(); ++j) {
        Polynomial term = cofactors[j] * gens[j];
        achieved = std::max(achieved, term.degree());
        sum = sum + term;
    }
    if (!sum.is_one()) throw internal_error("certificate expansion is not 1");
    Certificate c;
    c.cofactors = std::move(cofactors);
    c.achieved_degree = achieved;
    return c;
}

bool assert_zero_free(const CertificateProblem& problem, const Budgets& budgets) {
    return buchberger(problem.instance.generators, MonomialOrder::grevlex(), false, budgets)
        .is_unit();
}

std::optional<Certificate> certificate_at_degree(const CertificateProblem& problem,
                                                 long long degree, const Budgets& budgets,
                                                 bool force) {
    const auto& gens = problem.instance.generators;
    const int n = problem.arity();
    if (degree < problem.max_degree) return std::nullopt;

    struct Column {
        std::size_t gen;
        Monomial mult;
    };
    std::vector<Column> cols;
    for (std::size_t j = 0; j < gens.size(); ++j) {
        long long room = degree - gens[j].degree();
        for (const auto& m : monomials_up_to_degree(n, room)) cols.push_back({j, m});
    }
    if (!force && cols.size() > kUnforcedColumnLimit)
        throw resource_error("certificate system has " + std::to_string(cols.size()) +
                             " columns (> " + std::to_string(kUnforcedColumnLimit) +
                             "); re-run with --force to proceed");

    std::vector<Monomial> rows = monomials_up_to_degree(n, degree);
    std::map<Monomial, std::size_t> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = i;
    budgets.check_matrix(rows.size(), cols.size() + 1);

    QMatrix a(rows.size(), std::vector<Rational>(cols.size(), Rational(0)));
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (const auto& [m, coeff] : gens[cols[c].gen].terms())
            a[row_index.at(m * cols[c].mult)][c] += coeff;
    std::vector<Rational> rhs(rows.size(), Rational(0));
    rhs[row_index.at(Monomial::one(n))] = 1;

    auto sol = solve_particular(a, rhs, budgets);
    if (!sol) return std::nullopt;

    std::vector<Polynomial> cof(gens.size(), Polynomial::zero(problem.instance.ring));
    for (std::size_t c = 0; c < cols.size(); ++c)
        if ((*sol)[c] != 0) cof[cols[c].gen].add_term(cols[c].mult, (*sol)[c]);
    return Certificate::make_verified(gens, std::move(cof));
}

DegreeSearchReport minimal_certificate_degree(const CertificateProblem& problem, long long cap,
                                              const Budgets& budgets, bool force) {
    DegreeSearchReport report;
    report.cap = cap;
    auto [kollar, sparse] = bound_calculator(problem.arity(), problem.max_degree,
                                             problem.multidegrees);
    report.bound_kollar = kollar;
    report.bound_sparse = sparse;

    for (long long d = problem.max_degree; d <= cap; ++d) {
        std::optional<Certificate> cert;
        try {
            cert = certificate_at_degree(problem, d, budgets, force);
        } catch (const resource_error&) {
            report.aborted_at = d;
            break;
        }
        report.probes.push_back({d, cert.has_value(), 0, 0});
        if (cert) {
            report.minimal_degree = d;
            report.certificate = std::move(cert);
            break;
        }
    }

    if (report.minimal_degree) {
        // Monotonicity spot check: the next degree up must stay solvable.
        long long next = *report.minimal_degree + 1;
        if (next <= cap) {
            try {
                auto again = certificate_at_degree(problem, next, budgets, force);
                report.probes.push_back({next, again.has_value(), 0, 0});
                if (!again)
                    throw internal_error("solvability is not monotone in the degree");
            } catch (const resource_error&) {
                // The monotonicity probe is best-effort under tight budgets.
            }
        }
        report.within_kollar = to_integer(*report.minimal_degree) <= report.bound_kollar;
        report.within_sparse =
            report.bound_sparse && to_integer(*report.minimal_degree) <= *report.bound_sparse;
    }
    return report;
}

Certificate gb_trace_certificate(const CertificateProblem& problem, const Budgets& budgets) {
    const auto& gens = problem.instance.generators;
    GroebnerBasis gb = buchberger(gens, MonomialOrder::grevlex(), /*with_trace=*/true, budgets);
    if (!gb.is_unit()) throw error("gb_trace_certificate: generators have a common zero");
    return Certificate::make_verified(gens, (*gb.trace)[0]);
}

std::pair<Integer, std::optional<Integer>> bound_calculator(
    int n, long long d, const std::optional<std::vector<int>>& dvec) {
    if (n < 1 || d < 1) throw error("bound_calculator: need n >= 1 and d >= 1");
    Integer kollar = pow_integer(to_integer(d), static_cast<unsigned long>(n));
    std::optional<Integer> sparse;
    if (dvec) {
        bool informative = static_cast<int>(dvec->size()) == n;
        for (int dk : *dvec) informative = informative && dk >= 1;
        if (informative) {
            Integer s = factorial(static_cast<unsigned long>(n + 1));
            for (int dk : *dvec) s *= dk;
            sparse = s;
        }
    }
    return {kollar, sparse};
}

} // namespace nullkit
