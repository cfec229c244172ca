// certificate.hpp: Nullstellensatz certificates 1 = sum g_j f_j by exact
// degree-capped linear algebra, plus the degree-bound bookkeeping.
#ifndef NULLKIT_CERTIFICATE_HPP
#define NULLKIT_CERTIFICATE_HPP

#include <optional>
#include <vector>

#include "nullkit/groebner.hpp"
#include "nullkit/parse.hpp"

namespace nullkit {

struct CertificateProblem {
    ProblemInstance instance;
    long long max_degree = 0;        // d: max total degree of the generators
    std::vector<int> multidegrees;   // per-variable maxima over the generators

    static CertificateProblem from_instance(ProblemInstance inst);
    int arity() const { return instance.ring->arity(); }
};

// Verified at construction: the cofactors expand to exactly 1.
struct Certificate {
    std::vector<Polynomial> cofactors;
    long long achieved_degree = 0; // max_j deg(g_j f_j)

    static Certificate make_verified(const std::vector<Polynomial>& gens,
                                     std::vector<Polynomial> cofactors);
};

struct DegreeProbe {
    long long degree = 0;
    bool solvable = false;
    std::size_t rows = 0, cols = 0;
};

struct DegreeSearchReport {
    std::optional<long long> minimal_degree;
    long long cap = 0;
    Integer bound_kollar = 0;                 // d^n
    std::optional<Integer> bound_sparse;      // (n+1)! * prod d_k, when all d_k >= 1
    std::vector<DegreeProbe> probes;          // ascending scan trace
    std::optional<long long> aborted_at;      // resource abort during the scan
    std::optional<Certificate> certificate;
    bool within_kollar = false;
    bool within_sparse = false;
};

// True iff the generators have no common zero (reduced basis is {1}).
bool assert_zero_free(const CertificateProblem& problem, const Budgets& budgets = {});

// Exact linear system for cofactors with deg(g_j f_j) <= degree; columns are
// (generator, monomial) ordered by generator then (degree, lex), and the
// returned solution zeroes every free column, which makes the certificate
// canonical. Systems wider than 10^4 columns refuse to run unless forced.
std::optional<Certificate> certificate_at_degree(const CertificateProblem& problem,
                                                 long long degree,
                                                 const Budgets& budgets = {},
                                                 bool force = false);

// Ascending scan for the least solvable degree; solvability of minimal+1 is
// re-probed so the monotonicity claim is checked on every search, not assumed.
DegreeSearchReport minimal_certificate_degree(const CertificateProblem& problem, long long cap,
                                              const Budgets& budgets = {}, bool force = false);

// Certificate read off the Buchberger trace of the element 1; degree-blind but
// fast, and exactly verified like every certificate.
Certificate gb_trace_certificate(const CertificateProblem& problem, const Budgets& budgets = {});

// d^n and, when per-variable degrees are given and all positive,
// (n+1)! * d_1 * ... * d_n.
std::pair<Integer, std::optional<Integer>> bound_calculator(
    int n, long long d, const std::optional<std::vector<int>>& dvec = std::nullopt);

} // namespace nullkit

#endif
