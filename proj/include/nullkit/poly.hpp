// poly.hpp: exact multivariate polynomials over Q.
//
// Terms live in an ordered map keyed by exponent vector (structural order), so
// iteration is canonical and independent of any algebraic term order; term
// orders are passed to the operations that need one. Values are immutable in
// spirit: every operation returns a fresh polynomial, which makes concurrent
// use safe without coordination.
#ifndef NULLKIT_POLY_HPP
#define NULLKIT_POLY_HPP

#include <map>
#include <vector>

#include "nullkit/monomial.hpp"
#include "nullkit/order.hpp"
#include "nullkit/rational.hpp"
#include "nullkit/ring.hpp"

namespace nullkit {

class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational>;

    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
    Polynomial(RingPtr ring, const Monomial& m, const Rational& c) : ring_(std::move(ring)) {
        if (m.arity() != ring_->arity()) throw ring_error("monomial arity does not match ring");
        if (c != 0) terms_[m] = c;
    }

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, const Rational& c) {
        int n = ring->arity();
        return Polynomial(std::move(ring), Monomial::one(n), c);
    }
    static Polynomial variable(RingPtr ring, int index, int power = 1) {
        int n = ring->arity();
        return Polynomial(std::move(ring), Monomial::var(n, index, power), 1);
    }

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second == 1;
    }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
    // Exactly one term (a nonzero scalar times a monomial).
    bool is_term() const { return terms_.size() == 1; }
    std::size_t term_count() const { return terms_.size(); }

    // Total degree; -1 for the zero polynomial.
    long long degree() const {
        long long d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    // Per-variable maximum exponent; all-zero for the zero polynomial.
    std::vector<int> multidegree() const {
        std::vector<int> md(ring_->arity(), 0);
        for (const auto& [m, c] : terms_)
            for (int i = 0; i < m.arity(); ++i) md[i] = std::max(md[i], m[i]);
        return md;
    }

    bool is_homogeneous() const {
        long long d = -1;
        for (const auto& [m, c] : terms_) {
            if (d < 0) d = m.degree();
            else if (m.degree() != d) return false;
        }
        return true;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        if (m.arity() != ring_->arity()) throw ring_error("monomial arity does not match ring");
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator-() const;
    Polynomial scaled(const Rational& c) const;
    // p * c*x^m without building a second polynomial.
    Polynomial times_term(const Monomial& m, const Rational& c) const;
    Polynomial pow(int k) const;

    bool operator==(const Polynomial& rhs) const {
        return same_ring(ring_, rhs.ring_) && terms_ == rhs.terms_;
    }

    // Largest term under the given order; caller must check is_zero first.
    std::pair<Monomial, Rational> leading_term(const MonomialOrder& order) const {
        if (terms_.empty()) throw internal_error("leading term of zero polynomial");
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (order.less(best->first, it->first)) best = it;
        return {best->first, best->second};
    }

    // Terms sorted descending under `order`.
    std::vector<std::pair<Monomial, Rational>> sorted_terms(const MonomialOrder& order) const;

    Polynomial partial_derivative(int var_index) const;

    // Lift every term with T0^(target_degree - deg); the result lives in a ring
    // with one new first variable and is homogeneous of target_degree.
    Polynomial homogenize(long long target_degree, const std::string& homog_var = "T0") const;
    // Substitute 1 for the first variable and drop it from the ring.
    Polynomial dehomogenize() const;

    // Same polynomial in `target`; var_map[i] is the index of our variable i.
    Polynomial lift(const RingPtr& target, const std::vector<int>& var_map) const;

private:
    RingPtr ring_;
    TermMap terms_;
};

} // namespace nullkit

#endif
