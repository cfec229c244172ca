#include "nullkit/poly.hpp"

#include <algorithm>

namespace nullkit {

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    require_same_ring(ring_, rhs.ring_, "add");
    Polynomial out = *this;
    for (const auto& [m, c] : rhs.terms_) out.add_term(m, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    require_same_ring(ring_, rhs.ring_, "sub");
    Polynomial out = *this;
    for (const auto& [m, c] : rhs.terms_) out.add_term(m, -c);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    require_same_ring(ring_, rhs.ring_, "mul");
    Polynomial out(ring_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : rhs.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial out(ring_);
    if (c == 0) return out;
    for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
    return out;
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const {
    Polynomial out(ring_);
    if (c == 0) return out;
    for (const auto& [tm, tc] : terms_) out.terms_.emplace(tm * m, tc * c);
    return out;
}

Polynomial Polynomial::pow(int k) const {
    if (k < 0) throw error("polynomial power must be non-negative");
    Polynomial out = constant(ring_, 1);
    for (int i = 0; i < k; ++i) out = out * *this;
    return out;
}

std::vector<std::pair<Monomial, Rational>> Polynomial::sorted_terms(const MonomialOrder& order) const {
    std::vector<std::pair<Monomial, Rational>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(),
              [&order](const auto& a, const auto& b) { return order.less(b.first, a.first); });
    return out;
}

Polynomial Polynomial::partial_derivative(int var_index) const {
    if (var_index < 0 || var_index >= ring_->arity())
        throw error("partial derivative: variable index out of range");
    Polynomial out(ring_);
    for (const auto& [m, c] : terms_) {
        int e = m[var_index];
        if (e == 0) continue;
        Monomial dm = m;
        dm.exps[var_index] -= 1;
        out.add_term(dm, c * e);
    }
    return out;
}

Polynomial Polynomial::homogenize(long long target_degree, const std::string& homog_var) const {
    if (target_degree < std::max<long long>(degree(), 0))
        throw error("homogenize: target degree below polynomial degree");
    std::string name;
    RingPtr lifted = extend_ring(ring_, homog_var, /*front=*/true, &name);
    Polynomial out(lifted);
    for (const auto& [m, c] : terms_) {
        std::vector<int> e;
        e.reserve(m.arity() + 1);
        e.push_back(static_cast<int>(target_degree - m.degree()));
        e.insert(e.end(), m.exps.begin(), m.exps.end());
        out.add_term(Monomial(std::move(e)), c);
    }
    return out;
}

Polynomial Polynomial::dehomogenize() const {
    RingPtr lowered = drop_variable(ring_, 0);
    Polynomial out(lowered);
    for (const auto& [m, c] : terms_) {
        std::vector<int> e(m.exps.begin() + 1, m.exps.end());
        out.add_term(Monomial(std::move(e)), c);
    }
    return out;
}

Polynomial Polynomial::lift(const RingPtr& target, const std::vector<int>& var_map) const {
    if (static_cast<int>(var_map.size()) != ring_->arity())
        throw ring_error("lift: variable map has wrong length");
    Polynomial out(target);
    for (const auto& [m, c] : terms_) {
        std::vector<int> e(target->arity(), 0);
        for (int i = 0; i < m.arity(); ++i) e.at(var_map[i]) = m[i];
        out.add_term(Monomial(std::move(e)), c);
    }
    return out;
}

} // namespace nullkit
