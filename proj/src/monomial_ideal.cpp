#include "nullkit/monomial_ideal.hpp"

#include <algorithm>

namespace nullkit {

std::vector<Monomial> minimalize_monomials(std::vector<Monomial> monomials) {
    std::sort(monomials.begin(), monomials.end());
    monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
    std::vector<Monomial> keep;
    for (std::size_t i = 0; i < monomials.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < monomials.size() && !dominated; ++j)
            if (i != j && monomials[j].divides(monomials[i]) && monomials[j] != monomials[i])
                dominated = true;
        if (!dominated) keep.push_back(monomials[i]);
    }
    std::sort(keep.begin(), keep.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() > b.degree();
        return a > b;
    });
    return keep;
}

MonomialIdeal MonomialIdeal::make(RingPtr ring, std::vector<Monomial> monomials) {
    if (monomials.empty()) throw error("monomial ideal needs at least one generator");
    for (const auto& m : monomials)
        if (m.arity() != ring->arity()) throw ring_error("monomial arity does not match ring");
    return MonomialIdeal{std::move(ring), minimalize_monomials(std::move(monomials))};
}

std::optional<MonomialIdeal> MonomialIdeal::from_instance(const ProblemInstance& inst) {
    std::vector<Monomial> ms;
    for (const auto& g : inst.generators) {
        if (!g.is_term()) return std::nullopt;
        ms.push_back(g.terms().begin()->first);
    }
    return make(inst.ring, std::move(ms));
}

MonomialIdeal MonomialIdeal::power(int k) const {
    if (k < 1) throw error("monomial ideal power: exponent must be >= 1");
    std::vector<Monomial> cur = gens;
    for (int i = 1; i < k; ++i) {
        std::vector<Monomial> next;
        next.reserve(cur.size() * gens.size());
        for (const auto& a : cur)
            for (const auto& b : gens) next.push_back(a * b);
        cur = minimalize_monomials(std::move(next));
    }
    return MonomialIdeal{ring, std::move(cur)};
}

MonomialIdeal MonomialIdeal::radical() const {
    std::vector<Monomial> sq;
    for (const auto& g : gens) {
        Monomial m = g;
        for (auto& e : m.exps) e = e > 0 ? 1 : 0;
        sq.push_back(std::move(m));
    }
    return MonomialIdeal{ring, minimalize_monomials(std::move(sq))};
}

std::vector<Polynomial> MonomialIdeal::to_polynomials() const {
    std::vector<Polynomial> out;
    for (const auto& g : gens) out.emplace_back(ring, g, Rational(1));
    return out;
}

bool monomial_power_member(const Monomial& u, const MonomialIdeal& ideal, int k) {
    if (k <= 0) return true;
    const auto& gens = ideal.gens;
    // Assign multiplicities c_g with sum k and sum c_g * exp(g) <= u.
    std::vector<int> slack = u.exps;
    auto rec = [&](auto&& self, std::size_t gi, int left) -> bool {
        if (left == 0) return true;
        if (gi == gens.size()) return false;
        int fit = left;
        for (int i = 0; i < ideal.arity() && fit > 0; ++i)
            if (gens[gi][i] > 0) fit = std::min(fit, slack[i] / gens[gi][i]);
        for (int c = fit; c >= 0; --c) {
            for (int i = 0; i < ideal.arity(); ++i) slack[i] -= c * gens[gi][i];
            bool ok = self(self, gi + 1, left - c);
            for (int i = 0; i < ideal.arity(); ++i) slack[i] += c * gens[gi][i];
            if (ok) return true;
        }
        return false;
    };
    return rec(rec, 0, k);
}

} // namespace nullkit
