// monomial.hpp: exponent vectors of fixed arity.
#ifndef NULLKIT_MONOMIAL_HPP
#define NULLKIT_MONOMIAL_HPP

#include <algorithm>
#include <compare>
#include <numeric>
#include <vector>

#include "nullkit/errors.hpp"

namespace nullkit {

// A monomial is its exponent vector; the ambient ring fixes the length.
// Structural (lexicographic-on-vectors) comparison is used for container keys;
// algebraic term orders live in MonomialOrder.
struct Monomial {
    std::vector<int> exps;

    Monomial() = default;
    explicit Monomial(std::vector<int> e) : exps(std::move(e)) {
        for (int v : exps)
            if (v < 0) throw error("monomial exponent must be non-negative");
    }
    static Monomial one(int arity) { return Monomial(std::vector<int>(arity, 0)); }
    static Monomial var(int arity, int index, int power = 1) {
        std::vector<int> e(arity, 0);
        e.at(index) = power;
        return Monomial(std::move(e));
    }

    int arity() const { return static_cast<int>(exps.size()); }
    int operator[](int i) const { return exps[i]; }
    bool is_one() const {
        return std::all_of(exps.begin(), exps.end(), [](int v) { return v == 0; });
    }
    long long degree() const { return std::accumulate(exps.begin(), exps.end(), 0LL); }

    bool divides(const Monomial& other) const {
        if (exps.size() != other.exps.size()) return false;
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > other.exps[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& other) const {
        Monomial out = *this;
        for (std::size_t i = 0; i < exps.size(); ++i) out.exps[i] += other.exps[i];
        return out;
    }

    // Exact quotient; caller guarantees divisibility.
    Monomial operator/(const Monomial& other) const {
        Monomial out = *this;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            out.exps[i] -= other.exps[i];
            if (out.exps[i] < 0) throw internal_error("monomial quotient is not a monomial");
        }
        return out;
    }

    Monomial pow(int k) const {
        Monomial out = *this;
        for (auto& v : out.exps) v *= k;
        return out;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial out = a;
        for (std::size_t i = 0; i < out.exps.size(); ++i)
            out.exps[i] = std::max(out.exps[i], b.exps[i]);
        return out;
    }

    friend bool coprime(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < a.exps.size(); ++i)
            if (a.exps[i] > 0 && b.exps[i] > 0) return false;
        return true;
    }

    auto operator<=>(const Monomial& other) const = default;
};

} // namespace nullkit

#endif
