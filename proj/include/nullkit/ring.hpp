// ring.hpp: polynomial ring descriptors (variable names, arity).
#ifndef NULLKIT_RING_HPP
#define NULLKIT_RING_HPP

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nullkit/errors.hpp"

namespace nullkit {

struct PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

struct PolyRing {
    std::vector<std::string> vars;

    static RingPtr make(std::vector<std::string> names) {
        if (names.empty()) throw error("ring needs at least one variable");
        std::set<std::string> seen;
        for (const auto& n : names) {
            if (n.empty()) throw error("ring variable name must be non-empty");
            if (!seen.insert(n).second) throw error("duplicate ring variable: " + n);
        }
        auto r = std::make_shared<PolyRing>();
        r->vars = std::move(names);
        return r;
    }

    int arity() const { return static_cast<int>(vars.size()); }

    std::optional<int> index_of(const std::string& name) const {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return static_cast<int>(i);
        return std::nullopt;
    }

    // A name not already used, derived from `base` by appending digits.
    std::string fresh_name(const std::string& base) const {
        if (!index_of(base)) return base;
        for (int k = 0;; ++k) {
            std::string cand = base + std::to_string(k);
            if (!index_of(cand)) return cand;
        }
    }
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && a->vars == b->vars);
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b, const char* what) {
    if (!same_ring(a, b)) throw ring_error(std::string(what) + ": operands in different rings");
}

// Ring with one extra variable (name chosen fresh from `base`) at the front or back.
inline RingPtr extend_ring(const RingPtr& ring, const std::string& base, bool front,
                           std::string* chosen = nullptr) {
    std::string name = ring->fresh_name(base);
    if (chosen) *chosen = name;
    std::vector<std::string> names = ring->vars;
    names.insert(front ? names.begin() : names.end(), name);
    return PolyRing::make(std::move(names));
}

// Ring with variable `index` removed (arity must stay >= 1).
inline RingPtr drop_variable(const RingPtr& ring, int index) {
    if (ring->arity() < 2) throw ring_error("cannot drop a variable from a univariate ring");
    std::vector<std::string> names = ring->vars;
    names.erase(names.begin() + index);
    return PolyRing::make(std::move(names));
}

} // namespace nullkit

#endif
