#include "nullkit/threshold.hpp"

#include <algorithm>

#include "nullkit/errors.hpp"

namespace nullkit {

bool threshold_member(const std::vector<ThresholdConstraint>& cons, const Monomial& u) {
    for (const auto& c : cons)
        if (c.value_at(u.exps) < c.threshold) return false;
    return true;
}

long long threshold_intrinsic_cap(const std::vector<ThresholdConstraint>& cons) {
    long long cap = 0;
    for (const auto& c : cons) {
        if (c.threshold <= 0) continue;
        for (long long a : c.coeffs)
            if (a > 0) cap = std::max(cap, (c.threshold + a - 1) / a);
    }
    return cap;
}

std::vector<Monomial> minimal_threshold_generators(const std::vector<ThresholdConstraint>& cons,
                                                   int arity,
                                                   std::optional<long long> cap,
                                                   const Budgets& budgets) {
    for (const auto& c : cons) {
        if (static_cast<int>(c.coeffs.size()) != arity)
            throw internal_error("threshold constraint arity mismatch");
        for (long long a : c.coeffs)
            if (a < 0) throw internal_error("threshold constraint with negative coefficient");
    }

    const long long intrinsic = threshold_intrinsic_cap(cons);
    if (cap && *cap < intrinsic)
        throw cap_error("exponent cap " + std::to_string(*cap) +
                        " insufficient; minimal generators may need exponents up to " +
                        std::to_string(intrinsic));
    if (arity == 0) return {};

    const std::size_t m = cons.size();
    std::vector<Monomial> out;
    std::vector<int> u(arity, 0);
    std::vector<long long> prefix(m, 0); // <a_j, u> over coordinates already fixed
    std::size_t nodes = 0;

    auto is_minimal = [&]() {
        // u is in the region by construction; minimality means every positive
        // coordinate is pinned by some constraint that u - e_i would violate.
        for (int i = 0; i < arity; ++i) {
            if (u[i] == 0) continue;
            bool pinned = false;
            for (std::size_t j = 0; j < m && !pinned; ++j)
                if (cons[j].coeffs[i] > 0 &&
                    cons[j].value_at(u) - cons[j].coeffs[i] < cons[j].threshold)
                    pinned = true;
            if (!pinned) return false;
        }
        return true;
    };

    // DFS over coordinates; bounds shrink with the residual thresholds, and the
    // last coordinate is forced to the least feasible value, so each prefix
    // yields at most one candidate.
    auto rec = [&](auto&& self, int pos) -> bool {
        if (++nodes > budgets.max_enumeration * 8)
            throw resource_error("threshold generator enumeration exceeds budget");
        if (pos == arity - 1) {
            long long need = 0;
            for (std::size_t j = 0; j < m; ++j) {
                long long res = cons[j].threshold - prefix[j];
                if (res <= 0) continue;
                long long a = cons[j].coeffs[pos];
                if (a == 0) return true; // constraint j unreachable on this branch
                need = std::max(need, (res + a - 1) / a);
            }
            u[pos] = static_cast<int>(need);
            if (is_minimal()) {
                if (out.size() >= budgets.max_enumeration)
                    throw resource_error("threshold generator enumeration exceeds budget");
                out.emplace_back(u);
            }
            u[pos] = 0;
            return true;
        }
        long long hi = 0;
        for (std::size_t j = 0; j < m; ++j) {
            long long res = cons[j].threshold - prefix[j];
            if (res <= 0) continue;
            long long a = cons[j].coeffs[pos];
            if (a > 0) hi = std::max(hi, (res + a - 1) / a);
        }
        for (long long v = 0; v <= hi; ++v) {
            u[pos] = static_cast<int>(v);
            for (std::size_t j = 0; j < m; ++j) prefix[j] += cons[j].coeffs[pos] * v;
            self(self, pos + 1);
            for (std::size_t j = 0; j < m; ++j) prefix[j] -= cons[j].coeffs[pos] * v;
        }
        u[pos] = 0;
        return true;
    };

    if (arity == 1) {
        long long need = 0;
        for (const auto& c : cons) {
            if (c.threshold <= 0) continue;
            if (c.coeffs[0] == 0) return {}; // infeasible region: zero ideal
            need = std::max(need, (c.threshold + c.coeffs[0] - 1) / c.coeffs[0]);
        }
        u[0] = static_cast<int>(need);
        out.emplace_back(u);
        return out;
    }
    rec(rec, 0);

    std::sort(out.begin(), out.end(), std::greater<>()); // staircase order, x-major
    return out;
}

} // namespace nullkit
