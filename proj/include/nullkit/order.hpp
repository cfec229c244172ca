// order.hpp: admissible monomial orders.
//
// Every order here is total, multiplication-compatible, and has 1 as least
// element (weights are required non-negative and are tie-broken by grevlex,
// which ensures admissibility even with zero weights).
#ifndef NULLKIT_ORDER_HPP
#define NULLKIT_ORDER_HPP

#include <string>
#include <vector>

#include "nullkit/monomial.hpp"

namespace nullkit {

enum class OrderKind { Lex, GrevLex, Elimination, Weighted };

class MonomialOrder {
public:
    static MonomialOrder lex() { return MonomialOrder(OrderKind::Lex); }
    static MonomialOrder grevlex() { return MonomialOrder(OrderKind::GrevLex); }
    // Eliminates the first `block` variables: any monomial involving them is
    // larger than any monomial in the remaining variables only.
    static MonomialOrder elimination(int block) {
        MonomialOrder o(OrderKind::Elimination);
        o.block_ = block;
        return o;
    }
    static MonomialOrder weighted(std::vector<long> weights) {
        for (long w : weights)
            if (w < 0) throw error("weighted order requires non-negative weights");
        MonomialOrder o(OrderKind::Weighted);
        o.weights_ = std::move(weights);
        return o;
    }

    OrderKind kind() const { return kind_; }

    // cmp < 0 means a is smaller, 0 equal, > 0 larger.
    int cmp(const Monomial& a, const Monomial& b) const {
        switch (kind_) {
        case OrderKind::Lex: return lex_cmp(a, b, 0, a.arity());
        case OrderKind::GrevLex: return grevlex_cmp(a, b, 0, a.arity());
        case OrderKind::Elimination: {
            int first = grevlex_cmp(a, b, 0, block_);
            if (first != 0) return first;
            return grevlex_cmp(a, b, block_, a.arity());
        }
        case OrderKind::Weighted: {
            long long wa = 0, wb = 0;
            for (int i = 0; i < a.arity(); ++i) {
                long w = i < static_cast<int>(weights_.size()) ? weights_[i] : 1;
                wa += static_cast<long long>(w) * a[i];
                wb += static_cast<long long>(w) * b[i];
            }
            if (wa != wb) return wa < wb ? -1 : 1;
            return grevlex_cmp(a, b, 0, a.arity());
        }
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }

    std::string name() const {
        switch (kind_) {
        case OrderKind::Lex: return "lex";
        case OrderKind::GrevLex: return "grevlex";
        case OrderKind::Elimination: return "elim(" + std::to_string(block_) + ")";
        case OrderKind::Weighted: {
            std::string s = "weighted(";
            for (std::size_t i = 0; i < weights_.size(); ++i)
                s += (i ? "," : "") + std::to_string(weights_[i]);
            return s + ")";
        }
        }
        return "?";
    }

private:
    explicit MonomialOrder(OrderKind k) : kind_(k) {}

    static int lex_cmp(const Monomial& a, const Monomial& b, int lo, int hi) {
        for (int i = lo; i < hi; ++i)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static int grevlex_cmp(const Monomial& a, const Monomial& b, int lo, int hi) {
        long long da = 0, db = 0;
        for (int i = lo; i < hi; ++i) {
            da += a[i];
            db += b[i];
        }
        if (da != db) return da < db ? -1 : 1;
        for (int i = hi - 1; i >= lo; --i)
            if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1; // larger last exponent loses
        return 0;
    }

    OrderKind kind_;
    int block_ = 0;
    std::vector<long> weights_;
};

} // namespace nullkit

#endif
