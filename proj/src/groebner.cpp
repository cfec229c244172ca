#include "nullkit/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace nullkit {

namespace {

// A polynomial together with its expression in terms of the original
// generators; every rewrite step is mirrored on the cofactor row, so
// poly == sum cofactors[j]*inputs[j] holds throughout.
struct Traced {
    Polynomial poly;
    std::vector<Polynomial> cofactors;
};

Traced reduce_full(Traced item, const std::vector<Polynomial>& basis,
                   const std::vector<Monomial>& leads, const MonomialOrder& order,
                   const std::vector<Traced>* basis_traced) {
    Polynomial remainder(item.poly.ring());
    Polynomial work = item.poly;
    while (!work.is_zero()) {
        auto [lm, lc] = work.leading_term(order);
        bool reduced = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (!leads[i].divides(lm)) continue;
            Monomial q = lm / leads[i];
            Rational factor = lc / basis[i].leading_term(order).second;
            work = work - basis[i].times_term(q, factor);
            if (basis_traced) {
                const Traced& src = (*basis_traced)[i];
                for (std::size_t j = 0; j < item.cofactors.size(); ++j)
                    item.cofactors[j] =
                        item.cofactors[j] - src.cofactors[j].times_term(q, factor);
            }
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder.add_term(lm, lc);
            Polynomial t(work.ring(), lm, lc);
            work = work - t;
        }
    }
    item.poly = remainder;
    return item;
}

} // namespace

std::vector<Monomial> monomials_of_degree(int arity, long long deg) {
    std::vector<Monomial> out;
    std::vector<int> cur(arity, 0);
    // Compositions of deg into arity parts, ascending lex.
    auto rec = [&](auto&& self, int pos, long long left) -> void {
        if (pos == arity - 1) {
            cur[pos] = static_cast<int>(left);
            out.emplace_back(cur);
            return;
        }
        for (long long v = 0; v <= left; ++v) {
            cur[pos] = static_cast<int>(v);
            self(self, pos + 1, left - v);
        }
    };
    if (arity > 0 && deg >= 0) rec(rec, 0, deg);
    return out;
}

std::vector<Monomial> monomials_up_to_degree(int arity, long long cap) {
    std::vector<Monomial> out;
    for (long long d = 0; d <= cap; ++d) {
        auto layer = monomials_of_degree(arity, d);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

std::pair<Polynomial, std::vector<Polynomial>> normal_form(const Polynomial& p,
                                                           const GroebnerBasis& g) {
    require_same_ring(p.ring(), g.ring, "normal_form");
    std::vector<Polynomial> quotients(g.basis.size(), Polynomial::zero(g.ring));
    Polynomial remainder(g.ring);
    Polynomial work = p;
    while (!work.is_zero()) {
        auto [lm, lc] = work.leading_term(g.order);
        bool reduced = false;
        for (std::size_t i = 0; i < g.basis.size(); ++i) {
            if (!g.leads[i].divides(lm)) continue;
            Monomial q = lm / g.leads[i];
            Rational factor = lc / g.basis[i].leading_term(g.order).second;
            work = work - g.basis[i].times_term(q, factor);
            quotients[i].add_term(q, factor);
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder.add_term(lm, lc);
            Polynomial t(work.ring(), lm, lc);
            work = work - t;
        }
    }
    return {remainder, quotients};
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                         bool with_trace, const Budgets& budgets) {
    if (gens.empty()) throw error("buchberger: need at least one generator");
    RingPtr ring = gens.front().ring();
    const std::size_t m = gens.size();

    std::vector<Traced> work;
    for (std::size_t j = 0; j < m; ++j) {
        require_same_ring(ring, gens[j].ring(), "buchberger");
        if (gens[j].is_zero()) continue;
        Traced t{gens[j], {}};
        for (std::size_t k = 0; k < m; ++k)
            t.cofactors.push_back(k == j ? Polynomial::constant(ring, 1)
                                         : Polynomial::zero(ring));
        work.push_back(std::move(t));
    }
    if (work.empty()) throw error("buchberger: all generators are zero");

    auto lead_of = [&](std::size_t i) { return work[i].poly.leading_term(order).first; };

    // Pair queue ordered by lcm degree, then index; `pending` mirrors it for
    // the chain criterion.
    using PairKey = std::tuple<long long, std::size_t, std::size_t>;
    std::set<PairKey> queue;
    std::set<std::pair<std::size_t, std::size_t>> pending;
    auto push_pair = [&](std::size_t i, std::size_t j) {
        if (i > j) std::swap(i, j);
        Monomial l = lcm(lead_of(i), lead_of(j));
        queue.insert({l.degree(), i, j});
        pending.insert({i, j});
    };
    for (std::size_t i = 0; i < work.size(); ++i)
        for (std::size_t j = i + 1; j < work.size(); ++j) push_pair(i, j);

    std::size_t processed = 0;
    std::vector<Polynomial> basis_polys;
    std::vector<Monomial> basis_leads;
    auto refresh_cache = [&]() {
        basis_polys.clear();
        basis_leads.clear();
        for (const auto& t : work) {
            basis_polys.push_back(t.poly);
            basis_leads.push_back(t.poly.leading_term(order).first);
        }
    };
    refresh_cache();

    while (!queue.empty()) {
        if (++processed > budgets.max_pairs)
            throw resource_error("buchberger: S-pair budget exceeded (" +
                                 std::to_string(budgets.max_pairs) + ")");
        auto [deg, i, j] = *queue.begin();
        queue.erase(queue.begin());
        pending.erase({i, j});

        Monomial li = basis_leads[i], lj = basis_leads[j];
        if (coprime(li, lj)) continue; // first Buchberger criterion
        Monomial l = lcm(li, lj);
        bool chained = false; // chain criterion
        for (std::size_t k = 0; k < work.size() && !chained; ++k) {
            if (k == i || k == j) continue;
            if (!basis_leads[k].divides(l)) continue;
            auto key_ik = std::minmax(i, k);
            auto key_jk = std::minmax(j, k);
            if (!pending.count({key_ik.first, key_ik.second}) &&
                !pending.count({key_jk.first, key_jk.second}))
                chained = true;
        }
        if (chained) continue;

        Rational ci = work[i].poly.leading_term(order).second;
        Rational cj = work[j].poly.leading_term(order).second;
        Traced s{work[i].poly.times_term(l / li, Rational(1) / ci) -
                     work[j].poly.times_term(l / lj, Rational(1) / cj),
                 {}};
        s.cofactors.reserve(m);
        for (std::size_t t = 0; t < m; ++t)
            s.cofactors.push_back(work[i].cofactors[t].times_term(l / li, Rational(1) / ci) -
                                  work[j].cofactors[t].times_term(l / lj, Rational(1) / cj));
        s = reduce_full(std::move(s), basis_polys, basis_leads, order, &work);
        if (s.poly.is_zero()) continue;

        work.push_back(std::move(s));
        refresh_cache();
        for (std::size_t k = 0; k + 1 < work.size(); ++k) push_pair(k, work.size() - 1);
    }

    // Minimalize: drop elements whose lead is divisible by another lead.
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < work.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < work.size() && !dominated; ++j) {
            if (i == j) continue;
            if (basis_leads[j].divides(basis_leads[i]) &&
                (basis_leads[j] != basis_leads[i] || j < i))
                dominated = true;
        }
        if (!dominated) keep.push_back(i);
    }
    std::vector<Traced> minimal;
    for (std::size_t i : keep) minimal.push_back(std::move(work[i]));

    // Tail-reduce each element against the others (leads form an antichain, so
    // lead terms survive), then normalize to monic.
    std::vector<Polynomial> polys;
    std::vector<Monomial> leads;
    for (const auto& t : minimal) {
        polys.push_back(t.poly);
        leads.push_back(t.poly.leading_term(order).first);
    }
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        std::vector<Monomial> other_leads;
        std::vector<Traced> other_traced;
        for (std::size_t j = 0; j < minimal.size(); ++j) {
            if (j == i) continue;
            others.push_back(polys[j]);
            other_leads.push_back(leads[j]);
            other_traced.push_back(minimal[j]);
        }
        minimal[i] = reduce_full(std::move(minimal[i]), others, other_leads, order,
                                 &other_traced);
        Rational lc = minimal[i].poly.leading_term(order).second;
        minimal[i].poly = minimal[i].poly.scaled(Rational(1) / lc);
        for (auto& c : minimal[i].cofactors) c = c.scaled(Rational(1) / lc);
        polys[i] = minimal[i].poly;
    }

    std::sort(minimal.begin(), minimal.end(), [&](const Traced& a, const Traced& b) {
        return order.less(a.poly.leading_term(order).first, b.poly.leading_term(order).first);
    });

    GroebnerBasis out{ring, order, {}, {}, std::nullopt, gens};
    for (auto& t : minimal) {
        out.leads.push_back(t.poly.leading_term(order).first);
        out.basis.push_back(std::move(t.poly));
    }
    if (with_trace) {
        std::vector<std::vector<Polynomial>> trace;
        for (auto& t : minimal) trace.push_back(std::move(t.cofactors));
        out.trace = std::move(trace);
    }
    return out;
}

const GroebnerBasis& Ideal::groebner(const MonomialOrder& order, bool with_trace,
                                     const Budgets& budgets) const {
    auto key = std::make_pair(order.name(), with_trace);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
        auto gb = std::make_shared<GroebnerBasis>(buchberger(gens, order, with_trace, budgets));
        it = cache_.emplace(key, std::move(gb)).first;
    }
    return *it->second;
}

std::pair<bool, std::optional<std::vector<Polynomial>>> ideal_member(const Polynomial& p,
                                                                     const Ideal& ideal,
                                                                     bool want_cofactors,
                                                                     const Budgets& budgets) {
    const GroebnerBasis& gb =
        ideal.groebner(MonomialOrder::grevlex(), /*with_trace=*/want_cofactors, budgets);
    auto [rem, quotients] = normal_form(p, gb);
    if (!rem.is_zero()) return {false, std::nullopt};
    if (!want_cofactors || !gb.trace) return {true, std::nullopt};

    std::vector<Polynomial> cof(ideal.gens.size(), Polynomial::zero(ideal.ring));
    for (std::size_t i = 0; i < gb.basis.size(); ++i)
        for (std::size_t j = 0; j < cof.size(); ++j)
            cof[j] = cof[j] + quotients[i] * (*gb.trace)[i][j];
    Polynomial expand = Polynomial::zero(ideal.ring);
    for (std::size_t j = 0; j < cof.size(); ++j) expand = expand + cof[j] * ideal.gens[j];
    if (!(expand == p)) throw internal_error("ideal_member: cofactor expansion mismatch");
    return {true, std::move(cof)};
}

bool radical_member(const Polynomial& p, const Ideal& ideal, const Budgets& budgets) {
    if (p.is_zero()) return true;
    std::string tname;
    RingPtr ext = extend_ring(ideal.ring, "z", /*front=*/false, &tname);
    std::vector<int> var_map(ideal.ring->arity());
    for (int i = 0; i < ideal.ring->arity(); ++i) var_map[i] = i;

    std::vector<Polynomial> gens;
    for (const auto& g : ideal.gens) gens.push_back(g.lift(ext, var_map));
    int y = ext->arity() - 1;
    Polynomial rab = Polynomial::constant(ext, 1) -
                     Polynomial::variable(ext, y) * p.lift(ext, var_map);
    gens.push_back(std::move(rab));
    return buchberger(gens, MonomialOrder::grevlex(), false, budgets).is_unit();
}

Ideal ideal_power(const Ideal& ideal, int k) {
    if (k < 1) throw error("ideal_power: exponent must be >= 1");
    std::vector<Polynomial> out;
    std::vector<int> idx(k, 0);
    // Multisets of generator indices, non-decreasing.
    auto rec = [&](auto&& self, int pos, int lo) -> void {
        if (pos == k) {
            Polynomial prod = Polynomial::constant(ideal.ring, 1);
            for (int i = 0; i < k; ++i) prod = prod * ideal.gens[idx[i]];
            for (const auto& q : out)
                if (q == prod) return;
            out.push_back(std::move(prod));
            return;
        }
        for (int i = lo; i < static_cast<int>(ideal.gens.size()); ++i) {
            idx[pos] = i;
            self(self, pos + 1, i);
        }
    };
    rec(rec, 0, 0);
    return Ideal(ideal.ring, std::move(out));
}

Ideal intersect_ideals(const Ideal& a, const Ideal& b, const Budgets& budgets) {
    require_same_ring(a.ring, b.ring, "intersect");
    std::string tname;
    RingPtr ext = extend_ring(a.ring, "t", /*front=*/true, &tname);
    std::vector<int> var_map(a.ring->arity());
    for (int i = 0; i < a.ring->arity(); ++i) var_map[i] = i + 1;

    Polynomial t = Polynomial::variable(ext, 0);
    Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
    std::vector<Polynomial> gens;
    for (const auto& f : a.gens) gens.push_back(t * f.lift(ext, var_map));
    for (const auto& g : b.gens) gens.push_back(one_minus_t * g.lift(ext, var_map));

    GroebnerBasis gb = buchberger(gens, MonomialOrder::elimination(1), false, budgets);
    std::vector<Polynomial> kept;
    for (const auto& e : gb.basis) {
        bool uses_t = false;
        for (const auto& [m, c] : e.terms())
            if (m[0] > 0) {
                uses_t = true;
                break;
            }
        if (!uses_t) kept.push_back(e.dehomogenize()); // drops the first variable (t := 1)
    }
    if (kept.empty()) kept.push_back(Polynomial::zero(a.ring));
    return Ideal(a.ring, std::move(kept));
}

bool macaulay_member(const Polynomial& p, const Ideal& ideal, long long degree_cap,
                     const Budgets& budgets) {
    require_same_ring(p.ring(), ideal.ring, "macaulay_member");
    if (p.degree() > degree_cap) return false; // bounded-degree test by contract
    const int n = ideal.ring->arity();

    // Columns: (generator j, multiplier monomial m) with deg(m*f_j) <= cap,
    // ordered by j then (degree, lex) on m. Rows: all monomials of degree <= cap.
    std::vector<Monomial> rows = monomials_up_to_degree(n, degree_cap);
    std::map<Monomial, std::size_t> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = i;

    struct Column {
        std::size_t gen;
        Monomial mult;
    };
    std::vector<Column> cols;
    for (std::size_t j = 0; j < ideal.gens.size(); ++j) {
        long long dj = ideal.gens[j].degree();
        if (dj < 0 || dj > degree_cap) continue;
        for (const auto& m : monomials_up_to_degree(n, degree_cap - dj))
            cols.push_back({j, m});
    }
    if (cols.empty()) return p.is_zero();
    budgets.check_matrix(rows.size(), cols.size() + 1);

    QMatrix a(rows.size(), std::vector<Rational>(cols.size(), Rational(0)));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const Polynomial& f = ideal.gens[cols[c].gen];
        for (const auto& [m, coeff] : f.terms()) a[row_index.at(m * cols[c].mult)][c] = coeff;
    }
    std::vector<Rational> b(rows.size(), Rational(0));
    for (const auto& [m, coeff] : p.terms()) b[row_index.at(m)] = coeff;

    return solve_particular(a, b, budgets).has_value();
}

} // namespace nullkit
