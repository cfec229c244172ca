#include "nullkit/newton.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "nullkit/linalg.hpp"

namespace nullkit {

namespace {

// Candidate element of a facet: a generator exponent (point of the polyhedron)
// or a coordinate direction (ray of the recession cone).
struct Element {
    bool is_point;
    int index; // into points, or the coordinate axis
};

std::optional<std::vector<long long>> primitive_integer(const std::vector<Rational>& v) {
    Integer scale = 1;
    for (const auto& q : v) scale = lcm(scale, q.get_den());
    std::vector<Integer> z;
    z.reserve(v.size());
    Integer g = 0;
    for (const auto& q : v) {
        z.push_back(q.get_num() * (scale / q.get_den()));
        g = gcd(g, z.back());
    }
    if (g == 0) return std::nullopt;
    std::vector<long long> out;
    for (auto& e : z) {
        Integer r = e / g;
        if (!r.fits_slong_p()) return std::nullopt; // absurdly large normal: reject candidate
        out.push_back(r.get_si());
    }
    return out;
}

} // namespace

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal, int max_arity,
                                   const Budgets& budgets) {
    const int n = ideal.arity();
    if (n > max_arity)
        throw resource_error("newton_polyhedron: arity " + std::to_string(n) +
                             " exceeds the enumeration bound " + std::to_string(max_arity));

    const std::vector<Monomial>& points = ideal.gens;
    const int np = static_cast<int>(points.size());

    std::vector<Element> elements;
    for (int i = 0; i < np; ++i) elements.push_back({true, i});
    for (int i = 0; i < n; ++i) elements.push_back({false, i});

    std::set<std::pair<std::vector<long long>, long long>> seen;
    std::vector<FacetDatum> facets;

    auto consider = [&](std::vector<long long> normal) {
        // Orient and validate the candidate normal, recompute the offset as the
        // minimum over all generators, then accept iff the tight face has
        // dimension n-1.
        bool has_pos = false, has_neg = false;
        for (long long a : normal) {
            has_pos |= a > 0;
            has_neg |= a < 0;
        }
        if (has_neg && has_pos) return;
        if (!has_pos && !has_neg) return;
        if (has_neg)
            for (auto& a : normal) a = -a;

        long long b = 0;
        bool first = true;
        auto value = [&](const Monomial& u) {
            long long v = 0;
            for (int i = 0; i < n; ++i) v += normal[i] * u[i];
            return v;
        };
        for (const auto& p : points) {
            long long v = value(p);
            if (first || v < b) b = v;
            first = false;
        }
        if (!seen.insert({normal, b}).second) return;

        // Tight set: generators on the hyperplane plus directions inside it.
        std::vector<const Monomial*> tight;
        for (const auto& p : points)
            if (value(p) == b) tight.push_back(&p);
        std::vector<int> free_dirs;
        for (int i = 0; i < n; ++i)
            if (normal[i] == 0) free_dirs.push_back(i);

        ZMatrix span;
        for (std::size_t i = 1; i < tight.size(); ++i) {
            std::vector<Integer> row(n);
            for (int k = 0; k < n; ++k) row[k] = (*tight[i])[k] - (*tight[0])[k];
            span.push_back(std::move(row));
        }
        for (int d : free_dirs) {
            std::vector<Integer> row(n, 0);
            row[d] = 1;
            span.push_back(std::move(row));
        }
        if (matrix_rank(span, budgets) != n - 1) return;

        FacetDatum f;
        f.normal = std::move(normal);
        f.offset = b;
        f.bounded = b > 0;
        facets.push_back(std::move(f));
    };

    if (n == 1) {
        consider({1});
    } else {
        // All n-subsets with at least one point; each gives n linear conditions
        // on (a, b) and, when non-degenerate, a one-dimensional solution space.
        std::vector<int> pick;
        auto rec = [&](auto&& self, int start, int left) -> void {
            if (left == 0) {
                bool any_point = false;
                for (int e : pick) any_point |= elements[e].is_point;
                if (!any_point) return;
                ZMatrix system;
                for (int e : pick) {
                    std::vector<Integer> row(n + 1, 0);
                    if (elements[e].is_point) {
                        const Monomial& p = points[elements[e].index];
                        for (int k = 0; k < n; ++k) row[k] = p[k];
                        row[n] = -1;
                    } else {
                        row[elements[e].index] = 1;
                    }
                    system.push_back(std::move(row));
                }
                auto basis = nullspace(system, budgets);
                if (basis.size() != 1) return;
                std::vector<Rational> a(basis[0].begin(), basis[0].end() - 1);
                auto prim = primitive_integer(a);
                if (prim) consider(std::move(*prim));
                return;
            }
            for (int e = start; e <= static_cast<int>(elements.size()) - left; ++e) {
                pick.push_back(e);
                self(self, e + 1, left - 1);
                pick.pop_back();
            }
        };
        rec(rec, 0, n);
    }

    std::sort(facets.begin(), facets.end(), [](const FacetDatum& a, const FacetDatum& b) {
        if (a.bounded != b.bounded) return a.bounded;
        if (a.normal != b.normal) return a.normal < b.normal;
        return a.offset < b.offset;
    });

    NewtonPolyhedron out;
    out.arity = n;
    out.facets = std::move(facets);

    // A generator exponent is a vertex iff its active facet normals span R^n.
    for (const auto& p : points) {
        ZMatrix active;
        for (const auto& f : out.facets) {
            if (f.value_at(p) != f.offset) continue;
            std::vector<Integer> row(n);
            for (int k = 0; k < n; ++k) row[k] = to_integer(f.normal[k]);
            active.push_back(std::move(row));
        }
        if (static_cast<int>(active.size()) >= n && matrix_rank(active, budgets) == n)
            out.vertices.push_back(p);
    }
    std::sort(out.vertices.begin(), out.vertices.end());
    return out;
}

std::vector<DistinguishedDatum> distinguished_data(const NewtonPolyhedron& np) {
    std::vector<DistinguishedDatum> out;
    for (const auto& f : np.facets) {
        if (!f.bounded) continue;
        DistinguishedDatum d;
        d.support = f.support();
        d.coefficient = f.offset;
        d.dimension = np.arity - static_cast<int>(d.support.size());
        out.push_back(std::move(d));
    }
    return out;
}

std::vector<DistinguishedDatum> distinguished_data(const MonomialIdeal& ideal) {
    return distinguished_data(newton_polyhedron(ideal));
}

} // namespace nullkit
