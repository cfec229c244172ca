#include "nullkit/linalg.hpp"

#include <algorithm>

namespace nullkit {

Echelon bareiss_echelon(ZMatrix a, const Budgets& budgets) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    budgets.check_matrix(rows, cols);

    Echelon out;
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && a[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != r) std::swap(a[pivot], a[r]);

        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer num = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        out.pivot_cols.push_back(static_cast<int>(c));
        ++r;
    }
    out.rank = static_cast<int>(r);
    out.m = std::move(a);
    return out;
}

int matrix_rank(const ZMatrix& a, const Budgets& budgets) {
    return bareiss_echelon(a, budgets).rank;
}

ZMatrix to_integer_rows(const QMatrix& a) {
    ZMatrix out;
    out.reserve(a.size());
    for (const auto& row : a) {
        Integer scale = 1;
        for (const auto& q : row) scale = lcm(scale, q.get_den());
        std::vector<Integer> zrow;
        zrow.reserve(row.size());
        for (const auto& q : row) zrow.push_back(q.get_num() * (scale / q.get_den()));
        out.push_back(std::move(zrow));
    }
    return out;
}

namespace {

// Back-substitute the pivot variables of an echelon system; free variables are
// fixed to the values already present in x.
void back_substitute(const Echelon& e, std::size_t cols, std::vector<Rational>& x,
                     const std::vector<Rational>& rhs) {
    for (int i = e.rank - 1; i >= 0; --i) {
        int pc = e.pivot_cols[i];
        Rational acc = rhs[i];
        for (std::size_t j = pc + 1; j < cols; ++j)
            if (e.m[i][j] != 0) acc -= Rational(e.m[i][j]) * x[j];
        x[pc] = acc / Rational(e.m[i][pc]);
    }
}

} // namespace

std::optional<std::vector<Rational>> solve_particular(const QMatrix& a,
                                                      const std::vector<Rational>& b,
                                                      const Budgets& budgets) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    if (b.size() != rows) throw internal_error("solve: rhs length mismatch");

    QMatrix aug = a;
    for (std::size_t i = 0; i < rows; ++i) aug[i].push_back(b[i]);
    Echelon e = bareiss_echelon(to_integer_rows(aug), budgets);

    for (int i = 0; i < e.rank; ++i)
        if (e.pivot_cols[i] == static_cast<int>(cols)) return std::nullopt; // 0 = nonzero

    std::vector<Rational> x(cols, Rational(0));
    std::vector<Rational> rhs(e.rank);
    for (int i = 0; i < e.rank; ++i) rhs[i] = Rational(e.m[i][cols]);
    // Shrink rows to the coefficient block for back-substitution.
    Echelon coeff;
    coeff.rank = e.rank;
    coeff.pivot_cols = e.pivot_cols;
    coeff.m.assign(e.m.begin(), e.m.begin() + e.rank);
    for (auto& row : coeff.m) row.pop_back();
    back_substitute(coeff, cols, x, rhs);
    return x;
}

std::vector<std::vector<Rational>> nullspace(const ZMatrix& a, const Budgets& budgets) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    Echelon e = bareiss_echelon(a, budgets);

    std::vector<bool> is_pivot(cols, false);
    for (int pc : e.pivot_cols) is_pivot[pc] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> x(cols, Rational(0));
        x[f] = 1; // picked up by the column sweep in back_substitute
        std::vector<Rational> rhs(e.rank, Rational(0));
        back_substitute(e, cols, x, rhs);
        basis.push_back(std::move(x));
    }
    return basis;
}

} // namespace nullkit
