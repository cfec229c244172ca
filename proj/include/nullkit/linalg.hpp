// linalg.hpp: exact dense linear algebra over Z and Q.
//
// Elimination is fraction-free (Bareiss): every intermediate entry is an exact
// integer minor, which keeps coefficient growth polynomial instead of the
// exponential blow-up naive rational pivoting can produce. Rational systems are
// scaled row-by-row to integers first (scaling a single equation does not change
// its solution set).
#ifndef NULLKIT_LINALG_HPP
#define NULLKIT_LINALG_HPP

#include <optional>
#include <vector>

#include "nullkit/errors.hpp"
#include "nullkit/rational.hpp"

namespace nullkit {

using ZMatrix = std::vector<std::vector<Integer>>;
using QMatrix = std::vector<std::vector<Rational>>;

struct Echelon {
    ZMatrix m;                   // row echelon form, fraction-free
    std::vector<int> pivot_cols; // pivot column of each of the first `rank` rows
    int rank = 0;
};

// Row echelon form by Bareiss elimination. Deterministic: rows are scanned in
// order and the first row with a nonzero entry in the current column pivots.
Echelon bareiss_echelon(ZMatrix a, const Budgets& budgets);

int matrix_rank(const ZMatrix& a, const Budgets& budgets);

// Clears denominators per row.
ZMatrix to_integer_rows(const QMatrix& a);

// One solution of A x = b with every free variable set to zero, or nullopt if
// the system is inconsistent.
std::optional<std::vector<Rational>> solve_particular(const QMatrix& a,
                                                      const std::vector<Rational>& b,
                                                      const Budgets& budgets);

// Basis of the nullspace of A (one vector per free column).
std::vector<std::vector<Rational>> nullspace(const ZMatrix& a, const Budgets& budgets);

} // namespace nullkit

#endif
