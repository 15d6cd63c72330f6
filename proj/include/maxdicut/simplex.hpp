#pragma once

#include <vector>

#include "maxdicut/rational.hpp"

namespace maxdicut {

// Optimal solution of max c.x subject to A x = b, x >= 0, in exact rationals.
// reduced holds the final reduced costs c_j - c_B B^{-1} A_j (zero on basic
// columns, nonpositive everywhere at optimality); for rows built as equality
// constraints with slack columns, the negated reduced cost of a slack column
// is that row's optimal dual multiplier.
struct LpSolution {
    Rational value;
    std::vector<Rational> x;
    std::vector<Rational> reduced;
};

// Primal simplex from a caller-supplied feasible basis (one column index per
// row). Pivots by steepest reduced cost, switching permanently to Bland's
// rule after a long degenerate streak, so the walk terminates. Throws
// BadParameterError on malformed input, a singular or infeasible basis, and
// an unbounded objective.
LpSolution simplex_max(const std::vector<std::vector<Rational>>& a,
                       const std::vector<Rational>& b, const std::vector<Rational>& c,
                       std::vector<int> basis);

}  // namespace maxdicut
