#pragma once

#include <utility>
#include <vector>

#include "maxdicut/digraph.hpp"
#include "maxdicut/rational.hpp"

namespace maxdicut {

// Exact value and optimal strategies of the dicut covering game on the
// complete transitive DAG with nu vertices: the cut player maximizes, over
// distributions on dicuts, the minimum probability that an arc is cut; the
// adversary's arc weighting certifies optimality from above.
struct GameSolution {
    int nu = 0;
    Rational value;
    std::vector<std::pair<Dicut, Rational>> cut_distribution;
    std::vector<std::pair<std::pair<int, int>, Rational>> adversary_weights;
};

// Solves the game by exact rational simplex over all 2^nu - 2 proper subsets
// and proves both directions of the duality certificate before returning.
// Requires 2 <= nu <= 12.
GameSolution cnu(int nu);

// True iff every arc i < j of the complete transitive DAG on nu vertices is
// cut by at least t of the family's dicuts; total must match the family size.
bool verify_cover_family(int nu, const std::vector<Dicut>& family, int t, int total);

// An explicit dicut family covering every arc at least t times.
struct CoverFamily {
    int nu = 0;
    int t = 0;
    std::vector<Dicut> cuts;
};

// The four built-in families behind the small-nu game values.
const std::vector<CoverFamily>& appendix_cover_families();

// Closed-form brackets: lower = max(1/4 + 1/(4 nu), 1/4 + 1/(8 (3 nu)^{2/3}))
// with the cube root rounded up, and upper = 1/4 + 1/(3 sqrt(nu) - 10) for
// nu >= 12 (trivially 1 below that), with the square root rounded down.
std::pair<Rational, Rational> cnu_bounds_check(int nu);

}  // namespace maxdicut
