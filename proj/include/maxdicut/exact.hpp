#pragma once

#include "maxdicut/digraph.hpp"

namespace maxdicut {

struct ExactCut {
    Dicut cut;
    Rational weight;
};

// Exact maximum-weight dicut over all 2^n subsets, Gray-code enumeration
// with incremental weight deltas. Ties go to the lexicographically smallest
// X as a bitmask, so weight-0 optima return the empty cut.
ExactCut max_dicut_exact(const WeightedDigraph& d, int max_n = 26);

// Independent oracle: plain full enumeration, every subset recomputed from
// scratch. Same contract, cap 20.
ExactCut max_dicut_bruteforce(const WeightedDigraph& d);

// Exact minimum-weight dicut over proper nonempty subsets only (the trivial
// partitions with X empty or X = V are excluded). Requires n >= 2.
ExactCut min_dicut_exact(const WeightedDigraph& d, int max_n = 26);

// Exact maximum cut of a symmetric encoding (one arc per undirected edge):
// an edge counts once when its endpoints are separated, either way round.
Rational max_cut_exact(const WeightedDigraph& g, int max_n = 26);

}  // namespace maxdicut
