#pragma once

#include <vector>

#include "maxdicut/digraph.hpp"

namespace maxdicut {

// Partition of an acyclic digraph's vertices by iterated source removal:
// levels[0] holds the sources, levels[i+1] the sources once earlier levels
// are gone. Every arc runs from a lower level to a strictly higher one, and
// the level count equals the longest path order.
struct LevelDecomposition {
    std::vector<std::vector<int>> levels;
    std::vector<int> level_of;
};

// Proper coloring of the underlying graph: no arc, in either direction,
// joins two vertices of the same color. Colors are dense ids 0..colors_used-1.
struct ProperColoring {
    std::vector<int> color_of;
    int colors_used = 0;
};

// Quotient over strongly connected components, with dense component ids in
// topological order. Parallel quotient arcs are merged by weight summation;
// internal_weight is the total weight inside components, so
// w(quotient) + internal_weight = w(input).
struct Condensation {
    WeightedDigraph quotient;
    std::vector<int> component_of;
    Rational internal_weight;
};

Rational total_weight(const WeightedDigraph& d);

// r(v) = out-weight minus in-weight.
Rational imbalance(const WeightedDigraph& d, int v);

// Sum of positive imbalances; computed both as the positive-part sum and as
// half the absolute sum, which must agree exactly.
Rational r_plus(const WeightedDigraph& d);

// r_plus / total weight; zero-weight digraphs are rejected rather than 0/0.
Rational theta(const WeightedDigraph& d);

// 1/4 + t^2/(4(1-2t)) for t < 1/3, else t. Domain [0, 1].
Rational l_of_theta(const Rational& t);

// Symmetric encoding of the underlying graph: one arc per adjacent unordered
// pair {u, v} stored with u < v, weight w(uv) + w(vu); total weight is
// preserved.
WeightedDigraph underlying_graph(const WeightedDigraph& d);

Condensation condensation(const WeightedDigraph& d);

LevelDecomposition level_decomposition(const WeightedDigraph& d);

// One vertex per level; arc i->j of weight w(T_i, T_j) whenever positive
// arcs exist between the levels. Never increases the maximum dicut weight:
// a quotient dicut lifts levelwise to an input dicut of equal weight.
WeightedDigraph contract_levels(const WeightedDigraph& d);

// A maximum-order directed path of an acyclic digraph. Ties are broken by
// the smallest vertex id at each step, starting from the smallest feasible
// start vertex.
std::vector<int> longest_path(const WeightedDigraph& d);

ProperColoring greedy_coloring(const WeightedDigraph& d);

// Colors by level inside a maximal acyclic spanning subdigraph (arcs kept in
// input order whenever they close no directed cycle), so colors_used never
// exceeds the longest path order; on acyclic inputs the color is exactly the
// level index.
ProperColoring path_coloring(const WeightedDigraph& d);

bool is_proper_coloring(const WeightedDigraph& d, const ProperColoring& c);

}  // namespace maxdicut
