#pragma once

#include <cstdint>

#include "maxdicut/digraph.hpp"
#include "maxdicut/rng.hpp"

namespace maxdicut {

// k-regular tournament on 2k+1 vertices: arcs i -> (i+j) mod (2k+1) for
// j = 1..k, unit weights. Every imbalance is 0.
WeightedDigraph regular_tournament(int k);

// Two disjoint k-regular-ish tournaments of odd order k (internal arcs of
// weight 1) plus all k^2 cross arcs from the first to the second of weight
// Q = theta(1 - 1/k)/(1 - theta), so the normalized imbalance of the result
// equals theta exactly (asserted). Requires odd k >= 3 and 0 <= theta < 1.
WeightedDigraph two_tournament(int k, const Rational& theta);

// Continuous maximum of Qxy + x(k-x)/2 + y(k-y)/2 over 0 <= x, y <= k: an
// upper bound on the maximum dicut weight of the two-tournament instance.
// Equals k^2/(4(1-Q)) when Q <= 1/2, else Q k^2. Requires 0 < Q < 1.
Rational mac_upper_two_tournament(int k, const Rational& Q);

// Staircase multidigraph D_n (n >= 4), q = floor(sqrt(n)): union over the n
// cyclic windows {v_i, ..., v_{i+q-1}} of forward transitive tournaments,
// keeping only arcs whose tail index is globally below the head index.
// Unit weights, parallel arcs retained; the arc count matches
// staircase_arc_count(n) exactly (asserted).
WeightedDigraph staircase(int n);

// Closed form nq^2/2 - nq/2 - q^3/6 + q/6 with q = floor(sqrt(n)).
long staircase_arc_count(int n);

// The smallest staircase with at least m arcs, trimmed to exactly m arcs by
// deleting surplus arcs in reverse-lexicographic (tail, head, multiplicity)
// order; arc order of the survivors is preserved, so hitting an exact
// staircase size reproduces staircase(n) verbatim. Requires m >= 1.
WeightedDigraph staircase_trimmed(long m);

// The six extremal instances on nu = 3..8 vertices whose exact maximum
// dicut ratios are 1/2, 1/2, 2/5, 2/5, 3/8, 4/11 (vertex s_i has id i-1).
WeightedDigraph appendix_extremal(int nu);

// All nu(nu-1)/2 forward arcs on vertices 0..nu-1, unit weights.
WeightedDigraph complete_transitive_dag(int nu);

// Random DAG: a seeded random vertex order, each forward pair kept with
// probability density (exact Bernoulli), integer weights uniform in
// [wlo, whi]. Same seed, same instance, on every platform.
WeightedDigraph random_dag(int n, const Rational& density, long wlo, long whi,
                           std::uint64_t seed);

// Random digraph over all ordered pairs in lexicographic order.
WeightedDigraph random_digraph(int n, const Rational& density, long wlo, long whi,
                               std::uint64_t seed);

// Random digraph with no directed cycle longer than l: vertices form
// ceil(n/l) consecutive groups of at most l; ordered pairs inside a group
// and forward pairs across groups appear with probability 1/2, weights
// uniform in [1, 3]. Every cycle stays inside one group.
WeightedDigraph random_bounded_cycle(int n, int l, std::uint64_t seed);

}  // namespace maxdicut
