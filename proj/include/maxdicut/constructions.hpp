#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "maxdicut/digraph.hpp"
#include "maxdicut/measures.hpp"
#include "maxdicut/rational.hpp"
#include "maxdicut/schemes.hpp"

namespace maxdicut {

// A dicut together with the certificate that justifies it and, when the
// construction is randomized, the assignment scheme it was derandomized from.
struct Construction {
    Dicut cut;
    BoundCertificate certificate;
    std::optional<AssignmentScheme> scheme;
};

// One component of a bipartite family: two dependent vertex sets that must
// end up on opposite sides of the cut.
struct SidePair {
    std::vector<int> x_side;
    std::vector<int> y_side;
};

// X = vertices of positive imbalance; achieves at least r_plus(d).
Construction positive_imbalance_cut(const WeightedDigraph& d);

// Biased-coin scheme with bias depending on theta(d); guarantees l(theta) * w.
// Throws ZeroWeightError when total weight is zero.
Construction theta_biased_cut(const WeightedDigraph& d);

// Splits the color classes of a proper coloring into two near-equal groups;
// guarantees (1/4 + 1/(4(chi-1))) * w for even chi and (1/4 + 1/(4 chi)) * w
// for odd chi.
Construction coloring_cut(const WeightedDigraph& d, const ProperColoring& coloring);

// Anti-correlates the two sides of each pair and flips each pair by a fair
// coin; guarantees w/4 plus a quarter of the weight joining paired sides.
Construction bipartite_family_cut(const WeightedDigraph& d,
                                  const std::vector<SidePair>& pairs);

// Extracts a heaviest alternating matching from a longest path of an acyclic
// digraph and feeds it to the bipartite family construction.
Construction path_matching_cut(const WeightedDigraph& d);

// Level-block construction for acyclic digraphs with at most n_star(k)
// levels; guarantees k/(4k-2) * w. Requires k >= 7.
Construction dag_block_cut(const WeightedDigraph& d, long k);

// Dispatcher for acyclic digraphs with weights >= 1; guarantees
// w/4 + w^{3/5}/24 (with the radical rounded down to a dyadic rational).
Construction dag_cut(const WeightedDigraph& d);

// General digraphs with weights >= 1: plays the condensation against
// per-component colorings; guarantees
// w/4 + (w_acyclic^{3/5} + w_strong) / (4(7L + 6)).
Construction strong_component_cut(const WeightedDigraph& d);

// Level-block layout parameters.
long block_f(long k, long q);
long block_size(long k, long q);
long block_z(long k);
long n_star(long k);

struct BlockSpec {
    long size = 0;
    long x_target = 0;
    long y_target = 0;
};

// Blocks A_{-z}, ..., A_z in order, with their group split targets.
std::vector<BlockSpec> block_layout(long k);

// Proper coloring with few colors: best of greedy, path-based, and (for small
// digraphs) an exact branch-and-bound search.
ProperColoring best_coloring(const WeightedDigraph& d, int exact_cap = 20);

// Connected bipartite components of the underlying graph, as side pairs.
// Components that are not bipartite or have fewer than two vertices are
// skipped.
std::vector<SidePair> bipartite_components(const WeightedDigraph& d);

// Greedy maximal matching by descending arc weight, as singleton side pairs.
std::vector<SidePair> greedy_matching(const WeightedDigraph& d);

}  // namespace maxdicut
