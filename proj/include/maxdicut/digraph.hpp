#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "maxdicut/errors.hpp"
#include "maxdicut/rational.hpp"

namespace maxdicut {

struct Arc {
    int tail = 0;
    int head = 0;
    Rational weight;
};

// Weighted directed multigraph on dense vertex ids 0..n-1. Arc order is
// preserved from construction; parallel arcs and weight-0 arcs are distinct
// entries. Immutable after construction.
class WeightedDigraph {
public:
    WeightedDigraph() = default;
    WeightedDigraph(int n, std::vector<Arc> arcs);

    int order() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const std::vector<Arc>& arcs() const { return arcs_; }

private:
    int n_ = 0;
    std::vector<Arc> arcs_;
};

// Validates and constructs; rejects out-of-range endpoints, self-loops and
// negative weights, each with its own error kind.
WeightedDigraph make_digraph(int n, std::vector<Arc> arcs);

// The X side of a vertex bipartition (X, V\X); Y is implicit.
class Dicut {
public:
    Dicut() = default;
    explicit Dicut(std::vector<int> x_side);
    static Dicut from_mask(std::uint64_t mask, int n);

    const std::vector<int>& x_side() const { return x_; }
    bool contains(int v) const;
    std::uint64_t mask() const;

private:
    std::vector<int> x_;  // sorted, unique
};

// Exact weight of the dicut (X, V\X): arcs with tail in X and head outside.
Rational dicut_weight(const WeightedDigraph& d, const Dicut& c);

// The contract every cut constructor returns: the achieved weight equals the
// weight of the returned cut and never falls below the certified guarantee.
struct BoundCertificate {
    std::string algorithm;
    Rational guaranteed_weight;
    Rational achieved_weight;
    std::vector<std::pair<std::string, Rational>> params;
};

}  // namespace maxdicut
