#pragma once

#include <variant>
#include <vector>

#include "maxdicut/digraph.hpp"
#include "maxdicut/rng.hpp"

namespace maxdicut {

// Random side-assignment schemes behind the constructive bounds. A scheme
// fixes each vertex's side (X or Y); its decision units are walked in a
// fixed order, and every cut probability below is an exact rational,
// conditioned on the decisions taken so far.

// Independent biased coins: vertex v lands in X with probability p_in_x[v].
struct BiasedCoinScheme {
    std::vector<Rational> p_in_x;
};

// One block: its classes are split uniformly at random into an X-group of
// x_target classes and a Y-group of y_target classes; all vertices of a
// class share its group's side. With orientation_coin, a fair coin swaps
// the two group roles, which forces every marginal to exactly 1/2. Classes
// may be empty (padding); distinct blocks are independent.
struct SplitBlock {
    std::vector<std::vector<int>> classes;
    int x_target = 0;
    int y_target = 0;
    bool orientation_coin = false;
};

// Blocks jointly cover every vertex exactly once.
struct GroupSplitScheme {
    int n = 0;
    std::vector<SplitBlock> blocks;
};

using AssignmentScheme = std::variant<BiasedCoinScheme, GroupSplitScheme>;

// Partial assignment state. Units in order: for biased coins, one unit per
// vertex (increasing id); for group splits, per block its orientation coin
// (when present) followed by its classes in listed order. Branch 0 is
// always the X-leaning choice: side X, group assignment to the X-group, or
// the identity orientation.
class SchemeState {
public:
    SchemeState(const AssignmentScheme& scheme, const WeightedDigraph& d);

    bool done() const { return cursor_ == units_.size(); }
    int branch_count() const;
    Rational branch_probability(int branch) const;
    void decide(int branch);

    // Exact conditional probability that v ends in X / that the arc is cut.
    Rational p_in_x(int v) const;
    Rational arc_cut_probability(const Arc& a) const;
    Rational expected_cut_weight() const;

    Dicut cut() const;  // requires done()

private:
    enum Coin { kPending = -1, kIdentity = 0, kFlip = 1 };
    struct BlockState {
        int x_rem = 0;
        int y_rem = 0;
        bool has_coin = false;
        int coin = kIdentity;
    };
    struct Unit {
        int block = -1;  // -1: biased-coin unit for vertex cls
        int cls = -1;    // global class id; -1: the block's orientation coin
    };

    Rational class_in_x(int cls) const;
    Rational same_block_cut(int cls_t, int cls_h, int block) const;

    const WeightedDigraph* d_ = nullptr;
    bool biased_ = false;
    std::vector<Rational> p_;         // biased: target probabilities
    std::vector<int> side_;           // biased: -1 undecided, 0 X, 1 Y
    std::vector<BlockState> blocks_;
    std::vector<int> class_group_;    // -1 unset, 0 X-group, 1 Y-group
    std::vector<int> class_of_;      // vertex -> global class
    std::vector<int> block_of_;      // global class -> block
    std::vector<Unit> units_;
    std::size_t cursor_ = 0;
};

// Expectation of the cut weight before any decision is made.
Rational expected_cut_weight(const AssignmentScheme& scheme, const WeightedDigraph& d);

// Conditional-expectation rounding: at every unit, takes the branch with
// the larger exact conditional expectation (ties to branch 0, the X side),
// so the returned cut weighs at least the scheme's expectation.
Dicut derandomize(const AssignmentScheme& scheme, const WeightedDigraph& d);

// One exact random draw from the scheme.
Dicut sample_scheme(const AssignmentScheme& scheme, const WeightedDigraph& d,
                    SplitMix64& rng);

}  // namespace maxdicut
