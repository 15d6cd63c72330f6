#include "maxdicut/schemes.hpp"

#include <stdexcept>
#include <string>

#include "maxdicut/errors.hpp"

namespace maxdicut {

SchemeState::SchemeState(const AssignmentScheme& scheme, const WeightedDigraph& d)
    : d_(&d) {
    const int n = d.order();
    if (const auto* coins = std::get_if<BiasedCoinScheme>(&scheme)) {
        biased_ = true;
        if (static_cast<int>(coins->p_in_x.size()) != n)
            throw BadParameterError("biased scheme must cover every vertex");
        for (const Rational& p : coins->p_in_x)
            if (p.is_negative() || p > Rational(1))
                throw BadParameterError("vertex probability outside [0, 1]");
        p_ = coins->p_in_x;
        side_.assign(n, -1);
        units_.reserve(n);
        for (int v = 0; v < n; ++v) units_.push_back({-1, v});
        return;
    }
    const auto& split = std::get<GroupSplitScheme>(scheme);
    if (split.n != n) throw BadParameterError("scheme order mismatch");
    class_of_.assign(n, -1);
    for (std::size_t b = 0; b < split.blocks.size(); ++b) {
        const SplitBlock& blk = split.blocks[b];
        if (blk.x_target < 0 || blk.y_target < 0 ||
            blk.x_target + blk.y_target != static_cast<int>(blk.classes.size()))
            throw BadParameterError("block group targets must partition its classes");
        BlockState st;
        st.x_rem = blk.x_target;
        st.y_rem = blk.y_target;
        st.has_coin = blk.orientation_coin;
        st.coin = blk.orientation_coin ? kPending : kIdentity;
        const int block_id = static_cast<int>(blocks_.size());
        blocks_.push_back(st);
        if (blk.orientation_coin) units_.push_back({block_id, -1});
        for (const std::vector<int>& cls : blk.classes) {
            const int cls_id = static_cast<int>(block_of_.size());
            block_of_.push_back(block_id);
            class_group_.push_back(-1);
            units_.push_back({block_id, cls_id});
            for (int v : cls) {
                if (v < 0 || v >= n) throw BadParameterError("class vertex out of range");
                if (class_of_[v] != -1)
                    throw BadParameterError("vertex assigned to two classes");
                class_of_[v] = cls_id;
            }
        }
    }
    for (int v = 0; v < n; ++v)
        if (class_of_[v] == -1)
            throw BadParameterError("scheme must cover every vertex");
}

int SchemeState::branch_count() const {
    const Unit& u = units_[cursor_];
    if (biased_ || u.cls == -1) return 2;
    const BlockState& b = blocks_[u.block];
    return (b.x_rem > 0 ? 1 : 0) + (b.y_rem > 0 ? 1 : 0);
}

Rational SchemeState::branch_probability(int branch) const {
    const Unit& u = units_[cursor_];
    if (biased_) {
        const Rational& p = p_[u.cls];
        return branch == 0 ? p : Rational(1) - p;
    }
    if (u.cls == -1) return Rational(1, 2);
    const BlockState& b = blocks_[u.block];
    const int rem = b.x_rem + b.y_rem;
    if (branch_count() == 1) return Rational(1);
    return branch == 0 ? Rational(b.x_rem, rem) : Rational(b.y_rem, rem);
}

void SchemeState::decide(int branch) {
    if (done()) throw std::logic_error("scheme already fully decided");
    if (branch < 0 || branch >= branch_count())
        throw std::logic_error("scheme branch out of range");
    const Unit& u = units_[cursor_];
    if (biased_) {
        side_[u.cls] = branch;
    } else if (u.cls == -1) {
        blocks_[u.block].coin = branch == 0 ? kIdentity : kFlip;
    } else {
        BlockState& b = blocks_[u.block];
        int group;
        if (b.x_rem > 0 && b.y_rem > 0)
            group = branch;
        else
            group = b.x_rem > 0 ? 0 : 1;
        class_group_[u.cls] = group;
        (group == 0 ? b.x_rem : b.y_rem) -= 1;
    }
    ++cursor_;
}

Rational SchemeState::class_in_x(int cls) const {
    const BlockState& b = blocks_[block_of_[cls]];
    const int group = class_group_[cls];
    if (b.coin == kPending) return Rational(1, 2);
    if (group != -1) return Rational((group == 0) == (b.coin == kIdentity) ? 1 : 0);
    const int rem = b.x_rem + b.y_rem;
    return b.coin == kIdentity ? Rational(b.x_rem, rem) : Rational(b.y_rem, rem);
}

Rational SchemeState::p_in_x(int v) const {
    if (biased_) {
        if (side_[v] != -1) return Rational(side_[v] == 0 ? 1 : 0);
        return p_[v];
    }
    return class_in_x(class_of_[v]);
}

// P(class cls lands in `group` | current state), ignoring the coin.
namespace {
Rational group_probability(int assigned, int group, int x_rem, int y_rem) {
    if (assigned != -1) return Rational(assigned == group ? 1 : 0);
    return Rational(group == 0 ? x_rem : y_rem, x_rem + y_rem);
}
}  // namespace

Rational SchemeState::same_block_cut(int cls_t, int cls_h, int block) const {
    const BlockState& b = blocks_[block];
    Rational total;
    int coins = 0;
    for (int coin : {kIdentity, kFlip}) {
        if (b.coin != kPending && b.coin != coin) continue;
        ++coins;
        // Under this orientation, the tail's class must land in the group
        // playing X and the head's class in the other one.
        const int need_t = coin == kIdentity ? 0 : 1;
        const int need_h = 1 - need_t;
        const int g_t = class_group_[cls_t];
        const int g_h = class_group_[cls_h];
        if (g_t == -1 && g_h == -1) {
            // Ordered pair of unassigned classes into the two distinct groups.
            const int rem = b.x_rem + b.y_rem;
            total += Rational(b.x_rem, rem) * Rational(b.y_rem, rem - 1);
        } else {
            // At most one factor is a hypergeometric marginal; the other is
            // an indicator, so no joint correction is needed.
            total += group_probability(g_t, need_t, b.x_rem, b.y_rem) *
                     group_probability(g_h, need_h, b.x_rem, b.y_rem);
        }
    }
    if (coins == 2) total = total / Rational(2);
    return total;
}

Rational SchemeState::arc_cut_probability(const Arc& a) const {
    if (biased_) return p_in_x(a.tail) * (Rational(1) - p_in_x(a.head));
    const int cls_t = class_of_[a.tail];
    const int cls_h = class_of_[a.head];
    if (cls_t == cls_h) return Rational(0);
    const int bt = block_of_[cls_t];
    const int bh = block_of_[cls_h];
    if (bt != bh) return p_in_x(a.tail) * (Rational(1) - p_in_x(a.head));
    return same_block_cut(cls_t, cls_h, bt);
}

Rational SchemeState::expected_cut_weight() const {
    Rational total;
    for (const Arc& a : d_->arcs()) {
        if (a.weight.is_zero()) continue;
        total += a.weight * arc_cut_probability(a);
    }
    return total;
}

Dicut SchemeState::cut() const {
    if (!done()) throw std::logic_error("scheme not fully decided");
    std::vector<int> x;
    for (int v = 0; v < d_->order(); ++v)
        if (p_in_x(v) == Rational(1)) x.push_back(v);
    return Dicut(std::move(x));
}

Rational expected_cut_weight(const AssignmentScheme& scheme, const WeightedDigraph& d) {
    return SchemeState(scheme, d).expected_cut_weight();
}

Dicut derandomize(const AssignmentScheme& scheme, const WeightedDigraph& d) {
    SchemeState state(scheme, d);
    while (!state.done()) {
        if (state.branch_count() == 1) {
            state.decide(0);
            continue;
        }
        SchemeState take = state;
        take.decide(0);
        SchemeState leave = state;
        leave.decide(1);
        // The expectation is a convex combination of the two branches, so
        // the larger branch never falls below it; ties stay on the X side.
        if (leave.expected_cut_weight() > take.expected_cut_weight())
            state = std::move(leave);
        else
            state = std::move(take);
    }
    return state.cut();
}

Dicut sample_scheme(const AssignmentScheme& scheme, const WeightedDigraph& d,
                    SplitMix64& rng) {
    SchemeState state(scheme, d);
    while (!state.done()) {
        if (state.branch_count() == 1) {
            state.decide(0);
            continue;
        }
        state.decide(bernoulli_exact(state.branch_probability(0), rng) ? 0 : 1);
    }
    return state.cut();
}

}  // namespace maxdicut
