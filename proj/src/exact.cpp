#include "maxdicut/exact.hpp"

#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "maxdicut/errors.hpp"

namespace maxdicut {

namespace {

// Per-vertex incidence used for O(deg) weight updates along the Gray-code
// walk, which visits every subset flipping one vertex at a time.
struct Incidence {
    std::vector<std::vector<std::pair<int, Rational>>> out;
    std::vector<std::vector<std::pair<int, Rational>>> in;
};

Incidence build_incidence(const WeightedDigraph& d) {
    Incidence inc;
    inc.out.resize(d.order());
    inc.in.resize(d.order());
    for (const Arc& a : d.arcs()) {
        inc.out[a.tail].emplace_back(a.head, a.weight);
        inc.in[a.head].emplace_back(a.tail, a.weight);
    }
    return inc;
}

// Weight gained by inserting v into X, evaluated against a mask with bit v
// clear; removing v loses the same amount (no self-loops, so u != v).
Rational toggle_delta(const Incidence& inc, int v, std::uint64_t rest) {
    Rational delta;
    for (const auto& [u, w] : inc.out[v])
        if (!(rest >> u & 1)) delta += w;
    for (const auto& [u, w] : inc.in[v])
        if (rest >> u & 1) delta -= w;
    return delta;
}

void check_size(int n, int max_n) {
    if (n > max_n)
        throw InstanceTooLargeError("exact solver limited to " + std::to_string(max_n) +
                                    " vertices, got " + std::to_string(n));
}

}  // namespace

ExactCut max_dicut_exact(const WeightedDigraph& d, int max_n) {
    check_size(d.order(), max_n);
    const int n = d.order();
    const Incidence inc = build_incidence(d);
    const std::uint64_t total = std::uint64_t{1} << n;
    std::uint64_t mask = 0, best_mask = 0;
    Rational weight, best;
    for (std::uint64_t g = 1; g < total; ++g) {
        const int v = std::countr_zero(g);
        const std::uint64_t bit = std::uint64_t{1} << v;
        const Rational delta = toggle_delta(inc, v, mask & ~bit);
        if (mask & bit)
            weight -= delta;
        else
            weight += delta;
        mask ^= bit;
        if (weight > best || (weight == best && mask < best_mask)) {
            best = weight;
            best_mask = mask;
        }
    }
    return {Dicut::from_mask(best_mask, n), best};
}

ExactCut max_dicut_bruteforce(const WeightedDigraph& d) {
    check_size(d.order(), 20);
    const int n = d.order();
    const std::uint64_t total = std::uint64_t{1} << n;
    std::uint64_t best_mask = 0;
    Rational best;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Rational weight;
        for (const Arc& a : d.arcs())
            if ((mask >> a.tail & 1) && !(mask >> a.head & 1)) weight += a.weight;
        if (weight > best) {  // ascending masks: first optimum is the smallest
            best = weight;
            best_mask = mask;
        }
    }
    return {Dicut::from_mask(best_mask, n), best};
}

ExactCut min_dicut_exact(const WeightedDigraph& d, int max_n) {
    const int n = d.order();
    if (n < 2) throw BadParameterError("minimum dicut needs at least two vertices");
    check_size(n, max_n);
    const Incidence inc = build_incidence(d);
    const std::uint64_t total = std::uint64_t{1} << n;
    const std::uint64_t full = total - 1;
    std::uint64_t mask = 0, best_mask = 0;
    Rational weight, best;
    bool found = false;
    for (std::uint64_t g = 1; g < total; ++g) {
        const int v = std::countr_zero(g);
        const std::uint64_t bit = std::uint64_t{1} << v;
        const Rational delta = toggle_delta(inc, v, mask & ~bit);
        if (mask & bit)
            weight -= delta;
        else
            weight += delta;
        mask ^= bit;
        if (mask == 0 || mask == full) continue;
        if (!found || weight < best || (weight == best && mask < best_mask)) {
            found = true;
            best = weight;
            best_mask = mask;
        }
    }
    return {Dicut::from_mask(best_mask, n), best};
}

Rational max_cut_exact(const WeightedDigraph& g, int max_n) {
    check_size(g.order(), max_n);
    const int n = g.order();
    std::vector<std::vector<std::pair<int, Rational>>> adj(n);
    for (const Arc& a : g.arcs()) {
        adj[a.tail].emplace_back(a.head, a.weight);
        adj[a.head].emplace_back(a.tail, a.weight);
    }
    const std::uint64_t total = std::uint64_t{1} << n;
    std::uint64_t mask = 0;
    Rational weight, best;
    for (std::uint64_t gi = 1; gi < total; ++gi) {
        const int v = std::countr_zero(gi);
        const bool v_in = mask >> v & 1;
        // Flipping v toggles the separation of every incident edge.
        for (const auto& [u, w] : adj[v]) {
            if ((mask >> u & 1) == v_in)
                weight += w;
            else
                weight -= w;
        }
        mask ^= std::uint64_t{1} << v;
        if (weight > best) best = weight;
    }
    return best;
}

}  // namespace maxdicut
