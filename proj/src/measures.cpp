#include "maxdicut/measures.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace maxdicut {

Rational total_weight(const WeightedDigraph& d) {
    Rational w;
    for (const Arc& a : d.arcs()) w += a.weight;
    return w;
}

Rational imbalance(const WeightedDigraph& d, int v) {
    if (v < 0 || v >= d.order()) throw VertexRangeError("imbalance: vertex out of range");
    Rational r;
    for (const Arc& a : d.arcs()) {
        if (a.tail == v) r += a.weight;
        if (a.head == v) r -= a.weight;
    }
    return r;
}

namespace {

std::vector<Rational> all_imbalances(const WeightedDigraph& d) {
    std::vector<Rational> r(d.order());
    for (const Arc& a : d.arcs()) {
        r[a.tail] += a.weight;
        r[a.head] -= a.weight;
    }
    return r;
}

}  // namespace

Rational r_plus(const WeightedDigraph& d) {
    Rational pos, absum;
    for (const Rational& r : all_imbalances(d)) {
        if (r.is_positive()) pos += r;
        absum += abs(r);
    }
    if (pos * Rational(2) != absum)
        throw std::logic_error("r_plus: positive-part and half-absolute sums disagree");
    return pos;
}

Rational theta(const WeightedDigraph& d) {
    Rational w = total_weight(d);
    if (w.is_zero()) throw ZeroWeightError("theta: undefined on zero-weight digraph");
    return r_plus(d) / w;
}

Rational l_of_theta(const Rational& t) {
    if (t.is_negative() || t > Rational(1))
        throw BadParameterError("l_of_theta: argument outside [0, 1]");
    if (t < Rational(1, 3))
        return Rational(1, 4) + t * t / (Rational(4) * (Rational(1) - Rational(2) * t));
    return t;
}

WeightedDigraph underlying_graph(const WeightedDigraph& d) {
    std::map<std::pair<int, int>, Rational> edges;
    for (const Arc& a : d.arcs()) {
        auto key = std::minmax(a.tail, a.head);
        edges[{key.first, key.second}] += a.weight;
    }
    std::vector<Arc> arcs;
    arcs.reserve(edges.size());
    for (const auto& [e, w] : edges) arcs.push_back(Arc{e.first, e.second, w});
    return make_digraph(d.order(), std::move(arcs));
}

namespace {

struct AdjOut {
    std::vector<std::vector<int>> out;  // vertex -> neighbour list (may repeat)
    explicit AdjOut(const WeightedDigraph& d) : out(d.order()) {
        for (const Arc& a : d.arcs()) out[a.tail].push_back(a.head);
    }
};

// Iterative Tarjan; components numbered in topological order.
std::pair<int, std::vector<int>> strong_components(const WeightedDigraph& d) {
    const int n = d.order();
    AdjOut adj(d);
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<bool> onstack(n, false);
    std::vector<int> stack;
    int next_index = 0, ncomp = 0;

    struct Frame {
        int v;
        std::size_t child;
    };
    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        std::vector<Frame> call{{root, 0}};
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        onstack[root] = true;
        while (!call.empty()) {
            Frame& f = call.back();
            if (f.child < adj.out[f.v].size()) {
                int u = adj.out[f.v][f.child++];
                if (index[u] == -1) {
                    index[u] = low[u] = next_index++;
                    stack.push_back(u);
                    onstack[u] = true;
                    call.push_back({u, 0});
                } else if (onstack[u]) {
                    low[f.v] = std::min(low[f.v], index[u]);
                }
            } else {
                if (low[f.v] == index[f.v]) {
                    while (true) {
                        int u = stack.back();
                        stack.pop_back();
                        onstack[u] = false;
                        comp[u] = ncomp;
                        if (u == f.v) break;
                    }
                    ++ncomp;
                }
                int v = f.v;
                call.pop_back();
                if (!call.empty()) {
                    int parent = call.back().v;
                    low[parent] = std::min(low[parent], low[v]);
                }
            }
        }
    }
    // Tarjan emits components in reverse topological order; flip the ids.
    for (int v = 0; v < n; ++v) comp[v] = ncomp - 1 - comp[v];
    return {ncomp, comp};
}

}  // namespace

Condensation condensation(const WeightedDigraph& d) {
    auto [ncomp, comp] = strong_components(d);
    std::map<std::pair<int, int>, Rational> merged;
    Rational internal;
    for (const Arc& a : d.arcs()) {
        int ct = comp[a.tail], ch = comp[a.head];
        if (ct == ch)
            internal += a.weight;
        else
            merged[{ct, ch}] += a.weight;
    }
    std::vector<Arc> arcs;
    arcs.reserve(merged.size());
    for (const auto& [e, w] : merged) arcs.push_back(Arc{e.first, e.second, w});
    return Condensation{make_digraph(ncomp, std::move(arcs)), std::move(comp), internal};
}

LevelDecomposition level_decomposition(const WeightedDigraph& d) {
    const int n = d.order();
    std::vector<int> indeg(n, 0);
    AdjOut adj(d);
    for (const Arc& a : d.arcs()) ++indeg[a.head];

    LevelDecomposition ld;
    ld.level_of.assign(n, -1);
    std::vector<int> current;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) current.push_back(v);
    int placed = 0;
    while (!current.empty()) {
        for (int v : current) ld.level_of[v] = static_cast<int>(ld.levels.size());
        placed += static_cast<int>(current.size());
        std::vector<int> next;
        for (int v : current)
            for (int u : adj.out[v])
                if (--indeg[u] == 0) next.push_back(u);
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        ld.levels.push_back(std::move(current));
        current = std::move(next);
    }
    if (placed != n) throw CyclicInputError("level_decomposition: input digraph has a cycle");
    return ld;
}

WeightedDigraph contract_levels(const WeightedDigraph& d) {
    LevelDecomposition ld = level_decomposition(d);
    std::map<std::pair<int, int>, Rational> merged;
    for (const Arc& a : d.arcs())
        merged[{ld.level_of[a.tail], ld.level_of[a.head]}] += a.weight;
    std::vector<Arc> arcs;
    arcs.reserve(merged.size());
    for (const auto& [e, w] : merged) arcs.push_back(Arc{e.first, e.second, w});
    return make_digraph(static_cast<int>(ld.levels.size()), std::move(arcs));
}

std::vector<int> longest_path(const WeightedDigraph& d) {
    LevelDecomposition ld = level_decomposition(d);  // rejects cyclic input
    const int n = d.order();
    if (n == 0) return {};
    AdjOut adj(d);
    for (auto& nb : adj.out) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    // len[v] = order of the longest path starting at v; process levels from
    // the deepest upwards so successors are final.
    std::vector<int> len(n, 1);
    for (auto it = ld.levels.rbegin(); it != ld.levels.rend(); ++it)
        for (int v : *it)
            for (int u : adj.out[v]) len[v] = std::max(len[v], len[u] + 1);

    int best = 0;
    for (int v = 1; v < n; ++v)
        if (len[v] > len[best]) best = v;
    std::vector<int> path{best};
    while (true) {
        int v = path.back();
        int pick = -1;
        for (int u : adj.out[v])
            if (len[u] == len[v] - 1) {
                pick = u;
                break;  // neighbours sorted: smallest id wins
            }
        if (pick == -1) break;
        path.push_back(pick);
    }
    return path;
}

namespace {

std::vector<std::set<int>> undirected_adjacency(const WeightedDigraph& d) {
    std::vector<std::set<int>> adj(d.order());
    for (const Arc& a : d.arcs()) {
        adj[a.tail].insert(a.head);
        adj[a.head].insert(a.tail);
    }
    return adj;
}

}  // namespace

ProperColoring greedy_coloring(const WeightedDigraph& d) {
    const int n = d.order();
    auto adj = undirected_adjacency(d);
    ProperColoring c;
    c.color_of.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        std::set<int> used;
        for (int u : adj[v])
            if (c.color_of[u] != -1) used.insert(c.color_of[u]);
        int col = 0;
        while (used.count(col)) ++col;
        c.color_of[v] = col;
        c.colors_used = std::max(c.colors_used, col + 1);
    }
    if (n == 0) c.colors_used = 0;
    return c;
}

ProperColoring path_coloring(const WeightedDigraph& d) {
    const int n = d.order();
    // Maximal acyclic spanning subdigraph: scan arcs in input order, keep an
    // arc iff no kept path already runs head -> tail.
    std::vector<std::vector<int>> kept(n);
    auto reaches = [&](int from, int to) {
        std::vector<int> stack{from};
        std::vector<bool> seen(n, false);
        seen[from] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (v == to) return true;
            for (int u : kept[v])
                if (!seen[u]) {
                    seen[u] = true;
                    stack.push_back(u);
                }
        }
        return false;
    };
    std::vector<Arc> kept_arcs;
    for (const Arc& a : d.arcs())
        if (!reaches(a.head, a.tail)) {
            kept[a.tail].push_back(a.head);
            kept_arcs.push_back(a);
        }
    LevelDecomposition ld = level_decomposition(WeightedDigraph(n, std::move(kept_arcs)));
    ProperColoring c;
    c.color_of = ld.level_of;
    c.colors_used = static_cast<int>(ld.levels.size());
    return c;
}

bool is_proper_coloring(const WeightedDigraph& d, const ProperColoring& c) {
    if (static_cast<int>(c.color_of.size()) != d.order()) return false;
    for (int col : c.color_of)
        if (col < 0 || col >= c.colors_used) return false;
    for (const Arc& a : d.arcs())
        if (c.color_of[a.tail] == c.color_of[a.head]) return false;
    return true;
}

}  // namespace maxdicut
