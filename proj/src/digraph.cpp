#include "maxdicut/digraph.hpp"

#include <algorithm>

namespace maxdicut {

WeightedDigraph::WeightedDigraph(int n, std::vector<Arc> arcs)
    : n_(n), arcs_(std::move(arcs)) {}

WeightedDigraph make_digraph(int n, std::vector<Arc> arcs) {
    if (n < 0) throw BadParameterError("make_digraph: negative vertex count");
    for (const Arc& a : arcs) {
        if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n)
            throw VertexRangeError("make_digraph: arc endpoint out of range: " +
                                   std::to_string(a.tail) + "->" + std::to_string(a.head));
        if (a.tail == a.head)
            throw SelfLoopError("make_digraph: self-loop at vertex " + std::to_string(a.tail));
        if (a.weight.is_negative())
            throw NegativeWeightError("make_digraph: negative weight on arc " +
                                      std::to_string(a.tail) + "->" + std::to_string(a.head));
    }
    return WeightedDigraph(n, std::move(arcs));
}

Dicut::Dicut(std::vector<int> x_side) : x_(std::move(x_side)) {
    std::sort(x_.begin(), x_.end());
    x_.erase(std::unique(x_.begin(), x_.end()), x_.end());
    if (!x_.empty() && x_.front() < 0)
        throw VertexRangeError("Dicut: negative vertex id");
}

Dicut Dicut::from_mask(std::uint64_t mask, int n) {
    std::vector<int> xs;
    for (int v = 0; v < n; ++v)
        if ((mask >> v) & 1u) xs.push_back(v);
    return Dicut(std::move(xs));
}

bool Dicut::contains(int v) const {
    return std::binary_search(x_.begin(), x_.end(), v);
}

std::uint64_t Dicut::mask() const {
    std::uint64_t m = 0;
    for (int v : x_) m |= std::uint64_t(1) << v;
    return m;
}

Rational dicut_weight(const WeightedDigraph& d, const Dicut& c) {
    if (!c.x_side().empty() && c.x_side().back() >= d.order())
        throw VertexRangeError("dicut_weight: cut vertex out of range");
    Rational w;
    for (const Arc& a : d.arcs())
        if (c.contains(a.tail) && !c.contains(a.head)) w += a.weight;
    return w;
}

}  // namespace maxdicut
