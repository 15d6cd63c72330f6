#include "maxdicut/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "maxdicut/errors.hpp"
#include "maxdicut/measures.hpp"

namespace maxdicut {

namespace {

long isqrt_floor(long n) {
    long q = 0;
    while ((q + 1) * (q + 1) <= n) ++q;
    return q;
}

void append_tournament(std::vector<Arc>& arcs, int offset, int k) {
    const int half = (k - 1) / 2;
    for (int i = 0; i < k; ++i)
        for (int j = 1; j <= half; ++j)
            arcs.push_back({offset + i, offset + (i + j) % k, Rational(1)});
}

}  // namespace

WeightedDigraph regular_tournament(int k) {
    if (k < 1) throw BadParameterError("regular tournament requires k >= 1");
    const int n = 2 * k + 1;
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(n) * k);
    for (int i = 0; i < n; ++i)
        for (int j = 1; j <= k; ++j) arcs.push_back({i, (i + j) % n, Rational(1)});
    return make_digraph(n, std::move(arcs));
}

WeightedDigraph two_tournament(int k, const Rational& theta) {
    if (k < 3 || k % 2 == 0)
        throw BadParameterError("two-tournament requires odd k >= 3");
    if (theta.is_negative() || theta >= Rational(1))
        throw BadParameterError("two-tournament requires 0 <= theta < 1");
    const Rational q = theta * (Rational(1) - Rational(1, k)) / (Rational(1) - theta);
    std::vector<Arc> arcs;
    append_tournament(arcs, 0, k);
    append_tournament(arcs, k, k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) arcs.push_back({a, k + b, q});
    WeightedDigraph d = make_digraph(2 * k, std::move(arcs));
    if (maxdicut::theta(d) != theta)
        throw std::logic_error("two-tournament theta round-trip failed");
    return d;
}

Rational mac_upper_two_tournament(int k, const Rational& Q) {
    if (k < 1) throw BadParameterError("two-tournament bound requires k >= 1");
    if (!Q.is_positive() || Q >= Rational(1))
        throw BadParameterError("two-tournament bound requires 0 < Q < 1");
    const Rational k2(static_cast<long>(k) * k);
    if (Q <= Rational(1, 2)) return k2 / (Rational(4) * (Rational(1) - Q));
    return Q * k2;
}

long staircase_arc_count(int n) {
    const long q = isqrt_floor(n);
    const long num = 3 * n * q * q - 3 * n * q - q * q * q + q;
    if (num % 6 != 0) throw std::logic_error("staircase arc count not integral");
    return num / 6;
}

WeightedDigraph staircase(int n) {
    if (n < 4) throw BadParameterError("staircase requires n >= 4");
    const int q = static_cast<int>(isqrt_floor(n));
    std::vector<Arc> arcs;
    for (int s = 0; s < n; ++s)
        for (int a = 0; a < q; ++a)
            for (int b = a + 1; b < q; ++b) {
                const int tail = (s + a) % n;
                const int head = (s + b) % n;
                if (tail < head) arcs.push_back({tail, head, Rational(1)});
            }
    if (static_cast<long>(arcs.size()) != staircase_arc_count(n))
        throw std::logic_error("staircase arc count mismatch");
    return make_digraph(n, std::move(arcs));
}

WeightedDigraph staircase_trimmed(long m) {
    if (m < 1) throw BadParameterError("staircase trim requires m >= 1");
    int n = 4;
    while (staircase_arc_count(n) < m) ++n;
    const WeightedDigraph base = staircase(n);
    const std::vector<Arc>& arcs = base.arcs();
    std::vector<std::size_t> order(arcs.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (arcs[a].tail != arcs[b].tail) return arcs[a].tail < arcs[b].tail;
        if (arcs[a].head != arcs[b].head) return arcs[a].head < arcs[b].head;
        return a < b;
    });
    std::vector<bool> drop(arcs.size(), false);
    for (std::size_t i = static_cast<std::size_t>(m); i < arcs.size(); ++i)
        drop[order[i]] = true;
    std::vector<Arc> kept;
    kept.reserve(static_cast<std::size_t>(m));
    for (std::size_t i = 0; i < arcs.size(); ++i)
        if (!drop[i]) kept.push_back(arcs[i]);
    return make_digraph(n, std::move(kept));
}

WeightedDigraph appendix_extremal(int nu) {
    struct Entry {
        int tail;
        int head;
        int weight;
    };
    std::vector<Entry> entries;
    switch (nu) {
        case 3:
            entries = {{0, 1, 1}, {1, 2, 1}};
            break;
        case 4:
            entries = {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 2, 1}};
            break;
        case 5:
            entries = {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {1, 3, 1}};
            break;
        case 6:
            entries = {{0, 1, 2}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 5, 1},
                       {0, 2, 1}, {1, 3, 1}, {1, 4, 1}, {2, 4, 1}};
            break;
        case 7:
            entries = {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1},
                       {4, 5, 1}, {5, 6, 1}, {1, 3, 1}, {3, 5, 1}};
            break;
        case 8:
            entries = {{0, 1, 2}, {1, 2, 2}, {2, 3, 2}, {3, 4, 2}, {4, 5, 2},
                       {5, 6, 2}, {6, 7, 2}, {1, 3, 2}, {4, 6, 2}, {1, 4, 1},
                       {2, 4, 1}, {3, 5, 1}, {3, 6, 1}};
            break;
        default:
            throw BadParameterError("appendix instance requires nu in 3..8");
    }
    std::vector<Arc> arcs;
    arcs.reserve(entries.size());
    for (const Entry& e : entries) arcs.push_back({e.tail, e.head, Rational(e.weight)});
    return make_digraph(nu, std::move(arcs));
}

WeightedDigraph complete_transitive_dag(int nu) {
    if (nu < 1) throw BadParameterError("transitive DAG requires nu >= 1");
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(nu) * (nu - 1) / 2);
    for (int i = 0; i < nu; ++i)
        for (int j = i + 1; j < nu; ++j) arcs.push_back({i, j, Rational(1)});
    return make_digraph(nu, std::move(arcs));
}

namespace {

void check_random_params(int n, const Rational& density, long wlo, long whi) {
    if (n < 1) throw BadParameterError("random instance requires n >= 1");
    if (density.is_negative() || density > Rational(1))
        throw BadParameterError("density must lie in [0, 1]");
    if (wlo < 0 || wlo > whi) throw BadParameterError("weight range invalid");
}

}  // namespace

WeightedDigraph random_dag(int n, const Rational& density, long wlo, long whi,
                           std::uint64_t seed) {
    check_random_params(n, density, wlo, whi);
    SplitMix64 rng(seed);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[i], perm[uniform_long(0, i, rng)]);
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (bernoulli_exact(density, rng))
                arcs.push_back({perm[i], perm[j], Rational(uniform_long(wlo, whi, rng))});
    return make_digraph(n, std::move(arcs));
}

WeightedDigraph random_digraph(int n, const Rational& density, long wlo, long whi,
                               std::uint64_t seed) {
    check_random_params(n, density, wlo, whi);
    SplitMix64 rng(seed);
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            if (bernoulli_exact(density, rng))
                arcs.push_back({u, v, Rational(uniform_long(wlo, whi, rng))});
        }
    return make_digraph(n, std::move(arcs));
}

WeightedDigraph random_bounded_cycle(int n, int l, std::uint64_t seed) {
    if (n < 1) throw BadParameterError("random instance requires n >= 1");
    if (l < 1) throw BadParameterError("cycle bound requires l >= 1");
    SplitMix64 rng(seed);
    const Rational half(1, 2);
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            const int gu = u / l;
            const int gv = v / l;
            if (gu > gv) continue;  // backward cross-group arcs would allow long cycles
            if (bernoulli_exact(half, rng))
                arcs.push_back({u, v, Rational(uniform_long(1, 3, rng))});
        }
    return make_digraph(n, std::move(arcs));
}

}  // namespace maxdicut
