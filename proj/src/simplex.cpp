#include "maxdicut/simplex.hpp"

#include <cstddef>
#include <utility>

#include "maxdicut/errors.hpp"

namespace maxdicut {
namespace {

// Degenerate pivots tolerated before switching to Bland's rule for good.
constexpr int kDegenerateStreakLimit = 64;

}  // namespace

LpSolution simplex_max(const std::vector<std::vector<Rational>>& a,
                       const std::vector<Rational>& b, const std::vector<Rational>& c,
                       std::vector<int> basis) {
    const std::size_t m = a.size();
    const std::size_t n = c.size();
    if (b.size() != m || basis.size() != m)
        throw BadParameterError("simplex_max needs one rhs entry and one basis column per row");
    for (const std::vector<Rational>& row : a)
        if (row.size() != n)
            throw BadParameterError("simplex_max constraint width disagrees with the objective");

    // Tableau rows are [B^{-1} A | B^{-1} b]; column n is the rhs.
    std::vector<std::vector<Rational>> t(m);
    for (std::size_t i = 0; i < m; ++i) {
        t[i] = a[i];
        t[i].push_back(b[i]);
    }
    std::vector<int>& bas = basis;
    for (std::size_t i = 0; i < m; ++i) {
        const int col = bas[i];
        if (col < 0 || static_cast<std::size_t>(col) >= n)
            throw BadParameterError("basis column out of range");
        std::size_t pivot = m;
        for (std::size_t r = i; r < m; ++r)
            if (!t[r][col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot == m) throw BadParameterError("basis columns are singular");
        std::swap(t[i], t[pivot]);
        const Rational inv = t[i][col];
        for (Rational& entry : t[i])
            if (!entry.is_zero()) entry /= inv;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == i || t[r][col].is_zero()) continue;
            const Rational factor = t[r][col];
            for (std::size_t j = 0; j <= n; ++j)
                if (!t[i][j].is_zero()) t[r][j] -= factor * t[i][j];
        }
    }
    for (std::size_t i = 0; i < m; ++i)
        if (t[i][n].is_negative()) throw BadParameterError("supplied basis is not feasible");

    // Reduced-cost row and current objective, updated with every pivot.
    std::vector<Rational> reduced(c);
    Rational value;
    for (std::size_t i = 0; i < m; ++i) {
        const Rational& price = c[bas[i]];
        if (price.is_zero()) continue;
        value += price * t[i][n];
        for (std::size_t j = 0; j < n; ++j)
            if (!t[i][j].is_zero()) reduced[j] -= price * t[i][j];
    }

    int degenerate_streak = 0;
    bool bland = false;
    while (true) {
        std::size_t entering = n;
        for (std::size_t j = 0; j < n; ++j) {
            if (!reduced[j].is_positive()) continue;
            if (entering == n || (!bland && reduced[entering] < reduced[j])) entering = j;
            if (bland) break;
        }
        if (entering == n) break;

        std::size_t leaving = m;
        Rational best_ratio;
        for (std::size_t r = 0; r < m; ++r) {
            if (!t[r][entering].is_positive()) continue;
            const Rational ratio = t[r][n] / t[r][entering];
            if (leaving == m || ratio < best_ratio ||
                (ratio == best_ratio && bas[r] < bas[leaving])) {
                leaving = r;
                best_ratio = ratio;
            }
        }
        if (leaving == m) throw BadParameterError("objective is unbounded over the feasible set");
        if (best_ratio.is_zero()) {
            if (++degenerate_streak >= kDegenerateStreakLimit) bland = true;
        } else {
            degenerate_streak = 0;
        }

        std::vector<Rational>& prow = t[leaving];
        const Rational inv = prow[entering];
        for (Rational& entry : prow)
            if (!entry.is_zero()) entry /= inv;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == leaving || t[r][entering].is_zero()) continue;
            const Rational factor = t[r][entering];
            for (std::size_t j = 0; j <= n; ++j)
                if (!prow[j].is_zero()) t[r][j] -= factor * prow[j];
        }
        const Rational gain = reduced[entering];
        value += gain * prow[n];
        for (std::size_t j = 0; j < n; ++j)
            if (!prow[j].is_zero()) reduced[j] -= gain * prow[j];
        bas[leaving] = static_cast<int>(entering);
    }

    LpSolution solution;
    solution.value = std::move(value);
    solution.x.assign(n, Rational());
    for (std::size_t i = 0; i < m; ++i) solution.x[bas[i]] = t[i][n];
    solution.reduced = std::move(reduced);
    return solution;
}

}  // namespace maxdicut
