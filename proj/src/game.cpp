#include "maxdicut/game.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "maxdicut/errors.hpp"
#include "maxdicut/simplex.hpp"

namespace maxdicut {
namespace {

std::vector<std::pair<int, int>> transitive_arcs(int nu) {
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < nu; ++i)
        for (int j = i + 1; j < nu; ++j) arcs.emplace_back(i, j);
    return arcs;
}

bool cuts_arc(std::uint64_t mask, int i, int j) {
    return (mask >> i & 1u) != 0 && (mask >> j & 1u) == 0;
}

}  // namespace

GameSolution cnu(int nu) {
    if (nu < 2 || nu > 12) throw BadParameterError("cnu handles 2 <= nu <= 12");
    const std::vector<std::pair<int, int>> arcs = transitive_arcs(nu);
    const std::size_t rows = arcs.size() + 1;
    const std::size_t masks = (std::size_t{1} << nu) - 2;  // proper nonempty subsets
    const std::size_t lambda_col = masks;
    const std::size_t slack0 = masks + 1;
    const std::size_t cols = slack0 + arcs.size();

    // Row a: sum_X cover(a, X) p_X - lambda - s_a = 0; last row: sum_X p_X = 1.
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
    std::vector<Rational> b(rows);
    std::vector<Rational> c(cols);
    for (std::size_t r = 0; r < arcs.size(); ++r) {
        for (std::uint64_t mask = 1; mask <= masks; ++mask)
            if (cuts_arc(mask, arcs[r].first, arcs[r].second)) a[r][mask - 1] = Rational(1);
        a[r][lambda_col] = Rational(-1);
        a[r][slack0 + r] = Rational(-1);
    }
    for (std::uint64_t mask = 1; mask <= masks; ++mask) a[rows - 1][mask - 1] = Rational(1);
    b[rows - 1] = Rational(1);
    c[lambda_col] = Rational(1);

    // Start from p_{0} = 1 (the singleton {0}): its slacks are its coverages.
    std::vector<int> basis(rows);
    for (std::size_t r = 0; r < arcs.size(); ++r) basis[r] = static_cast<int>(slack0 + r);
    basis[rows - 1] = 0;
    const LpSolution lp = simplex_max(a, b, c, std::move(basis));

    GameSolution solution;
    solution.nu = nu;
    solution.value = lp.value;
    if (lp.x[lambda_col] != lp.value)
        throw std::logic_error("game value disagrees with its lambda variable");
    Rational mass;
    for (std::uint64_t mask = 1; mask <= masks; ++mask) {
        const Rational& p = lp.x[mask - 1];
        if (p.is_negative()) throw std::logic_error("negative cut probability");
        if (p.is_zero()) continue;
        mass += p;
        solution.cut_distribution.emplace_back(Dicut::from_mask(mask, nu), p);
    }
    if (mass != Rational(1)) throw std::logic_error("cut probabilities do not sum to 1");
    for (std::size_t r = 0; r < arcs.size(); ++r) {
        Rational covered;
        for (const auto& [cut, p] : solution.cut_distribution)
            if (cut.contains(arcs[r].first) && !cut.contains(arcs[r].second)) covered += p;
        if (covered < solution.value)
            throw std::logic_error("an arc is covered below the game value");
    }

    // Dual certificate: the slack multipliers weight the arcs so that no
    // dicut at all, proper or not, cuts more than the value.
    Rational dual_mass;
    for (std::size_t r = 0; r < arcs.size(); ++r) {
        const Rational weight = -lp.reduced[slack0 + r];
        if (weight.is_negative()) throw std::logic_error("negative adversary weight");
        dual_mass += weight;
        solution.adversary_weights.emplace_back(arcs[r], weight);
    }
    if (dual_mass != Rational(1)) throw std::logic_error("adversary weights do not sum to 1");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nu); ++mask) {
        Rational cut_weight;
        for (std::size_t r = 0; r < arcs.size(); ++r)
            if (cuts_arc(mask, arcs[r].first, arcs[r].second))
                cut_weight += solution.adversary_weights[r].second;
        if (solution.value < cut_weight)
            throw std::logic_error("a dicut beats the adversary certificate");
    }
    return solution;
}

bool verify_cover_family(int nu, const std::vector<Dicut>& family, int t, int total) {
    if (nu < 2) throw BadParameterError("cover families need nu >= 2");
    if (t < 1) throw BadParameterError("cover threshold must be positive");
    if (static_cast<int>(family.size()) != total)
        throw BadParameterError("cover family size " + std::to_string(family.size()) +
                                " differs from its declared total " + std::to_string(total));
    for (const Dicut& cut : family)
        for (int v : cut.x_side())
            if (v < 0 || v >= nu)
                throw BadParameterError("cover family cut names vertex " + std::to_string(v) +
                                        " outside 0.." + std::to_string(nu - 1));
    for (int i = 0; i < nu; ++i)
        for (int j = i + 1; j < nu; ++j) {
            int covered = 0;
            for (const Dicut& cut : family)
                if (cut.contains(i) && !cut.contains(j)) ++covered;
            if (covered < t) return false;
        }
    return true;
}

const std::vector<CoverFamily>& appendix_cover_families() {
    static const std::vector<CoverFamily> families = [] {
        const auto cuts = [](std::vector<std::vector<int>> sides) {
            std::vector<Dicut> out;
            for (std::vector<int>& side : sides) out.emplace_back(std::move(side));
            return out;
        };
        std::vector<CoverFamily> all;
        all.push_back({5, 2, cuts({{0, 1, 2}, {0, 1}, {0, 2, 3}, {0, 2}, {0, 1, 3}})});
        all.push_back({6, 2, cuts({{0, 1, 4}, {0, 2, 3}, {0, 1, 2}, {0, 2, 4}, {0, 1, 3}})});
        all.push_back({7, 3,
                       cuts({{0, 1, 2, 4},
                             {0, 1, 2, 5},
                             {0, 1, 3, 4},
                             {0, 1, 3},
                             {0, 1, 5},
                             {0, 2, 3, 5},
                             {0, 2, 3},
                             {0, 2, 4}})});
        all.push_back({8, 4,
                       cuts({{0, 1, 2, 4},
                             {0, 1, 2, 5},
                             {0, 1, 2, 6},
                             {0, 1, 3, 4},
                             {0, 1, 3, 5},
                             {0, 1, 3, 6},
                             {0, 1, 4, 5},
                             {0, 2, 3, 4},
                             {0, 2, 3, 5},
                             {0, 2, 3, 6},
                             {0, 2, 4, 6}})});
        return all;
    }();
    return families;
}

std::pair<Rational, Rational> cnu_bounds_check(int nu) {
    if (nu < 2) throw BadParameterError("cnu_bounds_check needs nu >= 2");
    const Rational order(static_cast<long>(nu));
    Rational lower = Rational(1, 4) + Rational(1) / (Rational(4) * order);
    const Rational root3 = cbrt_upper_bound(Rational(9) * order * order);
    lower = std::max(lower, Rational(1, 4) + Rational(1) / (Rational(8) * root3));
    Rational upper(1);
    if (nu >= 12) {
        const Rational root2 = sqrt_lower_bound(order);
        upper = Rational(1, 4) + Rational(1) / (Rational(3) * root2 - Rational(10));
    }
    return {lower, upper};
}

}  // namespace maxdicut
