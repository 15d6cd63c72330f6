#include "maxdicut/verify.hpp"

#include <exception>
#include <functional>
#include <utility>

#include "maxdicut/constructions.hpp"
#include "maxdicut/exact.hpp"
#include "maxdicut/game.hpp"
#include "maxdicut/generators.hpp"
#include "maxdicut/measures.hpp"
#include "maxdicut/rng.hpp"

namespace maxdicut {

bool SuiteReport::all_pass() const {
    for (const CheckResult& check : checks)
        if (!check.pass) return false;
    return true;
}

namespace {

CheckResult pass_fail(std::string criterion, std::string name, int failures, long total,
                      std::string first_failure) {
    CheckResult result;
    result.criterion = std::move(criterion);
    result.name = std::move(name);
    result.pass = failures == 0;
    result.detail = result.pass ? std::to_string(total) + " checks"
                                : std::to_string(failures) + "/" + std::to_string(total) +
                                      " failed; first: " + first_failure;
    return result;
}

void record(int& failures, std::string& first, const std::string& why) {
    if (failures++ == 0) first = why;
}

// A2: exact mac / w of the six extremal instances hits the published ratios.
CheckResult check_extremal_ratios() {
    const Rational expected[] = {Rational(1, 2),  Rational(1, 2), Rational(2, 5),
                                 Rational(2, 5),  Rational(3, 8), Rational(4, 11)};
    int failures = 0;
    std::string first;
    for (int nu = 3; nu <= 8; ++nu) {
        const WeightedDigraph d = appendix_extremal(nu);
        const Rational ratio = max_dicut_exact(d).weight / total_weight(d);
        if (ratio != expected[nu - 3])
            record(failures, first,
                   "nu=" + std::to_string(nu) + " ratio " + ratio.str() + " wants " +
                       expected[nu - 3].str());
    }
    return pass_fail("A2", "extremal-ratios", failures, 6, first);
}

// A4: the built-in cover families meet their thresholds.
CheckResult check_cover_families() {
    int failures = 0;
    std::string first;
    long total = 0;
    for (const CoverFamily& family : appendix_cover_families()) {
        ++total;
        if (!verify_cover_family(family.nu, family.cuts, family.t,
                                 static_cast<int>(family.cuts.size())))
            record(failures, first, "family nu=" + std::to_string(family.nu));
    }
    return pass_fail("A4", "cover-families", failures, total, first);
}

// A3: mac(T_k) = k(k+1)/2.
CheckResult check_tournaments() {
    int failures = 0;
    std::string first;
    for (int k = 1; k <= 4; ++k) {
        const Rational mac = max_dicut_exact(regular_tournament(k)).weight;
        const Rational want(static_cast<long>(k) * (k + 1), 2);
        if (mac != want)
            record(failures, first,
                   "k=" + std::to_string(k) + " mac " + mac.str() + " wants " + want.str());
    }
    return pass_fail("A3", "tournament-mac", failures, 4, first);
}

// A6: sandwich inequalities against both exact oracles.
CheckResult check_sandwich(std::uint64_t seed) {
    SplitMix64 rng(seed);
    int failures = 0;
    std::string first;
    const long total = 500;
    for (long i = 0; i < total; ++i) {
        const WeightedDigraph d =
            random_digraph(2 + static_cast<int>(i % 11), Rational(1 + i % 3, 4), 0, 5, rng.next());
        const Rational mac = max_dicut_exact(d).weight;
        const Rational min_cut = min_dicut_exact(d).weight;
        const Rational rp = r_plus(d);
        const Rational mac_g = max_cut_exact(underlying_graph(d));
        if (mac < rp + min_cut)
            record(failures, first, "instance " + std::to_string(i) + ": r+ + min dicut > mac");
        if (Rational(2) * mac < mac_g || mac_g + rp < Rational(2) * mac)
            record(failures, first, "instance " + std::to_string(i) + ": undirected sandwich");
        if (Rational(4) * mac < mac_g + Rational(2) * rp)
            record(failures, first, "instance " + std::to_string(i) + ": averaged bound");
    }
    return pass_fail("A6", "sandwich-bounds", failures, total, first);
}

// A7: two-tournament upper bound, and exactness when Q > 1/2.
CheckResult check_two_tournaments() {
    int failures = 0;
    std::string first;
    long total = 0;
    for (int k : {3, 5}) {
        const Rational shift = Rational(1) - Rational(1, k);
        for (const Rational& theta :
             {Rational(1, 10), Rational(1, 5), Rational(3, 10)}) {
            ++total;
            const WeightedDigraph d = two_tournament(k, theta);
            const Rational q = theta * shift / (Rational(1) - theta);
            const Rational mac = max_dicut_exact(d).weight;
            if (mac_upper_two_tournament(k, q) < mac)
                record(failures, first,
                       "k=" + std::to_string(k) + " theta=" + theta.str() + " upper bound");
        }
        for (const Rational& theta : {Rational(2, 5), Rational(1, 2)}) {
            const Rational q = theta * shift / (Rational(1) - theta);
            if (q <= Rational(1, 2)) continue;
            ++total;
            const WeightedDigraph d = two_tournament(k, theta);
            const Rational mac = max_dicut_exact(d).weight;
            const Rational want = q * Rational(static_cast<long>(k) * k);
            if (mac != want || mac != theta * total_weight(d))
                record(failures, first,
                       "k=" + std::to_string(k) + " theta=" + theta.str() + " mac " + mac.str() +
                           " wants " + want.str());
        }
    }
    return pass_fail("A7", "two-tournament", failures, total, first);
}

// A8: staircase mac upper bound at exact scale plus the arc-count identity.
CheckResult check_staircase_mac() {
    int failures = 0;
    std::string first;
    for (int n = 4; n <= 18; ++n) {
        long q = 0;
        while ((q + 1) * (q + 1) <= n) ++q;
        const Rational mac = max_dicut_exact(staircase(n)).weight;
        if (Rational(n * q * q, 8) < mac)
            record(failures, first, "n=" + std::to_string(n) + " mac " + mac.str());
    }
    return pass_fail("A8", "staircase-mac", failures, 15, first);
}

CheckResult check_staircase_counts() {
    int failures = 0;
    std::string first;
    for (int n = 4; n <= 400; ++n)
        if (staircase(n).arc_count() != staircase_arc_count(n))
            record(failures, first, "n=" + std::to_string(n));
    return pass_fail("A8", "staircase-arcs", failures, 397, first);
}

// A9 sweeps over the block layout.
CheckResult check_claim_a() {
    int failures = 0;
    std::string first;
    long total = 0;
    for (long k = 7; k <= 200; ++k) {
        const Rational target(k, 4 * k - 2);
        for (long q = 0; q <= block_z(k); ++q) {
            ++total;
            const long f = block_f(k, q);
            const long size = 2 * f + q;
            const Rational cut_probability((f + q) * f, size * (size - 1));
            if (cut_probability < target)
                record(failures, first, "k=" + std::to_string(k) + " q=" + std::to_string(q));
            if (q == 0 && cut_probability != target)
                record(failures, first, "k=" + std::to_string(k) + " q=0 not tight");
        }
    }
    return pass_fail("A9", "claim-a", failures, total, first);
}

CheckResult check_claim_b() {
    int failures = 0;
    std::string first;
    for (long k = 7; k <= 200; ++k) {
        const long stars = n_star(k);
        if (stars * stars < k * k * k)
            record(failures, first, "k=" + std::to_string(k));
    }
    if (n_star(7) != 36) record(failures, first, "n_star(7) = " + std::to_string(n_star(7)));
    return pass_fail("A9", "claim-b", failures, 195, first);
}

CheckResult check_claim_c() {
    int failures = 0;
    std::string first;
    long total = 0;
    for (long k = 7; k <= 50; ++k) {
        const std::vector<BlockSpec> layout = block_layout(k);
        for (std::size_t i = 0; i + 1 < layout.size(); ++i) {
            ++total;
            const Rational left(layout[i].x_target, layout[i].size);
            const Rational right(layout[i + 1].x_target, layout[i + 1].size);
            if (right >= left)
                record(failures, first,
                       "k=" + std::to_string(k) + " blocks " + std::to_string(i) + "," +
                           std::to_string(i + 1));
        }
    }
    return pass_fail("A9", "claim-c", failures, total, first);
}

// A10 helper: re-derives the duality certificate from the returned solution.
bool duality_holds(const GameSolution& s, std::string& why) {
    Rational mass;
    for (const auto& [cut, p] : s.cut_distribution) {
        if (p.is_negative() || p.is_zero()) {
            why = "nonpositive probability";
            return false;
        }
        mass += p;
    }
    if (mass != Rational(1)) {
        why = "probabilities sum to " + mass.str();
        return false;
    }
    Rational dual_mass;
    for (const auto& [arc, weight] : s.adversary_weights) {
        if (weight.is_negative()) {
            why = "negative adversary weight";
            return false;
        }
        dual_mass += weight;
    }
    if (dual_mass != Rational(1)) {
        why = "adversary weights sum to " + dual_mass.str();
        return false;
    }
    for (int i = 0; i < s.nu; ++i)
        for (int j = i + 1; j < s.nu; ++j) {
            Rational covered;
            for (const auto& [cut, p] : s.cut_distribution)
                if (cut.contains(i) && !cut.contains(j)) covered += p;
            if (covered < s.value) {
                why = "arc " + std::to_string(i) + "->" + std::to_string(j) + " undercovered";
                return false;
            }
        }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s.nu); ++mask) {
        Rational cut_weight;
        for (const auto& [arc, weight] : s.adversary_weights)
            if ((mask >> arc.first & 1u) != 0 && (mask >> arc.second & 1u) == 0)
                cut_weight += weight;
        if (s.value < cut_weight) {
            why = "mask " + std::to_string(mask) + " beats the dual";
            return false;
        }
    }
    return true;
}

// A5 corpus driver: a fresh construction per seeded instance, checking the
// certificate contract and, at exact scale, the guarantee against mac.
CheckResult certificate_row(
    const char* name, std::uint64_t row_seed, bool skip_zero_weight,
    const std::function<WeightedDigraph(long, SplitMix64&)>& make,
    const std::function<Construction(const WeightedDigraph&, long)>& construct) {
    SplitMix64 rng(row_seed);
    const int count = 1000;
    int failures = 0;
    std::string first;
    long attempts = 0;
    int valid = 0;
    while (valid < count && attempts < 10L * count) {
        const long i = attempts++;
        const WeightedDigraph d = make(i, rng);
        if (skip_zero_weight && total_weight(d).is_zero()) continue;
        ++valid;
        try {
            const Construction result = construct(d, i);
            const Rational& bound = result.certificate.guaranteed_weight;
            const Rational& achieved = result.certificate.achieved_weight;
            if (achieved != dicut_weight(d, result.cut))
                record(failures, first, "instance " + std::to_string(i) + ": achieved mismatch");
            else if (achieved < bound)
                record(failures, first, "instance " + std::to_string(i) + ": bound missed");
            else if (d.order() <= 12 && max_dicut_exact(d).weight < bound)
                record(failures, first, "instance " + std::to_string(i) + ": bound beats mac");
        } catch (const std::exception& error) {
            record(failures, first, "instance " + std::to_string(i) + ": " + error.what());
        }
    }
    if (valid < count)
        record(failures, first, "only " + std::to_string(valid) + " usable instances");
    return pass_fail("A5", name, failures, valid, first);
}

}  // namespace

SuiteReport verify_appendix() {
    SuiteReport report;
    report.checks.push_back(check_extremal_ratios());
    report.checks.push_back(check_cover_families());
    return report;
}

SuiteReport verify_bounds(std::uint64_t seed) {
    SplitMix64 root(seed);
    SuiteReport report;
    report.checks.push_back(check_tournaments());
    report.checks.push_back(check_sandwich(root.next()));
    report.checks.push_back(check_two_tournaments());
    report.checks.push_back(check_staircase_mac());
    report.checks.push_back(check_staircase_counts());
    return report;
}

SuiteReport verify_lp() {
    SuiteReport report;
    const Rational table[] = {Rational(1),      Rational(1, 2),  Rational(1, 2),
                              Rational(2, 5),   Rational(2, 5),  Rational(3, 8),
                              Rational(4, 11),  Rational(13, 37), Rational(9, 26),
                              Rational(31, 92)};
    std::vector<GameSolution> solutions;
    for (int nu = 2; nu <= 11; ++nu) solutions.push_back(cnu(nu));
    {
        int failures = 0;
        std::string first;
        for (const GameSolution& s : solutions)
            if (s.value != table[s.nu - 2])
                record(failures, first,
                       "c_" + std::to_string(s.nu) + " = " + s.value.str() + " wants " +
                           table[s.nu - 2].str());
        report.checks.push_back(pass_fail("A1", "cnu-table", failures, 10, first));
    }
    {
        int failures = 0;
        std::string first;
        for (const GameSolution& s : solutions) {
            std::string why;
            if (!duality_holds(s, why))
                record(failures, first, "nu=" + std::to_string(s.nu) + ": " + why);
            const auto [lower, upper] = cnu_bounds_check(s.nu);
            if (s.value < lower || upper < s.value)
                record(failures, first, "nu=" + std::to_string(s.nu) + ": outside brackets");
        }
        report.checks.push_back(pass_fail("A10", "duality", failures, 10, first));
    }
    {
        int failures = 0;
        std::string first;
        for (std::size_t i = 0; i + 1 < solutions.size(); ++i)
            if (solutions[i].value < solutions[i + 1].value)
                record(failures, first, "c_" + std::to_string(solutions[i + 1].nu) + " increased");
        report.checks.push_back(pass_fail("A10", "monotone", failures, 9, first));
    }
    return report;
}

SuiteReport verify_claims() {
    SuiteReport report;
    report.checks.push_back(check_claim_a());
    report.checks.push_back(check_claim_b());
    report.checks.push_back(check_claim_c());
    return report;
}

SuiteReport verify_certificates(std::uint64_t seed) {
    SplitMix64 root(seed);
    SuiteReport report;
    const auto small_digraph = [](long i, SplitMix64& rng) {
        return random_digraph(2 + static_cast<int>(i % 11), Rational(1 + i % 3, 4), 0, 6,
                              rng.next());
    };
    report.checks.push_back(certificate_row(
        "rplus", root.next(), false, small_digraph,
        [](const WeightedDigraph& d, long) { return positive_imbalance_cut(d); }));
    report.checks.push_back(certificate_row(
        "theta", root.next(), true, small_digraph,
        [](const WeightedDigraph& d, long) { return theta_biased_cut(d); }));
    report.checks.push_back(certificate_row(
        "coloring", root.next(), false, small_digraph,
        [](const WeightedDigraph& d, long i) {
            return coloring_cut(d, i % 2 == 0 ? path_coloring(d) : greedy_coloring(d));
        }));
    report.checks.push_back(certificate_row(
        "bipartite", root.next(), false,
        [](long i, SplitMix64& rng) {
            const int n = 4 + static_cast<int>(i % 9);
            return i % 2 == 0 ? random_dag(n, Rational(1, 4), 0, 5, rng.next())
                              : random_digraph(n, Rational(1, 2), 1, 5, rng.next());
        },
        [](const WeightedDigraph& d, long i) {
            return bipartite_family_cut(
                d, i % 2 == 0 ? bipartite_components(d) : greedy_matching(d));
        }));
    report.checks.push_back(certificate_row(
        "path-matching", root.next(), false,
        [](long i, SplitMix64& rng) {
            return random_dag(4 + static_cast<int>(i % 11), Rational(1 + i % 3, 4), 0, 5,
                              rng.next());
        },
        [](const WeightedDigraph& d, long) { return path_matching_cut(d); }));
    report.checks.push_back(certificate_row(
        "dag-block", root.next(), false,
        [](long i, SplitMix64& rng) {
            return random_dag(4 + static_cast<int>(i % 17), Rational(1 + i % 3, 4), 0, 4,
                              rng.next());
        },
        [](const WeightedDigraph& d, long i) { return dag_block_cut(d, 7 + i % 3); }));
    report.checks.push_back(certificate_row(
        "dag", root.next(), false,
        [](long i, SplitMix64& rng) {
            if (i < 700)
                return random_dag(2 + static_cast<int>(i % 13), Rational(1 + i % 3, 4), 1, 5,
                                  rng.next());
            if (i < 900)
                return random_dag(20 + static_cast<int>(i % 8), Rational(3, 4), 2, 9, rng.next());
            return random_dag(36 + static_cast<int>(i % 6), Rational(1), 5, 20, rng.next());
        },
        [](const WeightedDigraph& d, long) { return dag_cut(d); }));
    report.checks.push_back(certificate_row(
        "scc", root.next(), false,
        [](long i, SplitMix64& rng) {
            if (i < 600)
                return random_digraph(2 + static_cast<int>(i % 11), Rational(1 + i % 3, 4), 1, 5,
                                      rng.next());
            return random_bounded_cycle(12 + static_cast<int>(i % 19), 3 + static_cast<int>(i % 3),
                                        rng.next());
        },
        [](const WeightedDigraph& d, long) { return strong_component_cut(d); }));
    return report;
}

SuiteReport verify_all(std::uint64_t seed) {
    SplitMix64 root(seed);
    const std::uint64_t bounds_seed = root.next();
    const std::uint64_t certificate_seed = root.next();
    SuiteReport report;
    for (SuiteReport part :
         {verify_appendix(), verify_bounds(bounds_seed), verify_lp(), verify_claims(),
          verify_certificates(certificate_seed)})
        for (CheckResult& check : part.checks) report.checks.push_back(std::move(check));
    return report;
}

}  // namespace maxdicut
