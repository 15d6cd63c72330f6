#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "maxdicut/constructions.hpp"
#include "maxdicut/exact.hpp"
#include "maxdicut/game.hpp"
#include "maxdicut/generators.hpp"
#include "maxdicut/io.hpp"
#include "maxdicut/measures.hpp"
#include "maxdicut/rng.hpp"
#include "maxdicut/schemes.hpp"
#include "maxdicut/simplex.hpp"

using namespace maxdicut;

namespace {

WeightedDigraph unit_path(int n) {
    std::vector<Arc> arcs;
    for (int i = 0; i + 1 < n; ++i) arcs.push_back({i, i + 1, Rational(1)});
    return make_digraph(n, std::move(arcs));
}

WeightedDigraph triangle() {
    return make_digraph(3, {{0, 1, Rational(1)}, {1, 2, Rational(1)}, {2, 0, Rational(1)}});
}

Rational small_rational(SplitMix64& rng) {
    const long num = static_cast<long>(rng.next() % 41) - 20;
    const long den = 1 + static_cast<long>(rng.next() % 13);
    return Rational(num, den);
}

}  // namespace

TEST_SUITE("rational") {
    TEST_CASE("construction canonicalizes sign and gcd") {
        CHECK(Rational(2, 4) == Rational(1, 2));
        CHECK(Rational(1, -2) == Rational(-1, 2));
        CHECK(Rational(-6, -4) == Rational(3, 2));
        CHECK(Rational(0, 7) == Rational(0));
        CHECK(Rational(2, 4).str() == "1/2");
        CHECK(Rational(8, 2).str() == "4");
    }

    TEST_CASE("field axioms on fuzzed values") {
        SplitMix64 rng(1);
        for (int it = 0; it < 200; ++it) {
            const Rational a = small_rational(rng);
            const Rational b = small_rational(rng);
            const Rational c = small_rational(rng);
            CHECK(a + b == b + a);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a - a == Rational(0));
            CHECK(a + Rational(0) == a);
            CHECK(a * Rational(1) == a);
            if (!b.is_zero()) CHECK((a / b) * b == a);
        }
    }

    TEST_CASE("parse accepts integers, fractions and decimals") {
        CHECK(*Rational::parse("7") == Rational(7));
        CHECK(*Rational::parse("-3/9") == Rational(-1, 3));
        CHECK(*Rational::parse("2.75") == Rational(11, 4));
        CHECK(*Rational::parse("-.5") == Rational(-1, 2));
        CHECK(*Rational::parse("4.") == Rational(4));
        CHECK(!Rational::parse(""));
        CHECK(!Rational::parse("1/0"));
        CHECK(!Rational::parse("1/"));
        CHECK(!Rational::parse("/2"));
        CHECK(!Rational::parse("1.2.3"));
        CHECK(!Rational::parse("abc"));
    }

    TEST_CASE("str round-trips through parse") {
        SplitMix64 rng(2);
        for (int it = 0; it < 100; ++it) {
            const Rational a = small_rational(rng);
            CHECK(*Rational::parse(a.str()) == a);
        }
    }

    TEST_CASE("pow") {
        CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
        CHECK(Rational(-5).pow(2) == Rational(25));
        CHECK(Rational(7, 2).pow(0) == Rational(1));
    }

    TEST_CASE("dyadic radical brackets") {
        const Rational s2 = sqrt_lower_bound(Rational(2));
        const Rational ulp = Rational(1) / Rational(2).pow(64);
        CHECK(s2 * s2 <= Rational(2));
        CHECK((s2 + ulp) * (s2 + ulp) > Rational(2));
        CHECK(sqrt_lower_bound(Rational(4)) == Rational(2));
        CHECK(sqrt_lower_bound(Rational(25)) == Rational(5));

        const Rational c9 = cbrt_upper_bound(Rational(9));
        CHECK(c9.pow(3) >= Rational(9));
        CHECK((c9 - ulp).pow(3) < Rational(9));
        CHECK(cbrt_upper_bound(Rational(8)) == Rational(2));

        CHECK(pow35_lower_bound(Rational(32)) == Rational(8));
        const Rational p7 = pow35_lower_bound(Rational(7));
        CHECK(p7.pow(5) <= Rational(7).pow(3));
        CHECK((p7 + ulp).pow(5) > Rational(7).pow(3));
        CHECK(pow35_lower_bound(Rational(0)) == Rational(0));
    }
}

TEST_SUITE("graph_io") {
    TEST_CASE("make_digraph validates") {
        CHECK_THROWS_AS(make_digraph(2, {{0, 0, Rational(1)}}), SelfLoopError);
        CHECK_THROWS_AS(make_digraph(2, {{0, 2, Rational(1)}}), VertexRangeError);
        CHECK_THROWS_AS(make_digraph(2, {{-1, 1, Rational(1)}}), VertexRangeError);
        CHECK_THROWS_AS(make_digraph(2, {{0, 1, Rational(-1, 2)}}), NegativeWeightError);
    }

    TEST_CASE("parse handles comments and rational weights") {
        const WeightedDigraph d =
            parse_digraph("# header\n3 2\n0 1 1\n# inline comment\n1 2 3/2\n");
        CHECK(d.order() == 3);
        CHECK(d.arc_count() == 2);
        CHECK(d.arcs()[1].weight == Rational(3, 2));
    }

    TEST_CASE("parse rejects malformed input") {
        CHECK_THROWS_AS(parse_digraph("x y\n"), ParseError);
        CHECK_THROWS_AS(parse_digraph("2 2\n0 1 1\n"), ParseError);
        CHECK_THROWS_AS(parse_digraph("2 1\n0 1 1/0\n"), ParseError);
        CHECK_THROWS_AS(parse_digraph("2 1\n0 1 -3\n"), NegativeWeightError);
        CHECK_THROWS_AS(parse_digraph("1 1\n0 0 1\n"), SelfLoopError);
        CHECK_THROWS_AS(parse_digraph("2 1\n0 5 1\n"), VertexRangeError);
    }

    TEST_CASE("serialize then parse is byte identical") {
        const WeightedDigraph d = random_digraph(8, Rational(1, 2), 0, 5, 42);
        const std::string text = serialize_digraph(d);
        CHECK(serialize_digraph(parse_digraph(text)) == text);
    }
}

TEST_SUITE("measures") {
    TEST_CASE("imbalance and r_plus") {
        const WeightedDigraph d = unit_path(3);
        CHECK(imbalance(d, 0) == Rational(1));
        CHECK(imbalance(d, 1) == Rational(0));
        CHECK(imbalance(d, 2) == Rational(-1));
        CHECK(r_plus(d) == Rational(1));
        CHECK(r_plus(regular_tournament(3)) == Rational(0));
    }

    TEST_CASE("cut imbalance identity on fuzzed digraphs") {
        SplitMix64 rng(99);
        for (int it = 0; it < 100; ++it) {
            const WeightedDigraph d =
                random_digraph(2 + it % 9, Rational(1, 2), 0, 5, rng.next());
            const std::uint64_t mask = rng.next() & ((std::uint64_t{1} << d.order()) - 1);
            Rational sum_r, out_cross, in_cross;
            for (int v = 0; v < d.order(); ++v)
                if (mask >> v & 1) sum_r += imbalance(d, v);
            for (const Arc& a : d.arcs()) {
                const bool tx = mask >> a.tail & 1;
                const bool hx = mask >> a.head & 1;
                if (tx && !hx) out_cross += a.weight;
                if (!tx && hx) in_cross += a.weight;
            }
            CHECK(sum_r == out_cross - in_cross);
        }
    }

    TEST_CASE("theta and l_of_theta") {
        CHECK(theta(two_tournament(3, Rational(1, 5))) == Rational(1, 5));
        CHECK(theta(unit_path(3)) == Rational(1, 2));
        CHECK_THROWS_AS(theta(make_digraph(2, {{0, 1, Rational(0)}})), ZeroWeightError);
        CHECK(l_of_theta(Rational(0)) == Rational(1, 4));
        CHECK(l_of_theta(Rational(1, 4)) == Rational(9, 32));
        CHECK(l_of_theta(Rational(1, 3)) == Rational(1, 3));
        CHECK(l_of_theta(Rational(1, 2)) == Rational(1, 2));
    }

    TEST_CASE("underlying graph merges antiparallel pairs") {
        const WeightedDigraph d = make_digraph(2, {{0, 1, Rational(2)}, {1, 0, Rational(3)}});
        const WeightedDigraph g = underlying_graph(d);
        CHECK(g.arc_count() == 1);
        CHECK(g.arcs()[0].tail == 0);
        CHECK(g.arcs()[0].weight == Rational(5));
        CHECK(total_weight(g) == total_weight(d));
    }

    TEST_CASE("level decomposition") {
        const LevelDecomposition ld = level_decomposition(complete_transitive_dag(4));
        REQUIRE(ld.levels.size() == 4);
        for (int v = 0; v < 4; ++v) CHECK(ld.level_of[v] == v);
        CHECK_THROWS_AS(level_decomposition(triangle()), CyclicInputError);
        CHECK(level_decomposition(make_digraph(3, {})).levels.size() == 1);
    }

    TEST_CASE("condensation of a triangle with a pendant arc") {
        const WeightedDigraph d = make_digraph(
            4, {{0, 1, Rational(1)}, {1, 2, Rational(1)}, {2, 0, Rational(1)}, {2, 3, Rational(5)}});
        const Condensation c = condensation(d);
        CHECK(c.quotient.order() == 2);
        CHECK(c.internal_weight == Rational(3));
        CHECK(total_weight(c.quotient) == Rational(5));
        CHECK(c.component_of[0] == c.component_of[1]);
        CHECK(c.component_of[0] == c.component_of[2]);
        CHECK(c.component_of[3] != c.component_of[0]);
        CHECK(c.component_of[0] < c.component_of[3]);
    }

    TEST_CASE("longest path and colorings") {
        const std::vector<int> p = longest_path(appendix_extremal(5));
        CHECK(p == std::vector<int>{0, 1, 2, 3, 4});
        CHECK(longest_path(make_digraph(3, {})).size() == 1);

        const WeightedDigraph t2 = regular_tournament(2);
        CHECK(is_proper_coloring(t2, greedy_coloring(t2)));
        CHECK(is_proper_coloring(t2, path_coloring(t2)));
        CHECK(greedy_coloring(t2).colors_used == 5);

        const WeightedDigraph dag = complete_transitive_dag(5);
        const ProperColoring by_level = path_coloring(dag);
        for (int v = 0; v < 5; ++v) CHECK(by_level.color_of[v] == v);

        ProperColoring bad;
        bad.color_of = {0, 0, 0};
        bad.colors_used = 1;
        CHECK(!is_proper_coloring(unit_path(3), bad));
    }

    TEST_CASE("contract_levels never raises the maximum dicut") {
        SplitMix64 rng(7);
        for (int it = 0; it < 50; ++it) {
            const WeightedDigraph d = random_dag(3 + it % 6, Rational(1, 2), 0, 4, rng.next());
            const WeightedDigraph q = contract_levels(d);
            CHECK(max_dicut_exact(q).weight <= max_dicut_exact(d).weight);
            CHECK(total_weight(q) == total_weight(d));
        }
    }
}

TEST_SUITE("exact") {
    TEST_CASE("gray-code search matches brute force") {
        SplitMix64 rng(11);
        for (int it = 0; it < 300; ++it) {
            const WeightedDigraph d =
                random_digraph(2 + it % 7, Rational(1, 2), 0, 5, rng.next());
            const ExactCut a = max_dicut_exact(d);
            const ExactCut b = max_dicut_bruteforce(d);
            CHECK(a.weight == b.weight);
            CHECK(a.cut.mask() == b.cut.mask());
            CHECK(dicut_weight(d, a.cut) == a.weight);
        }
    }

    TEST_CASE("ties pick the lexicographically smallest mask") {
        const WeightedDigraph d = make_digraph(3, {{0, 1, Rational(1)}});
        CHECK(max_dicut_exact(d).cut.mask() == 1);
        CHECK(max_dicut_exact(make_digraph(3, {})).cut.mask() == 0);
    }

    TEST_CASE("regular tournaments") {
        CHECK(max_dicut_exact(regular_tournament(1)).weight == Rational(1));
        CHECK(max_dicut_exact(regular_tournament(2)).weight == Rational(3));
        CHECK(max_dicut_exact(regular_tournament(3)).weight == Rational(6));
    }

    TEST_CASE("weight scaling") {
        const WeightedDigraph d = random_digraph(6, Rational(1, 2), 0, 4, 5);
        std::vector<Arc> doubled = d.arcs();
        for (Arc& a : doubled) a.weight *= Rational(2);
        const WeightedDigraph d2 = make_digraph(d.order(), std::move(doubled));
        CHECK(max_dicut_exact(d2).weight == Rational(2) * max_dicut_exact(d).weight);
    }

    TEST_CASE("minimum dicut and maximum cut") {
        CHECK(min_dicut_exact(triangle()).weight == Rational(1));
        CHECK(min_dicut_exact(triangle()).weight <= max_dicut_exact(triangle()).weight);
        CHECK(max_dicut_exact(triangle()).weight == Rational(1));
        CHECK(max_cut_exact(underlying_graph(regular_tournament(2))) == Rational(6));
    }

    TEST_CASE("size guard") {
        CHECK_THROWS_AS(max_dicut_exact(complete_transitive_dag(30)), InstanceTooLargeError);
        CHECK_THROWS_AS(max_dicut_exact(complete_transitive_dag(14), 12), InstanceTooLargeError);
    }
}

TEST_SUITE("generators") {
    TEST_CASE("regular tournament shape") {
        for (int k = 1; k <= 4; ++k) {
            const WeightedDigraph d = regular_tournament(k);
            CHECK(d.order() == 2 * k + 1);
            CHECK(d.arc_count() == (2 * k + 1) * k);
            for (int v = 0; v < d.order(); ++v) CHECK(imbalance(d, v) == Rational(0));
        }
    }

    TEST_CASE("two tournament hits the requested theta") {
        const WeightedDigraph d = two_tournament(3, Rational(1, 4));
        CHECK(d.order() == 6);
        CHECK(total_weight(d) == Rational(8));
        CHECK(theta(d) == Rational(1, 4));
        CHECK(theta(two_tournament(5, Rational(2, 5))) == Rational(2, 5));
    }

    TEST_CASE("two tournament upper bound formula") {
        CHECK(mac_upper_two_tournament(3, Rational(2, 9)) == Rational(81, 28));
        CHECK(mac_upper_two_tournament(3, Rational(2, 3)) == Rational(6));
    }

    TEST_CASE("staircase") {
        const WeightedDigraph d = staircase(9);
        CHECK(d.order() == 9);
        CHECK(d.arc_count() == 23);
        CHECK(staircase_arc_count(9) == 23);
        for (const Arc& a : d.arcs()) {
            CHECK(a.tail < a.head);
            CHECK(a.weight == Rational(1));
        }
        for (int n = 4; n <= 60; ++n)
            CHECK(staircase(n).arc_count() == staircase_arc_count(n));
    }

    TEST_CASE("trimmed staircase") {
        CHECK(serialize_digraph(staircase_trimmed(23)) == serialize_digraph(staircase(9)));
        CHECK(serialize_digraph(staircase_trimmed(3)) == serialize_digraph(staircase(4)));
        const WeightedDigraph d = staircase_trimmed(20);
        CHECK(d.order() == 9);
        CHECK(d.arc_count() == 20);
    }

    TEST_CASE("appendix extremal instances") {
        const int arc_counts[] = {2, 4, 5, 9, 8, 13};
        const long weights[] = {2, 4, 5, 10, 8, 22};
        for (int nu = 3; nu <= 8; ++nu) {
            const WeightedDigraph d = appendix_extremal(nu);
            CHECK(d.order() == nu);
            CHECK(d.arc_count() == arc_counts[nu - 3]);
            CHECK(total_weight(d) == Rational(weights[nu - 3]));
            CHECK(static_cast<int>(level_decomposition(d).levels.size()) == nu);
        }
        CHECK_THROWS_AS(appendix_extremal(9), BadParameterError);
    }

    TEST_CASE("complete transitive dag") {
        CHECK(complete_transitive_dag(5).arc_count() == 10);
        CHECK(level_decomposition(complete_transitive_dag(7)).levels.size() == 7);
    }

    TEST_CASE("random generators are seed deterministic") {
        CHECK(serialize_digraph(random_dag(10, Rational(1, 3), 0, 5, 7)) ==
              serialize_digraph(random_dag(10, Rational(1, 3), 0, 5, 7)));
        CHECK(serialize_digraph(random_digraph(10, Rational(1, 2), 1, 4, 1)) !=
              serialize_digraph(random_digraph(10, Rational(1, 2), 1, 4, 2)));
    }

    TEST_CASE("random density and weight ranges") {
        CHECK(random_digraph(6, Rational(0), 0, 5, 3).arc_count() == 0);
        CHECK(random_digraph(6, Rational(1), 0, 5, 3).arc_count() == 30);
        CHECK(random_dag(6, Rational(1), 0, 5, 3).arc_count() == 15);
        const WeightedDigraph d = random_dag(12, Rational(1, 2), 2, 4, 9);
        for (const Arc& a : d.arcs()) {
            CHECK(a.weight >= Rational(2));
            CHECK(a.weight <= Rational(4));
        }
        for (int it = 0; it < 30; ++it)
            CHECK_NOTHROW(level_decomposition(random_dag(8, Rational(2, 3), 0, 3, 100 + it)));
    }

    TEST_CASE("bounded cycle components stay small") {
        for (int it = 0; it < 10; ++it) {
            const WeightedDigraph d = random_bounded_cycle(12 + it, 3, it);
            const Condensation c = condensation(d);
            std::vector<int> size(c.quotient.order(), 0);
            for (int v = 0; v < d.order(); ++v) ++size[c.component_of[v]];
            for (int s : size) CHECK(s <= 3);
            for (const Arc& a : d.arcs()) {
                CHECK(a.weight >= Rational(1));
                CHECK(a.weight <= Rational(3));
            }
        }
    }
}

TEST_SUITE("schemes") {
    TEST_CASE("biased coin expectation on one arc") {
        const WeightedDigraph d = make_digraph(2, {{0, 1, Rational(1)}});
        const AssignmentScheme s = BiasedCoinScheme{{Rational(3, 4), Rational(1, 4)}};
        CHECK(expected_cut_weight(s, d) == Rational(9, 16));
        CHECK(dicut_weight(d, derandomize(s, d)) == Rational(1));
    }

    TEST_CASE("group split expectation on one arc") {
        const WeightedDigraph d = make_digraph(2, {{0, 1, Rational(1)}});
        SplitBlock block;
        block.classes = {{0}, {1}};
        block.x_target = 1;
        block.y_target = 1;
        GroupSplitScheme gs;
        gs.n = 2;
        gs.blocks = {block};
        CHECK(expected_cut_weight(AssignmentScheme(gs), d) == Rational(1, 2));
        gs.blocks[0].orientation_coin = true;
        CHECK(expected_cut_weight(AssignmentScheme(gs), d) == Rational(1, 2));
        const SchemeState st(AssignmentScheme(gs), d);
        CHECK(st.p_in_x(0) == Rational(1, 2));
        CHECK(st.p_in_x(1) == Rational(1, 2));
    }

    TEST_CASE("state walk keeps probabilities normalized") {
        const WeightedDigraph d = regular_tournament(2);
        const Construction c = coloring_cut(d, best_coloring(d));
        REQUIRE(c.scheme);
        SchemeState st(*c.scheme, d);
        while (!st.done()) {
            Rational total;
            for (int b = 0; b < st.branch_count(); ++b) total += st.branch_probability(b);
            CHECK(total == Rational(1));
            st.decide(0);
        }
        CHECK(st.expected_cut_weight() == dicut_weight(d, st.cut()));
    }

    TEST_CASE("derandomization never loses expectation") {
        SplitMix64 rng(17);
        for (int it = 0; it < 100; ++it) {
            const WeightedDigraph d =
                random_digraph(2 + it % 8, Rational(1, 2), 0, 4, rng.next());
            if (total_weight(d).is_zero()) continue;
            const Construction c = theta_biased_cut(d);
            if (!c.scheme) continue;
            const Rational expected = expected_cut_weight(*c.scheme, d);
            CHECK(dicut_weight(d, derandomize(*c.scheme, d)) >= expected);
        }
    }

    TEST_CASE("sampling matches the exact expectation") {
        const WeightedDigraph d = regular_tournament(2);
        const Construction c = coloring_cut(d, best_coloring(d));
        REQUIRE(c.scheme);
        CHECK(expected_cut_weight(*c.scheme, d) == Rational(3));
        SplitMix64 rng(23);
        Rational sum;
        const int trials = 20000;
        for (int t = 0; t < trials; ++t)
            sum += dicut_weight(d, sample_scheme(*c.scheme, d, rng));
        const Rational mean = sum / Rational(trials);
        CHECK(mean > Rational(29, 10));
        CHECK(mean < Rational(31, 10));
    }
}

TEST_SUITE("simplex") {
    TEST_CASE("two variable maximum") {
        const std::vector<std::vector<Rational>> a = {
            {Rational(1), Rational(1), Rational(1), Rational(0)},
            {Rational(1), Rational(3), Rational(0), Rational(1)}};
        const std::vector<Rational> b = {Rational(4), Rational(6)};
        const std::vector<Rational> c = {Rational(3), Rational(2), Rational(0), Rational(0)};
        const LpSolution s = simplex_max(a, b, c, {2, 3});
        CHECK(s.value == Rational(12));
        CHECK(s.x[0] == Rational(4));
        CHECK(s.x[1] == Rational(0));
        for (const Rational& r : s.reduced) CHECK(r <= Rational(0));
    }

    TEST_CASE("rejects unbounded and malformed problems") {
        CHECK_THROWS_AS(simplex_max({{Rational(1), Rational(-1)}}, {Rational(1)},
                                    {Rational(1), Rational(0)}, {0}),
                        BadParameterError);
        CHECK_THROWS_AS(simplex_max({{Rational(1), Rational(1)}, {Rational(2), Rational(2)}},
                                    {Rational(1), Rational(2)},
                                    {Rational(1), Rational(0)}, {0, 1}),
                        BadParameterError);
        CHECK_THROWS_AS(simplex_max({{Rational(1), Rational(1)}}, {Rational(-1)},
                                    {Rational(1), Rational(0)}, {0}),
                        BadParameterError);
        CHECK_THROWS_AS(simplex_max({{Rational(1)}}, {Rational(1), Rational(2)},
                                    {Rational(1)}, {0}),
                        BadParameterError);
    }

    TEST_CASE("degenerate pivoting terminates on a classic cycler") {
        const Rational z(0);
        const std::vector<std::vector<Rational>> a = {
            {Rational(1, 4), Rational(-60), Rational(-1, 25), Rational(9), Rational(1), z, z},
            {Rational(1, 2), Rational(-90), Rational(-1, 50), Rational(3), z, Rational(1), z},
            {z, z, Rational(1), z, z, z, Rational(1)}};
        const std::vector<Rational> b = {Rational(0), Rational(0), Rational(1)};
        const std::vector<Rational> c = {Rational(3, 4), Rational(-150), Rational(1, 50),
                                         Rational(-6), z, z, z};
        const LpSolution s = simplex_max(a, b, c, {4, 5, 6});
        CHECK(s.value == Rational(1, 20));
    }
}

TEST_SUITE("constructions") {
    TEST_CASE("block layout parameters") {
        CHECK(block_f(7, 0) == 7);
        CHECK(block_f(7, 1) == 5);
        CHECK(block_size(7, 0) == 14);
        CHECK(block_size(7, 1) == 11);
        CHECK(block_z(7) == 1);
        CHECK(block_z(8) == 2);
        CHECK(block_z(50) == 5);
        CHECK(n_star(7) == 36);
        CHECK(n_star(8) == 58);
        CHECK_THROWS_AS(block_f(6, 0), BadParameterError);
        CHECK_THROWS_AS(block_f(7, 2), BadParameterError);

        const std::vector<BlockSpec> layout = block_layout(7);
        REQUIRE(layout.size() == 3);
        CHECK(layout[0].size == 11);
        CHECK(layout[0].x_target == 6);
        CHECK(layout[0].y_target == 5);
        CHECK(layout[1].size == 14);
        CHECK(layout[1].x_target == 7);
        CHECK(layout[2].size == 11);
        CHECK(layout[2].x_target == 5);
        for (long k = 7; k <= 40; ++k) {
            long total = 0;
            for (const BlockSpec& s : block_layout(k)) total += s.size;
            CHECK(total == n_star(k));
        }
    }

    TEST_CASE("positive imbalance cut") {
        const Construction c = positive_imbalance_cut(unit_path(3));
        CHECK(c.certificate.algorithm == "rplus");
        CHECK(c.certificate.guaranteed_weight == Rational(1));
        CHECK(c.certificate.achieved_weight == Rational(1));
        CHECK(c.cut.x_side() == std::vector<int>{0});
    }

    TEST_CASE("theta biased cut on a skewed two tournament") {
        const WeightedDigraph d = two_tournament(3, Rational(1, 4));
        const Construction c = theta_biased_cut(d);
        CHECK(c.certificate.guaranteed_weight == Rational(9, 4));
        CHECK(c.certificate.achieved_weight >= Rational(9, 4));
        REQUIRE(c.scheme);
        bool saw_pbar = false;
        for (const auto& [k, v] : c.certificate.params)
            if (k == "p_bar") {
                saw_pbar = true;
                CHECK(v == Rational(1, 4));
            }
        CHECK(saw_pbar);
    }

    TEST_CASE("theta at or above one third falls back to the imbalance cut") {
        const Construction c = theta_biased_cut(unit_path(3));
        CHECK(c.certificate.algorithm == "theta");
        CHECK(c.certificate.guaranteed_weight == Rational(1));
        CHECK(!c.scheme);
        CHECK_THROWS_AS(theta_biased_cut(make_digraph(2, {{0, 1, Rational(0)}})),
                        ZeroWeightError);
    }

    TEST_CASE("coloring cut is tight on the five vertex tournament") {
        const WeightedDigraph d = regular_tournament(2);
        const Construction c = coloring_cut(d, best_coloring(d));
        CHECK(c.certificate.guaranteed_weight == Rational(3));
        CHECK(c.certificate.achieved_weight == Rational(3));

        const WeightedDigraph p = unit_path(3);
        const Construction even = coloring_cut(p, greedy_coloring(p));
        CHECK(even.certificate.guaranteed_weight == Rational(1));

        ProperColoring bad;
        bad.color_of = {0, 0, 0};
        bad.colors_used = 1;
        CHECK_THROWS_AS(coloring_cut(p, bad), ImproperColoringError);
    }

    TEST_CASE("bipartite family cut") {
        const WeightedDigraph d =
            make_digraph(4, {{0, 1, Rational(3)}, {2, 3, Rational(4)}});
        const Construction c = bipartite_family_cut(d, bipartite_components(d));
        CHECK(c.certificate.guaranteed_weight == Rational(7, 2));
        CHECK(c.certificate.achieved_weight == Rational(7));

        const WeightedDigraph e = make_digraph(3, {{0, 1, Rational(1)}, {0, 2, Rational(1)}});
        CHECK_THROWS_AS(bipartite_family_cut(e, {{{0, 2}, {1}}}), DependentSideError);
        CHECK_THROWS_AS(bipartite_family_cut(e, {{{0, 5}, {1}}}), VertexRangeError);
        CHECK_THROWS_AS(bipartite_family_cut(e, {{{0}, {1}}, {{0}, {2}}}), BadParameterError);
    }

    TEST_CASE("bipartite components and greedy matching helpers") {
        const std::vector<SidePair> comps = bipartite_components(unit_path(3));
        REQUIRE(comps.size() == 1);
        CHECK(comps[0].x_side == std::vector<int>{0, 2});
        CHECK(comps[0].y_side == std::vector<int>{1});
        CHECK(bipartite_components(triangle()).empty());
        CHECK(bipartite_components(make_digraph(3, {})).empty());

        const WeightedDigraph d = make_digraph(
            4, {{0, 1, Rational(1)}, {1, 2, Rational(5)}, {2, 3, Rational(2)}});
        const std::vector<SidePair> matching = greedy_matching(d);
        REQUIRE(matching.size() == 1);
        CHECK(matching[0].x_side == std::vector<int>{1});
        CHECK(matching[0].y_side == std::vector<int>{2});
    }

    TEST_CASE("path matching cut") {
        const Construction c = path_matching_cut(unit_path(3));
        CHECK(c.certificate.guaranteed_weight == Rational(3, 4));
        CHECK(c.certificate.achieved_weight >= Rational(1));
        for (const auto& [k, v] : c.certificate.params) {
            if (k == "path_order") CHECK(v == Rational(3));
            if (k == "matching_weight") CHECK(v == Rational(1));
        }

        const Construction a7 = path_matching_cut(appendix_extremal(7));
        CHECK(a7.certificate.guaranteed_weight == Rational(11, 4));
        CHECK_THROWS_AS(path_matching_cut(triangle()), CyclicInputError);
    }

    TEST_CASE("dag block cut") {
        const WeightedDigraph d = complete_transitive_dag(6);
        const Construction c = dag_block_cut(d, 7);
        CHECK(c.certificate.guaranteed_weight == Rational(15) * Rational(7, 26));
        CHECK(c.certificate.achieved_weight >= c.certificate.guaranteed_weight);
        REQUIRE(c.scheme);
        const SchemeState st(*c.scheme, d);
        for (const Arc& a : d.arcs()) CHECK(st.arc_cut_probability(a) >= Rational(7, 26));
        CHECK_THROWS_AS(dag_block_cut(d, 6), BadParameterError);
        CHECK_THROWS_AS(dag_block_cut(complete_transitive_dag(37), 7), BadParameterError);
        CHECK_NOTHROW(dag_block_cut(complete_transitive_dag(37), 8));
    }

    TEST_CASE("dag cut dispatch") {
        const Construction path_branch = dag_cut(appendix_extremal(5));
        const Construction color_branch = dag_cut(random_dag(10, Rational(1), 5, 9, 3));
        std::vector<Arc> heavy;
        for (int i = 0; i + 1 < 40; ++i) heavy.push_back({i, i + 1, Rational(100)});
        const Construction block_branch = dag_cut(make_digraph(40, std::move(heavy)));
        const auto param = [](const Construction& c, const std::string& name) {
            for (const auto& [k, v] : c.certificate.params)
                if (k == name) return v;
            return Rational(-1);
        };
        CHECK(param(path_branch, "branch") == Rational(0));
        CHECK(param(color_branch, "branch") == Rational(2));
        CHECK(param(block_branch, "branch") == Rational(1));
        CHECK(param(block_branch, "k") == Rational(8));
        for (const Construction* c : {&path_branch, &color_branch, &block_branch}) {
            const Rational w = c == &block_branch ? Rational(3900)
                               : c == &path_branch ? Rational(6)
                                                   : Rational(-1);
            if (w > Rational(0))
                CHECK(c->certificate.guaranteed_weight >=
                      w / Rational(4) + pow35_lower_bound(w) / Rational(24));
        }
        CHECK_THROWS_AS(dag_cut(make_digraph(2, {{0, 1, Rational(1, 2)}})), MinWeightError);
        CHECK(dag_cut(make_digraph(3, {})).certificate.guaranteed_weight == Rational(0));
    }

    TEST_CASE("strong component cut") {
        const Construction acyclic = strong_component_cut(complete_transitive_dag(5));
        CHECK(acyclic.certificate.algorithm == "scc");
        bool saw_acyclic = false;
        for (const auto& [k, v] : acyclic.certificate.params)
            if (k == "acyclic") saw_acyclic = v == Rational(1);
        CHECK(saw_acyclic);

        const WeightedDigraph d = make_digraph(
            4, {{0, 1, Rational(1)}, {1, 2, Rational(1)}, {2, 0, Rational(1)}, {2, 3, Rational(5)}});
        const Construction c = strong_component_cut(d);
        const auto param = [&](const std::string& name) {
            for (const auto& [k, v] : c.certificate.params)
                if (k == name) return v;
            return Rational(-1);
        };
        CHECK(param("L") == Rational(3));
        CHECK(param("w_acyclic") == Rational(5));
        CHECK(param("w_strong") == Rational(3));
        const Rational expected_bound =
            Rational(2) + (pow35_lower_bound(Rational(5)) + Rational(3)) / Rational(108);
        CHECK(c.certificate.guaranteed_weight == expected_bound);
        CHECK(c.certificate.achieved_weight >= Rational(5));
        CHECK_THROWS_AS(strong_component_cut(make_digraph(2, {{0, 1, Rational(1, 2)}})),
                        MinWeightError);
    }

    TEST_CASE("best coloring") {
        CHECK(best_coloring(regular_tournament(2)).colors_used == 5);
        CHECK(best_coloring(unit_path(4)).colors_used == 2);
        std::vector<Arc> cycle5;
        for (int i = 0; i < 5; ++i) cycle5.push_back({i, (i + 1) % 5, Rational(1)});
        const WeightedDigraph c5 = make_digraph(5, std::move(cycle5));
        CHECK(best_coloring(c5).colors_used == 3);
        CHECK(is_proper_coloring(c5, best_coloring(c5)));
    }

    TEST_CASE("certificates hold against the exact optimum on small corpora") {
        SplitMix64 rng(31);
        for (int it = 0; it < 60; ++it) {
            const WeightedDigraph d = random_digraph(2 + it % 7, Rational(1, 2), 1, 5, rng.next());
            if (total_weight(d).is_zero()) continue;
            const Rational opt = max_dicut_exact(d).weight;
            for (const Construction& c : {theta_biased_cut(d), strong_component_cut(d)}) {
                CHECK(c.certificate.achieved_weight == dicut_weight(d, c.cut));
                CHECK(c.certificate.achieved_weight >= c.certificate.guaranteed_weight);
                CHECK(c.certificate.achieved_weight <= opt);
            }
        }
    }
}

TEST_SUITE("game") {
    TEST_CASE("small game values") {
        const Rational expected[] = {Rational(1),     Rational(1, 2), Rational(1, 2),
                                     Rational(2, 5),  Rational(2, 5), Rational(3, 8),
                                     Rational(4, 11)};
        for (int nu = 2; nu <= 8; ++nu) CHECK(cnu(nu).value == expected[nu - 2]);
        CHECK_THROWS_AS(cnu(1), BadParameterError);
        CHECK_THROWS_AS(cnu(13), BadParameterError);
    }

    TEST_CASE("solution invariants") {
        const GameSolution s = cnu(5);
        Rational mass, dual_mass;
        for (const auto& [cut, p] : s.cut_distribution) {
            CHECK(p.is_positive());
            const std::size_t k = cut.x_side().size();
            CHECK(k >= 1);
            CHECK(k <= 4);
            mass += p;
        }
        CHECK(mass == Rational(1));
        for (const auto& [arc, w] : s.adversary_weights) {
            CHECK(!w.is_negative());
            CHECK(arc.first < arc.second);
            dual_mass += w;
        }
        CHECK(dual_mass == Rational(1));
    }

    TEST_CASE("cover families") {
        for (const CoverFamily& f : appendix_cover_families()) {
            CHECK(verify_cover_family(f.nu, f.cuts, f.t, static_cast<int>(f.cuts.size())));
        }
        const CoverFamily& five = appendix_cover_families().front();
        REQUIRE(five.nu == 5);
        std::vector<Dicut> broken(five.cuts.begin() + 1, five.cuts.end());
        CHECK(!verify_cover_family(5, broken, five.t, static_cast<int>(broken.size())));
        CHECK_THROWS_AS(verify_cover_family(5, five.cuts, five.t, 99), BadParameterError);
        CHECK_THROWS_AS(verify_cover_family(5, five.cuts, 0, 5), BadParameterError);
        CHECK_THROWS_AS(verify_cover_family(1, {}, 1, 0), BadParameterError);
        CHECK_THROWS_AS(
            verify_cover_family(5, {Dicut({0, 7})}, 1, 1), GraphError);
    }

    TEST_CASE("closed form brackets") {
        const auto [lo5, hi5] = cnu_bounds_check(5);
        CHECK(lo5 <= Rational(2, 5));
        CHECK(Rational(2, 5) <= hi5);
        CHECK(hi5 == Rational(1));
        const auto [lo25, hi25] = cnu_bounds_check(25);
        CHECK(hi25 == Rational(9, 20));
        CHECK(lo25 == Rational(1, 4) + Rational(1, 100));
        CHECK(lo25 < hi25);
    }
}
