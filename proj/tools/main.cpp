#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "maxdicut/constructions.hpp"
#include "maxdicut/exact.hpp"
#include "maxdicut/game.hpp"
#include "maxdicut/generators.hpp"
#include "maxdicut/io.hpp"
#include "maxdicut/measures.hpp"
#include "maxdicut/rng.hpp"
#include "maxdicut/schemes.hpp"
#include "maxdicut/verify.hpp"

namespace {

using maxdicut::BadParameterError;
using maxdicut::Construction;
using maxdicut::Rational;
using maxdicut::WeightedDigraph;
using ordered_json = nlohmann::ordered_json;

long long elapsed_ms(std::chrono::steady_clock::time_point start) {
    const auto d = std::chrono::steady_clock::now() - start;
    return std::chrono::duration_cast<std::chrono::milliseconds>(d).count();
}

Rational parse_rational(const std::string& text, const std::string& flag) {
    auto r = Rational::parse(text);
    if (!r) throw BadParameterError(flag + ": not a rational: " + text);
    return *r;
}

// Every report carries the same base fields; extras go after them in order.
struct Report {
    std::string algorithm;
    const WeightedDigraph* d = nullptr;
    Rational w;
    Rational guarantee;
    Rational achieved;
    std::vector<int> cut;
    std::uint64_t seed = 0;
    long long ms = 0;
    std::vector<std::pair<std::string, std::string>> extra;
};

void emit_report(const Report& r, bool as_json) {
    if (as_json) {
        ordered_json j;
        j["algorithm"] = r.algorithm;
        j["n"] = r.d->order();
        j["m"] = r.d->arc_count();
        j["w"] = r.w.str();
        j["guarantee"] = r.guarantee.str();
        j["achieved"] = r.achieved.str();
        j["cut"] = r.cut;
        j["seed"] = r.seed;
        j["elapsed_ms"] = r.ms;
        for (const auto& [k, v] : r.extra) j[k] = v;
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << "algorithm: " << r.algorithm << "\n"
              << "n: " << r.d->order() << "\n"
              << "m: " << r.d->arc_count() << "\n"
              << "w: " << r.w.str() << "\n"
              << "guarantee: " << r.guarantee.str() << "\n"
              << "achieved: " << r.achieved.str() << "\n"
              << "status: " << (r.achieved >= r.guarantee ? "pass" : "fail") << "\n";
    std::cout << "cut:";
    for (int v : r.cut) std::cout << " " << v;
    std::cout << "\n";
    for (const auto& [k, v] : r.extra) std::cout << k << ": " << v << "\n";
    std::cout << "seed: " << r.seed << "\n"
              << "elapsed_ms: " << r.ms << "\n";
}

struct GenOptions {
    std::string family;
    std::string out;
    std::optional<int> k, n, nu, l;
    std::optional<long> m;
    std::optional<std::string> theta, density;
    long wlo = 0;
    long whi = 1;
    std::uint64_t seed = 0;
};

template <typename T>
T require(const std::optional<T>& opt, const std::string& what) {
    if (!opt) throw BadParameterError("gen: " + what + " is required for this family");
    return *opt;
}

int cmd_gen(const GenOptions& o) {
    WeightedDigraph d;
    if (o.family == "tournament") {
        d = maxdicut::regular_tournament(require(o.k, "--k"));
    } else if (o.family == "two-tournament") {
        d = maxdicut::two_tournament(require(o.k, "--k"),
                                     parse_rational(require(o.theta, "--theta"), "--theta"));
    } else if (o.family == "staircase") {
        d = maxdicut::staircase(require(o.n, "--n"));
    } else if (o.family == "staircase-m") {
        d = maxdicut::staircase_trimmed(require(o.m, "--m"));
    } else if (o.family == "appendix") {
        d = maxdicut::appendix_extremal(require(o.nu, "--nu"));
    } else if (o.family == "transitive") {
        d = maxdicut::complete_transitive_dag(require(o.nu, "--nu"));
    } else if (o.family == "random-dag") {
        d = maxdicut::random_dag(require(o.n, "--n"),
                                 parse_rational(require(o.density, "--density"), "--density"),
                                 o.wlo, o.whi, o.seed);
    } else if (o.family == "random-digraph") {
        d = maxdicut::random_digraph(require(o.n, "--n"),
                                     parse_rational(require(o.density, "--density"), "--density"),
                                     o.wlo, o.whi, o.seed);
    } else if (o.family == "random-bounded-cycle") {
        d = maxdicut::random_bounded_cycle(require(o.n, "--n"), require(o.l, "--l"), o.seed);
    } else {
        throw BadParameterError("gen: unknown family: " + o.family);
    }
    if (o.out.empty()) {
        maxdicut::serialize_digraph(d, std::cout);
    } else {
        maxdicut::save_digraph(d, o.out);
    }
    return 0;
}

int cmd_exact(const std::string& path, int max_n, bool as_json) {
    const WeightedDigraph d = maxdicut::load_digraph(path);
    const auto start = std::chrono::steady_clock::now();
    const maxdicut::ExactCut res = maxdicut::max_dicut_exact(d, max_n);
    Report r;
    r.algorithm = "exact";
    r.d = &d;
    r.w = maxdicut::total_weight(d);
    r.guarantee = res.weight;
    r.achieved = res.weight;
    r.cut = res.cut.x_side();
    if (!r.w.is_zero()) r.extra.emplace_back("ratio", (res.weight / r.w).str());
    r.ms = elapsed_ms(start);
    emit_report(r, as_json);
    return 0;
}

Construction run_bound(const std::string& algo, const WeightedDigraph& d, long k) {
    if (algo == "rplus") return maxdicut::positive_imbalance_cut(d);
    if (algo == "theta") return maxdicut::theta_biased_cut(d);
    if (algo == "coloring") return maxdicut::coloring_cut(d, maxdicut::best_coloring(d));
    if (algo == "bipartite")
        return maxdicut::bipartite_family_cut(d, maxdicut::bipartite_components(d));
    if (algo == "matching")
        return maxdicut::bipartite_family_cut(d, maxdicut::greedy_matching(d));
    if (algo == "path-matching") return maxdicut::path_matching_cut(d);
    if (algo == "dag-block") return maxdicut::dag_block_cut(d, k);
    if (algo == "dag") return maxdicut::dag_cut(d);
    if (algo == "scc") return maxdicut::strong_component_cut(d);
    throw BadParameterError("bound: unknown algorithm: " + algo);
}

int cmd_bound(const std::string& algo, const std::string& path, long k, bool randomized,
              long trials, std::uint64_t seed, bool as_json) {
    if (trials < 1) throw BadParameterError("bound: --trials must be positive");
    const WeightedDigraph d = maxdicut::load_digraph(path);
    const auto start = std::chrono::steady_clock::now();
    const Construction c = run_bound(algo, d, k);

    Report r;
    r.algorithm = algo;
    r.d = &d;
    r.w = maxdicut::total_weight(d);
    r.guarantee = c.certificate.guaranteed_weight;
    r.achieved = c.certificate.achieved_weight;
    r.cut = c.cut.x_side();
    r.seed = seed;
    for (const auto& [name, value] : c.certificate.params) r.extra.emplace_back(name, value.str());
    if (randomized) {
        if (c.scheme) {
            maxdicut::SplitMix64 rng(seed);
            Rational best;
            for (long t = 0; t < trials; ++t) {
                const maxdicut::Dicut sample = maxdicut::sample_scheme(*c.scheme, d, rng);
                const Rational w = dicut_weight(d, sample);
                if (t == 0 || best < w) best = w;
            }
            r.extra.emplace_back("trials", std::to_string(trials));
            r.extra.emplace_back("randomized_best", best.str());
        } else {
            r.extra.emplace_back("randomized", "construction is deterministic; nothing to sample");
        }
    }
    r.ms = elapsed_ms(start);
    emit_report(r, as_json);
    return 0;
}

int cmd_cnu(int nu, bool as_json) {
    const auto start = std::chrono::steady_clock::now();
    const maxdicut::GameSolution s = maxdicut::cnu(nu);
    const long long ms = elapsed_ms(start);
    if (as_json) {
        ordered_json j;
        j["nu"] = s.nu;
        j["value"] = s.value.str();
        ordered_json dist = ordered_json::array();
        for (const auto& [cut, p] : s.cut_distribution) {
            ordered_json e;
            e["cut"] = cut.x_side();
            e["p"] = p.str();
            dist.push_back(e);
        }
        j["cut_distribution"] = dist;
        ordered_json adv = ordered_json::array();
        for (const auto& [arc, w] : s.adversary_weights) {
            ordered_json e;
            e["tail"] = arc.first;
            e["head"] = arc.second;
            e["w"] = w.str();
            adv.push_back(e);
        }
        j["adversary_weights"] = adv;
        j["duality"] = "verified";
        j["elapsed_ms"] = ms;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "c_" << s.nu << " = " << s.value.str() << "\n";
    std::cout << "cut distribution (" << s.cut_distribution.size() << " cuts):\n";
    for (const auto& [cut, p] : s.cut_distribution) {
        std::cout << "  {";
        const auto& xs = cut.x_side();
        for (std::size_t i = 0; i < xs.size(); ++i) std::cout << (i ? "," : "") << xs[i];
        std::cout << "}: " << p.str() << "\n";
    }
    std::cout << "adversary weights (" << s.adversary_weights.size() << " arcs):\n";
    for (const auto& [arc, w] : s.adversary_weights)
        std::cout << "  " << arc.first << "->" << arc.second << ": " << w.str() << "\n";
    std::cout << "duality: verified\n"
              << "elapsed_ms: " << ms << "\n";
    return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed) {
    maxdicut::SuiteReport report;
    if (suite == "appendix") {
        report = maxdicut::verify_appendix();
    } else if (suite == "bounds") {
        report = maxdicut::verify_bounds(seed);
    } else if (suite == "lp") {
        report = maxdicut::verify_lp();
    } else if (suite == "claims") {
        report = maxdicut::verify_claims();
    } else if (suite == "certificates") {
        report = maxdicut::verify_certificates(seed);
    } else if (suite == "all") {
        report = maxdicut::verify_all(seed);
    } else {
        throw BadParameterError("verify: unknown suite: " + suite);
    }
    for (const auto& c : report.checks) {
        std::cout << (c.pass ? "PASS" : "FAIL") << " " << c.criterion << " " << c.name;
        if (!c.detail.empty()) std::cout << ": " << c.detail;
        std::cout << "\n";
    }
    const bool ok = report.all_pass();
    std::cout << (ok ? "all checks passed" : "some checks FAILED") << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Maximum weight directed cut bounds, constructions and verification"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* g = app.add_subcommand("gen", "Generate an instance file");
    g->add_option("family", gen.family,
                  "tournament | two-tournament | staircase | staircase-m | appendix | transitive |"
                  " random-dag | random-digraph | random-bounded-cycle")
        ->required();
    g->add_option("-o,--out", gen.out, "Output path (default stdout)");
    g->add_option("--k", gen.k, "Tournament parameter k");
    g->add_option("--n", gen.n, "Vertex count");
    g->add_option("--m", gen.m, "Arc count (staircase-m)");
    g->add_option("--nu", gen.nu, "Vertex count (appendix, transitive)");
    g->add_option("--l", gen.l, "Cycle length bound");
    g->add_option("--theta", gen.theta, "Imbalance ratio, a rational p/q");
    g->add_option("--density", gen.density, "Arc probability, a rational p/q");
    g->add_option("--wlo", gen.wlo, "Minimum weight (default 0)");
    g->add_option("--whi", gen.whi, "Maximum weight (default 1)");
    g->add_option("--seed", gen.seed, "RNG seed (default 0)");

    std::string exact_path;
    int exact_max_n = 26;
    bool exact_json = false;
    auto* e = app.add_subcommand("exact", "Exact maximum dicut of an instance");
    e->add_option("path", exact_path, "Instance file")->required();
    e->add_option("--max-n", exact_max_n, "Refuse instances larger than this (default 26)");
    e->add_flag("--json", exact_json, "Emit JSON");

    std::string bound_algo, bound_path;
    long bound_k = 7;
    bool bound_randomized = false, bound_json = false;
    long bound_trials = 100;
    std::uint64_t bound_seed = 0;
    auto* b = app.add_subcommand("bound", "Run a cut construction with its certificate");
    b->add_option("algorithm", bound_algo,
                  "rplus | theta | coloring | bipartite | matching | path-matching | dag-block |"
                  " dag | scc")
        ->required();
    b->add_option("path", bound_path, "Instance file")->required();
    b->add_option("--k", bound_k, "Block parameter for dag-block (default 7)");
    b->add_flag("--randomized", bound_randomized, "Also sample the randomized scheme");
    b->add_option("--trials", bound_trials, "Samples for --randomized (default 100)");
    b->add_option("--seed", bound_seed, "Sampling seed (default 0)");
    b->add_flag("--json", bound_json, "Emit JSON");

    int cnu_nu = 0;
    bool cnu_json = false;
    auto* c = app.add_subcommand("cnu", "Game value c_nu with both optimal strategies");
    c->add_option("nu", cnu_nu, "Number of vertices, 2..12")->required();
    c->add_flag("--json", cnu_json, "Emit JSON");

    std::string verify_suite;
    std::uint64_t verify_seed = 0;
    auto* v = app.add_subcommand("verify", "Run a verification suite");
    v->add_option("suite", verify_suite, "appendix | bounds | lp | claims | certificates | all")
        ->required();
    v->add_option("--seed", verify_seed, "Corpus seed (default 0)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (g->parsed()) return cmd_gen(gen);
        if (e->parsed()) return cmd_exact(exact_path, exact_max_n, exact_json);
        if (b->parsed())
            return cmd_bound(bound_algo, bound_path, bound_k, bound_randomized, bound_trials,
                             bound_seed, bound_json);
        if (c->parsed()) return cmd_cnu(cnu_nu, cnu_json);
        if (v->parsed()) return cmd_verify(verify_suite, verify_seed);
    } catch (const maxdicut::InstanceTooLargeError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 3;
    } catch (const maxdicut::GraphError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return 1;
    }
    return 2;
}
