// Acceptance suite: one test case per criterion, each printing a PASS line
// with its measured numbers. Run via ctest or directly:
//   ./mwis_acceptance --reporter console

#include <catch2/catch_amalgamated.hpp>

#include <chrono>
#include <cstdio>

#include "mwis/dimacs.hpp"
#include "mwis/generator.hpp"
#include "mwis/oracle.hpp"
#include "mwis/report.hpp"
#include "mwis/solver.hpp"

using namespace mwis;

namespace {

uint64_t mix_seed(uint64_t seed, uint64_t i) {
    return seed * 0x100000001b3ULL + i * 0x9e3779b97f4a7c15ULL + 1;
}

// Deterministic stream of in-class instances (triangle-free, S124-filtered).
struct ClassStream {
    uint64_t seed;
    int max_n;
    Weight wlo, whi;
    uint64_t i = 0;

    GenResult next() {
        const double ladder[] = {0.33, 0.22, 0.45, 0.15, 0.08};
        for (;;) {
            uint64_t s = mix_seed(seed, i++);
            GenSpec spec;
            spec.family = GenSpec::Family::RandomTriangleFree;
            spec.seed = s;
            spec.n = 4 + static_cast<int>(s % static_cast<uint64_t>(max_n - 3));
            spec.weight_lo = wlo;
            spec.weight_hi = whi;
            for (double dens : ladder) {
                spec.edge_density = dens;
                try {
                    GenResult r = generate(spec);
                    if (r.in_class) return r;
                } catch (const GenRetryExhausted&) {
                }
            }
        }
    }
};

}  // namespace

TEST_CASE("criterion 1: oracle equivalence over 10000 fuzz instances") {
    auto t0 = std::chrono::steady_clock::now();
    ClassStream stream{20260801ULL, 16, 0, 100};
    long long checked = 0, mismatches = 0, with_c5 = 0;
    while (checked < 10000) {
        GenResult gen = stream.next();
        const WeightedGraph& g = gen.graph;
        SolveResult res = solve_mwis(g);
        OracleResult oracle = oracle_mwis(g, VertexSet::full(g.size()));
        if (res.weight != oracle.weight) {
            ++mismatches;
            std::fprintf(stderr, "mismatch on instance %llu\n",
                         static_cast<unsigned long long>(stream.i - 1));
            std::fputs(emit_dimacs(g).c_str(), stderr);
        }
        if (find_induced_c5(g, VertexSet::full(g.size()))) ++with_c5;
        ++checked;
    }
    auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    REQUIRE(checked >= 10000);
    REQUIRE(mismatches == 0);
    std::printf(
        "ACCEPTANCE 1 PASS: %lld/%lld fuzz instances match the oracle exactly "
        "(%lld contained a C5; %llds)\n",
        checked - mismatches, checked, with_c5,
        static_cast<long long>(secs));
}

TEST_CASE("criterion 2: bipartite kernel vs subset oracle") {
    Rng rng(6021);
    long long checked = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        int n1 = 1 + rng.below(8), n2 = 1 + rng.below(8);
        int n = n1 + n2;
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n1; ++i)
            for (int j = 0; j < n2; ++j)
                if (rng.unit() < 0.35) edges.emplace_back(i, n1 + j);
        std::vector<Weight> w(static_cast<size_t>(n));
        for (auto& x : w) x = rng.weight_in(0, 50);
        auto g = WeightedGraph::from_edges(n, edges, w);
        auto within = VertexSet::full(n);
        auto bp = bipartition(g, within);
        REQUIRE(bp.ok);
        // mwis_bipartite asserts Koenig duality internally on every call.
        auto fast = mwis_bipartite(g, within, bp.bip);
        auto slow = subset_mwis(g, within);
        REQUIRE(fast.weight == slow.weight);
        ++checked;
    }
    std::printf(
        "ACCEPTANCE 2 PASS: %lld random bipartite instances exact with duality "
        "asserted on every call\n",
        checked);
}

TEST_CASE("criterion 3: anti-neighborhoods of C5-free class components are bipartite") {
    ClassStream stream{777001ULL, 15, 1, 1};
    long long checked = 0, failures = 0;
    while (checked < 1000) {
        GenResult gen = stream.next();
        const WeightedGraph& g = gen.graph;
        if (find_induced_c5(g, VertexSet::full(g.size()))) continue;
        for (const VertexSet& comp :
             connected_components(g, VertexSet::full(g.size()))) {
            if (comp.size() < 3) continue;
            // comp is a connected (S124, C3, C5)-free instance.
            for (int v : comp) {
                VertexSet av = anti_neighborhood_in(g, v, comp);
                if (!bipartition(g, av).ok) ++failures;
            }
            ++checked;
        }
    }
    REQUIRE(failures == 0);
    std::printf(
        "ACCEPTANCE 3 PASS: every anti-neighborhood bipartite over %lld "
        "connected C5-free class components\n",
        checked);
}

TEST_CASE("criterion 4: at most one anti-neighborhood component holds a C5") {
    ClassStream stream{881002ULL, 15, 1, 1};
    long long checked = 0, failures = 0;
    while (checked < 1000) {
        GenResult gen = stream.next();
        const WeightedGraph& g = gen.graph;
        for (int v = 0; v < g.size(); ++v) {
            VertexSet av = anti_neighborhood(g, v);
            int with_c5 = 0;
            for (const VertexSet& comp : connected_components(g, av))
                if (find_induced_c5(g, comp)) ++with_c5;
            if (with_c5 > 1) ++failures;
        }
        ++checked;
    }
    REQUIRE(failures == 0);
    std::printf(
        "ACCEPTANCE 4 PASS: %lld class instances, no pivot with two "
        "C5-carrying anti-neighborhood components\n",
        checked);
}

TEST_CASE("criterion 5: every maximal IS lies in a recorded bipartite leaf") {
    ClassStream stream{990003ULL, 14, 1, 9};
    long long checked = 0;
    while (checked < 500) {
        GenResult gen = stream.next();
        const WeightedGraph& g = gen.graph;
        SolveResult res = solve_mwis(g);
        CoverCheck cc = verify_cover(g, VertexSet::full(g.size()), res.leaves);
        REQUIRE(cc.ok);
        ++checked;
    }
    std::printf(
        "ACCEPTANCE 5 PASS: cover family verified on %lld class instances\n",
        checked);
}

TEST_CASE("criterion 6: branch coverage via targeted instances") {
    for (const auto& label : targeted_case_labels()) {
        auto t = targeted_case_instance(label);
        INFO("label " << label);
        REQUIRE(!check_class(t.graph));
        Solver s(t.graph);
        Weight got = 0, want = 0;
        if (t.entry == "solve") {
            got = s.solve().weight;
            want = oracle_mwis(t.graph, VertexSet::full(t.graph.size())).weight;
        } else {
            auto ctx = s.make_context(t.v, t.d, t.K);
            got = s.case1_1(ctx, 0).weight;
            want = oracle_mwis(t.graph, t.K).weight;
        }
        REQUIRE(got == want);
        auto it = s.stats().branches.find(t.expected_branch);
        bool hit = it != s.stats().branches.end() && it->second > 0;
        REQUIRE(hit);
        std::printf("ACCEPTANCE 6 PASS: case %s traced (branch %s, weight %lld)\n",
                    label.c_str(), t.expected_branch.c_str(),
                    static_cast<long long>(got));
    }
}

TEST_CASE("criterion 7: blow-up scaling stays tame") {
    long long prev_subproblems = 0;
    for (int n : {20, 40, 60}) {
        GenSpec spec;
        spec.family = GenSpec::Family::C5Blowup;
        spec.n = n;
        spec.seed = 4;
        GenResult gen = generate(spec);
        std::vector<int> sizes(5, n / 5);
        for (int i = 0; i < n % 5; ++i) ++sizes[static_cast<size_t>(i)];
        Weight expected = 0;
        for (int i = 0; i < 5; ++i)
            expected = std::max<Weight>(
                expected, sizes[static_cast<size_t>(i)] +
                              sizes[static_cast<size_t>((i + 2) % 5)]);
        auto t0 = std::chrono::steady_clock::now();
        SolveResult res = solve_mwis(gen.graph);
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        REQUIRE(ms < 60000);
        REQUIRE(res.weight == expected);
        if (n == 20)
            REQUIRE(res.weight ==
                    oracle_mwis(gen.graph, VertexSet::full(n)).weight);
        if (prev_subproblems > 0)
            REQUIRE(res.stats.subproblems < 50 * prev_subproblems);
        prev_subproblems = res.stats.subproblems;
        std::printf(
            "ACCEPTANCE 7 PASS: blow-up n=%d solved in %lldms, weight %lld, "
            "%lld subproblems\n",
            n, static_cast<long long>(ms), static_cast<long long>(res.weight),
            res.stats.subproblems);
    }
}

TEST_CASE("criterion 8: out-of-class inputs are exact or certified") {
    Rng rng(8088);
    long long checked = 0, certified = 0, silent_wrong = 0;
    while (checked < 100) {
        int n = 5 + rng.below(9);
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.unit() < 0.4) edges.emplace_back(i, j);
        std::vector<Weight> w(static_cast<size_t>(n));
        for (auto& x : w) x = rng.weight_in(0, 20);
        auto g = WeightedGraph::from_edges(n, edges, w);
        if (!find_triangle(g)) continue;
        ++checked;
        try {
            SolveResult res = solve_mwis(g);
            Weight want = subset_mwis(g, VertexSet::full(n)).weight;
            if (res.weight != want) ++silent_wrong;
        } catch (const ClassViolation& e) {
            REQUIRE(e.certificate.has_value());
            REQUIRE(verify_witness(g, *e.certificate));
            ++certified;
        }
    }
    REQUIRE(silent_wrong == 0);
    std::printf(
        "ACCEPTANCE 8 PASS: %lld triangle instances, %lld exact, %lld certified "
        "violations, 0 silent wrong answers\n",
        checked, checked - certified, certified);
}

TEST_CASE("criterion 9: byte-identical output on identical input and seed") {
    GenSpec spec;
    spec.family = GenSpec::Family::RandomTriangleFree;
    spec.n = 14;
    spec.edge_density = 0.3;
    spec.weight_lo = 0;
    spec.weight_hi = 100;
    spec.seed = 90909;
    auto g1 = generate(spec);
    auto g2 = generate(spec);
    REQUIRE(emit_dimacs(g1.graph) == emit_dimacs(g2.graph));
    std::string r1 = solve_report(g1.graph).dump(2);
    std::string r2 = solve_report(g2.graph).dump(2);
    REQUIRE(r1 == r2);

    // Also stable across separately-parsed copies of the same file bytes.
    auto reparsed = parse_dimacs(emit_dimacs(g1.graph));
    REQUIRE(solve_report(reparsed).dump(2) == r1);
    std::printf("ACCEPTANCE 9 PASS: identical seed and input give byte-identical "
                "JSON reports\n");
}
