#include <catch2/catch_amalgamated.hpp>

#include "mwis/bipartite_mwis.hpp"
#include "mwis/generator.hpp"
#include "mwis/oracle.hpp"

using namespace mwis;

TEST_CASE("max_flow basics") {
    // source -> a -> sink with caps (3, 3)
    {
        FlowNetwork net(3);
        net.add_arc(0, 1, 3);
        net.add_arc(1, 2, 3);
        CHECK(net.max_flow(0, 2) == 3);
    }
    {
        FlowNetwork net(3);
        net.add_arc(0, 1, 5);
        net.add_arc(1, 2, 2);
        CHECK(net.max_flow(0, 2) == 2);
    }
    {
        FlowNetwork net(4);
        net.add_arc(0, 1, 1);
        net.add_arc(1, 3, 1);
        net.add_arc(0, 2, 4);
        net.add_arc(2, 3, 4);
        CHECK(net.max_flow(0, 3) == 5);
    }
}

TEST_CASE("max_flow cut side excludes saturated arcs") {
    FlowNetwork net(3);
    net.add_arc(0, 1, 5);
    net.add_arc(1, 2, 2);
    Weight f = net.max_flow(0, 2);
    auto reach = net.source_side(0);
    CHECK(f == 2);
    CHECK(reach[0]);
    CHECK(reach[1]);  // residual 0->1 has slack
    CHECK(!reach[2]);
}

namespace {
BipartiteResult solve_bip(const WeightedGraph& g) {
    auto within = VertexSet::full(g.size());
    auto bp = bipartition(g, within);
    REQUIRE(bp.ok);
    return mwis_bipartite(g, within, bp.bip);
}
}  // namespace

TEST_CASE("mwis_bipartite examples") {
    auto p3a = WeightedGraph::from_edges(3, {{0, 1}, {1, 2}}, {2, 5, 2});
    auto r1 = solve_bip(p3a);
    CHECK(r1.weight == 5);
    CHECK(r1.solution == VertexSet({1}));

    auto p3b = WeightedGraph::from_edges(3, {{0, 1}, {1, 2}}, {3, 5, 3});
    auto r2 = solve_bip(p3b);
    CHECK(r2.weight == 6);
    CHECK(r2.solution == VertexSet({0, 2}));

    auto c4 = make_cycle(4, {1, 2, 3, 4});
    auto r3 = solve_bip(c4);
    CHECK(r3.weight == 6);
    CHECK(r3.solution == VertexSet({1, 3}));
}

TEST_CASE("mwis_bipartite on edgeless graphs takes all positive weight") {
    auto g = WeightedGraph::from_edges(4, {}, {3, 0, 2, 0});
    auto r = solve_bip(g);
    CHECK(r.weight == 5);
    CHECK(VertexSet({0, 2}).is_subset_of(r.solution));
}

TEST_CASE("mwis_bipartite rejects invalid bipartitions") {
    auto p3 = make_path(3);
    Bipartition bad;
    bad.side1 = VertexSet({0, 1});
    bad.side2 = VertexSet({2});
    CHECK_THROWS_AS(mwis_bipartite(p3, VertexSet::full(3), bad),
                    ContextViolation);
}

TEST_CASE("mwis_bipartite agrees with the subset oracle") {
    Rng rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        int n1 = 1 + rng.below(8), n2 = 1 + rng.below(8);
        int n = n1 + n2;
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n1; ++i)
            for (int j = 0; j < n2; ++j)
                if (rng.unit() < 0.4) edges.emplace_back(i, n1 + j);
        std::vector<Weight> w(static_cast<size_t>(n));
        for (auto& x : w) x = rng.weight_in(0, 30);
        auto g = WeightedGraph::from_edges(n, edges, w);
        auto within = VertexSet::full(n);
        auto bp = bipartition(g, within);
        REQUIRE(bp.ok);
        auto fast = mwis_bipartite(g, within, bp.bip);
        auto slow = subset_mwis(g, within);
        CHECK(fast.weight == slow.weight);
        CHECK(is_independent(g, fast.solution));
        CHECK(set_weight(g, fast.solution) == fast.weight);
    }
}

TEST_CASE("mwis_bipartite on scoped subsets") {
    // Solve on a subset of a larger graph, ids staying in the original space.
    auto g = make_path(6, {1, 4, 1, 4, 1, 4});
    VertexSet within({1, 2, 3});
    auto bp = bipartition(g, within);
    REQUIRE(bp.ok);
    auto r = mwis_bipartite(g, within, bp.bip);
    CHECK(r.weight == 8);  // vertices 1 and 3
    CHECK(r.solution == VertexSet({1, 3}));
}
