#pragma once

// Exact MWIS on bipartite subgraphs via max-flow / min-vertex-cover duality.
// Network: source -> side1 vertex (cap w), side2 vertex -> sink (cap w),
// side1 -> side2 arc of effectively infinite capacity per graph edge. The
// min cut reads off a minimum-weight vertex cover; its complement is the
// maximum-weight independent set.

#include <stdexcept>
#include <string>
#include <vector>

#include "mwis/graph.hpp"

namespace mwis {

struct ContextViolation : std::runtime_error {
    explicit ContextViolation(const std::string& msg)
        : std::runtime_error("internal invariant failed: " + msg) {}
};

class FlowNetwork {
public:
    struct Arc {
        int to;
        Weight cap;
        int rev;  // index of the reverse arc in arcs_[to]
    };

    explicit FlowNetwork(int nodes) : arcs_(static_cast<size_t>(nodes)) {}

    void add_arc(int from, int to, Weight cap) {
        arcs_[static_cast<size_t>(from)].push_back(
            {to, cap, static_cast<int>(arcs_[static_cast<size_t>(to)].size())});
        arcs_[static_cast<size_t>(to)].push_back(
            {from, 0, static_cast<int>(arcs_[static_cast<size_t>(from)].size()) - 1});
    }

    int node_count() const { return static_cast<int>(arcs_.size()); }

    // Dinic blocking-flow max flow from s to t.
    Weight max_flow(int s, int t) {
        Weight flow = 0;
        while (build_levels(s, t)) {
            iter_.assign(arcs_.size(), 0);
            while (Weight pushed = augment(s, t, kInf)) flow += pushed;
        }
        return flow;
    }

    // After max_flow: nodes reachable from s in the residual network.
    std::vector<char> source_side(int s) const {
        std::vector<char> reach(arcs_.size(), 0);
        std::vector<int> stack{s};
        reach[static_cast<size_t>(s)] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (const Arc& a : arcs_[static_cast<size_t>(u)]) {
                if (a.cap > 0 && !reach[static_cast<size_t>(a.to)]) {
                    reach[static_cast<size_t>(a.to)] = 1;
                    stack.push_back(a.to);
                }
            }
        }
        return reach;
    }

private:
    static constexpr Weight kInf = (1LL << 62);

    bool build_levels(int s, int t) {
        level_.assign(arcs_.size(), -1);
        level_[static_cast<size_t>(s)] = 0;
        std::vector<int> queue{s};
        size_t qi = 0;
        while (qi < queue.size()) {
            int u = queue[qi++];
            for (const Arc& a : arcs_[static_cast<size_t>(u)]) {
                if (a.cap > 0 && level_[static_cast<size_t>(a.to)] < 0) {
                    level_[static_cast<size_t>(a.to)] =
                        level_[static_cast<size_t>(u)] + 1;
                    queue.push_back(a.to);
                }
            }
        }
        return level_[static_cast<size_t>(t)] >= 0;
    }

    Weight augment(int u, int t, Weight limit) {
        if (u == t) return limit;
        for (size_t& i = iter_[static_cast<size_t>(u)];
             i < arcs_[static_cast<size_t>(u)].size(); ++i) {
            Arc& a = arcs_[static_cast<size_t>(u)][i];
            if (a.cap <= 0 ||
                level_[static_cast<size_t>(a.to)] !=
                    level_[static_cast<size_t>(u)] + 1)
                continue;
            Weight pushed = augment(a.to, t, std::min(limit, a.cap));
            if (pushed > 0) {
                a.cap -= pushed;
                arcs_[static_cast<size_t>(a.to)][static_cast<size_t>(a.rev)].cap +=
                    pushed;
                return pushed;
            }
        }
        return 0;
    }

    std::vector<std::vector<Arc>> arcs_;
    std::vector<int> level_;
    std::vector<size_t> iter_;
};

struct BipartiteResult {
    Weight weight = 0;
    VertexSet solution;
};

// MWIS of G[within] given a valid bipartition of it. König-type duality is
// asserted on every call; the returned set is re-verified independent.
inline BipartiteResult mwis_bipartite(const WeightedGraph& g,
                                      const VertexSet& within,
                                      const Bipartition& bip) {
    if (bip.side1.set_union(bip.side2) != within ||
        bip.side1.intersects(bip.side2) ||
        !is_independent(g, bip.side1) || !is_independent(g, bip.side2))
        throw ContextViolation("mwis_bipartite: invalid bipartition");

    const int n = within.size();
    std::vector<int> local(static_cast<size_t>(g.size()), -1);
    for (int i = 0; i < n; ++i)
        local[static_cast<size_t>(within.ids()[static_cast<size_t>(i)])] = i;

    Weight total = set_weight(g, within);
    const Weight inf = total + 1;  // no minimum cut can use an edge arc
    const int source = n, sink = n + 1;
    FlowNetwork net(n + 2);
    for (int u : bip.side1)
        net.add_arc(source, local[static_cast<size_t>(u)], g.weight(u));
    for (int u : bip.side2)
        net.add_arc(local[static_cast<size_t>(u)], sink, g.weight(u));
    for (int u : bip.side1)
        for (int v : g.adj(u))
            if (bip.side2.contains(v))
                net.add_arc(local[static_cast<size_t>(u)],
                            local[static_cast<size_t>(v)], inf);

    Weight flow = net.max_flow(source, sink);
    auto reach = net.source_side(source);

    std::vector<int> cover;
    for (int u : bip.side1)
        if (!reach[static_cast<size_t>(local[static_cast<size_t>(u)])])
            cover.push_back(u);
    for (int u : bip.side2)
        if (reach[static_cast<size_t>(local[static_cast<size_t>(u)])])
            cover.push_back(u);
    VertexSet cover_set(std::move(cover));

    // Cut capacity equals the flow value and the cover touches every edge.
    if (set_weight(g, cover_set) != flow)
        throw ContextViolation("mwis_bipartite: cut/flow mismatch");
    for (int u : within)
        for (int v : g.adj(u))
            if (v > u && within.contains(v) && !cover_set.contains(u) &&
                !cover_set.contains(v))
                throw ContextViolation("mwis_bipartite: cover misses an edge");

    BipartiteResult res;
    res.solution = within.set_minus(cover_set);
    res.weight = total - flow;
    if (set_weight(g, res.solution) != res.weight)
        throw ContextViolation("mwis_bipartite: weight mismatch");
    if (!is_independent(g, res.solution))
        throw ContextViolation("mwis_bipartite: dependent result");
    return res;
}

}  // namespace mwis
