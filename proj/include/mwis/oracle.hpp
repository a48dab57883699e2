#pragma once

// Exponential-time ground truth. Two tiers: exhaustive subset enumeration
// (bit masks, n <= 20) validates the branch-and-bound oracle (n <= 26),
// which in turn validates the polynomial solver. Maximal-independent-set
// enumeration backs the bipartite-cover-family checks.

#include <optional>
#include <stdexcept>
#include <vector>

#include "mwis/graph.hpp"

namespace mwis {

struct OracleBudgetExceeded : std::runtime_error {
    OracleBudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct OracleBudget {
    int max_vertices = 26;
    long long max_nodes = 200'000'000;
};

struct OracleResult {
    Weight weight = 0;
    VertexSet solution;
};

// Exhaustive 2^n scan over subsets of `within`. The dumb tier.
inline OracleResult subset_mwis(const WeightedGraph& g, const VertexSet& within) {
    const int n = within.size();
    if (n > 20) throw OracleBudgetExceeded("subset_mwis: more than 20 vertices");
    const auto& ids = within.ids();
    std::vector<uint32_t> nb(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.adjacent(ids[static_cast<size_t>(i)], ids[static_cast<size_t>(j)])) {
                nb[static_cast<size_t>(i)] |= 1u << j;
                nb[static_cast<size_t>(j)] |= 1u << i;
            }
    Weight best = 0;
    uint32_t best_mask = 0;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool indep = true;
        Weight w = 0;
        for (int i = 0; i < n && indep; ++i) {
            if (!(mask & (1u << i))) continue;
            if (nb[static_cast<size_t>(i)] & mask) indep = false;
            w += g.weight(ids[static_cast<size_t>(i)]);
        }
        if (indep && w > best) {
            best = w;
            best_mask = mask;
        }
    }
    std::vector<int> sol;
    for (int i = 0; i < n; ++i)
        if (best_mask & (1u << i)) sol.push_back(ids[static_cast<size_t>(i)]);
    return {best, VertexSet(std::move(sol))};
}

// Branch and bound on a max-degree vertex with weight-sum pruning.
inline OracleResult oracle_mwis(const WeightedGraph& g, const VertexSet& within,
                                OracleBudget budget = {}) {
    if (within.size() > budget.max_vertices)
        throw OracleBudgetExceeded("oracle_mwis: vertex budget exceeded");
    long long nodes = 0;
    Weight best = 0;
    VertexSet best_set;

    // Work on the induced copy for fast neighborhood removal.
    InducedSubgraph sub = induced_subgraph(g, within);
    const WeightedGraph& h = sub.graph;

    std::vector<int> cur;
    auto rec = [&](auto&& self, std::vector<int> live, Weight cur_w) -> void {
        if (++nodes > budget.max_nodes)
            throw OracleBudgetExceeded("oracle_mwis: node budget exceeded");
        if (cur_w > best) {
            best = cur_w;
            std::vector<int> orig;
            for (int v : cur)
                orig.push_back(sub.to_original[static_cast<size_t>(v)]);
            best_set = VertexSet(std::move(orig));
        }
        Weight ub = cur_w;
        for (int v : live) ub += h.weight(v);
        if (ub <= best || live.empty()) return;
        int pick = live.front(), pick_deg = -1;
        for (int v : live) {
            int dg = 0;
            for (int u : h.adj(v))
                if (std::find(live.begin(), live.end(), u) != live.end()) ++dg;
            if (dg > pick_deg) {
                pick = v;
                pick_deg = dg;
            }
        }
        // Include pick.
        std::vector<int> in_live;
        for (int v : live)
            if (v != pick && !h.adjacent(v, pick)) in_live.push_back(v);
        cur.push_back(pick);
        self(self, std::move(in_live), cur_w + h.weight(pick));
        cur.pop_back();
        // Exclude pick.
        std::vector<int> out_live;
        for (int v : live)
            if (v != pick) out_live.push_back(v);
        self(self, std::move(out_live), cur_w);
    };
    std::vector<int> all(static_cast<size_t>(h.size()));
    for (int i = 0; i < h.size(); ++i) all[static_cast<size_t>(i)] = i;
    rec(rec, std::move(all), 0);
    return {best, best_set};
}

// All maximal independent sets of G[within]: Bron-Kerbosch with pivoting on
// the complement graph (independent sets are complement cliques).
inline std::vector<VertexSet> enumerate_maximal_is(const WeightedGraph& g,
                                                   const VertexSet& within) {
    const int n = within.size();
    if (n > 20)
        throw OracleBudgetExceeded("enumerate_maximal_is: more than 20 vertices");
    const auto& ids = within.ids();
    std::vector<uint32_t> non_nb(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j &&
                !g.adjacent(ids[static_cast<size_t>(i)], ids[static_cast<size_t>(j)]))
                non_nb[static_cast<size_t>(i)] |= 1u << j;

    std::vector<VertexSet> out;
    auto expand = [&](auto&& self, uint32_t r, uint32_t p, uint32_t x) -> void {
        if (p == 0 && x == 0) {
            std::vector<int> sol;
            for (int i = 0; i < n; ++i)
                if (r & (1u << i)) sol.push_back(ids[static_cast<size_t>(i)]);
            out.emplace_back(std::move(sol));
            return;
        }
        uint32_t px = p | x;
        int pivot = -1, best_cover = -1;
        for (int i = 0; i < n; ++i)
            if (px & (1u << i)) {
                int cover = __builtin_popcount(p & non_nb[static_cast<size_t>(i)]);
                if (cover > best_cover) {
                    best_cover = cover;
                    pivot = i;
                }
            }
        uint32_t candidates = p & ~non_nb[static_cast<size_t>(pivot)];
        for (int i = 0; i < n; ++i) {
            if (!(candidates & (1u << i))) continue;
            uint32_t vi = 1u << i;
            self(self, r | vi, p & non_nb[static_cast<size_t>(i)],
                 x & non_nb[static_cast<size_t>(i)]);
            p &= ~vi;
            x |= vi;
        }
    };
    uint32_t full = n == 32 ? ~0u : ((1u << n) - 1);
    expand(expand, 0, full, 0);
    std::sort(out.begin(), out.end());
    return out;
}

struct CoverCheck {
    bool ok = true;
    std::optional<VertexSet> uncovered_is;     // a maximal IS in no leaf
    std::optional<VertexSet> non_bipartite_leaf;
};

// Every maximal IS of G[within] must lie inside some leaf, and every leaf
// must induce a bipartite subgraph.
inline CoverCheck verify_cover(const WeightedGraph& g, const VertexSet& within,
                               const std::vector<VertexSet>& leaves) {
    CoverCheck res;
    for (const VertexSet& leaf : leaves) {
        if (!bipartition(g, leaf).ok) {
            res.ok = false;
            res.non_bipartite_leaf = leaf;
            return res;
        }
    }
    for (const VertexSet& mis : enumerate_maximal_is(g, within)) {
        bool covered = false;
        for (const VertexSet& leaf : leaves)
            if (mis.is_subset_of(leaf)) {
                covered = true;
                break;
            }
        if (!covered) {
            res.ok = false;
            res.uncovered_is = mis;
            return res;
        }
    }
    return res;
}

}  // namespace mwis
