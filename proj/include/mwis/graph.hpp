#pragma once

// Weighted graph core: immutable simple undirected graphs with non-negative
// integer vertex weights, plus the vertex-set algebra the solver runs on.
// Subproblems are always expressed as VertexSets in the original graph's id
// space; induced copies are only built at leaves and for the oracle.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mwis {

using Weight = long long;

// Sorted, duplicate-free set of vertex ids with deterministic (ascending)
// iteration order. Set algebra is linear-merge based.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<int> ids) : ids_(std::move(ids)) {
        std::sort(ids_.begin(), ids_.end());
        ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
    }

    static VertexSet full(int n) {
        std::vector<int> v(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i;
        VertexSet s;
        s.ids_ = std::move(v);
        return s;
    }

    bool contains(int v) const {
        return std::binary_search(ids_.begin(), ids_.end(), v);
    }
    int size() const { return static_cast<int>(ids_.size()); }
    bool empty() const { return ids_.empty(); }
    int front() const { return ids_.front(); }

    void insert(int v) {
        auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
        if (it == ids_.end() || *it != v) ids_.insert(it, v);
    }

    VertexSet set_union(const VertexSet& o) const {
        VertexSet r;
        r.ids_.reserve(ids_.size() + o.ids_.size());
        std::set_union(ids_.begin(), ids_.end(), o.ids_.begin(), o.ids_.end(),
                       std::back_inserter(r.ids_));
        return r;
    }
    VertexSet set_intersect(const VertexSet& o) const {
        VertexSet r;
        std::set_intersection(ids_.begin(), ids_.end(), o.ids_.begin(),
                              o.ids_.end(), std::back_inserter(r.ids_));
        return r;
    }
    VertexSet set_minus(const VertexSet& o) const {
        VertexSet r;
        std::set_difference(ids_.begin(), ids_.end(), o.ids_.begin(),
                            o.ids_.end(), std::back_inserter(r.ids_));
        return r;
    }
    VertexSet minus_vertex(int v) const {
        VertexSet r = *this;
        auto it = std::lower_bound(r.ids_.begin(), r.ids_.end(), v);
        if (it != r.ids_.end() && *it == v) r.ids_.erase(it);
        return r;
    }
    VertexSet with_vertex(int v) const {
        VertexSet r = *this;
        r.insert(v);
        return r;
    }
    bool is_subset_of(const VertexSet& o) const {
        return std::includes(o.ids_.begin(), o.ids_.end(), ids_.begin(),
                             ids_.end());
    }
    bool intersects(const VertexSet& o) const {
        auto a = ids_.begin();
        auto b = o.ids_.begin();
        while (a != ids_.end() && b != o.ids_.end()) {
            if (*a == *b) return true;
            if (*a < *b) ++a; else ++b;
        }
        return false;
    }

    bool operator==(const VertexSet& o) const { return ids_ == o.ids_; }
    bool operator!=(const VertexSet& o) const { return ids_ != o.ids_; }
    bool operator<(const VertexSet& o) const { return ids_ < o.ids_; }

    const std::vector<int>& ids() const { return ids_; }
    std::vector<int>::const_iterator begin() const { return ids_.begin(); }
    std::vector<int>::const_iterator end() const { return ids_.end(); }

private:
    std::vector<int> ids_;
};

class WeightedGraph {
public:
    WeightedGraph() = default;

    // Builds a validated simple graph. Throws std::invalid_argument on
    // self-loops, duplicate edges, out-of-range endpoints or negative weights.
    static WeightedGraph from_edges(int n,
                                    const std::vector<std::pair<int, int>>& edges,
                                    std::vector<Weight> weights = {}) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
        WeightedGraph g;
        g.n_ = n;
        g.adj_.assign(static_cast<size_t>(n), {});
        if (weights.empty()) weights.assign(static_cast<size_t>(n), 1);
        if (static_cast<int>(weights.size()) != n)
            throw std::invalid_argument("weight count mismatch");
        for (Weight w : weights)
            if (w < 0) throw std::invalid_argument("negative weight");
        g.w_ = std::move(weights);
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw std::invalid_argument("edge endpoint out of range");
            if (u == v) throw std::invalid_argument("self-loop");
            g.adj_[static_cast<size_t>(u)].push_back(v);
            g.adj_[static_cast<size_t>(v)].push_back(u);
        }
        for (int v = 0; v < n; ++v) {
            auto& a = g.adj_[static_cast<size_t>(v)];
            std::sort(a.begin(), a.end());
            if (std::adjacent_find(a.begin(), a.end()) != a.end())
                throw std::invalid_argument("duplicate edge");
        }
        return g;
    }

    int size() const { return n_; }

    int edge_count() const {
        size_t m = 0;
        for (const auto& a : adj_) m += a.size();
        return static_cast<int>(m / 2);
    }

    bool adjacent(int u, int v) const {
        const auto& a = adj_[static_cast<size_t>(u)];
        return std::binary_search(a.begin(), a.end(), v);
    }

    const std::vector<int>& adj(int v) const {
        return adj_[static_cast<size_t>(v)];
    }

    Weight weight(int v) const { return w_[static_cast<size_t>(v)]; }
    const std::vector<Weight>& weights() const { return w_; }

    int degree(int v) const {
        return static_cast<int>(adj_[static_cast<size_t>(v)].size());
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> es;
        for (int u = 0; u < n_; ++u)
            for (int v : adj(u))
                if (u < v) es.emplace_back(u, v);
        return es;
    }

private:
    int n_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<Weight> w_;
};

inline void check_vertex(const WeightedGraph& g, int v) {
    if (v < 0 || v >= g.size()) throw std::out_of_range("vertex id out of range");
}

// N(v): open neighborhood.
inline VertexSet neighbors(const WeightedGraph& g, int v) {
    check_vertex(g, v);
    return VertexSet(g.adj(v));
}

// N(v) restricted to a scope.
inline VertexSet neighbors_in(const WeightedGraph& g, int v,
                              const VertexSet& within) {
    check_vertex(g, v);
    std::vector<int> out;
    for (int u : g.adj(v))
        if (within.contains(u)) out.push_back(u);
    return VertexSet(std::move(out));
}

inline int degree_in(const WeightedGraph& g, int v, const VertexSet& within) {
    int d = 0;
    for (int u : g.adj(v))
        if (within.contains(u)) ++d;
    return d;
}

// A(v) = V \ N[v].
inline VertexSet anti_neighborhood(const WeightedGraph& g, int v) {
    check_vertex(g, v);
    std::vector<int> out;
    out.reserve(static_cast<size_t>(g.size()));
    for (int u = 0; u < g.size(); ++u)
        if (u != v && !g.adjacent(u, v)) out.push_back(u);
    return VertexSet(std::move(out));
}

inline VertexSet anti_neighborhood_in(const WeightedGraph& g, int v,
                                      const VertexSet& within) {
    check_vertex(g, v);
    std::vector<int> out;
    for (int u : within)
        if (u != v && !g.adjacent(u, v)) out.push_back(u);
    return VertexSet(std::move(out));
}

inline bool is_independent(const WeightedGraph& g, const VertexSet& s) {
    for (int u : s)
        for (int v : g.adj(u))
            if (v > u && s.contains(v)) return false;
    return true;
}

inline Weight set_weight(const WeightedGraph& g, const VertexSet& s) {
    Weight t = 0;
    for (int v : s) t += g.weight(v);
    return t;
}

struct InducedSubgraph {
    WeightedGraph graph;
    std::vector<int> to_original;  // sub id -> original id
    std::vector<int> to_sub;       // original id -> sub id, -1 if absent
};

inline InducedSubgraph induced_subgraph(const WeightedGraph& g,
                                        const VertexSet& s) {
    InducedSubgraph r;
    r.to_sub.assign(static_cast<size_t>(g.size()), -1);
    r.to_original.assign(s.ids().begin(), s.ids().end());
    for (int i = 0; i < s.size(); ++i)
        r.to_sub[static_cast<size_t>(r.to_original[static_cast<size_t>(i)])] = i;
    std::vector<std::pair<int, int>> edges;
    std::vector<Weight> w(static_cast<size_t>(s.size()));
    for (int i = 0; i < s.size(); ++i) {
        int u = r.to_original[static_cast<size_t>(i)];
        w[static_cast<size_t>(i)] = g.weight(u);
        for (int v : g.adj(u)) {
            int j = r.to_sub[static_cast<size_t>(v)];
            if (j > i) edges.emplace_back(i, j);
        }
    }
    r.graph = WeightedGraph::from_edges(s.size(), edges, std::move(w));
    return r;
}

// Components of G[within], ordered by least contained vertex id. A component
// is nontrivial iff it has >= 2 vertices (a connected component with >= 2
// vertices always carries an edge).
inline std::vector<VertexSet> connected_components(const WeightedGraph& g,
                                                   const VertexSet& within) {
    std::vector<VertexSet> comps;
    std::vector<char> seen(static_cast<size_t>(g.size()), 0);
    for (int s : within) {
        if (seen[static_cast<size_t>(s)]) continue;
        std::vector<int> comp;
        std::vector<int> stack{s};
        seen[static_cast<size_t>(s)] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int v : g.adj(u)) {
                if (!seen[static_cast<size_t>(v)] && within.contains(v)) {
                    seen[static_cast<size_t>(v)] = 1;
                    stack.push_back(v);
                }
            }
        }
        comps.emplace_back(std::move(comp));
    }
    return comps;
}

inline bool is_nontrivial_component(const VertexSet& comp) {
    return comp.size() >= 2;
}

struct Bipartition {
    VertexSet side1;
    VertexSet side2;
};

// Either a 2-coloring of G[within] or an odd cycle (simple, consecutive
// vertices adjacent, first adjacent to last) witnessing non-bipartiteness.
struct BipartitionResult {
    bool ok = false;
    Bipartition bip;
    std::vector<int> odd_cycle;
};

inline BipartitionResult bipartition(const WeightedGraph& g,
                                     const VertexSet& within) {
    BipartitionResult res;
    std::vector<int> color(static_cast<size_t>(g.size()), -1);
    std::vector<int> parent(static_cast<size_t>(g.size()), -1);
    std::vector<int> depth(static_cast<size_t>(g.size()), 0);
    std::vector<int> s1, s2;
    for (int s : within) {
        if (color[static_cast<size_t>(s)] != -1) continue;
        color[static_cast<size_t>(s)] = 0;
        std::vector<int> queue{s};
        size_t qi = 0;
        while (qi < queue.size()) {
            int u = queue[qi++];
            for (int v : g.adj(u)) {
                if (!within.contains(v)) continue;
                if (color[static_cast<size_t>(v)] == -1) {
                    color[static_cast<size_t>(v)] = 1 - color[static_cast<size_t>(u)];
                    parent[static_cast<size_t>(v)] = u;
                    depth[static_cast<size_t>(v)] = depth[static_cast<size_t>(u)] + 1;
                    queue.push_back(v);
                } else if (color[static_cast<size_t>(v)] == color[static_cast<size_t>(u)]) {
                    // Reconstruct the odd cycle through the BFS tree.
                    std::vector<int> pu{u}, pv{v};
                    int a = u, b = v;
                    while (depth[static_cast<size_t>(a)] > depth[static_cast<size_t>(b)]) {
                        a = parent[static_cast<size_t>(a)];
                        pu.push_back(a);
                    }
                    while (depth[static_cast<size_t>(b)] > depth[static_cast<size_t>(a)]) {
                        b = parent[static_cast<size_t>(b)];
                        pv.push_back(b);
                    }
                    while (a != b) {
                        a = parent[static_cast<size_t>(a)];
                        pu.push_back(a);
                        b = parent[static_cast<size_t>(b)];
                        pv.push_back(b);
                    }
                    res.odd_cycle = pu;  // u .. lca
                    pv.pop_back();       // drop lca from the v side
                    std::reverse(pv.begin(), pv.end());
                    for (int x : pv) res.odd_cycle.push_back(x);
                    res.ok = false;
                    return res;
                }
            }
        }
    }
    for (int v : within)
        (color[static_cast<size_t>(v)] == 0 ? s1 : s2).push_back(v);
    res.ok = true;
    res.bip.side1 = VertexSet(std::move(s1));
    res.bip.side2 = VertexSet(std::move(s2));
    return res;
}

// Shrinks an odd cycle to a chordless (induced) odd cycle of the same graph.
inline std::vector<int> shrink_to_induced_odd_cycle(const WeightedGraph& g,
                                                    std::vector<int> cycle) {
    bool changed = true;
    while (changed && cycle.size() > 3) {
        changed = false;
        int k = static_cast<int>(cycle.size());
        for (int i = 0; i < k && !changed; ++i) {
            for (int j = i + 2; j < k && !changed; ++j) {
                if (i == 0 && j == k - 1) continue;  // cycle edge
                if (!g.adjacent(cycle[static_cast<size_t>(i)],
                                cycle[static_cast<size_t>(j)]))
                    continue;
                // Chord splits the cycle into two; keep the odd part.
                std::vector<int> part1(cycle.begin() + i, cycle.begin() + j + 1);
                std::vector<int> part2(cycle.begin() + j, cycle.end());
                part2.insert(part2.end(), cycle.begin(), cycle.begin() + i + 1);
                cycle = (part1.size() % 2 == 1) ? std::move(part1)
                                                : std::move(part2);
                changed = true;
            }
        }
    }
    return cycle;
}

}  // namespace mwis
