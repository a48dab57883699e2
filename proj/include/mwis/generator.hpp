#pragma once

// Instance generators: random triangle-free graphs filtered to the class,
// C5 blow-ups, named fixtures, and hand-built graphs that drive the solver
// through specific case branches. Generation is bit-for-bit deterministic
// per seed (raw mt19937_64 draws, no libstdc++ distribution objects).

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mwis/graph.hpp"
#include "mwis/recognition.hpp"

namespace mwis {

struct GenRetryExhausted : std::runtime_error {
    explicit GenRetryExhausted(const std::string& msg)
        : std::runtime_error(msg) {}
};

class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}
    uint64_t next() {
        // splitmix64; stable across platforms.
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    int below(int k) { return k <= 1 ? 0 : static_cast<int>(next() % static_cast<uint64_t>(k)); }
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    Weight weight_in(Weight lo, Weight hi) {
        if (hi <= lo) return lo;
        return lo + static_cast<Weight>(next() % static_cast<uint64_t>(hi - lo + 1));
    }

private:
    uint64_t state_;
};

struct GenSpec {
    enum class Family {
        RandomTriangleFree,
        C5Blowup,
        Path,
        Cycle,
        Groetzsch,
        Petersen,
        StarOfC5s,
    };
    Family family = Family::RandomTriangleFree;
    int n = 12;
    double edge_density = 0.3;
    Weight weight_lo = 1;
    Weight weight_hi = 1;
    uint64_t seed = 1;
    int retry_cap = 64;
};

struct GenResult {
    WeightedGraph graph;
    bool in_class = false;
    std::optional<ForbiddenWitness> witness;
    int retries_used = 0;
};

inline const char* family_name(GenSpec::Family f) {
    switch (f) {
        case GenSpec::Family::RandomTriangleFree: return "random-triangle-free";
        case GenSpec::Family::C5Blowup: return "c5-blowup";
        case GenSpec::Family::Path: return "path";
        case GenSpec::Family::Cycle: return "cycle";
        case GenSpec::Family::Groetzsch: return "groetzsch";
        case GenSpec::Family::Petersen: return "petersen";
        case GenSpec::Family::StarOfC5s: return "star-of-c5s";
    }
    return "?";
}

inline std::optional<GenSpec::Family> family_from_name(const std::string& s) {
    using F = GenSpec::Family;
    if (s == "random-triangle-free") return F::RandomTriangleFree;
    if (s == "c5-blowup") return F::C5Blowup;
    if (s == "path") return F::Path;
    if (s == "cycle") return F::Cycle;
    if (s == "groetzsch") return F::Groetzsch;
    if (s == "petersen") return F::Petersen;
    if (s == "star-of-c5s") return F::StarOfC5s;
    return std::nullopt;
}

namespace genimpl {

inline std::vector<Weight> random_weights(int n, const GenSpec& spec, Rng& rng) {
    std::vector<Weight> w(static_cast<size_t>(n));
    for (auto& x : w) x = rng.weight_in(spec.weight_lo, spec.weight_hi);
    return w;
}

// Edges are proposed in a shuffled order of all pairs; each is accepted with
// the density probability unless it would close a triangle.
inline WeightedGraph random_triangle_free_once(const GenSpec& spec, Rng& rng) {
    const int n = spec.n;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    for (int i = static_cast<int>(pairs.size()) - 1; i > 0; --i)
        std::swap(pairs[static_cast<size_t>(i)],
                  pairs[static_cast<size_t>(rng.below(i + 1))]);
    std::vector<std::vector<char>> adj(static_cast<size_t>(n),
                                       std::vector<char>(static_cast<size_t>(n), 0));
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : pairs) {
        if (rng.unit() >= spec.edge_density) continue;
        bool triangle = false;
        for (int w = 0; w < n && !triangle; ++w)
            if (adj[static_cast<size_t>(u)][static_cast<size_t>(w)] &&
                adj[static_cast<size_t>(v)][static_cast<size_t>(w)])
                triangle = true;
        if (triangle) continue;
        adj[static_cast<size_t>(u)][static_cast<size_t>(v)] = 1;
        adj[static_cast<size_t>(v)][static_cast<size_t>(u)] = 1;
        edges.emplace_back(u, v);
    }
    return WeightedGraph::from_edges(n, edges, random_weights(n, spec, rng));
}

inline std::vector<int> blowup_sizes(int n) {
    std::vector<int> sizes(5, n / 5);
    for (int i = 0; i < n % 5; ++i) ++sizes[static_cast<size_t>(i)];
    for (auto& s : sizes)
        if (s == 0) s = 1;  // keep five classes
    return sizes;
}

inline WeightedGraph c5_blowup(const std::vector<int>& sizes,
                               std::vector<Weight> weights) {
    int n = 0;
    std::vector<std::vector<int>> classes(5);
    for (int c = 0; c < 5; ++c)
        for (int i = 0; i < sizes[static_cast<size_t>(c)]; ++i)
            classes[static_cast<size_t>(c)].push_back(n++);
    std::vector<std::pair<int, int>> edges;
    for (int c = 0; c < 5; ++c)
        for (int u : classes[static_cast<size_t>(c)])
            for (int v : classes[static_cast<size_t>((c + 1) % 5)])
                edges.emplace_back(u, v);
    if (weights.empty()) weights.assign(static_cast<size_t>(n), 1);
    return WeightedGraph::from_edges(n, edges, std::move(weights));
}

}  // namespace genimpl

inline WeightedGraph make_path(int n, std::vector<Weight> w = {}) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return WeightedGraph::from_edges(n, e, std::move(w));
}

inline WeightedGraph make_cycle(int n, std::vector<Weight> w = {}) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    if (n > 2) e.emplace_back(n - 1, 0);
    return WeightedGraph::from_edges(n, e, std::move(w));
}

inline WeightedGraph make_c5_blowup(const std::vector<int>& sizes,
                                    std::vector<Weight> w = {}) {
    return genimpl::c5_blowup(sizes, std::move(w));
}

// Mycielskian of C5: 11 vertices, 20 edges.
inline WeightedGraph make_groetzsch(std::vector<Weight> w = {}) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) e.emplace_back(i, (i + 1) % 5);
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(5 + i, (i + 1) % 5);
        e.emplace_back(5 + i, (i + 4) % 5);
    }
    for (int i = 0; i < 5; ++i) e.emplace_back(10, 5 + i);
    return WeightedGraph::from_edges(11, e, std::move(w));
}

inline WeightedGraph make_petersen(std::vector<Weight> w = {}) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) e.emplace_back(i, (i + 1) % 5);
    for (int i = 0; i < 5; ++i) e.emplace_back(5 + i, 5 + (i + 2) % 5);
    for (int i = 0; i < 5; ++i) e.emplace_back(i, 5 + i);
    return WeightedGraph::from_edges(10, e, std::move(w));
}

// k five-cycles sharing one vertex; in class for every k, rich in C5s.
inline WeightedGraph make_star_of_c5s(int k, std::vector<Weight> w = {}) {
    std::vector<std::pair<int, int>> e;
    int n = 1 + 4 * k;
    for (int i = 0; i < k; ++i) {
        int a = 1 + 4 * i;
        e.emplace_back(0, a);
        e.emplace_back(a, a + 1);
        e.emplace_back(a + 1, a + 2);
        e.emplace_back(a + 2, a + 3);
        e.emplace_back(a + 3, 0);
    }
    return WeightedGraph::from_edges(n, e, std::move(w));
}

inline GenResult generate(const GenSpec& spec) {
    Rng rng(spec.seed);
    GenResult res;
    switch (spec.family) {
        case GenSpec::Family::RandomTriangleFree: {
            for (int attempt = 0; attempt < spec.retry_cap; ++attempt) {
                WeightedGraph g = genimpl::random_triangle_free_once(spec, rng);
                if (!find_induced_s124(g)) {
                    res.graph = std::move(g);
                    res.retries_used = attempt;
                    res.witness = check_class(res.graph);
                    res.in_class = !res.witness.has_value();
                    return res;
                }
            }
            throw GenRetryExhausted(
                "random-triangle-free: retry cap exhausted; lower the density");
        }
        case GenSpec::Family::C5Blowup: {
            auto sizes = genimpl::blowup_sizes(spec.n);
            int n = 0;
            for (int s : sizes) n += s;
            res.graph = genimpl::c5_blowup(sizes,
                                           genimpl::random_weights(n, spec, rng));
            break;
        }
        case GenSpec::Family::Path:
            res.graph = make_path(spec.n, genimpl::random_weights(spec.n, spec, rng));
            break;
        case GenSpec::Family::Cycle:
            res.graph = make_cycle(spec.n, genimpl::random_weights(spec.n, spec, rng));
            break;
        case GenSpec::Family::Groetzsch:
            res.graph = make_groetzsch(genimpl::random_weights(11, spec, rng));
            break;
        case GenSpec::Family::Petersen:
            res.graph = make_petersen(genimpl::random_weights(10, spec, rng));
            break;
        case GenSpec::Family::StarOfC5s: {
            int k = std::max(1, (spec.n - 1) / 4);
            res.graph = make_star_of_c5s(
                k, genimpl::random_weights(1 + 4 * k, spec, rng));
            break;
        }
    }
    res.witness = check_class(res.graph);
    res.in_class = !res.witness.has_value();
    return res;
}

// A hand-built graph plus the context recipe that drives the dispatcher
// through one named case branch.
struct TargetedInstance {
    std::string label;           // e.g. "1.1.2.2"
    std::string expected_branch; // stats key, e.g. "case1.1.2.2"
    std::string entry;           // "solve" or "case1_1"
    WeightedGraph graph;
    int v = -1;                  // context recipe: pivot,
    int d = -1;                  //   contact vertex,
    VertexSet K;                 //   component of A(v).
    std::string notes;
};

// All instances use weights 1 + (id mod 3) so the oracle comparison is not
// purely cardinality-driven.
inline TargetedInstance targeted_case_instance(const std::string& label) {
    auto build = [](int n, std::vector<std::pair<int, int>> edges) {
        std::vector<Weight> w(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = 1 + i % 3;
        return WeightedGraph::from_edges(n, edges, std::move(w));
    };
    TargetedInstance t;
    t.label = label;
    t.entry = "solve";
    if (label == "2") {
        // v-d-h chain into a C5 living entirely in Z.
        t.graph = build(8, {{0, 1}, {1, 2}, {2, 3},
                            {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 3}});
        t.v = 0; t.d = 1;
        t.K = VertexSet({2, 3, 4, 5, 6, 7});
        t.expected_branch = "case2";
        t.notes = "H = {2}; Z = C5(3..7) is not bipartite.";
    } else if (label == "1.2") {
        // d sees exactly one vertex of the C5: a type-1 C5 with nail 2.
        t.graph = build(7, {{0, 1}, {1, 2}, {2, 3},
                            {3, 4}, {4, 5}, {5, 6}, {2, 6}});
        t.v = 0; t.d = 1;
        t.K = VertexSet({2, 3, 4, 5, 6});
        t.expected_branch = "case1.2";
        t.notes = "C5(2,3,4,5,6) has nail 2; Z = P4 is bipartite.";
    } else if (label == "1.1.1") {
        // d sees two non-consecutive C5 vertices: the type-2 C5's Z-part is
        // a P1+P2; all contacts on the nontrivial Z-component are half-joins.
        t.graph = build(7, {{0, 1}, {1, 2}, {1, 4},
                            {2, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 6}});
        t.v = 0; t.d = 1;
        t.K = VertexSet({2, 3, 4, 5, 6});
        t.expected_branch = "case1.1.1";
        t.notes = "H = {2,4}; Z = {3,5,6}; component {5,6} is half-joined only.";
    } else if (label == "1.1.2.1.1.1-occ1") {
        // Single green component and no other Z-component. A type-2 C5 forces
        // a second Z-component in class, so this configuration is C5-free and
        // enters through case1_1 directly (context recipe entry).
        t.graph = build(7, {{0, 1}, {1, 2}, {1, 3},
                            {2, 4}, {3, 5}, {4, 5}, {5, 6}});
        t.v = 0; t.d = 1;
        t.K = VertexSet({2, 3, 4, 5, 6});
        t.entry = "case1_1";
        t.expected_branch = "case1.1.2.1.1.1-occ1";
        t.notes = "T = P3(4,5,6); 2 properly contacts {4}; K = H u T bipartite.";
    } else if (label == "1.1.2.1.1.1-occ2") {
        // One green P3 properly contacted by h1, which also contacts the
        // trivial component {x}: Occurrence 2 with H_out = {h1}.
        t.graph = build(8, {{0, 1}, {1, 2}, {1, 3},
                            {2, 4}, {2, 5}, {3, 4}, {3, 6},
                            {5, 6}, {6, 7}});
        t.v = 0; t.d = 1;
        t.K = VertexSet({2, 3, 4, 5, 6, 7});
        t.expected_branch = "case1.1.2.1.1.1-occ2";
        t.notes = "C5(2,4,3,6,5); green T = P3(5,6,7) contacted at 5 by h1 = 2.";
    } else if (label == "1.1.2.1.1.2") {
        // Two green P3s, each properly contacted by its own vertex, which
        // half-joins the other green (critical-vertex structure).
        t.graph = build(11, {{0, 1}, {1, 2}, {1, 3},
                             {2, 4}, {2, 5}, {2, 9},
                             {3, 4}, {3, 8}, {3, 6},
                             {5, 6}, {6, 7}, {8, 9}, {9, 10}});
        t.v = 0; t.d = 1;
        t.K = VertexSet({2, 3, 4, 5, 6, 7, 8, 9, 10});
        t.expected_branch = "case1.1.2.1.1.2";
        t.notes = "Greens P3(5,6,7) and P3(8,9,10); C5(2,4,3,8,9).";
    } else if (label == "1.1.2.1.2") {
        // Green C4 properly contacted on both sides (C4 has no induced P4,
        // which keeps the configuration in class).
        t.graph = build(9, {{0, 1}, {1, 2}, {1, 3},
                            {2, 4}, {2, 5}, {3, 4}, {3, 6},
                            {5, 6}, {6, 7}, {7, 8}, {8, 5}});
        t.v = 0; t.d = 1;
        t.K = VertexSet({2, 3, 4, 5, 6, 7, 8});
        t.expected_branch = "case1.1.2.1.2";
        t.notes = "T = C4(5,6,7,8); 2 proper at 5, 3 proper at 6; C5(2,4,3,6,5).";
    } else if (label == "1.1.2.2") {
        // h_C = 4 properly contacts both green P3s; the C5s live across the
        // trivial component {x} and the t-chain.
        t.graph = build(12, {{0, 1}, {1, 2}, {1, 3}, {1, 4},
                             {2, 5}, {2, 6}, {2, 10},
                             {3, 5}, {3, 7}, {3, 10},
                             {4, 5}, {4, 6}, {4, 9},
                             {6, 7}, {7, 8}, {9, 10}, {10, 11}});
        t.v = 0; t.d = 1;
        t.K = VertexSet({2, 3, 4, 5, 6, 7, 8, 9, 10, 11});
        t.expected_branch = "case1.1.2.2";
        t.notes = "Greens P3(6,7,8) and P3(9,10,11), both properly contacted by 4.";
    } else {
        throw std::invalid_argument("unknown targeted case label: " + label);
    }
    return t;
}

inline std::vector<std::string> targeted_case_labels() {
    return {"1.1.1",        "1.1.2.1.1.1-occ1", "1.1.2.1.1.1-occ2",
            "1.1.2.1.1.2",  "1.1.2.1.2",        "1.1.2.2",
            "1.2",          "2"};
}

}  // namespace mwis
