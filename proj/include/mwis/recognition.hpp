#pragma once

// Recognition of the (S_{1,2,4}, triangle)-free class: witness search for
// induced triangles, 5-cycles and S_{1,2,4}, plus C5 type classification
// relative to a solver context. All searches iterate vertices in ascending
// id so witnesses are reproducible.

#include <optional>
#include <string>
#include <vector>

#include "mwis/graph.hpp"

namespace mwis {

struct ForbiddenWitness {
    enum class Kind { Triangle, C5, S124 };
    Kind kind;
    // Triangle: ascending triple. C5: cyclic order, least vertex first,
    // smaller cycle-neighbor second. S124: center, arm1 tip, arm2 (2), arm4 (4).
    std::vector<int> vertices;
};

inline const char* kind_name(ForbiddenWitness::Kind k) {
    switch (k) {
        case ForbiddenWitness::Kind::Triangle: return "triangle";
        case ForbiddenWitness::Kind::C5: return "c5";
        case ForbiddenWitness::Kind::S124: return "s124";
    }
    return "?";
}

inline std::optional<ForbiddenWitness> find_triangle(const WeightedGraph& g) {
    for (int u = 0; u < g.size(); ++u) {
        for (int v : g.adj(u)) {
            if (v <= u) continue;
            for (int w : g.adj(v)) {
                if (w <= v) continue;
                if (g.adjacent(u, w))
                    return ForbiddenWitness{ForbiddenWitness::Kind::Triangle,
                                            {u, v, w}};
            }
        }
    }
    return std::nullopt;
}

namespace detail {

// Enumerates induced 5-cycles a-x-m-p-y-a inside `within` in a canonical form
// (a minimal, x < y), calling sink(cycle); sink returning true stops the scan.
template <class Sink>
inline void scan_induced_c5(const WeightedGraph& g, const VertexSet& within,
                            Sink sink) {
    for (int a : within) {
        for (int x : g.adj(a)) {
            if (x <= a || !within.contains(x)) continue;
            for (int m : g.adj(x)) {
                if (m <= a || !within.contains(m)) continue;
                if (g.adjacent(m, a)) continue;
                for (int p : g.adj(m)) {
                    if (p <= a || !within.contains(p)) continue;
                    if (p == x || g.adjacent(p, a) || g.adjacent(p, x)) continue;
                    for (int y : g.adj(p)) {
                        if (y <= x || !within.contains(y)) continue;  // x < y
                        if (y == m) continue;
                        if (!g.adjacent(y, a)) continue;
                        if (g.adjacent(y, x) || g.adjacent(y, m)) continue;
                        if (sink(std::vector<int>{a, x, m, p, y})) return;
                    }
                }
            }
        }
    }
}

}  // namespace detail

inline std::optional<ForbiddenWitness> find_induced_c5(const WeightedGraph& g,
                                                       const VertexSet& within) {
    std::optional<ForbiddenWitness> found;
    detail::scan_induced_c5(g, within, [&](std::vector<int> cyc) {
        found = ForbiddenWitness{ForbiddenWitness::Kind::C5, std::move(cyc)};
        return true;
    });
    return found;
}

inline std::optional<ForbiddenWitness> find_induced_c5(const WeightedGraph& g) {
    return find_induced_c5(g, VertexSet::full(g.size()));
}

// All induced 5-cycles within the set, each once up to rotation/reflection.
inline std::vector<ForbiddenWitness> enumerate_induced_c5(
    const WeightedGraph& g, const VertexSet& within) {
    std::vector<ForbiddenWitness> out;
    detail::scan_induced_c5(g, within, [&](std::vector<int> cyc) {
        out.push_back(ForbiddenWitness{ForbiddenWitness::Kind::C5, std::move(cyc)});
        return false;
    });
    return out;
}

// Backtracking search for an induced S_{1,2,4}: center a, arm tips b (1 edge),
// c1-c2 (2 edges), e1-e2-e3-e4 (4 edges), no other edges among the 8 vertices.
inline std::optional<ForbiddenWitness> find_induced_s124(const WeightedGraph& g) {
    auto adj = [&](int u, int v) { return g.adjacent(u, v); };
    for (int a = 0; a < g.size(); ++a) {
        if (g.degree(a) < 3) continue;
        for (int e1 : g.adj(a)) {
            for (int e2 : g.adj(e1)) {
                if (e2 == a || adj(e2, a)) continue;
                for (int e3 : g.adj(e2)) {
                    if (e3 == a || e3 == e1 || adj(e3, a) || adj(e3, e1)) continue;
                    for (int e4 : g.adj(e3)) {
                        if (e4 == a || e4 == e1 || e4 == e2) continue;
                        if (adj(e4, a) || adj(e4, e1) || adj(e4, e2)) continue;
                        for (int c1 : g.adj(a)) {
                            if (c1 == e1) continue;
                            if (adj(c1, e1) || adj(c1, e2) || adj(c1, e3) ||
                                adj(c1, e4))
                                continue;
                            for (int c2 : g.adj(c1)) {
                                if (c2 == a || adj(c2, a)) continue;
                                if (adj(c2, e1) || adj(c2, e2) || adj(c2, e3) ||
                                    adj(c2, e4))
                                    continue;
                                for (int b : g.adj(a)) {
                                    if (b == e1 || b == c1) continue;
                                    if (adj(b, e1) || adj(b, e2) || adj(b, e3) ||
                                        adj(b, e4) || adj(b, c1) || adj(b, c2))
                                        continue;
                                    return ForbiddenWitness{
                                        ForbiddenWitness::Kind::S124,
                                        {a, b, c1, c2, e1, e2, e3, e4}};
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    return std::nullopt;
}

// ok (nullopt) iff g is triangle-free and S_{1,2,4}-free; triangle first.
inline std::optional<ForbiddenWitness> check_class(const WeightedGraph& g) {
    if (auto t = find_triangle(g)) return t;
    if (auto s = find_induced_s124(g)) return s;
    return std::nullopt;
}

enum class C5Type { Type1, Type2, Other };

struct C5Witness {
    std::vector<int> vertices;  // cyclic order
    C5Type type;
    int nail = -1;  // unique H-vertex, type 1 only
};

inline C5Witness classify_c5(const ForbiddenWitness& c5, const VertexSet& h_set) {
    C5Witness w;
    w.vertices = c5.vertices;
    int count = 0, last = -1;
    for (int v : c5.vertices)
        if (h_set.contains(v)) {
            ++count;
            last = v;
        }
    if (count == 1) {
        w.type = C5Type::Type1;
        w.nail = last;
    } else if (count == 2) {
        w.type = C5Type::Type2;
    } else {
        w.type = C5Type::Other;
    }
    return w;
}

// Independent induced-pattern verifier: re-checks every vertex pair of a
// witness against the pattern's edge set.
inline bool verify_witness(const WeightedGraph& g, const ForbiddenWitness& w) {
    const auto& vs = w.vertices;
    auto distinct = [&]() {
        for (size_t i = 0; i < vs.size(); ++i)
            for (size_t j = i + 1; j < vs.size(); ++j)
                if (vs[i] == vs[j]) return false;
        return true;
    };
    if (!distinct()) return false;
    auto expect = [&](size_t i, size_t j, bool edge) {
        return g.adjacent(vs[i], vs[j]) == edge;
    };
    switch (w.kind) {
        case ForbiddenWitness::Kind::Triangle: {
            if (vs.size() != 3) return false;
            return expect(0, 1, true) && expect(1, 2, true) && expect(0, 2, true);
        }
        case ForbiddenWitness::Kind::C5: {
            if (vs.size() != 5) return false;
            for (size_t i = 0; i < 5; ++i)
                for (size_t j = i + 1; j < 5; ++j) {
                    bool edge = (j == i + 1) || (i == 0 && j == 4);
                    if (!expect(i, j, edge)) return false;
                }
            return true;
        }
        case ForbiddenWitness::Kind::S124: {
            if (vs.size() != 8) return false;
            // vertices: a b c1 c2 e1 e2 e3 e4
            static const std::pair<size_t, size_t> es[] = {
                {0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}, {6, 7}};
            for (size_t i = 0; i < 8; ++i)
                for (size_t j = i + 1; j < 8; ++j) {
                    bool edge = false;
                    for (auto [x, y] : es)
                        if (x == i && y == j) edge = true;
                    if (!expect(i, j, edge)) return false;
                }
            return true;
        }
    }
    return false;
}

}  // namespace mwis
