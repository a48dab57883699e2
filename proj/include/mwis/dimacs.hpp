#pragma once

// DIMACS-like instance files: "c ..." comments, one "p edge <n> <m>" header,
// "e <u> <v>" edges and optional "n <v> <w>" weight lines, 1-indexed,
// whitespace-separated, LF line endings. Vertices are 0-indexed internally;
// the parser/emitter pair is the only place the two conventions meet.

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mwis/graph.hpp"

namespace mwis {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg),
          line(line_) {}
};

inline WeightedGraph parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    long long m = -1, edges_seen = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<Weight> weights;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            if (n >= 0) throw ParseError(lineno, "duplicate problem line");
            std::string kind;
            if (!(ls >> kind >> n >> m) || kind != "edge" || n < 0 || m < 0)
                throw ParseError(lineno, "malformed problem line");
            weights.assign(static_cast<size_t>(n), 1);
            continue;
        }
        if (n < 0) throw ParseError(lineno, "data before problem line");
        if (tag == "e") {
            int u, v;
            if (!(ls >> u >> v)) throw ParseError(lineno, "malformed edge line");
            if (u < 1 || v < 1 || u > n || v > n)
                throw ParseError(lineno, "edge endpoint out of range");
            if (u == v) throw ParseError(lineno, "self-loop");
            edges.emplace_back(u - 1, v - 1);
            ++edges_seen;
            continue;
        }
        if (tag == "n") {
            int v;
            Weight w;
            if (!(ls >> v >> w)) throw ParseError(lineno, "malformed weight line");
            if (v < 1 || v > n) throw ParseError(lineno, "vertex out of range");
            if (w < 0) throw ParseError(lineno, "negative weight");
            weights[static_cast<size_t>(v - 1)] = w;
            continue;
        }
        throw ParseError(lineno, "unknown line type '" + tag + "'");
    }
    if (n < 0) throw ParseError(lineno, "missing problem line");
    if (edges_seen != m) throw ParseError(lineno, "edge count mismatch");
    try {
        return WeightedGraph::from_edges(n, edges, std::move(weights));
    } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, e.what());
    }
}

inline std::string emit_dimacs(const WeightedGraph& g) {
    std::ostringstream out;
    auto es = g.edges();
    out << "p edge " << g.size() << " " << es.size() << "\n";
    for (auto [u, v] : es) out << "e " << u + 1 << " " << v + 1 << "\n";
    for (int v = 0; v < g.size(); ++v)
        if (g.weight(v) != 1) out << "n " << v + 1 << " " << g.weight(v) << "\n";
    return out.str();
}

}  // namespace mwis
