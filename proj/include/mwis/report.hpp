#pragma once

// JSON reports for solve runs. Shared by the CLI and the test suites so the
// emitted bytes are the same in both places. Keys are emitted in sorted
// order (nlohmann default), making reports byte-stable run to run.

#include <json.hpp>

#include "mwis/recognition.hpp"
#include "mwis/solver.hpp"

namespace mwis {

inline nlohmann::json witness_to_json(const ForbiddenWitness& w) {
    nlohmann::json j;
    j["kind"] = kind_name(w.kind);
    nlohmann::json verts = nlohmann::json::array();
    for (int v : w.vertices) verts.push_back(v + 1);
    j["vertices"] = verts;
    return j;
}

inline nlohmann::json solve_report(const WeightedGraph& g,
                                   bool check_class_first = false) {
    nlohmann::json out;
    if (check_class_first) {
        if (auto w = check_class(g)) {
            out["status"] = "class-violation";
            out["witness"] = witness_to_json(*w);
            return out;
        }
    }
    try {
        SolveResult res = solve_mwis(g);
        out["status"] = "ok";
        out["weight"] = res.weight;
        nlohmann::json sol = nlohmann::json::array();
        for (int v : res.solution) sol.push_back(v + 1);
        out["solution"] = sol;
        out["leaves_count"] = res.leaves.size();
        nlohmann::json metrics;
        metrics["subproblems"] = res.stats.subproblems;
        metrics["max_depth"] = res.stats.max_depth;
        nlohmann::json branches;
        for (const auto& [k, v] : res.stats.branches) branches[k] = v;
        metrics["branches"] = branches;
        out["metrics"] = metrics;
    } catch (const ClassViolation& e) {
        out["status"] = "class-violation";
        out["fact"] = e.fact;
        nlohmann::json wit = nlohmann::json::array();
        for (int v : e.witness) wit.push_back(v + 1);
        out["fact_witness"] = wit;
        if (e.certificate) out["witness"] = witness_to_json(*e.certificate);
    }
    return out;
}

}  // namespace mwis
