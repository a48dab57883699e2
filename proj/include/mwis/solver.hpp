#pragma once

// Exact MWIS solver for (S_{1,2,4}, triangle)-free graphs.
//
// Strategy: per connected component, components without an induced C5 are
// nearly bipartite and fall to the anti-neighborhood recursion
//     alpha(G) = max_v { w(v) + alpha(G[A(v)]) }
// with bipartite leaves. Components with a C5 run the same recursion, but
// each non-bipartite component K of an anti-neighborhood is processed
// through a context (v, d, K, H = K cap N(d), Z = K \ N(d)) and a case
// analysis on the structure of G[Z] that peels vertices off K until every
// remaining piece is bipartite.
//
// Structural guarantees of the class are asserted at runtime. A failed
// assertion raises ClassViolation: the input was outside the class. The
// top-level solve() then attaches a forbidden-subgraph certificate found by
// the recognizer. ContextViolation marks internal bugs, never bad input.
//
// Every bipartite base case records its vertex set; the returned leaf list
// is a family of bipartite sets such that every maximal independent set of
// the input is contained in some member.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mwis/bipartite_mwis.hpp"
#include "mwis/graph.hpp"
#include "mwis/recognition.hpp"

namespace mwis {

struct ClassViolation : std::runtime_error {
    std::string fact;
    std::vector<int> witness;
    std::optional<ForbiddenWitness> certificate;

    ClassViolation(std::string fact_, std::vector<int> witness_)
        : std::runtime_error("class violation: " + fact_),
          fact(std::move(fact_)),
          witness(std::move(witness_)) {}
};

struct SolverStats {
    long long subproblems = 0;
    int max_depth = 0;
    long long leaf_count = 0;
    std::map<std::string, long long> branches;
};

struct SolveResult {
    Weight weight = 0;
    VertexSet solution;
    std::vector<VertexSet> leaves;
    SolverStats stats;
};

struct ComponentContext {
    int v = -1;  // pivot of the anti-neighborhood step
    int d = -1;  // neighbor of v contacting K
    VertexSet K;
    VertexSet H;  // K cap N(d), independent in the class
    VertexSet Z;  // K \ N(d)
};

// Per-component contact classification of H against a component of G[Z].
struct ZCompInfo {
    VertexSet comp;
    VertexSet side1, side2;      // side1 holds the least vertex of the comp
    bool nontrivial = false;
    VertexSet half1, half2;      // h with N cap comp equal to a full side
    VertexSet proper1, proper2;  // proper one-side contactors
    bool green() const {
        return nontrivial && (!proper1.empty() || !proper2.empty());
    }
};

class Solver {
public:
    struct Options {
        bool record_leaves = true;
        int depth_limit_factor = 4;  // depth guard at factor * n
    };

    explicit Solver(const WeightedGraph& g) : Solver(g, Options()) {}
    Solver(const WeightedGraph& g, Options opt) : g_(g), opt_(opt) {}

    SolveResult solve() {
        stats_ = SolverStats{};
        try {
            Sub r = solve_scope(VertexSet::full(g_.size()), 0);
            if (!is_independent(g_, r.solution) ||
                set_weight(g_, r.solution) != r.weight)
                throw ContextViolation("solve: result fails self-check");
            return SolveResult{r.weight, r.solution, r.leaves, stats_};
        } catch (ClassViolation& e) {
            if (!e.certificate) e.certificate = check_class(g_);
            throw;
        } catch (const ContextViolation&) {
            // An internal invariant tripped; if the input is certifiably out
            // of class, report that instead of a bug.
            if (auto w = check_class(g_)) {
                ClassViolation cv("internal invariant failed on out-of-class input",
                                  {});
                cv.certificate = w;
                throw cv;
            }
            throw;
        }
    }

    const SolverStats& stats() const { return stats_; }

    // ---- internal currency ------------------------------------------------

    struct Sub {
        Weight weight = 0;
        VertexSet solution;
        std::vector<VertexSet> leaves;
    };

    // ---- generic scope solving --------------------------------------------

    // Sum over connected components, harvesting isolated vertices first.
    Sub solve_scope(const VertexSet& scope, int depth) {
        enter(depth);
        if (scope.empty()) return unit_sub(scope);
        auto [iso, rest] = split_isolated(scope);
        Sub acc = unit_sub(iso);
        for (const VertexSet& comp : connected_components(g_, rest))
            acc = cross(acc, solve_connected(comp, depth + 1));
        return acc;
    }

    Sub solve_connected(const VertexSet& c, int depth) {
        enter(depth);
        ++stats_.subproblems;
        if (c.size() <= 1) return unit_sub(c);
        auto bp = bipartition(g_, c);
        if (bp.ok) return leaf(c, bp.bip);
        if (!find_induced_c5(g_, c)) return solve_nearly_bipartite(c, depth + 1);
        return eq1_with_contexts(c, depth + 1);
    }

    // Anti-neighborhood recursion for a connected C5-free component: every
    // G[A(v)] must split into bipartite components (class guarantee).
    Sub solve_nearly_bipartite(const VertexSet& c, int depth) {
        enter(depth);
        ++stats_.subproblems;
        bump("nearly-bipartite");
        if (c.empty()) return unit_sub(c);
        std::vector<Sub> cands;
        for (int v : c) {
            VertexSet sub = anti_neighborhood_in(g_, v, c);
            cands.push_back(lift(v, solve_bipartite_scope(sub, depth + 1)));
        }
        return combine_max(std::move(cands));
    }

    // Anti-neighborhood recursion with the full context machinery: every
    // non-trivial component of G[A(v)] is handled through (v, d, K).
    Sub eq1_with_contexts(const VertexSet& c, int depth) {
        enter(depth);
        bump("eq1");
        std::vector<Sub> cands;
        for (int v : c) {
            VertexSet sub = anti_neighborhood_in(g_, v, c);
            cands.push_back(lift(v, solve_anti(c, v, sub, depth + 1)));
        }
        return combine_max(std::move(cands));
    }

    Sub solve_anti(const VertexSet& c, int v, const VertexSet& scope,
                   int depth) {
        enter(depth);
        ++stats_.subproblems;
        auto [iso, rest] = split_isolated(scope);
        Sub acc = unit_sub(iso);
        for (const VertexSet& K : connected_components(g_, rest)) {
            int d = pick_contact(c, v, K);
            acc = cross(std::move(acc), solve_component(v, d, K, depth + 1));
        }
        return acc;
    }

    // ---- context machinery --------------------------------------------------

    // d choice for a component K of G[A(v) cap c]: least neighbor of v inside
    // c adjacent to some K vertex.
    int pick_contact(const VertexSet& c, int v, const VertexSet& K) const {
        for (int d : g_.adj(v)) {
            if (!c.contains(d)) continue;
            if (!neighbors_in(g_, d, K).empty()) return d;
        }
        throw ContextViolation("pick_contact: no neighbor of pivot contacts K");
    }

    ComponentContext make_context(int v, int d, VertexSet K) const {
        if (K.contains(v) || K.contains(d) || !g_.adjacent(v, d))
            throw ContextViolation("make_context: bad (v, d, K) frame");
        ComponentContext ctx;
        ctx.v = v;
        ctx.d = d;
        ctx.H = neighbors_in(g_, d, K);
        ctx.Z = K.set_minus(ctx.H);
        ctx.K = std::move(K);
        // H independent; adjacent h, h' close a triangle with d.
        for (int h : ctx.H)
            for (int u : g_.adj(h))
                if (u > h && ctx.H.contains(u))
                    throw ClassViolation("H-independence", {h, u, d});
        return ctx;
    }

    Sub solve_component(int v, int d, const VertexSet& K, int depth) {
        enter(depth);
        ++stats_.subproblems;
        if (K.empty()) return unit_sub(K);
        auto [iso, rest] = split_isolated(K);
        Sub prefix = unit_sub(iso);
        if (rest.empty()) return prefix;
        auto bp = bipartition(g_, rest);
        if (bp.ok) return cross(std::move(prefix), leaf(rest, bp.bip));
        ComponentContext ctx = make_context(v, d, rest);
        Sub core;
        auto zbp = bipartition(g_, ctx.Z);
        if (zbp.ok)
            core = case1(ctx, depth + 1);
        else
            core = case2(ctx, depth + 1);
        return cross(std::move(prefix), std::move(core));
    }

    // ---- Case 1: G[Z] bipartite ---------------------------------------------

    Sub case1(const ComponentContext& ctx, int depth) {
        enter(depth);
        bump("case1");
        auto c5s = enumerate_induced_c5(g_, ctx.K);
        if (c5s.empty()) return solve_c5free_scope(ctx.K, depth + 1);
        bool any_type1 = false;
        for (const auto& c : c5s) {
            C5Witness w = classify_c5(c, ctx.H);
            if (w.type == C5Type::Other)
                throw ContextViolation(
                    "case1: C5 with H-count 0 or >= 3 after H/Z checks");
            if (w.type == C5Type::Type1) any_type1 = true;
        }
        return any_type1 ? case1_2(ctx, depth + 1) : case1_1(ctx, depth + 1);
    }

    // Routes a scope whose components are expected C5-free: bipartite
    // components become leaves, the rest go through the nearly-bipartite
    // recursion.
    Sub solve_c5free_scope(const VertexSet& scope, int depth) {
        enter(depth);
        ++stats_.subproblems;
        bump("c5free");
        auto [iso, rest] = split_isolated(scope);
        Sub acc = unit_sub(iso);
        for (const VertexSet& comp : connected_components(g_, rest)) {
            auto bp = bipartition(g_, comp);
            acc = cross(std::move(acc), bp.ok ? leaf(comp, bp.bip)
                                              : solve_nearly_bipartite(comp, depth + 1));
        }
        return acc;
    }

    std::vector<ZCompInfo> green_info(const ComponentContext& ctx) const {
        std::vector<ZCompInfo> infos;
        for (const VertexSet& comp : connected_components(g_, ctx.Z)) {
            ZCompInfo info;
            auto bp = bipartition(g_, comp);
            if (!bp.ok)
                throw ContextViolation("green_info: non-bipartite Z-component in Case 1");
            info.side1 = bp.bip.side1;
            info.side2 = bp.bip.side2;
            info.comp = comp;
            info.nontrivial = is_nontrivial_component(comp);
            for (int h : ctx.H) {
                VertexSet nt = neighbors_in(g_, h, comp);
                if (nt.empty()) continue;
                bool in1 = nt.intersects(info.side1);
                bool in2 = nt.intersects(info.side2);
                if (in1 && in2) {
                    // In Case 1.1 a contact on both sides forces a type-1
                    // C5; none exists, so the input is out of class.
                    std::vector<int> wit{h,
                                         nt.set_intersect(info.side1).front(),
                                         nt.set_intersect(info.side2).front()};
                    throw ClassViolation(
                        "both-sides-contact: H-vertex touches both sides of a "
                        "Z-component while every C5 has type 2",
                        std::move(wit));
                }
                if (in1)
                    (nt == info.side1 ? info.half1 : info.proper1).insert(h);
                else
                    (nt == info.side2 ? info.half2 : info.proper2).insert(h);
            }
            infos.push_back(std::move(info));
        }
        return infos;
    }

    // Case 1.1: every C5 in K is of type 2.
    Sub case1_1(const ComponentContext& ctx, int depth) {
        enter(depth);
        bump("case1.1");
        auto infos = green_info(ctx);
        std::vector<int> greens;
        for (int i = 0; i < static_cast<int>(infos.size()); ++i)
            if (infos[static_cast<size_t>(i)].green()) greens.push_back(i);
        if (greens.empty()) return case1_1_1(ctx, depth + 1);
        for (int h : ctx.H) {
            int touched = 0;
            for (int gi : greens) {
                const auto& info = infos[static_cast<size_t>(gi)];
                if (info.proper1.contains(h) || info.proper2.contains(h))
                    ++touched;
            }
            if (touched >= 2) return case1_1_2_2(ctx, infos, greens, depth + 1);
        }
        return case1_1_2_1(ctx, infos, greens, depth + 1);
    }

    // Case 1.1.1 (no green component): total order on the doubly-contacting
    // vertices, then the elimination sequence leaves only C5-free scopes.
    Sub case1_1_1(const ComponentContext& ctx, int depth) {
        enter(depth);
        bump("case1.1.1");
        // Induced P1+P2 triples (x | y-z) of G[Z].
        std::vector<std::array<int, 3>> triples;
        for (int y : ctx.Z)
            for (int z : g_.adj(y)) {
                if (z <= y || !ctx.Z.contains(z)) continue;
                for (int x : ctx.Z)
                    if (x != y && x != z && !g_.adjacent(x, y) &&
                        !g_.adjacent(x, z))
                        triples.push_back({x, y, z});
            }
        std::vector<int> hp;
        for (int h : ctx.H)
            for (const auto& t : triples)
                if (doubly_contacts(h, t)) {
                    hp.push_back(h);
                    break;
                }
        if (hp.empty()) return solve_c5free_scope(ctx.K, depth + 1);

        auto contacts_triple = [&](int h, const std::array<int, 3>& t) {
            return g_.adjacent(h, t[0]) || g_.adjacent(h, t[1]) ||
                   g_.adjacent(h, t[2]);
        };
        auto ge = [&](int h1, int h2) {
            if (h1 == h2) return true;
            for (const auto& t : triples)
                if (doubly_contacts(h2, t) && !contacts_triple(h1, t))
                    return false;
            return true;
        };
        std::vector<int> order = order_by_domination(hp, ge);
        auto c5free_step = [&](const VertexSet& scope) {
            if (auto c5 = find_induced_c5(g_, scope))
                throw ClassViolation("c5-elimination: eliminated subproblem retains a C5",
                                     c5->vertices);
            return solve_c5free_scope(scope, depth + 1);
        };
        return eliminate_sequence(
            ctx.K, order, [&](int, int, const VertexSet& s) { return c5free_step(s); },
            [&](const VertexSet& s) { return c5free_step(s); });
    }

    bool doubly_contacts(int h, const std::array<int, 3>& t) const {
        if (!g_.adjacent(h, t[0])) return false;
        return g_.adjacent(h, t[1]) != g_.adjacent(h, t[2]);
    }

    // Repeated maximum extraction under a (claimed) suffix-total domination
    // relation; each extracted maximum is verified against the remainder.
    template <class Ge>
    std::vector<int> order_by_domination(std::vector<int> items, Ge ge) const {
        std::vector<int> out;
        while (!items.empty()) {
            int cand = items.front();
            for (int x : items)
                if (!ge(cand, x)) cand = x;
            for (int x : items)
                if (x != cand && !ge(cand, x))
                    throw ClassViolation(
                        "domination-order: no maximum element", {cand, x});
            out.push_back(cand);
            items.erase(std::find(items.begin(), items.end(), cand));
        }
        return out;
    }

    // Case 1.1.2.1: green components exist, no H-vertex properly contacts two.
    Sub case1_1_2_1(const ComponentContext& ctx,
                    const std::vector<ZCompInfo>& infos,
                    const std::vector<int>& greens, int depth) {
        enter(depth);
        bump("case1.1.2.1");
        bool both_sided = false;
        for (int gi : greens) {
            const auto& info = infos[static_cast<size_t>(gi)];
            if (!info.proper1.empty() && !info.proper2.empty()) both_sided = true;
        }
        if (both_sided) bump("case1.1.2.1.2");
        if (greens.size() == 1)
            return occurrence_machinery(ctx, infos,
                                        infos[static_cast<size_t>(greens[0])],
                                        both_sided, depth + 1);
        if (!both_sided) bump("case1.1.2.1.1.2");
        return critical_machinery(ctx, infos, greens, depth + 1);
    }

    // Oriented "U1" of a green component: the properly contacted side,
    // preferring side1 when both are.
    static const VertexSet& oriented_u1(const ZCompInfo& info) {
        return info.proper1.empty() ? info.side2 : info.side1;
    }
    static const VertexSet& oriented_u2(const ZCompInfo& info) {
        return info.proper1.empty() ? info.side1 : info.side2;
    }

    static ZCompInfo flipped(const ZCompInfo& info) {
        ZCompInfo f = info;
        std::swap(f.side1, f.side2);
        std::swap(f.half1, f.half2);
        std::swap(f.proper1, f.proper2);
        return f;
    }

    // Case 1.1.2.1.1.1 and the analogous single-green part of Case 1.1.2.1.2.
    // In the both-sided variant the residual subproblems re-enter the
    // dispatcher (they reduce to the one-sided case, not to bipartite leaves).
    Sub occurrence_machinery(const ComponentContext& ctx,
                             const std::vector<ZCompInfo>& infos,
                             const ZCompInfo& tinfo_in, bool both_sided,
                             int depth) {
        enter(depth);
        if (infos.size() == 1) {
            // Occurrence 1: Z is exactly the green component, so K = H u T
            // is bipartite (every contact is one-sided).
            if (!both_sided) bump("case1.1.2.1.1.1-occ1");
            auto bp = bipartition(g_, ctx.K);
            if (!bp.ok)
                throw ClassViolation("occurrence1: K = H u T is not bipartite",
                                     bp.odd_cycle);
            return leaf(ctx.K, bp.bip);
        }
        // Occurrence 2.
        if (!both_sided) bump("case1.1.2.1.1.1-occ2");
        VertexSet outside_t = ctx.Z.set_minus(tinfo_in.comp);
        std::vector<int> joiners;
        for (int h : ctx.H) {
            VertexSet nt = neighbors_in(g_, h, tinfo_in.comp);
            if (!nt.empty() && (nt == tinfo_in.side1 || nt == tinfo_in.side2))
                joiners.push_back(h);
        }
        auto h_out_of = [&](const ZCompInfo& info) {
            const VertexSet& propers =
                info.proper1.empty() ? info.proper2 : info.proper1;
            std::vector<int> h_out;
            for (int h : propers)
                if (!neighbors_in(g_, h, outside_t).empty()) h_out.push_back(h);
            sort_by_degree_desc(h_out, oriented_u1(info));
            return h_out;
        };

        ZCompInfo tinfo = tinfo_in;
        std::vector<int> h_out = h_out_of(tinfo);
        if (both_sided && h_out.empty() && joiners.empty()) {
            // The preferred side makes no progress; work the other side.
            tinfo = flipped(tinfo_in);
            h_out = h_out_of(tinfo);
            if (h_out.empty())
                throw ClassViolation(
                    "case1.1.2.1.2: no side admits a reduction", {});
        }

        return eliminate_sequence(
            ctx.K, h_out,
            [&](int, int h, const VertexSet& scope) {
                return y_split(ctx, tinfo, h, scope, depth + 1);
            },
            [&](const VertexSet& tail_scope) {
                // Step (iii): split the remaining H by full-side joins to T.
                std::vector<int> live_joiners;
                for (int h : joiners)
                    if (tail_scope.contains(h)) live_joiners.push_back(h);
                return branch_on_set(
                    tail_scope, live_joiners,
                    [&](int, const VertexSet& s) {
                        return solve_component(ctx.v, ctx.d, s, depth + 1);
                    },
                    [&](const VertexSet& s) {
                        if (both_sided)
                            return solve_component(ctx.v, ctx.d, s, depth + 1);
                        auto bp = bipartition(g_, s);
                        if (!bp.ok)
                            throw ClassViolation(
                                "occurrence2(iii.b): residual K is not bipartite",
                                bp.odd_cycle);
                        return leaf(s, bp.bip);
                    });
            });
    }

    // Y of the one-green reduction: vertices of U2 \ N(h_max) in the middle
    // of an induced P4 h-a-y-b with a, b in U1 \ N(h_max).
    VertexSet compute_Y(const ComponentContext& ctx, const ZCompInfo& tinfo,
                        int h_max, const VertexSet& scope) const {
        const VertexSet nh = neighbors(g_, h_max);
        const VertexSet u1 = oriented_u1(tinfo).set_intersect(scope).set_minus(nh);
        const VertexSet u2 = oriented_u2(tinfo).set_intersect(scope).set_minus(nh);
        std::vector<int> ys;
        for (int y : u2) {
            bool found = false;
            for (int h : ctx.H) {
                if (!scope.contains(h) || g_.adjacent(h, y)) continue;
                for (int a : u1) {
                    if (!g_.adjacent(h, a) || !g_.adjacent(a, y)) continue;
                    for (int b : u1) {
                        if (b == a || g_.adjacent(h, b) || !g_.adjacent(y, b))
                            continue;
                        if (g_.adjacent(a, b)) continue;
                        found = true;
                        break;
                    }
                    if (found) break;
                }
                if (found) break;
            }
            if (found) ys.push_back(y);
        }
        return VertexSet(std::move(ys));
    }

    // Splits a scope already missing N(h_max) on the Y set; the resulting
    // subproblems re-enter the dispatcher (they have lost their green
    // structure around T).
    Sub y_split(const ComponentContext& ctx, const ZCompInfo& tinfo, int h_max,
                const VertexSet& scope, int depth) {
        enter(depth);
        VertexSet y = compute_Y(ctx, tinfo, h_max, scope);
        return branch_on_set(
            scope, std::vector<int>(y.ids().begin(), y.ids().end()),
            [&](int, const VertexSet& s) {
                return solve_component(ctx.v, ctx.d, s, depth + 1);
            },
            [&](const VertexSet& s) {
                return solve_component(ctx.v, ctx.d, s, depth + 1);
            });
    }

    // Case 1.1.2.1.1.2 and the multi-green part of Case 1.1.2.1.2: iterated
    // extraction of critical vertices, each branch solved by its Y-split.
    Sub critical_machinery(const ComponentContext& ctx,
                           const std::vector<ZCompInfo>& infos,
                           const std::vector<int>& greens, int depth) {
        enter(depth);
        VertexSet cur_h = ctx.H;
        std::vector<std::pair<int, int>> crits;  // (h, green index)
        for (;;) {
            std::vector<int> live;
            for (int gi : greens) {
                const auto& info = infos[static_cast<size_t>(gi)];
                if (info.proper1.set_intersect(cur_h).size() +
                        info.proper2.set_intersect(cur_h).size() >
                    0)
                    live.push_back(gi);
            }
            if (live.size() <= 1) break;
            int pick_h = -1, pick_gi = -1;
            for (int gi : live) {
                const auto& info = infos[static_cast<size_t>(gi)];
                VertexSet cand = info.proper1.set_union(info.proper2)
                                     .set_intersect(cur_h);
                int best = -1, best_deg = -1;
                for (int h : cand) {
                    int dg = degree_in(g_, h, oriented_u1(info));
                    if (dg > best_deg) {
                        best = h;
                        best_deg = dg;
                    }
                }
                // Critical: half-join to every other live green.
                bool ok = true;
                for (int gj : live) {
                    if (gj == gi) continue;
                    const auto& oinfo = infos[static_cast<size_t>(gj)];
                    VertexSet nt = neighbors_in(g_, best, oinfo.comp);
                    if (nt != oinfo.side1 && nt != oinfo.side2) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    pick_h = best;
                    pick_gi = gi;
                    break;
                }
            }
            if (pick_h < 0)
                throw ClassViolation(
                    "critical-vertex: no green maximum half-joins the others", {});
            crits.emplace_back(pick_h, pick_gi);
            cur_h = cur_h.minus_vertex(pick_h);
        }
        std::vector<int> seq;
        for (auto& [h, gi] : crits) seq.push_back(h);
        return eliminate_sequence(
            ctx.K, seq,
            [&](int i, int h, const VertexSet& scope) {
                const auto& tinfo =
                    infos[static_cast<size_t>(crits[static_cast<size_t>(i)].second)];
                return y_split(ctx, tinfo, h, scope, depth + 1);
            },
            [&](const VertexSet& tail_scope) {
                // Exactly one green remains; re-dispatch.
                return solve_component(ctx.v, ctx.d, tail_scope, depth + 1);
            });
    }

    // Case 1.1.2.2 (some H-vertex properly contacts two greens): order the
    // union of proper contactors by the contact-domination relation, basic
    // vertices first.
    Sub case1_1_2_2(const ComponentContext& ctx,
                    const std::vector<ZCompInfo>& infos,
                    const std::vector<int>& greens, int depth) {
        enter(depth);
        bump("case1.1.2.2");
        VertexSet hp_set;
        for (int gi : greens) {
            const auto& info = infos[static_cast<size_t>(gi)];
            hp_set = hp_set.set_union(info.proper1).set_union(info.proper2);
        }
        auto propered = [&](int h) {
            std::vector<int> out;
            for (int gi : greens) {
                const auto& info = infos[static_cast<size_t>(gi)];
                if (info.proper1.contains(h) || info.proper2.contains(h))
                    out.push_back(gi);
            }
            return out;
        };
        auto ge = [&](int a, int b) {
            if (a == b) return true;
            for (int gi : propered(b))
                if (neighbors_in(g_, a, infos[static_cast<size_t>(gi)].comp)
                        .empty())
                    return false;
            return true;
        };
        // Basic-vertex order: maxima of the relation, then max Z-degree,
        // then least id.
        std::vector<int> rem(hp_set.ids().begin(), hp_set.ids().end());
        std::vector<int> order;
        while (!rem.empty()) {
            std::vector<int> maxima;
            for (int a : rem) {
                bool top = true;
                for (int b : rem)
                    if (!ge(a, b)) {
                        top = false;
                        break;
                    }
                if (top) maxima.push_back(a);
            }
            if (maxima.empty())
                throw ClassViolation(
                    "contact-domination: relation not total",
                    {rem[0], rem.size() > 1 ? rem[1] : rem[0]});
            int basic = maxima[0];
            int basic_deg = degree_in(g_, basic, ctx.Z);
            for (int a : maxima) {
                int dg = degree_in(g_, a, ctx.Z);
                if (dg > basic_deg) {
                    basic = a;
                    basic_deg = dg;
                }
            }
            order.push_back(basic);
            rem.erase(std::find(rem.begin(), rem.end(), basic));
        }
        return eliminate_sequence(
            ctx.K, order,
            [&](int, int, const VertexSet& scope) {
                return solve_component(ctx.v, ctx.d, scope, depth + 1);
            },
            [&](const VertexSet& tail_scope) {
                return solve_component(ctx.v, ctx.d, tail_scope, depth + 1);
            });
    }

    // ---- Case 1.2: a type-1 C5 is present -----------------------------------

    Sub case1_2(const ComponentContext& ctx, int depth) {
        enter(depth);
        bump("case1.2");
        std::vector<int> hs(ctx.H.ids().begin(), ctx.H.ids().end());
        sort_by_degree_desc(hs, ctx.Z);
        return eliminate_sequence(
            ctx.K, hs,
            [&](int, int h, const VertexSet& scope) {
                return nail_branch(ctx, h, scope, depth + 1);
            },
            [&](const VertexSet& tail_scope) {
                // K \ H lies inside Z, hence bipartite under Case 1.
                auto bp = bipartition(g_, tail_scope);
                if (!bp.ok)
                    throw ContextViolation("case1.2: Z-subset not bipartite");
                return leaf(tail_scope, bp.bip);
            });
    }

    // Handles one subproblem K' \ N(h_i) of Case 1.2: branch over the nails
    // of the remaining type-1 C5s; each nail branch runs the L(h) reduction.
    Sub nail_branch(const ComponentContext& ctx, int h_star,
                    const VertexSet& scope, int depth) {
        enter(depth);
        std::vector<int> nails;
        for (const auto& c : enumerate_induced_c5(g_, scope)) {
            C5Witness w = classify_c5(c, ctx.H);
            if (w.type == C5Type::Type1) nails.push_back(w.nail);
        }
        std::sort(nails.begin(), nails.end());
        nails.erase(std::unique(nails.begin(), nails.end()), nails.end());
        return branch_on_set(
            scope, nails,
            [&](int a, const VertexSet& s) {
                return nail_reduction(ctx, scope, h_star, a, s, depth + 1);
            },
            [&](const VertexSet& s) {
                // No type-1 C5 remains by construction of the nail set.
                return solve_component(ctx.v, ctx.d, s, depth + 1);
            });
    }

    // L(h): vertices of Z on a type-1 C5 with nail h (inside the graph where
    // h still is a nail) that are non-adjacent to h.
    VertexSet nail_set_L(const ComponentContext& ctx, const VertexSet& scope,
                         int h) const {
        std::vector<int> out;
        for (const auto& c : enumerate_induced_c5(g_, scope)) {
            C5Witness w = classify_c5(c, ctx.H);
            if (w.type != C5Type::Type1 || w.nail != h) continue;
            for (int z : c.vertices)
                if (z != h && !g_.adjacent(z, h)) out.push_back(z);
        }
        return VertexSet(std::move(out));
    }

    // Nail reduction: inner = scope \ N(h*) \ N(a) already has a's
    // neighborhood removed; split on L(a) computed in `scope` (where a is
    // still a nail). Both branch kinds must be free of type-1 C5s.
    Sub nail_reduction(const ComponentContext& ctx, const VertexSet& scope,
                       int h_star, int a, const VertexSet& inner, int depth) {
        enter(depth);
        (void)h_star;
        VertexSet l = nail_set_L(ctx, scope, a);
        auto checked = [&](const VertexSet& s, const char* fact) {
            for (const auto& c : enumerate_induced_c5(g_, s)) {
                C5Witness w = classify_c5(c, ctx.H);
                if (w.type == C5Type::Type1)
                    throw ClassViolation(fact, c.vertices);
            }
            return solve_component(ctx.v, ctx.d, s, depth + 1);
        };
        return branch_on_set(
            inner, std::vector<int>(l.ids().begin(), l.ids().end()),
            [&](int, const VertexSet& s) {
                return checked(s, "nail-reduction(i): a type-1 C5 survives the N(x) removal");
            },
            [&](const VertexSet& s) {
                return checked(s, "nail-reduction(ii): a type-1 C5 survives the L(h) removal");
            });
    }

    // ---- Case 2: G[Z] not bipartite ------------------------------------------

    Sub case2(const ComponentContext& ctx, int depth) {
        enter(depth);
        bump("case2");
        std::vector<VertexSet> nonbip;
        for (const VertexSet& comp : connected_components(g_, ctx.Z))
            if (!bipartition(g_, comp).ok) nonbip.push_back(comp);
        if (nonbip.empty())
            throw ContextViolation("case2: Z bipartite after all");
        if (nonbip.size() >= 2) {
            std::vector<int> wit{nonbip[0].front(), nonbip[1].front()};
            throw ClassViolation("unique-odd-component: two non-bipartite Z-components",
                                 std::move(wit));
        }
        const VertexSet zstar = nonbip[0];
        std::vector<int> hstar;
        for (int h : ctx.H)
            if (!neighbors_in(g_, h, zstar).empty()) hstar.push_back(h);
        for (int h : hstar) {
            auto bp = bipartition(g_, zstar.set_minus(neighbors(g_, h)));
            if (!bp.ok) {
                auto wit = bp.odd_cycle;
                wit.push_back(h);
                throw ClassViolation("contactor-reduction: Z* minus a contactor neighborhood is not bipartite",
                                     std::move(wit));
            }
        }
        if (hstar.empty()) {
            // Z* is untouched by H: it is a full component of G[K].
            Sub zs = solve_connected(zstar, depth + 1);
            Sub rest = solve_component(ctx.v, ctx.d, ctx.K.set_minus(zstar),
                                       depth + 1);
            return cross(std::move(zs), std::move(rest));
        }
        return eliminate_sequence(
            ctx.K, hstar,
            [&](int, int, const VertexSet& scope) {
                return solve_component(ctx.v, ctx.d, scope, depth + 1);
            },
            [&](const VertexSet& tail_scope) {
                // Z* splits off; solve it in the re-framed context with the
                // least contactor playing the d role (its Z-side is bipartite
                // by the contactor check above).
                int h0 = hstar.front();
                Sub zs = solve_component(ctx.d, h0, zstar, depth + 1);
                Sub rest = solve_component(ctx.v, ctx.d,
                                           tail_scope.set_minus(zstar),
                                           depth + 1);
                return cross(std::move(zs), std::move(rest));
            });
    }

    // ---- combinators ---------------------------------------------------------

    // alpha(scope) = max over i of alpha(scope \ {h_1..h_{i-1}} \ N(h_i)) and
    // alpha(scope \ seq): any maximal IS either avoids seq entirely or keeps
    // its first member h_i, excluding N(h_i) and the earlier h_j.
    template <class Step, class Tail>
    Sub eliminate_sequence(const VertexSet& scope, const std::vector<int>& seq,
                           Step step, Tail tail) {
        std::vector<Sub> cands;
        VertexSet cur = scope;
        for (int i = 0; i < static_cast<int>(seq.size()); ++i) {
            int h = seq[static_cast<size_t>(i)];
            VertexSet scope_i = cur.set_minus(neighbors(g_, h));
            cands.push_back(step(i, h, scope_i));
            cur = cur.minus_vertex(h);
        }
        cands.push_back(tail(cur));
        return combine_max(std::move(cands));
    }

    // alpha(scope) = max over x in X of alpha(scope \ N(x)) and alpha(scope \ X).
    template <class Step, class Tail>
    Sub branch_on_set(const VertexSet& scope, const std::vector<int>& xs,
                      Step step, Tail tail) {
        std::vector<Sub> cands;
        for (int x : xs)
            cands.push_back(step(x, scope.set_minus(neighbors(g_, x))));
        cands.push_back(tail(scope.set_minus(VertexSet(xs))));
        return combine_max(std::move(cands));
    }

    // ---- leaves and bookkeeping ----------------------------------------------

    Sub leaf(const VertexSet& scope, const Bipartition& bip) {
        ++stats_.leaf_count;
        bump("bipartite-leaf");
        BipartiteResult r = mwis_bipartite(g_, scope, bip);
        Sub s;
        s.weight = r.weight;
        s.solution = r.solution;
        if (opt_.record_leaves) s.leaves.push_back(scope);
        return s;
    }

    // Each component of the scope must already be bipartite here;
    // a non-bipartite component certifies a class violation.
    Sub solve_bipartite_scope(const VertexSet& scope, int depth) {
        enter(depth);
        ++stats_.subproblems;
        auto [iso, rest] = split_isolated(scope);
        Sub acc = unit_sub(iso);
        for (const VertexSet& comp : connected_components(g_, rest)) {
            auto bp = bipartition(g_, comp);
            if (!bp.ok)
                throw ClassViolation(
                    "nearly-bipartite: anti-neighborhood of a C5-free component "
                    "is not bipartite",
                    shrink_to_induced_odd_cycle(g_, bp.odd_cycle));
            acc = cross(std::move(acc), leaf(comp, bp.bip));
        }
        return acc;
    }

private:
    std::pair<VertexSet, VertexSet> split_isolated(const VertexSet& scope) const {
        std::vector<int> iso, rest;
        for (int v : scope)
            (neighbors_in(g_, v, scope).empty() ? iso : rest).push_back(v);
        return {VertexSet(std::move(iso)), VertexSet(std::move(rest))};
    }

    Sub unit_sub(const VertexSet& s) {
        Sub r;
        r.weight = set_weight(g_, s);
        r.solution = s;
        if (opt_.record_leaves) r.leaves.push_back(s);
        return r;
    }

    Sub lift(int v, Sub sub) {
        sub.weight += g_.weight(v);
        sub.solution.insert(v);
        for (auto& l : sub.leaves) l.insert(v);
        return sub;
    }

    Sub cross(Sub a, Sub b) {
        Sub r;
        r.weight = a.weight + b.weight;
        r.solution = a.solution.set_union(b.solution);
        if (opt_.record_leaves) {
            r.leaves.reserve(a.leaves.size() * b.leaves.size());
            for (const auto& la : a.leaves)
                for (const auto& lb : b.leaves)
                    r.leaves.push_back(la.set_union(lb));
            dedup_leaves(r.leaves);
        }
        return r;
    }

    Sub combine_max(std::vector<Sub> cands) {
        if (cands.empty()) throw ContextViolation("combine_max: no branches");
        size_t best = 0;
        for (size_t i = 1; i < cands.size(); ++i)
            if (cands[i].weight > cands[best].weight) best = i;
        Sub r;
        r.weight = cands[best].weight;
        r.solution = cands[best].solution;
        if (opt_.record_leaves) {
            for (auto& c : cands)
                for (auto& l : c.leaves) r.leaves.push_back(std::move(l));
            dedup_leaves(r.leaves);
        }
        return r;
    }

    static void dedup_leaves(std::vector<VertexSet>& leaves) {
        std::sort(leaves.begin(), leaves.end());
        leaves.erase(std::unique(leaves.begin(), leaves.end()), leaves.end());
    }

    void sort_by_degree_desc(std::vector<int>& hs, const VertexSet& within) const {
        std::stable_sort(hs.begin(), hs.end(), [&](int a, int b) {
            int da = degree_in(g_, a, within);
            int db = degree_in(g_, b, within);
            if (da != db) return da > db;
            return a < b;
        });
    }

    void enter(int depth) {
        if (depth > stats_.max_depth) stats_.max_depth = depth;
        if (depth > opt_.depth_limit_factor * std::max(8, g_.size()))
            throw ContextViolation("recursion depth guard tripped");
    }

    void bump(const char* label) { ++stats_.branches[label]; }

    const WeightedGraph& g_;
    Options opt_;
    SolverStats stats_;
};

// Convenience wrapper.
inline SolveResult solve_mwis(const WeightedGraph& g) {
    Solver s(g);
    return s.solve();
}

}  // namespace mwis
