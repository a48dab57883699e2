#include <catch2/catch_amalgamated.hpp>

#include "mwis/dimacs.hpp"
#include "mwis/generator.hpp"

using namespace mwis;

TEST_CASE("parse_dimacs basics") {
    auto g = parse_dimacs("p edge 3 2\ne 1 2\ne 2 3\n");
    CHECK(g.size() == 3);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 2));
    CHECK(!g.adjacent(0, 2));
    for (int v = 0; v < 3; ++v) CHECK(g.weight(v) == 1);

    auto w = parse_dimacs("c comment\np edge 3 2\ne 1 2\ne 2 3\nn 2 5\n");
    CHECK(w.weight(1) == 5);
}

TEST_CASE("parse_dimacs errors") {
    CHECK_THROWS_AS(parse_dimacs("p edge 2 1\ne 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p edge 2 2\ne 1 2\ne 2 1\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p edge 2 2\ne 1 2\n"), ParseError);  // count
    CHECK_THROWS_AS(parse_dimacs("p edge 2 0\nq 1 2\n"), ParseError);  // type
    CHECK_THROWS_AS(parse_dimacs("e 1 2\n"), ParseError);  // data before p
    CHECK_THROWS_AS(parse_dimacs("p edge 2 1\ne 1 3\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p edge 1 0\nn 1 -2\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs(""), ParseError);
    try {
        parse_dimacs("p edge 2 1\ne 1 1\n");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("emit round-trips") {
    auto p3 = parse_dimacs("p edge 3 2\ne 1 2\ne 2 3\n");
    CHECK(emit_dimacs(parse_dimacs(emit_dimacs(p3))) == emit_dimacs(p3));

    auto gr = make_groetzsch({3, 1, 4, 1, 5, 9, 2, 6, 5, 3, 5});
    auto text = emit_dimacs(gr);
    auto back = parse_dimacs(text);
    CHECK(emit_dimacs(back) == text);
    CHECK(back.size() == gr.size());
    CHECK(back.edge_count() == gr.edge_count());
    for (int v = 0; v < gr.size(); ++v) CHECK(back.weight(v) == gr.weight(v));

    auto empty = WeightedGraph::from_edges(0, {});
    CHECK(emit_dimacs(empty) == "p edge 0 0\n");
    CHECK(parse_dimacs("p edge 0 0\n").size() == 0);
}

TEST_CASE("emit orders edges ascending and writes only non-unit weights") {
    auto g = WeightedGraph::from_edges(4, {{2, 3}, {0, 2}, {0, 1}}, {1, 7, 1, 1});
    CHECK(emit_dimacs(g) == "p edge 4 3\ne 1 2\ne 1 3\ne 3 4\nn 2 7\n");
}
