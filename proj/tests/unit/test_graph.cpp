#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "forestprob/family.hpp"
#include "forestprob/graph.hpp"

using namespace forestprob;

namespace {

Graph paw_graph() {
    return Graph::from_edges(4, {{0, 1}, {1, 2}, {1, 3}, {2, 3}});
}

// Glued stars built directly from the definition, without the factory's
// a <= c normalization: top center 0 with a leaves, bottom center 1 with c
// leaves, b shared glue vertices.
Graph glued_stars_raw(int a, int b, int c) {
    std::vector<std::pair<int, int>> edges;
    int next = 2;
    std::vector<int> glue;
    for (int i = 0; i < b; ++i) glue.push_back(next++);
    for (int v : glue) edges.emplace_back(0, v);
    for (int i = 0; i < a; ++i) edges.emplace_back(0, next++);
    for (int v : glue) edges.emplace_back(1, v);
    for (int i = 0; i < c; ++i) edges.emplace_back(1, next++);
    return Graph::from_edges(next, std::move(edges));
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges) edges.emplace_back(perm[u], perm[v]);
    return Graph::from_edges(g.n, std::move(edges));
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("from_edges validates endpoints, loops and duplicates") {
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), SpecError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), SpecError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), SpecError);
    CHECK_THROWS_AS(Graph::from_edges(-1, {}), SpecError);
    const Graph g = Graph::from_edges(3, {{2, 0}});
    CHECK(g.n == 3);
    CHECK(g.edges == std::vector<std::pair<int, int>>{{2, 0}});
}

TEST_CASE("degrees, isolation and connectivity") {
    const Graph paw = paw_graph();
    CHECK(paw.degrees() == std::vector<int>{1, 3, 2, 2});
    CHECK_FALSE(paw.has_isolated_vertex());
    CHECK(paw.connected());

    const Graph g = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(g.connected());
    CHECK(Graph::from_edges(3, {{0, 1}}).has_isolated_vertex());
    CHECK(Graph::from_edges(0, {}).connected());
    CHECK(Graph::from_edges(1, {}).connected());
}

TEST_CASE("parse_edge_list basics") {
    const Graph g = parse_edge_list("0 1\n1 2");
    CHECK(g.n == 3);
    CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

    const Graph paw = parse_edge_list("0 1\n1 2\n1 3\n2 3");
    CHECK(paw.n == 4);
    CHECK(paw.edges == paw_graph().edges);
}

TEST_CASE("parse_edge_list comments, blanks and header") {
    const Graph g = parse_edge_list("# path\n\nn=5\n0 1\n\n  1   2  \n");
    CHECK(g.n == 5);
    CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("parse_edge_list rejects malformed input with line numbers") {
    CHECK_THROWS_WITH_AS(parse_edge_list("0 1\n0 1"),
                         doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_WITH_AS(parse_edge_list("0 1\n1 0"),
                         doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("2 2"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 -1"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 x"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 1 2"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("n=2\n0 3"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("n=2\nn=2\n0 1"), ParseError);
    CHECK(parse_edge_list("").n == 0);  // no edges, no header: the empty graph
}

TEST_CASE("edge list round trip") {
    const Graph paw = paw_graph();
    const Graph again = parse_edge_list(emit_edge_list(paw));
    CHECK(again.n == paw.n);
    CHECK(again.edges == paw.edges);

    // Trailing isolated vertex forces the header.
    const Graph iso = Graph::from_edges(3, {{0, 1}});
    const std::string text = emit_edge_list(iso);
    CHECK(text.find("n=3") != std::string::npos);
    CHECK(parse_edge_list(text).n == 3);
}

TEST_CASE("graph6 decode of B_ and round trips") {
    const Graph g = parse_graph6("B_");
    CHECK(g.n == 3);
    CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(emit_graph6(g) == "B_");

    CHECK(emit_graph6(paw_graph()) == "Cj");
    const Graph paw = parse_graph6("Cj");
    CHECK(paw.n == 4);
    CHECK(paw.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {1, 3}, {2, 3}});

    // File contents arrive with the trailing newline still attached.
    CHECK(parse_graph6("Cj\n").edges == paw.edges);
    CHECK_THROWS_AS(parse_graph6("Cj\nCj"), ParseError);  // one graph per string

    const Graph p3 = parse_graph6(emit_graph6(parse_edge_list("0 1\n1 2")));
    CHECK(are_isomorphic(p3, parse_edge_list("0 1\n1 2")));
}

TEST_CASE("graph6 long-form header and prefix") {
    // 63 vertices uses the 4-byte header.
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < 63; ++v) edges.emplace_back(0, v);
    const Graph star = Graph::from_edges(63, edges);
    const std::string text = emit_graph6(star);
    CHECK(text.size() > 4);
    CHECK(text[0] == char(126));
    const Graph back = parse_graph6(text);
    CHECK(back.n == 63);
    CHECK(back.edge_count() == 62);

    const Graph pre = parse_graph6(">>graph6<<B_");
    CHECK(pre.n == 3);
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("C"), ParseError);      // truncated bit vector
    CHECK_THROWS_AS(parse_graph6("B__"), ParseError);    // trailing bytes
    CHECK_THROWS_AS(parse_graph6("B\x1f"), ParseError);  // byte below offset
    CHECK_THROWS_AS(parse_graph6("~~"), ParseError);     // 8-byte form unsupported
}

TEST_CASE("strip_isolated") {
    const Graph g = strip_isolated(Graph::from_edges(3, {{0, 2}}));
    CHECK(g.n == 2);
    CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}});

    const Graph paw = strip_isolated(paw_graph());
    CHECK(paw.n == 4);
    CHECK(paw.edges == paw_graph().edges);

    const Graph empty = strip_isolated(Graph::from_edges(2, {}));
    CHECK(empty.n == 0);
    CHECK(empty.edges.empty());
}

TEST_CASE("max_disjoint_edges_capped") {
    const Graph k3 = Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(max_disjoint_edges_capped(k3, 3) == 1);
    CHECK(max_disjoint_edges_capped(paw_graph(), 3) == 2);
    CHECK(max_disjoint_edges_capped(construct_family(FamilySpec::gs(1, 1, 1)), 3) == 2);

    const Graph c6 = Graph::from_edges(
        6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
    CHECK(max_disjoint_edges_capped(c6, 3) == 3);
    CHECK(max_disjoint_edges_capped(c6, 2) == 2);
    CHECK(max_disjoint_edges_capped(c6, 1) == 1);

    CHECK(max_disjoint_edges_capped(Graph::from_edges(2, {{0, 1}}), 3) == 1);
    CHECK(max_disjoint_edges_capped(Graph::from_edges(1, {}), 3) == 0);
    CHECK_THROWS_AS(max_disjoint_edges_capped(k3, 0), SpecError);
    CHECK_THROWS_AS(max_disjoint_edges_capped(k3, 4), SpecError);
}

TEST_CASE("isomorphism examples") {
    const Graph p4 = parse_edge_list("0 1\n1 2\n2 3");
    CHECK(are_isomorphic(construct_family(FamilySpec::gs(1, 1, 0)), p4));
    CHECK_FALSE(are_isomorphic(construct_family(FamilySpec::gs(8, 1, 1)),
                               construct_family(FamilySpec::gs(5, 4, 1))));
    CHECK_FALSE(are_isomorphic(p4, parse_edge_list("0 1\n1 2\n0 2")));
    CHECK_FALSE(are_isomorphic(p4, parse_edge_list("0 1\n1 2")));
}

TEST_CASE("isomorphism is reflexive and survives relabeling") {
    std::mt19937 rng(7);
    const Graph graphs[] = {paw_graph(), glued_stars_raw(2, 2, 1),
                            construct_family(FamilySpec::complete(5))};
    for (const Graph& g : graphs) {
        CHECK(are_isomorphic(g, g));
        std::vector<int> perm(g.n);
        std::iota(perm.begin(), perm.end(), 0);
        for (int round = 0; round < 5; ++round) {
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(are_isomorphic(g, relabel(g, perm)));
        }
    }
}

TEST_CASE("isomorphism guard at 12 vertices") {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < 13; ++v) edges.emplace_back(0, v);
    const Graph big = Graph::from_edges(13, edges);
    CHECK_THROWS_AS(are_isomorphic(big, big), GuardError);
}

TEST_CASE("glued stars are mirror symmetric") {
    for (int b = 1; b <= 3; ++b)
        for (int a = 0; a <= 3; ++a)
            for (int c = a; c <= 3; ++c) {
                if (2 + a + b + c > 12) continue;
                const Graph lhs = glued_stars_raw(a, b, c);
                const Graph rhs = glued_stars_raw(c, b, a);
                CHECK(are_isomorphic(lhs, rhs));
                CHECK(are_isomorphic(lhs,
                                     construct_family(FamilySpec::gs(a, b, c))));
            }
}

}  // TEST_SUITE
