#include <doctest.h>

#include <sstream>

#include "wienerdegen/constructions.hpp"
#include "wienerdegen/graph.hpp"

using wdegen::Graph;

TEST_CASE("from_edge_list basics") {
  const Graph g = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(g.order() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK(g.degree(1) == 2);
  CHECK(g.neighbors(1) == std::vector<int>{0, 2});
}

TEST_CASE("from_edge_list collapses duplicates and rejects bad input") {
  const Graph g = Graph::from_edge_list(3, {{0, 1}, {1, 0}, {0, 1}});
  CHECK(g.edge_count() == 1);
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{-1, 2}}), std::invalid_argument);
}

TEST_CASE("edges_of is sorted with u < v") {
  const Graph g = Graph::from_edge_list(4, {{3, 2}, {1, 0}, {2, 0}});
  const std::vector<std::pair<int, int>> expected = {{0, 1}, {0, 2}, {2, 3}};
  CHECK(wdegen::edges_of(g) == expected);
}

TEST_CASE("without_vertex") {
  const Graph p4 = wdegen::path_graph(4);
  const Graph h = p4.without_vertex(0);
  CHECK(h.order() == 3);
  CHECK(h.edge_count() == 2);
  CHECK(h.is_connected());
  const Graph mid = p4.without_vertex(1);
  CHECK_FALSE(mid.is_connected());
}

TEST_CASE("is_connected") {
  CHECK(wdegen::complete_graph(1).is_connected());
  CHECK(wdegen::path_graph(6).is_connected());
  CHECK_FALSE(wdegen::empty_graph(2).is_connected());
  CHECK_FALSE(Graph::from_edge_list(4, {{0, 1}, {2, 3}}).is_connected());
  // Empty graph on zero vertices is trivially connected.
  CHECK(wdegen::empty_graph(0).is_connected());
}

TEST_CASE("relabeled maps v to perm[v]") {
  const Graph g = Graph::from_edge_list(3, {{0, 1}});
  const std::vector<int> perm = {2, 0, 1};
  const Graph h = wdegen::relabeled(g, perm);
  CHECK(h.has_edge(2, 0));
  CHECK_FALSE(h.has_edge(0, 1));
  CHECK_THROWS_AS(wdegen::relabeled(g, std::vector<int>{0, 1}), std::invalid_argument);
}

TEST_CASE("label-sensitive equality") {
  const Graph a = Graph::from_edge_list(3, {{0, 1}});
  const Graph b = Graph::from_edge_list(3, {{0, 1}});
  const Graph c = Graph::from_edge_list(3, {{1, 2}});
  CHECK(a == b);
  CHECK_FALSE(a == c);
}

TEST_CASE("edge-list round trip") {
  const Graph g = wdegen::power_of_path(7, 3);
  std::stringstream s;
  wdegen::write_edge_list(g, s);
  const Graph back = wdegen::read_edge_list(s);
  CHECK(back == g);
}

TEST_CASE("read_edge_list rejects malformed input") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return wdegen::read_edge_list(in);
  };
  CHECK_THROWS_AS(parse(""), wdegen::GraphFormatError);
  CHECK_THROWS_AS(parse("nonsense"), wdegen::GraphFormatError);
  CHECK_THROWS_AS(parse("3 1\n0"), wdegen::GraphFormatError);
  CHECK_THROWS_AS(parse("3 1\n0 3"), wdegen::GraphFormatError);
  CHECK_THROWS_AS(parse("3 1\n1 1"), wdegen::GraphFormatError);
  CHECK_THROWS_AS(parse("-2 0"), wdegen::GraphFormatError);
  CHECK(parse("1 0").order() == 1);
}

TEST_CASE("graph6 known encodings") {
  // 5 vertices, edges {0,2},{0,4},{1,3},{3,4}: column-major upper triangle
  // bits 0 1010 0100 10, packed 6 at a time -> "DQc".
  const Graph g = Graph::from_edge_list(5, {{0, 2}, {0, 4}, {1, 3}, {3, 4}});
  CHECK(wdegen::to_graph6(g) == "DQc");
  CHECK(wdegen::from_graph6("DQc") == g);
  CHECK(wdegen::to_graph6(wdegen::complete_graph(4)) == "C~");
  CHECK(wdegen::to_graph6(wdegen::empty_graph(1)) == "@");
  CHECK(wdegen::from_graph6("C~") == wdegen::complete_graph(4));
}

TEST_CASE("graph6 round trip across the header boundary") {
  for (int n : {1, 2, 30, 62, 63, 70}) {
    const Graph g = wdegen::power_of_path(n, 2);
    CHECK(wdegen::from_graph6(wdegen::to_graph6(g)) == g);
  }
}

TEST_CASE("graph6 rejects malformed strings") {
  CHECK_THROWS_AS(wdegen::from_graph6(""), wdegen::GraphFormatError);
  CHECK_THROWS_AS(wdegen::from_graph6("D"), wdegen::GraphFormatError);      // truncated body
  CHECK_THROWS_AS(wdegen::from_graph6("DQcX"), wdegen::GraphFormatError);   // overlong body
  CHECK_THROWS_AS(wdegen::from_graph6("D\x1f##"), wdegen::GraphFormatError);  // bad byte
  // K_2 encodes as "A_"; "A" alone has no body; "A@" sets a padding bit.
  CHECK_THROWS_AS(wdegen::from_graph6("A"), wdegen::GraphFormatError);
  CHECK(wdegen::from_graph6("A_").edge_count() == 1);
  CHECK_THROWS_AS(wdegen::from_graph6("A@"), wdegen::GraphFormatError);
}
