#include <doctest.h>

#include "oracle_helpers.hpp"
#include "primegraph/graph.hpp"
#include "primegraph/graph_io.hpp"
#include "primegraph/isomorphism.hpp"
#include "primegraph/linalg.hpp"

using namespace primegraph;

TEST_CASE("complete graphs") {
  CHECK(complete_graph(1).order() == 1);
  CHECK(complete_graph(1).edge_count() == 0);
  CHECK(complete_graph(4).edge_count() == 6);
  CHECK(det_bareiss(adjacency_matrix(complete_graph(5))) == BigInt(4));
  CHECK_THROWS_AS(complete_graph(0), std::invalid_argument);
}

TEST_CASE("bridge graph layout and edge counts") {
  const Graph b = bridge_graph({4, 3});
  CHECK(b.order() == 7);
  CHECK(b.edge_count() == 6 + 3 + 1);
  CHECK(b.has_edge(3, 4));  // the bridge
  CHECK_FALSE(b.has_edge(2, 4));

  // the lone off-block entry sits at (m-1, m)
  const IntMatrix a = adjacency_matrix(b);
  for (int i = 0; i < 4; ++i)
    for (int j = 4; j < 7; ++j)
      CHECK(a.at(i, j) == ((i == 3 && j == 4) ? 1 : 0));

  CHECK(bridge_graph({1, 1}) == complete_graph(2));
  CHECK(bridge_graph({3, 2}).edge_count() == 5);
  CHECK_THROWS_AS(bridge_graph({2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(bridge_graph({1, 0}), std::invalid_argument);

  for (int m = 2; m <= 8; ++m)
    CHECK(bridge_graph({m, m - 1}).edge_count() == m * m - 2 * m + 2);
}

TEST_CASE("bridge admissibility flag") {
  CHECK(BridgeParams(4, 3).admissible_minimally_connected());
  CHECK(BridgeParams(2, 2).admissible_minimally_connected());
  CHECK(BridgeParams(2, 1).admissible_minimally_connected());
  CHECK(BridgeParams(1, 1).admissible_minimally_connected());
  CHECK_FALSE(BridgeParams(3, 1).admissible_minimally_connected());
  CHECK_FALSE(BridgeParams(7, 1).admissible_minimally_connected());
}

TEST_CASE("suspension graph") {
  const Graph s = suspension_graph({4, 3});
  CHECK(s.order() == 8);
  const int apex = 7;
  CHECK(s.degree(apex) == 4 + 3 - 2);
  CHECK_FALSE(s.has_edge(apex, 3));
  CHECK_FALSE(s.has_edge(apex, 4));
  CHECK(s.has_edge(3, 4));  // keeps the bridge
  CHECK(s.label(apex)->tag == VertexLabel::Tag::Apex);

  CHECK(suspension_graph({3, 2}).degree(5) == 3);
  CHECK(suspension_graph({2, 2}) == cycle5());  // same labeling, not just isomorphic
  CHECK_THROWS_AS(suspension_graph({1, 1}), std::invalid_argument);
}

TEST_CASE("cycle5") {
  const Graph c = cycle5();
  CHECK(c.order() == 5);
  CHECK(c.edge_count() == 5);
  for (int v = 0; v < 5; ++v) CHECK(c.degree(v) == 2);
  // independent oracle for the determinant
  CHECK(oracle::leibniz_det(adjacency_matrix(c)) == BigInt(2));
  CHECK(det_bareiss(adjacency_matrix(c)) == BigInt(2));
}

TEST_CASE("duplicate_vertex semantics") {
  const Graph c = cycle5();
  const Graph d = duplicate_vertex(c, 0);
  CHECK(d.order() == 6);
  CHECK(d.degree(5) == c.degree(0) + 1);
  CHECK(d.has_edge(5, 0));
  for (int x = 0; x < 5; ++x)
    if (x != 0) CHECK(d.has_edge(5, x) == c.has_edge(x, 0));
  CHECK(d.label(5)->tag == VertexLabel::Tag::DuplicateOf);
  CHECK(d.label(5)->duplicate_of == 0);

  CHECK(duplicate_vertex(complete_graph(1), 0) == complete_graph(2));
  CHECK_THROWS_AS(duplicate_vertex(c, 5), std::out_of_range);
}

TEST_CASE("duplicating any cycle vertex lands on the unique 6-vertex member") {
  for (int v = 0; v < 5; ++v)
    CHECK(is_isomorphic(duplicate_vertex(cycle5(), v), reseminant_tilde(1)));
}

TEST_CASE("reseminant family") {
  CHECK(reseminant_tilde(0) == cycle5());
  CHECK(reseminant_tilde(1).order() == 6);
  CHECK(reseminant_tilde(4).order() == 9);
  for (int n = 0; n <= 8; ++n) {
    const Graph g = reseminant_tilde(n);
    CHECK(g.edge_count() == 2 + (n + 2) * (n + 3) / 2);
    if (n >= 1) {
      int deg2 = 0;
      for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 2) ++deg2;
      CHECK(deg2 == 2);
      CHECK(g.has_edge(2, 3));
      CHECK(g.degree(2) == 2);
      CHECK(g.degree(3) == 2);
    }
  }
  CHECK_THROWS_AS(reseminant_tilde(-1), std::invalid_argument);
}

TEST_CASE("complement") {
  CHECK(complement(complete_graph(4)).edge_count() == 0);
  const Graph b22 = bridge_graph({2, 2});
  // A(complement) + A(g) = A(K_n) entrywise
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= m; ++n) {
      const Graph g = bridge_graph({m, n});
      const IntMatrix sum = adjacency_matrix(complement(g)) + adjacency_matrix(g);
      CHECK(sum == adjacency_matrix(complete_graph(m + n)));
      CHECK(complement(complement(g)) == g);
    }
  // self-complementary instances
  CHECK(complement(b22).edge_count() == b22.edge_count());
}

TEST_CASE("distance and connectivity") {
  const Graph b = bridge_graph({4, 3});
  CHECK(b.distance(0, 6) == 3);
  CHECK(b.distance(3, 4) == 1);
  CHECK(is_connected(b));
  CHECK_FALSE(is_connected(complement(complete_graph(3))));
  // reseminant graphs have diameter 2
  for (int n = 1; n <= 6; ++n) {
    const Graph g = reseminant_tilde(n);
    int diameter = 0;
    for (int u = 0; u < g.order(); ++u)
      for (int v = u + 1; v < g.order(); ++v) diameter = std::max(diameter, g.distance(u, v));
    CHECK(diameter == 2);
  }
}

TEST_CASE("adjacency matrix basics") {
  CHECK(adjacency_matrix(Graph(3)) == IntMatrix(3, 3));
  for (int n = 0; n <= 6; ++n) {
    const Graph g = reseminant_tilde(n);
    const IntMatrix a = adjacency_matrix(g);
    CHECK(a.trace() == BigInt(0));
    CHECK(a.is_symmetric());
  }
}

TEST_CASE("graph JSON round trip and validation") {
  const Graph g = suspension_graph({3, 2});
  const Graph back = graph_from_json(graph_to_json(g));
  CHECK(back == g);

  CHECK_THROWS_AS(graph_from_json({{"n", 2}}), GraphFormatError);
  CHECK_THROWS_AS(graph_from_json({{"n", -1}, {"edges", nlohmann::json::array()}}),
                  GraphFormatError);
  CHECK_THROWS_AS(graph_from_json({{"n", 3}, {"edges", {{0, 0}}}}), GraphFormatError);
  CHECK_THROWS_AS(graph_from_json({{"n", 3}, {"edges", {{1, 0}}}}), GraphFormatError);
  CHECK_THROWS_AS(graph_from_json({{"n", 3}, {"edges", {{0, 3}}}}), GraphFormatError);
  CHECK_THROWS_AS(graph_from_json({{"n", 3}, {"edges", {{0, 1}, {0, 1}}}}), GraphFormatError);
}

TEST_CASE("DOT output") {
  const std::string dot = graph_to_dot(cycle5());
  CHECK(dot ==
        "graph G {\n"
        "  0 [label=\"0:cycle\"];\n"
        "  1 [label=\"1:cycle\"];\n"
        "  2 [label=\"2:cycle\"];\n"
        "  3 [label=\"3:cycle\"];\n"
        "  4 [label=\"4:cycle\"];\n"
        "  0 -- 1;\n"
        "  0 -- 4;\n"
        "  1 -- 2;\n"
        "  2 -- 3;\n"
        "  3 -- 4;\n"
        "}\n");
}
