#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <utility>
#include <vector>

#include "primegraph/graph.hpp"

namespace primegraph {

struct TriangleWitness {
  int a, b, c;
  bool operator==(const TriangleWitness&) const = default;
};

// nullopt means triangle-free
std::optional<TriangleWitness> find_triangle(const Graph& g);
inline bool is_triangle_free(const Graph& g) { return !find_triangle(g).has_value(); }

// proper coloring with colors {0,1,2}, exact backtracking; nullopt when none
std::optional<std::vector<int>> find_three_coloring(const Graph& g);
inline bool is_three_colorable(const Graph& g) { return find_three_coloring(g).has_value(); }

// A graph is the prime graph of a solvable group iff its complement is
// triangle-free and 3-colorable. Connectivity is reported separately; the
// minimal / minimally-connected predicates require it (and order > 1).
struct ClassificationReport {
  bool connected = false;
  bool complement_triangle_free = false;
  std::optional<TriangleWitness> complement_triangle;  // witness when not triangle-free
  bool complement_three_colorable = false;
  std::optional<std::vector<int>> complement_coloring;  // witness when 3-colorable
  bool is_prime_graph = false;
  bool is_minimal_prime = false;
  std::optional<std::pair<int, int>> minimal_prime_failing_edge;
  bool is_minimally_connected_prime = false;
  std::optional<std::pair<int, int>> minimally_connected_failing_edge;

  nlohmann::json to_json() const;
};

// connectivity + complement flags + is_prime_graph only
ClassificationReport prime_graph_report(const Graph& g);

// everything, including the per-edge minimality predicates
ClassificationReport classify(const Graph& g);

struct EdgeWitnessResult {
  bool value = false;
  // on false: an edge whose removal defeats the predicate
  std::optional<std::pair<int, int>> witness;
};

// true iff g is a connected prime graph of order > 1 and removing any edge
// leaves a graph whose complement gains a triangle or loses 3-colorability
EdgeWitnessResult is_minimal_prime(const Graph& g);

// true iff g is a connected prime graph of order > 1 and removing any edge
// disconnects the graph or destroys a complement property
EdgeWitnessResult is_minimally_connected_prime(const Graph& g);

struct KMinusWitness {
  std::vector<int> vertex_set;       // sorted
  std::pair<int, int> missing_edge;  // the unique non-edge inside vertex_set

  nlohmann::json to_json() const;
};

// All maximal K^-_s induced subgraphs with s >= min_size: one missing edge
// inside, not extensible by any outside vertex.
std::vector<KMinusWitness> maximal_kminus_subgraphs(const Graph& g, int min_size = 4);

// Structural membership test for the repeatedly-duplicate-one-vertex family:
// order >= 5, two adjacent degree-2 vertices (or C_5 itself), and at most one
// maximal K^-_{>=4} subgraph. Only meaningful for graphs built from C_5 by
// vertex duplications.
bool is_in_r_tilde(const Graph& g);

}  // namespace primegraph
