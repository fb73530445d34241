#pragma once

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>

#include "primegraph/graph.hpp"

namespace primegraph {

struct GraphFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// {"n": int, "edges": [[i, j], ...]} with i < j, 0-based
nlohmann::json graph_to_json(const Graph& g);

// validates shape, index ranges, i < j, and simplicity; throws GraphFormatError
Graph graph_from_json(const nlohmann::json& j);

Graph load_graph_file(const std::string& path);

// undirected DOT, vertex tags as labels
std::string graph_to_dot(const Graph& g);

}  // namespace primegraph
