#include "primegraph/graph_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace primegraph {

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.order()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw GraphFormatError("graph JSON must be an object with \"n\" and \"edges\"");
  if (!j["n"].is_number_integer() || j["n"].get<long long>() < 0)
    throw GraphFormatError("\"n\" must be a nonnegative integer");
  const int n = j["n"].get<int>();
  if (!j["edges"].is_array()) throw GraphFormatError("\"edges\" must be an array");

  std::set<std::pair<int, int>> seen;
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw GraphFormatError("each edge must be a pair of integers");
    const int u = e[0].get<int>(), v = e[1].get<int>();
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw GraphFormatError("edge endpoint out of range");
    if (u >= v) throw GraphFormatError("edges must satisfy i < j");
    if (!seen.insert({u, v}).second) throw GraphFormatError("duplicate edge");
    edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphFormatError("cannot open graph file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw GraphFormatError("invalid JSON in " + path + ": " + e.what());
  }
  return graph_from_json(j);
}

std::string graph_to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.order(); ++v) {
    out << "  " << v;
    if (g.label(v)) out << " [label=\"" << v << ":" << g.label(v)->str() << "\"]";
    out << ";\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace primegraph
