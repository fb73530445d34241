#pragma once

#include <optional>
#include <vector>

#include "primegraph/graph.hpp"

namespace primegraph {

// Exact isomorphism test by color-refinement-pruned backtracking; the
// witness maps vertices of g onto vertices of h. Intended for graphs up to
// ~25 vertices; larger inputs work but may be slow.
std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h);

inline bool is_isomorphic(const Graph& g, const Graph& h) {
  return find_isomorphism(g, h).has_value();
}

}  // namespace primegraph
