#pragma once

// Test-only oracles, deliberately independent of the library's algorithms:
// a Leibniz-expansion determinant, and a from-scratch re-implementation of
// the recognition predicates working on plain edge lists.

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "primegraph/graph.hpp"
#include "primegraph/matrix.hpp"

namespace oracle {

using primegraph::BigInt;
using primegraph::Graph;
using primegraph::IntMatrix;

// sum over all permutations; fine up to ~8x8
inline BigInt leibniz_det(const IntMatrix& m) {
  const int n = m.rows();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  BigInt total(0);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    BigInt term(inversions % 2 == 0 ? 1 : -1);
    for (int i = 0; i < n; ++i) term *= m.at(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

struct EdgeListGraph {
  int n = 0;
  std::set<std::pair<int, int>> edges;  // u < v

  static EdgeListGraph of(const Graph& g) {
    EdgeListGraph e;
    e.n = g.order();
    for (auto [u, v] : g.edges()) e.edges.insert({u, v});
    return e;
  }

  bool has(int u, int v) const {
    return edges.count({std::min(u, v), std::max(u, v)}) > 0;
  }

  EdgeListGraph without(std::pair<int, int> e) const {
    EdgeListGraph r = *this;
    r.edges.erase(e);
    return r;
  }

  EdgeListGraph complement() const {
    EdgeListGraph r;
    r.n = n;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!has(u, v)) r.edges.insert({u, v});
    return r;
  }
};

inline bool connected(const EdgeListGraph& g) {
  if (g.n <= 1) return true;
  std::vector<char> seen(g.n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < g.n; ++v) {
      if (!seen[v] && g.has(u, v)) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count == g.n;
}

inline bool triangle_free(const EdgeListGraph& g) {
  for (int a = 0; a < g.n; ++a)
    for (int b = a + 1; b < g.n; ++b)
      for (int c = b + 1; c < g.n; ++c)
        if (g.has(a, b) && g.has(b, c) && g.has(a, c)) return false;
  return true;
}

inline bool color3_rec(const EdgeListGraph& g, std::vector<int>& color, int v) {
  if (v == g.n) return true;
  for (int c = 0; c < 3; ++c) {
    bool ok = true;
    for (int u = 0; u < v && ok; ++u)
      if (color[u] == c && g.has(u, v)) ok = false;
    if (!ok) continue;
    color[v] = c;
    if (color3_rec(g, color, v + 1)) return true;
  }
  color[v] = -1;
  return false;
}

inline bool three_colorable(const EdgeListGraph& g) {
  std::vector<int> color(g.n, -1);
  return color3_rec(g, color, 0);
}

inline bool prime(const EdgeListGraph& g) {
  const EdgeListGraph c = g.complement();
  return triangle_free(c) && three_colorable(c);
}

inline bool minimal_prime(const EdgeListGraph& g) {
  if (!connected(g) || g.n <= 1 || !prime(g)) return false;
  for (const auto& e : g.edges)
    if (prime(g.without(e))) return false;
  return true;
}

inline bool minimally_connected_prime(const EdgeListGraph& g) {
  if (!connected(g) || g.n <= 1 || !prime(g)) return false;
  for (const auto& e : g.edges) {
    const EdgeListGraph r = g.without(e);
    if (connected(r) && prime(r)) return false;
  }
  return true;
}

}  // namespace oracle
