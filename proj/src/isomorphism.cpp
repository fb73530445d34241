#include "primegraph/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace primegraph {

namespace {

// Joint color refinement (1-WL): stable vertex colors comparable across the
// two graphs.
std::pair<std::vector<int>, std::vector<int>> refine_colors(const Graph& g, const Graph& h) {
  const int n = g.order();
  std::vector<int> cg(n), ch(n);
  for (int v = 0; v < n; ++v) {
    cg[v] = g.degree(v);
    ch[v] = h.degree(v);
  }
  for (int round = 0; round < n; ++round) {
    using Sig = std::pair<int, std::vector<int>>;
    std::map<Sig, int> ids;
    auto signature = [](const Graph& gr, const std::vector<int>& col, int v) {
      std::vector<int> nb;
      for (int u : gr.neighbor_list(v)) nb.push_back(col[u]);
      std::sort(nb.begin(), nb.end());
      return Sig{col[v], std::move(nb)};
    };
    std::vector<int> ng(n), nh(n);
    for (int v = 0; v < n; ++v) {
      auto s = signature(g, cg, v);
      auto [it, _] = ids.try_emplace(std::move(s), static_cast<int>(ids.size()));
      ng[v] = it->second;
    }
    for (int v = 0; v < n; ++v) {
      auto s = signature(h, ch, v);
      auto [it, _] = ids.try_emplace(std::move(s), static_cast<int>(ids.size()));
      nh[v] = it->second;
    }
    if (ng == cg && nh == ch) break;
    cg = std::move(ng);
    ch = std::move(nh);
  }
  return {cg, ch};
}

struct Backtracker {
  const Graph& g;
  const Graph& h;
  const std::vector<int>& cg;
  const std::vector<int>& ch;
  std::vector<int> mapping;       // g-vertex -> h-vertex or -1
  std::vector<char> used;         // h-vertex taken
  std::vector<int> order;         // g-vertices, most-constrained first

  bool consistent(int u, int w) const {
    if (cg[u] != ch[w]) return false;
    for (int x = 0; x < g.order(); ++x) {
      if (mapping[x] < 0) continue;
      if (g.has_edge(u, x) != h.has_edge(w, mapping[x])) return false;
    }
    return true;
  }

  bool search(size_t depth) {
    if (depth == order.size()) return true;
    const int u = order[depth];
    for (int w = 0; w < h.order(); ++w) {
      if (used[w] || !consistent(u, w)) continue;
      mapping[u] = w;
      used[w] = 1;
      if (search(depth + 1)) return true;
      mapping[u] = -1;
      used[w] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h) {
  const int n = g.order();
  if (n != h.order() || g.edge_count() != h.edge_count()) return std::nullopt;
  if (n == 0) return std::vector<int>{};

  auto [cg, ch] = refine_colors(g, h);
  {
    std::vector<int> a = cg, b = ch;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  // class sizes in h, for most-constrained-first ordering of g's vertices
  std::map<int, int> class_size;
  for (int v = 0; v < n; ++v) ++class_size[ch[v]];

  Backtracker bt{g, h, cg, ch, std::vector<int>(n, -1), std::vector<char>(n, 0), {}};
  bt.order.resize(n);
  for (int v = 0; v < n; ++v) bt.order[v] = v;
  std::sort(bt.order.begin(), bt.order.end(), [&](int a, int b) {
    if (class_size[cg[a]] != class_size[cg[b]]) return class_size[cg[a]] < class_size[cg[b]];
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });

  if (!bt.search(0)) return std::nullopt;

  for (auto [u, v] : g.edges())
    if (!h.has_edge(bt.mapping[u], bt.mapping[v])) return std::nullopt;
  return bt.mapping;
}

}  // namespace primegraph
