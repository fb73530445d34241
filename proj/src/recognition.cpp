#include "primegraph/recognition.hpp"

#include <algorithm>
#include <set>

namespace primegraph {

std::optional<TriangleWitness> find_triangle(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    auto common = g.neighbors(u) & g.neighbors(v);
    const auto w = common.find_first();
    if (w != boost::dynamic_bitset<>::npos)
      return TriangleWitness{u, v, static_cast<int>(w)};
  }
  return std::nullopt;
}

namespace {

bool color_search(const Graph& g, const std::vector<int>& order, size_t depth,
                  std::vector<int>& color, int max_used) {
  if (depth == order.size()) return true;
  const int v = order[depth];
  bool banned[3] = {false, false, false};
  for (int u : g.neighbor_list(v))
    if (color[u] >= 0) banned[color[u]] = true;
  // new colors are introduced in increasing order, which kills permutation
  // symmetry among the three classes
  const int limit = std::min(2, max_used + 1);
  for (int c = 0; c <= limit; ++c) {
    if (banned[c]) continue;
    color[v] = c;
    if (color_search(g, order, depth + 1, color, std::max(max_used, c))) return true;
    color[v] = -1;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_three_coloring(const Graph& g) {
  const int n = g.order();
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return g.degree(a) > g.degree(b); });
  std::vector<int> color(n, -1);
  if (!color_search(g, order, 0, color, -1)) return std::nullopt;
  return color;
}

ClassificationReport prime_graph_report(const Graph& g) {
  ClassificationReport r;
  r.connected = is_connected(g);
  const Graph comp = complement(g);
  r.complement_triangle = find_triangle(comp);
  r.complement_triangle_free = !r.complement_triangle.has_value();
  r.complement_coloring = find_three_coloring(comp);
  r.complement_three_colorable = r.complement_coloring.has_value();
  r.is_prime_graph = r.complement_triangle_free && r.complement_three_colorable;
  return r;
}

namespace {

bool complement_properties_hold(const Graph& g) {
  const Graph comp = complement(g);
  return is_triangle_free(comp) && is_three_colorable(comp);
}

EdgeWitnessResult edge_minimality(const Graph& g, bool removal_may_disconnect) {
  ClassificationReport base = prime_graph_report(g);
  if (!base.connected || g.order() <= 1 || !base.is_prime_graph) return {false, std::nullopt};
  for (auto [u, v] : g.edges()) {
    const Graph reduced = remove_edge(g, u, v);
    if (removal_may_disconnect && !is_connected(reduced)) continue;
    if (complement_properties_hold(reduced)) return {false, std::make_pair(u, v)};
  }
  return {true, std::nullopt};
}

}  // namespace

EdgeWitnessResult is_minimal_prime(const Graph& g) { return edge_minimality(g, false); }

EdgeWitnessResult is_minimally_connected_prime(const Graph& g) {
  return edge_minimality(g, true);
}

ClassificationReport classify(const Graph& g) {
  ClassificationReport r = prime_graph_report(g);
  auto minimal = is_minimal_prime(g);
  r.is_minimal_prime = minimal.value;
  r.minimal_prime_failing_edge = minimal.witness;
  auto mc = is_minimally_connected_prime(g);
  r.is_minimally_connected_prime = mc.value;
  r.minimally_connected_failing_edge = mc.witness;
  return r;
}

namespace {

// maximal cliques of the induced subgraph on `candidates`, Bron-Kerbosch
// with pivoting
void bron_kerbosch(const Graph& g, boost::dynamic_bitset<> r, boost::dynamic_bitset<> p,
                   boost::dynamic_bitset<> x, std::vector<boost::dynamic_bitset<>>& out) {
  if (p.none() && x.none()) {
    out.push_back(std::move(r));
    return;
  }
  auto pux = p | x;
  size_t pivot = pux.find_first();
  size_t best = (p & ~g.neighbors(static_cast<int>(pivot))).count();
  for (auto u = pux.find_next(pivot); u != boost::dynamic_bitset<>::npos;
       u = pux.find_next(u)) {
    const size_t c = (p & ~g.neighbors(static_cast<int>(u))).count();
    if (c < best) {
      best = c;
      pivot = u;
    }
  }
  auto ext = p & ~g.neighbors(static_cast<int>(pivot));
  for (auto v = ext.find_first(); v != boost::dynamic_bitset<>::npos; v = ext.find_next(v)) {
    auto rv = r;
    rv.set(v);
    bron_kerbosch(g, std::move(rv), p & g.neighbors(static_cast<int>(v)),
                  x & g.neighbors(static_cast<int>(v)), out);
    p.reset(v);
    x.set(v);
  }
}

}  // namespace

nlohmann::json KMinusWitness::to_json() const {
  return {{"vertex_set", vertex_set}, {"missing_edge", {missing_edge.first, missing_edge.second}}};
}

std::vector<KMinusWitness> maximal_kminus_subgraphs(const Graph& g, int min_size) {
  const int n = g.order();
  std::vector<KMinusWitness> out;
  // every K^- set is {u,v} + a clique in the common neighborhood of its
  // unique missing pair (u,v); it is maximal exactly when that clique is
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) continue;
      auto common = g.neighbors(u) & g.neighbors(v);
      if (static_cast<int>(common.count()) + 2 < min_size) continue;
      std::vector<boost::dynamic_bitset<>> cliques;
      boost::dynamic_bitset<> empty(n);
      bron_kerbosch(g, empty, common, empty, cliques);
      for (auto& t : cliques) {
        if (static_cast<int>(t.count()) + 2 < min_size) continue;
        KMinusWitness w;
        w.missing_edge = {u, v};
        w.vertex_set.push_back(u);
        w.vertex_set.push_back(v);
        for (auto b = t.find_first(); b != boost::dynamic_bitset<>::npos; b = t.find_next(b))
          w.vertex_set.push_back(static_cast<int>(b));
        std::sort(w.vertex_set.begin(), w.vertex_set.end());
        out.push_back(std::move(w));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const KMinusWitness& a, const KMinusWitness& b) {
    return a.vertex_set != b.vertex_set ? a.vertex_set < b.vertex_set
                                        : a.missing_edge < b.missing_edge;
  });
  return out;
}

bool is_in_r_tilde(const Graph& g) {
  if (g.order() < 5) return false;
  bool adjacent_pair = false;
  for (auto [u, v] : g.edges())
    if (g.degree(u) == 2 && g.degree(v) == 2) {
      adjacent_pair = true;
      break;
    }
  if (!adjacent_pair) return false;
  return maximal_kminus_subgraphs(g, 4).size() <= 1;
}

namespace {

nlohmann::json opt_triangle(const std::optional<TriangleWitness>& t) {
  if (!t) return nullptr;
  return nlohmann::json::array({t->a, t->b, t->c});
}

nlohmann::json opt_edge(const std::optional<std::pair<int, int>>& e) {
  if (!e) return nullptr;
  return nlohmann::json::array({e->first, e->second});
}

}  // namespace

nlohmann::json ClassificationReport::to_json() const {
  return {
      {"connected", connected},
      {"complement_triangle_free", complement_triangle_free},
      {"complement_triangle", opt_triangle(complement_triangle)},
      {"complement_three_colorable", complement_three_colorable},
      {"complement_coloring",
       complement_coloring ? nlohmann::json(*complement_coloring) : nlohmann::json(nullptr)},
      {"is_prime_graph", is_prime_graph},
      {"is_minimal_prime", is_minimal_prime},
      {"minimal_prime_failing_edge", opt_edge(minimal_prime_failing_edge)},
      {"is_minimally_connected_prime", is_minimally_connected_prime},
      {"minimally_connected_failing_edge", opt_edge(minimally_connected_failing_edge)},
  };
}

}  // namespace primegraph
