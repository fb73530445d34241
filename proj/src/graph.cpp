#include "primegraph/graph.hpp"

#include <deque>
#include <stdexcept>

namespace primegraph {

BridgeParams::BridgeParams(int m_, int n_) : m(m_), n(n_) {
  if (n < 1) throw std::invalid_argument("bridge graph requires n >= 1");
  if (m < n) throw std::invalid_argument("bridge graph requires m >= n");
}

std::string VertexLabel::str() const {
  switch (tag) {
    case Tag::BridgeVertex: return "bridge";
    case Tag::CliqueMember: return "clique";
    case Tag::Apex: return "apex";
    case Tag::CycleVertex: return "cycle";
    case Tag::DuplicateOf: return "dup(" + std::to_string(duplicate_of) + ")";
  }
  return "";
}

Graph::Graph(int n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  adj_.assign(n, boost::dynamic_bitset<>(n));
  labels_.assign(n, std::nullopt);
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (auto [u, v] : edges) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loop edge");
    adj_[u].set(v);
    adj_[v].set(u);
  }
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= order()) throw std::out_of_range("vertex index out of range");
}

long long Graph::edge_count() const {
  long long total = 0;
  for (const auto& row : adj_) total += static_cast<long long>(row.count());
  return total / 2;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return adj_[u].test(v);
}

int Graph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v].count());
}

const boost::dynamic_bitset<>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

std::vector<int> Graph::neighbor_list(int v) const {
  check_vertex(v);
  std::vector<int> out;
  for (auto u = adj_[v].find_first(); u != boost::dynamic_bitset<>::npos;
       u = adj_[v].find_next(u))
    out.push_back(static_cast<int>(u));
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < order(); ++u)
    for (auto v = adj_[u].find_next(u); v != boost::dynamic_bitset<>::npos;
         v = adj_[u].find_next(v))
      out.emplace_back(u, static_cast<int>(v));
  return out;
}

int Graph::distance(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return 0;
  std::vector<int> dist(order(), -1);
  dist[u] = 0;
  std::deque<int> queue{u};
  while (!queue.empty()) {
    int w = queue.front();
    queue.pop_front();
    for (auto x = adj_[w].find_first(); x != boost::dynamic_bitset<>::npos;
         x = adj_[w].find_next(x)) {
      if (dist[x] >= 0) continue;
      dist[x] = dist[w] + 1;
      if (static_cast<int>(x) == v) return dist[x];
      queue.push_back(static_cast<int>(x));
    }
  }
  return -1;
}

GraphBuilder::GraphBuilder(int n) : g_(n) {}

void GraphBuilder::add_edge(int u, int v) {
  g_.check_vertex(u);
  g_.check_vertex(v);
  if (u == v) throw std::invalid_argument("loop edge");
  g_.adj_[u].set(v);
  g_.adj_[v].set(u);
}

void GraphBuilder::set_label(int v, VertexLabel label) {
  g_.check_vertex(v);
  g_.labels_[v] = label;
}

Graph GraphBuilder::build() && { return std::move(g_); }

Graph complete_graph(int k) {
  if (k < 1) throw std::invalid_argument("complete graph requires k >= 1");
  GraphBuilder b(k);
  for (int u = 0; u < k; ++u) {
    b.set_label(u, {VertexLabel::Tag::CliqueMember});
    for (int v = u + 1; v < k; ++v) b.add_edge(u, v);
  }
  return std::move(b).build();
}

Graph bridge_graph(const BridgeParams& p) {
  const int total = p.m + p.n;
  GraphBuilder b(total);
  for (int u = 0; u < p.m; ++u)
    for (int v = u + 1; v < p.m; ++v) b.add_edge(u, v);
  for (int u = p.m; u < total; ++u)
    for (int v = u + 1; v < total; ++v) b.add_edge(u, v);
  b.add_edge(p.m - 1, p.m);
  for (int u = 0; u < total; ++u) b.set_label(u, {VertexLabel::Tag::CliqueMember});
  b.set_label(p.m - 1, {VertexLabel::Tag::BridgeVertex});
  b.set_label(p.m, {VertexLabel::Tag::BridgeVertex});
  return std::move(b).build();
}

Graph suspension_graph(const BridgeParams& p) {
  if (p.m + p.n < 3)
    throw std::invalid_argument("suspension graph requires m+n >= 3 (apex would be isolated)");
  const Graph base = bridge_graph(p);
  const int apex = base.order();
  GraphBuilder b(apex + 1);
  for (auto [u, v] : base.edges()) b.add_edge(u, v);
  for (int u = 0; u < apex; ++u) {
    b.set_label(u, *base.label(u));
    if (u != p.m - 1 && u != p.m) b.add_edge(u, apex);
  }
  b.set_label(apex, {VertexLabel::Tag::Apex});
  return std::move(b).build();
}

Graph cycle5() {
  GraphBuilder b(5);
  for (int u = 0; u < 5; ++u) {
    b.add_edge(u, (u + 1) % 5);
    b.set_label(u, {VertexLabel::Tag::CycleVertex});
  }
  return std::move(b).build();
}

Graph duplicate_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw std::out_of_range("vertex index out of range");
  const int u = g.order();
  GraphBuilder b(u + 1);
  for (auto [a, c] : g.edges()) b.add_edge(a, c);
  for (int x = 0; x < u; ++x) {
    if (g.label(x)) b.set_label(x, *g.label(x));
    if (g.has_edge(x, v)) b.add_edge(u, x);
  }
  b.add_edge(u, v);
  b.set_label(u, {VertexLabel::Tag::DuplicateOf, v});
  return std::move(b).build();
}

Graph reseminant_tilde(int n) {
  if (n < 0) throw std::invalid_argument("reseminant index must be nonnegative");
  Graph g = cycle5();
  for (int i = 0; i < n; ++i) g = duplicate_vertex(g, 0);
  return g;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    if (g.label(u)) b.set_label(u, *g.label(u));
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) b.add_edge(u, v);
  }
  return std::move(b).build();
}

Graph remove_edge(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v)) throw std::invalid_argument("edge not present");
  GraphBuilder b(g.order());
  for (auto [a, c] : g.edges())
    if (!((a == u && c == v) || (a == v && c == u))) b.add_edge(a, c);
  for (int x = 0; x < g.order(); ++x)
    if (g.label(x)) b.set_label(x, *g.label(x));
  return std::move(b).build();
}

IntMatrix adjacency_matrix(const Graph& g) {
  const int n = g.order();
  IntMatrix a(n, n);
  for (auto [u, v] : g.edges()) {
    a.at(u, v) = 1;
    a.at(v, u) = 1;
  }
  return a;
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int visited = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : g.neighbor_list(u)) {
      if (seen[v]) continue;
      seen[v] = 1;
      ++visited;
      queue.push_back(v);
    }
  }
  return visited == n;
}

}  // namespace primegraph
