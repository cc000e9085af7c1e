#include "turan/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "turan/errors.hpp"

namespace turan {

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || u >= n || v < 0 || v >= n) return false;
  const auto& a = adj[u];
  return std::binary_search(a.begin(), a.end(), v);
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& a : adj) d = std::max(d, static_cast<int>(a.size()));
  return d;
}

int Graph::min_degree() const {
  if (n == 0) return 0;
  int d = static_cast<int>(adj[0].size());
  for (const auto& a : adj) d = std::min(d, static_cast<int>(a.size()));
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<size_t>(edge_count));
  for (int u = 0; u < n; ++u)
    for (int v : adj[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw InputError("vertex count must be nonnegative");
  std::set<std::pair<int, int>> dedup;
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw InputError("edge endpoint out of range: (" + std::to_string(u) + "," +
                       std::to_string(v) + ") with n=" + std::to_string(n));
    if (u == v) throw InputError("loop edge forbidden: (" + std::to_string(u) + "," +
                                 std::to_string(v) + ")");
    dedup.emplace(std::min(u, v), std::max(u, v));
  }
  Graph g;
  g.n = n;
  g.adj.assign(static_cast<size_t>(n), {});
  for (auto [u, v] : dedup) {
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& a : g.adj) std::sort(a.begin(), a.end());
  g.edge_count = static_cast<long long>(dedup.size());
  return g;
}

long long codegree(const Graph& g, int u, int v) {
  if (u < 0 || u >= g.n || v < 0 || v >= g.n) throw InputError("codegree: invalid vertex id");
  if (u == v) return g.degree(u);
  const auto& a = g.adj[u];
  const auto& b = g.adj[v];
  long long count = 0;
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) ++i;
    else if (a[i] > b[j]) ++j;
    else { ++count; ++i; ++j; }
  }
  return count;
}

Bipartition bipartition(const Graph& g) {
  Bipartition result;
  result.color.assign(static_cast<size_t>(g.n), -1);
  std::vector<int> parent(static_cast<size_t>(g.n), -1);
  for (int root = 0; root < g.n; ++root) {
    if (result.color[root] != -1) continue;
    result.color[root] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : g.adj[u]) {
        if (result.color[v] == -1) {
          result.color[v] = 1 - result.color[u];
          parent[v] = u;
          queue.push_back(v);
        } else if (result.color[v] == result.color[u]) {
          // Same-color edge closes an odd walk: u up to the root, down to v, then the edge vu.
          // Equal colors mean equal depth parity, so depth(u)+depth(v)+1 is odd.
          std::vector<int>& walk = result.odd_closed_walk;
          for (int x = u; x != -1; x = parent[x]) walk.push_back(x);
          std::vector<int> down;
          for (int x = v; x != -1; x = parent[x]) down.push_back(x);
          for (auto it = down.rbegin() + 1; it != down.rend(); ++it) walk.push_back(*it);
          walk.push_back(u);
          result.bipartite = false;
          result.color.clear();
          return result;
        }
      }
    }
  }
  result.bipartite = true;
  return result;
}

Graph induced_subgraph(const Graph& g, std::vector<int> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::vector<int> new_id(static_cast<size_t>(g.n), -1);
  for (size_t i = 0; i < vertices.size(); ++i) {
    int v = vertices[i];
    if (v < 0 || v >= g.n) throw InputError("induced_subgraph: invalid vertex id");
    new_id[v] = static_cast<int>(i);
  }
  Graph sub;
  sub.n = static_cast<int>(vertices.size());
  sub.adj.assign(vertices.size(), {});
  long long half_degrees = 0;
  for (size_t i = 0; i < vertices.size(); ++i) {
    for (int w : g.adj[vertices[i]]) {
      if (new_id[w] != -1) sub.adj[i].push_back(new_id[w]);
    }
    half_degrees += static_cast<long long>(sub.adj[i].size());
  }
  sub.edge_count = half_degrees / 2;
  return sub;
}

Graph remove_edges(const Graph& g, const std::vector<std::pair<int, int>>& edges) {
  std::set<std::pair<int, int>> gone;
  for (auto [u, v] : edges) gone.emplace(std::min(u, v), std::max(u, v));
  std::vector<std::pair<int, int>> kept;
  for (auto [u, v] : g.edges())
    if (!gone.count({u, v})) kept.emplace_back(u, v);
  return from_edge_list(g.n, kept);
}

}  // namespace turan
