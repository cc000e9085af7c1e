#pragma once

#include <utility>
#include <vector>

namespace turan {

// Simple undirected graph on dense ids 0..n-1 with sorted adjacency lists.
struct Graph {
  int n = 0;
  std::vector<std::vector<int>> adj;
  long long edge_count = 0;

  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  bool has_edge(int u, int v) const;
  int max_degree() const;
  int min_degree() const;
  // Ascending (u,v) pairs with u < v.
  std::vector<std::pair<int, int>> edges() const;
};

// Deduplicates undirected edges; rejects loops and out-of-range endpoints.
Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

// |N(u) ∩ N(v)|; u = v returns d(u).
long long codegree(const Graph& g, int u, int v);

struct Bipartition {
  bool bipartite = false;
  std::vector<int> color;            // 0/1 per vertex when bipartite
  std::vector<int> odd_closed_walk;  // witness v0..vL with v0 = vL, L odd, otherwise
};

// Deterministic: BFS from the lowest-id vertex of each component.
Bipartition bipartition(const Graph& g);

// Induced subgraph on the given distinct vertex ids (sorted internally);
// new id i corresponds to the i-th smallest input id.
Graph induced_subgraph(const Graph& g, std::vector<int> vertices);

Graph remove_edges(const Graph& g, const std::vector<std::pair<int, int>>& edges);

}  // namespace turan
