#include "turan/cycle_search.hpp"

#include <algorithm>
#include <stdexcept>

#include "turan/errors.hpp"

namespace turan {

CycleSearchResult conflict_free_cycle_search(const Graph& g, int k, const ConflictRelation& rel,
                                             long long budget) {
  if (k < 2) throw InputError("conflict_free_cycle_search requires k >= 2");
  if (rel.kind != ConflictRelation::Kind::Vertex || !rel.vertex_rel)
    throw InputError("conflict_free_cycle_search requires a vertex relation");

  // Global vertex order by (degree, id); neighbor lists follow the same order.
  std::vector<int> order(static_cast<size_t>(g.n));
  for (int v = 0; v < g.n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) < g.degree(b);
    return a < b;
  });
  std::vector<std::vector<int>> nbr(static_cast<size_t>(g.n));
  for (int v = 0; v < g.n; ++v) {
    nbr[v] = g.adj[v];
    std::sort(nbr[v].begin(), nbr[v].end(), [&](int a, int b) {
      if (g.degree(a) != g.degree(b)) return g.degree(a) < g.degree(b);
      return a < b;
    });
  }

  const int length = 2 * k;
  CycleSearchResult result;
  std::vector<int> tuple;
  tuple.reserve(static_cast<size_t>(length));
  bool truncated = false;

  auto conflicts_with_prefix = [&](int v) {
    for (int prev : tuple)
      if (rel.vertex_rel(prev, v)) return true;
    return false;
  };

  auto extend = [&](auto&& self) -> bool {
    if (result.nodes_visited >= budget) {
      truncated = true;
      return false;
    }
    ++result.nodes_visited;
    int depth = static_cast<int>(tuple.size());
    if (depth == length)
      return g.has_edge(tuple.back(), tuple.front());
    const std::vector<int>& candidates = (depth == 0) ? order : nbr[tuple.back()];
    for (int v : candidates) {
      if (depth == length - 1 && !g.has_edge(v, tuple.front())) continue;
      // Incremental pairwise check: v against the whole prefix; repeats of v
      // are rejected exactly when rel(v,v) holds.
      if (conflicts_with_prefix(v)) continue;
      tuple.push_back(v);
      if (self(self)) return true;
      tuple.pop_back();
      if (truncated) return false;
    }
    return false;
  };

  if (extend(extend)) {
    // Mandatory post-verification: adjacency around the cycle plus full
    // pairwise conflict freedom.
    for (int i = 0; i < length; ++i)
      if (!g.has_edge(tuple[i], tuple[(i + 1) % length]))
        throw std::logic_error("conflict_free_cycle_search produced a non-cycle");
    for (int i = 0; i < length; ++i)
      for (int j = i + 1; j < length; ++j)
        if (rel.vertex_rel(tuple[i], tuple[j]))
          throw std::logic_error("conflict_free_cycle_search produced a conflicting tuple");
    result.status = SearchStatus::Found;
    result.tuple = tuple;
    return result;
  }
  result.status = truncated ? SearchStatus::BudgetExhausted : SearchStatus::AbsentExhausted;
  return result;
}

}  // namespace turan
