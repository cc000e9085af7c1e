#include "turan/clean.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "turan/census.hpp"
#include "turan/errors.hpp"

namespace turan {

namespace {

std::pair<int, int> norm_edge(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

}  // namespace

CleanResult clean_c4s(const Graph& g, LogBase log_base) {
  CleanResult result;
  C4Census census = c4_census(g);
  result.q_before = census.total;

  const long long e0 = g.edge_count;
  const double factor =
      e0 > 0 ? 16.0 * log_with(static_cast<double>(g.n), log_base) / static_cast<double>(e0) : 0.0;

  if (e0 <= 3) {
    result.graph = g;
    result.q_after = census.total;
    result.final_threshold = factor * static_cast<double>(census.total);
    for (const auto& [e, c] : census.per_edge)
      result.max_per_edge_after = std::max(result.max_per_edge_after, c);
    result.certificate_ok = static_cast<double>(result.max_per_edge_after) <= result.final_threshold;
    return result;
  }

  Graph cur = g;
  auto counts = census.per_edge;
  long long q = census.total;
  const long long removal_cap = (e0 + 3) / 4;

  while (true) {
    std::pair<int, int> victim{-1, -1};
    long long victim_count = -1;
    for (const auto& [e, c] : counts) {
      if (c > victim_count) {
        victim_count = c;
        victim = e;
      }
    }
    double threshold = factor * static_cast<double>(q);
    if (victim_count <= threshold) break;

    if (static_cast<long long>(result.removals.size()) >= removal_cap)
      throw std::logic_error("clean_c4s removed more edges than the geometric decay permits");
    result.removals.push_back({victim.first, victim.second, victim_count, threshold});

    // Every 4-cycle a-b-x-w-a through the removed edge ab dies; its other
    // three edges each lose one cycle.
    int a = victim.first, b = victim.second;
    for (int x : cur.adj[b]) {
      if (x == a) continue;
      for (int w : cur.adj[a]) {
        if (w == b || w == x) continue;
        if (!cur.has_edge(x, w)) continue;
        --counts[norm_edge(b, x)];
        --counts[norm_edge(x, w)];
        --counts[norm_edge(w, a)];
      }
    }
    q -= victim_count;
    counts.erase(victim);
    cur = remove_edges(cur, {victim});
  }

  C4Census recount = c4_census(cur);
  if (recount.total != q || recount.per_edge != counts)
    throw std::logic_error("clean_c4s incremental cycle counts disagree with recount");
  result.graph = std::move(cur);
  result.q_after = recount.total;
  result.final_threshold = factor * static_cast<double>(recount.total);
  for (const auto& [e, c] : recount.per_edge)
    result.max_per_edge_after = std::max(result.max_per_edge_after, c);
  result.certificate_ok = static_cast<double>(result.max_per_edge_after) <= result.final_threshold;
  return result;
}

}  // namespace turan
