#include "turan/generators.hpp"

#include "turan/errors.hpp"
#include "turan/rng.hpp"

namespace turan {

static void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("probability must lie in [0,1]");
}

static std::vector<std::pair<int, int>> erdos_renyi_edges(int n, double p, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (canonical53(rng) < p) edges.emplace_back(u, v);
  return edges;
}

HostResult generate_host(const HostSpec& spec) {
  if (spec.n < 0) throw InputError("host n must be nonnegative");
  HostResult result;
  if (spec.model == "complete") {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < spec.n; ++u)
      for (int v = u + 1; v < spec.n; ++v) edges.emplace_back(u, v);
    result.graph = from_edge_list(spec.n, edges);
  } else if (spec.model == "complete-bipartite") {
    int a = (spec.n + 1) / 2;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a; ++u)
      for (int v = a; v < spec.n; ++v) edges.emplace_back(u, v);
    result.graph = from_edge_list(spec.n, edges);
  } else if (spec.model == "cycle") {
    if (spec.n < 3) throw InputError("cycle model needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < spec.n; ++u) edges.emplace_back(u, (u + 1) % spec.n);
    result.graph = from_edge_list(spec.n, edges);
  } else if (spec.model == "erdos-renyi") {
    check_probability(spec.p);
    result.graph = from_edge_list(spec.n, erdos_renyi_edges(spec.n, spec.p, spec.seed));
  } else if (spec.model == "planted-pattern-plus-noise") {
    check_probability(spec.p);
    if (!spec.pattern) throw InputError("planted model requires a pattern graph");
    const Graph& pat = *spec.pattern;
    if (pat.n > spec.n) throw InputError("pattern larger than host n");
    auto edges = erdos_renyi_edges(spec.n, spec.p, spec.seed);
    for (auto [u, v] : pat.edges()) edges.emplace_back(u, v);
    result.graph = from_edge_list(spec.n, edges);
    result.pattern_vertices.resize(static_cast<size_t>(pat.n));
    for (int v = 0; v < pat.n; ++v) result.pattern_vertices[v] = v;
  } else {
    throw InputError("unknown host model: " + spec.model);
  }
  return result;
}

}  // namespace turan
