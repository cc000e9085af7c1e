#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

// Host models: erdos-renyi, planted-pattern-plus-noise, complete,
// complete-bipartite (sides ceil(n/2), floor(n/2)), cycle.
struct HostSpec {
  std::string model;
  int n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  std::optional<Graph> pattern;  // planted model only; occupies ids 0..pattern.n-1
};

struct HostResult {
  Graph graph;
  // Planted model: where the pattern sits. Informational only; the pipeline
  // never consumes it.
  std::vector<int> pattern_vertices;
};

// Deterministic for a fixed spec: edges are drawn in ascending (u,v) order,
// one canonical53 draw per vertex pair.
HostResult generate_host(const HostSpec& spec);

}  // namespace turan
