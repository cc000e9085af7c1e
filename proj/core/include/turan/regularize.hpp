#pragma once

#include <cstdint>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

// All hypothesis flags are recomputed from the returned subgraph directly,
// never trusted from the extraction procedure.
struct RegularizationResult {
  Graph subgraph;
  std::vector<int> vertex_map;  // subgraph id -> input id
  long long m = 0;              // subgraph vertex count
  double alpha = 0.0;
  double K = 0.0;                     // 10 * 2^{1/alpha^2 + 1}
  bool precondition_edges_ok = false;  // e(G) >= n^{1+alpha}, reported only
  bool vertex_count_ok = false;        // m >= n^{alpha(1-alpha)/(1+alpha)}
  bool edge_lower_ok = false;
  bool degree_upper_ok = false;
  double keep_probability = 1.0;  // bounded-degree variant
  int attempts_used = 0;          // bounded-degree variant
  bool succeeded = true;
};

// Best-effort almost-regular extraction: min-degree peeling, then the prefix
// subgraph with the most edges among those satisfying max degree <= K * min
// degree. edge_lower_ok measures e >= (2/5) m^{1+alpha}; degree_upper_ok
// measures the K-almost-regularity itself.
RegularizationResult almost_regular_subgraph(const Graph& g, double alpha);

// Random spanning edge-subsample of the almost-regular subgraph, keeping each
// edge with probability (2/5) m^{1+alpha} / e, clamped to 1 (a clamp makes the
// step deterministic). Retries until e >= (1/3) m^{1+alpha} and max degree
// <= K m^alpha both hold or attempts exhaust; best attempt is returned either
// way with succeeded set accordingly.
RegularizationResult bounded_degree_subgraph(const Graph& g, double alpha, std::uint64_t seed,
                                             int max_attempts);

struct BiregularExtract {
  std::vector<int> X1, X2;  // original ids, sorted
  long long D1 = 0, D2 = 0;  // degree scales: max input-graph degree per side
  Graph subgraph;            // on the input vertex set, cross edges only
  long long achieved_min1 = 0, achieved_max1 = 0;
  long long achieved_min2 = 0, achieved_max2 = 0;
  double peel_threshold1 = 0.0, peel_threshold2 = 0.0;  // D/(256 ln^2 n), reported
  double d_over_4 = 0.0;                                 // average degree / 4, reported
};

// Dyadic degree-class peeling: bucket by ceil(log2 degree), split a lone
// bucket two ways (proper 2-coloring when its induced subgraph is bipartite,
// deterministic greedy max-cut otherwise), take the cross-edge-richest pair,
// then peel vertices whose side degree falls below D/(256 ln^2 n).
BiregularExtract biregular_extract(const Graph& g);

}  // namespace turan
