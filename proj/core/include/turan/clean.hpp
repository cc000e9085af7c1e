#pragma once

#include <vector>

#include "turan/common.hpp"
#include "turan/graph.hpp"

namespace turan {

struct CleanResult {
  Graph graph;
  struct Removal {
    int u = 0, v = 0;
    long long count_at_removal = 0;
    double threshold_at_removal = 0.0;
  };
  std::vector<Removal> removals;
  long long q_before = 0;
  long long q_after = 0;
  double final_threshold = 0.0;
  long long max_per_edge_after = 0;
  bool certificate_ok = false;
};

// Repeatedly delete the edge lying on the most 4-cycles while that count
// exceeds (16 log n / e(G)) * q, with e(G) the input edge count and q the
// current 4-cycle total. Ties break to the lexicographically smallest edge.
// Graphs with at most 3 edges are returned unchanged. Loop termination makes
// the final per-edge maximum at most the final threshold, which certifies the
// result; certificate_ok records a full recount check of that property.
CleanResult clean_c4s(const Graph& g, LogBase log_base = LogBase::Natural);

}  // namespace turan
