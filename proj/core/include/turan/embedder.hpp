#pragma once

#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "turan/collection.hpp"
#include "turan/common.hpp"
#include "turan/graph.hpp"

namespace turan {

// Host images of the 8k*ell grid labels, indexed by the grid labeling
// (row i, column j) -> (j-1)*4k + (i-1).
struct Embedding {
  int k = 1;
  int ell = 2;
  std::vector<int> map;
};

// Two column tuples clash when they share any host vertex.
bool aux_conflict(const std::vector<int>& y, const std::vector<int>& z);

// Reference adjacency test for the implicit auxiliary graph over column
// tuples: adjacent iff either weave orientation appears in the collection.
bool aux_adjacent(const std::vector<int>& y, const std::vector<int>& z,
                  const CycleCollection& c);

struct EmbedSearchResult {
  SearchStatus status = SearchStatus::AbsentExhausted;
  std::optional<Embedding> embedding;
  long long nodes = 0;
};

// Backtracking search for a 2*ell-cycle of pairwise non-conflicting column
// tuples in the implicit auxiliary graph; candidates are the weave halves of
// the collection's tuples, ordered fewest-conflicts-first then
// lexicographically. A found cycle is assembled into an Embedding and
// re-verified edge by edge against the constructed pattern before being
// returned; verification failure is an internal error.
EmbedSearchResult find_pattern_embedding(const Graph& g, const CycleCollection& c, int k, int ell,
                                         long long budget);

// Injectivity plus the full pattern edge check.
bool verify_embedding(const Embedding& emb, const Graph& host);

// Worst, over column tuples y and host vertices u, proportion of y's
// auxiliary neighbors containing u. On a beta-nice collection this never
// exceeds 8k * beta.
struct ClaimMeasurement {
  double worst_proportion = 0.0;
  nlohmann::json witness;
};
ClaimMeasurement measure_u_hit_proportion(const CycleCollection& c);

}  // namespace turan
