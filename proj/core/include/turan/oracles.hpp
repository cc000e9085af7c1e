#pragma once

#include <string>
#include <vector>

#include "turan/common.hpp"
#include "turan/exact.hpp"
#include "turan/graph.hpp"

namespace turan {

struct EmbedResult {
  SearchStatus status = SearchStatus::AbsentExhausted;
  std::vector<int> map;  // pattern vertex -> host vertex when found
  long long nodes = 0;
};

// Injective edge-preserving map search with degree and mapped-neighbor
// pruning; pattern vertices are tried in descending degree order. Budget
// exhaustion yields BudgetExhausted, which is an unknown, never an absence.
// Found maps are re-verified by a second pass.
EmbedResult embed_bruteforce(const Graph& pattern, const Graph& host, long long budget);

// Closed 2k-walk total by stepwise vector relaxation from every start vertex.
// Independent of the trace-of-power implementation; exact via big integers.
BigInt hom_count_bruteforce(const Graph& g, int k, long long budget, int jobs = 1);

// Unpruned scan over all n^{2k} tuples; the cross-check for tiny hosts.
BigInt hom_count_tuple_scan(const Graph& g, int k);

struct TuranRecord {
  int n = 0;
  long long value = 0;
  Graph witness;
};

// Exact extremal edge count over pattern-free n-vertex graphs, by levelwise
// isomorph-rejected search. strategy "descending" walks complete-graph edge
// deletions down to the first pattern-free level; "ascending" grows
// pattern-free graphs from the empty graph and keeps the last non-empty
// level. Both are exact and must agree.
TuranRecord turan_exhaustive(const Graph& pattern, int n, const std::string& strategy);

}  // namespace turan
