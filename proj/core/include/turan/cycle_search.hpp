#pragma once

#include <vector>

#include "turan/common.hpp"
#include "turan/graph.hpp"
#include "turan/lemmas.hpp"

namespace turan {

struct CycleSearchResult {
  SearchStatus status = SearchStatus::AbsentExhausted;
  std::vector<int> tuple;  // set when status == Found
  long long nodes_visited = 0;
};

// Backtracking search for a homomorphic 2k-cycle with no conflicting index
// pair, vertices ordered by ascending degree. A returned tuple is verified
// before return. AbsentExhausted is a proof of absence; BudgetExhausted is not.
CycleSearchResult conflict_free_cycle_search(const Graph& g, int k, const ConflictRelation& rel,
                                             long long budget = 10'000'000);

}  // namespace turan
