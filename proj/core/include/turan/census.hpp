#pragma once

#include <map>
#include <utility>

#include "turan/exact.hpp"
#include "turan/graph.hpp"

namespace turan {

// Homomorphic 2k-cycles: 2k-tuples with all cyclically consecutive pairs
// adjacent, vertices not necessarily distinct. Exact trace of A^{2k};
// falls back to arbitrary precision on int64 overflow, never wraps.
BigInt hom_cycle_count(const Graph& g, int k);

// q counts unlabeled C4 copies. Each copy is seen by both of its diagonal
// vertex pairs, so the codegree identity reads sum_{u<v} C(d(u,v),2) = 2q,
// and sum of per_edge = 4q.
struct C4Census {
  long long total = 0;  // q
  std::map<std::pair<int, int>, long long> per_edge;
  BigInt codegree_pair_sum;  // independent cross-check, equals 2q
};
C4Census c4_census(const Graph& g);

// Genuine cycles have all vertices distinct. Labeled counts include every
// rotation and both orientations; copies = labeled / (4k).
BigInt genuine_cycle_count_labeled(const Graph& g, int k, long long budget);
BigInt genuine_cycle_copies(const Graph& g, int k, long long budget);

}  // namespace turan
