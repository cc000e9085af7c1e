#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

#include <nlohmann/json.hpp>

#include "turan/collection.hpp"
#include "turan/common.hpp"
#include "turan/graph.hpp"

namespace turan {

struct BuilderParams {
  double epsilon = 0.05;  // must lie in (0, 1/6)
  int k = 1;
  long long tau = 0;            // codegree cap; 0 resolves to ceil(n^{2 epsilon})
  long long cycle_budget = 10'000'000;  // DFS node cap; <= 0 means unlimited
  double beta_target = 0.0;     // 0 resolves to n^{-epsilon/2}
  LogBase log_base = LogBase::Natural;
};

// Symmetric family of triples (x, y, z) around one anchor vertex v: each
// triple closes a 4-cycle v-x-y-z-v and both codegrees d(v,y), d(x,z) stay at
// or below the dyadic scale.
struct TripleFamily {
  int anchor = -1;
  double scale = 0.0;
  std::vector<std::array<int, 3>> triples;  // sorted; closed under reversal
  std::shared_ptr<const Graph> host;
  long long condition3_max = 0;  // max over x of distinct y with some (x,y,z) present
};

struct EnumResult {
  CycleCollection collection;
  bool truncated = false;
  long long nodes = 0;
};

// All labeled genuine 8k-cycles whose distance-two codegrees are cyclically
// bounded: d(x_i, x_{i+2}) <= tau for every i mod 8k. Output tuples sorted.
// Hitting the node budget sets the truncation flag; the partial collection
// stays valid.
EnumResult small_codegree_cycles(std::shared_ptr<const Graph> g, int k, long long tau,
                                 long long budget);

// Anchor selection over labeled 4-cycle walks (v, x, y, z) with
// d(x,z) <= d(v,y): the vertex carrying the most qualifying triples (ties to
// the lowest id) anchors the family; triples are kept from the largest dyadic
// d(v,y) bucket (ties to the smaller scale), the scale is the bucket's upper
// end 2^i, and the family is closed under reversal. Throws NoAnchorError on a
// 4-cycle-free graph.
TripleFamily find_c4_anchor(std::shared_ptr<const Graph> g);

// From the pair multiplicities h(x,z) = #{y : (x,y,z) in the family}, keep the
// largest dyadic bucket weighted by triples and its lower end as the edge
// threshold of an auxiliary graph F on the anchor's neighborhood; every
// labeled genuine 4k-cycle of F is extended by distinct middle vertices into
// an 8k-tuple whose consecutive odd-even-odd triples all lie in the family.
EnumResult extend_to_long_cycles(const TripleFamily& d, int k, long long budget);

struct BuilderResult {
  CycleCollection collection;
  double s = 0.0;
  GoodnessCertificate certificate;
  nlohmann::json hypotheses;  // measured lemma hypotheses, reported not enforced
  bool truncated = false;
  bool empty_failure = false;
};

// Sparse-4-cycle branch: s = tau; certificate recomputed at the resolved beta.
BuilderResult build_good_few(std::shared_ptr<const Graph> g, const BuilderParams& params);

// Dense-4-cycle branch: anchor family plus extension; s = anchor scale.
BuilderResult build_good_many(std::shared_ptr<const Graph> g, const BuilderParams& params);

}  // namespace turan
