#pragma once

#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "turan/graph.hpp"

namespace turan {

// A family of labeled genuine 2(4k)-cycles in a shared host graph. Each tuple
// lists the 8k cycle vertices in traversal order.
struct CycleCollection {
  int k = 1;
  std::vector<std::vector<int>> tuples;
  std::shared_ptr<const Graph> host;

  int tuple_length() const { return 8 * k; }
  long long size() const { return static_cast<long long>(tuples.size()); }
};

struct WellformedResult {
  bool ok = true;
  std::string reason;
  std::vector<int> bad_tuple;
};

// Every tuple must consist of distinct vertices that are cyclically adjacent
// in the host. Wrong tuple length or an out-of-range vertex is malformed data
// and throws InputError instead of failing the check.
WellformedResult check_collection_wellformed(const CycleCollection& c);

// Least s satisfying the agreement bullet: the maximum, over tuples y and
// positions i, of the number of tuples that agree with y on every coordinate
// other than i. Empty collections have no inferable scale.
long long infer_s(const CycleCollection& c);

struct GoodnessCertificate {
  double beta = 0.0;
  double s = 0.0;
  bool verdict = false;
  bool bullet_wellformed = false;
  bool bullet_fiber_cap = false;      // every drop-one-coordinate fiber <= s
  bool bullet_projection_cap = false; // distinct drop-pair projections <= beta|C|/(16ks)
  nlohmann::json witnesses;
};

GoodnessCertificate check_good(const CycleCollection& c, double beta, double s);

struct NicenessReport {
  double beta = 0.0;
  bool verdict = false;
  double worst_proportion = 0.0;
  nlohmann::json worst_witness;
};

// For every pair of cyclically consecutive positions (p, p+1), group tuples by
// the projection that drops those two coordinates; within each group no vertex
// may appear at position p or p+1 in more than a beta proportion of the group.
NicenessReport check_nice(const CycleCollection& c, double beta);

struct PruneResult {
  CycleCollection collection;
  long long deleted_tuples = 0;
  long long deleted_fibers = 0;
  nlohmann::json deletions;  // array of {drop_pair, projection, size, rule}
};

// Repeatedly delete whole projection groups, scanning drop pairs in ascending
// order and keys in lexicographic order: a group goes if its size is below
// 2s/beta or some vertex exceeds the beta proportion inside it. The result is
// always beta-nice; on a beta-good input the proportion rule never fires.
PruneResult prune_to_nice(const CycleCollection& c, double beta, double s);

nlohmann::json collection_to_json(const CycleCollection& c);
CycleCollection collection_from_json(const nlohmann::json& j, std::shared_ptr<const Graph> host);

}  // namespace turan
