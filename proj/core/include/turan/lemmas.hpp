#pragma once

#include <functional>
#include <nlohmann/json.hpp>
#include <string>
#include <utility>
#include <vector>

#include "turan/exact.hpp"
#include "turan/graph.hpp"

namespace turan {

// Measured side is always an exact integer; the bound side may be a float.
// direction records which inequality the source lemma asserts.
struct BoundReport {
  std::string lemma;
  BigInt measured;
  double bound = 0.0;
  std::string direction;  // "measured>=bound" or "measured<=bound"
  bool satisfied = false;
  bool exact_comparison = false;  // true when satisfied was decided in integers
  nlohmann::json parameters;
};

nlohmann::json bound_report_json(const BoundReport& r);

// Symmetric conflict predicate over vertices or over unordered edges.
struct ConflictRelation {
  enum class Kind { Vertex, Edge };
  Kind kind = Kind::Vertex;
  std::function<bool(int, int)> vertex_rel;
  std::function<bool(std::pair<int, int>, std::pair<int, int>)> edge_rel;

  static ConflictRelation vertex(std::function<bool(int, int)> f);
  static ConflictRelation edge(std::function<bool(std::pair<int, int>, std::pair<int, int>)> f);
  static ConflictRelation always_false_vertex();
  static ConflictRelation equality_vertex();
  // e ~ f iff they share exactly one vertex.
  static ConflictRelation share_one_vertex_edge();
};

// hom(C_2k, G) >= (2e/n)^{2k}; decided exactly as measured * n^{2k} >= (2e)^{2k}.
BoundReport check_sidorenko(const Graph& g, int k);

// Alternating homomorphic cycles of a bipartite graph with parts (X, Y):
// measured = 2 trace((B B^T)^k) >= s^k t^k with s, t the side minimum degrees.
BoundReport check_min_degree_hom_bound(const Graph& g, const std::vector<int>& X,
                                       const std::vector<int>& Y, int k);

// Homomorphic 2k-cycles containing a conflicting edge pair; the fan-out
// precondition (every (uv, w) sees at most s conflicting wz) is checked
// exhaustively and a violation names its witness.
BoundReport count_conflicting_edge_cycles(const Graph& g, int k, const ConflictRelation& rel,
                                          long long s, long long budget = 50'000'000);

// Alternating homomorphic 2k-cycles (union of both phase patterns over X1/X2)
// with a conflicting vertex pair; both bulleted fan-out conditions are checked
// exhaustively. M = max(D1 s2, D2 s1).
BoundReport count_conflicting_vertex_cycles(const Graph& g, int k, const std::vector<int>& X1,
                                            const std::vector<int>& X2,
                                            const ConflictRelation& rel, long long D1,
                                            long long D2, long long s1, long long s2,
                                            long long budget = 50'000'000);

struct SupersatParams {
  double C_k = 1.0;
  double c_k = 1.0;
};

// Genuine C_2k copies vs c * e^{2k} / n^{2k}. The hypothesis e >= C n^{1+1/k}
// is reported in parameters; nothing here is ever asserted.
BoundReport supersaturation_report(const Graph& g, int k, const SupersatParams& params,
                                   long long budget = 50'000'000);

}  // namespace turan
