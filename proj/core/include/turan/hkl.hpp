#pragma once

#include <boost/rational.hpp>
#include <utility>

#include "turan/graph.hpp"

namespace turan {

// The 3-regular bipartite pattern family on a 4k x 2ell grid of labels.
// Grid coordinates are 1-based: i in [4k] (row), j in [2ell] (column).
struct HklGraph {
  int k = 1;
  int ell = 2;
  Graph graph;

  int rows() const { return 4 * k; }
  int cols() const { return 2 * ell; }
  // Row-major labeling; column j occupies a contiguous id block.
  int label(int i, int j) const { return (j - 1) * rows() + (i - 1); }
  std::pair<int, int> coords(int id) const {
    return {id % rows() + 1, id / rows() + 1};
  }
  bool connected_observed = false;  // reported, never asserted
};

// Requires k >= 1 and ell >= 2. Output has 8k*ell vertices and 12k*ell edges,
// every degree 3, and is bipartite.
HklGraph build_hkl(int k, int ell);

struct TreeStats {
  long long v = 0;
  long long e = 0;
  long long leaves = 0;
  int r = 0;
  boost::rational<long long> rho;          // (v - leaves) / e, exact
  boost::rational<long long> leaf_bound;   // (leaves-2)/((r-1)(leaves-1)-1)
  bool leaf_inequality = false;            // rho <= leaf_bound
  bool strict_inequality = false;          // rho < 1/(r-1), meaningful for r >= 3
};

// Requires a tree on >= 2 vertices whose every non-leaf has degree >= r.
// All verdicts are computed in exact rational arithmetic.
TreeStats rooted_power_density(const Graph& tree, int r);

}  // namespace turan
