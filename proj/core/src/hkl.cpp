#include "turan/hkl.hpp"

#include <string>
#include <vector>

#include "turan/errors.hpp"

namespace turan {

HklGraph build_hkl(int k, int ell) {
  if (k < 1) throw InputError("build_hkl requires k >= 1, got k=" + std::to_string(k));
  if (ell < 2) throw InputError("build_hkl requires ell >= 2, got ell=" + std::to_string(ell));
  HklGraph h;
  h.k = k;
  h.ell = ell;
  const int rows = 4 * k;
  const int cols = 2 * ell;
  auto id = [&](int i, int j) {
    // Column index wraps: x_{i, 2ell+1} is x_{i,1}.
    int jw = (j - 1) % cols + 1;
    return (jw - 1) * rows + (i - 1);
  };
  std::vector<std::pair<int, int>> edges;
  for (int j = 1; j <= cols; ++j) {
    for (int i = 1; i <= 2 * k; ++i)
      edges.emplace_back(id(2 * i - 1, j), id(2 * i, j));
    edges.emplace_back(id(1, j), id(1, j + 1));
    edges.emplace_back(id(rows, j), id(rows, j + 1));
    for (int i = 1; i <= 2 * k - 1; ++i) {
      edges.emplace_back(id(2 * i, j), id(2 * i + 1, j + 1));
      edges.emplace_back(id(2 * i + 1, j), id(2 * i, j + 1));
    }
  }
  h.graph = from_edge_list(rows * cols, edges);

  // Connectivity is observed for the report, never asserted.
  std::vector<char> seen(static_cast<size_t>(h.graph.n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : h.graph.adj[u])
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
  }
  h.connected_observed = (reached == h.graph.n);
  return h;
}

TreeStats rooted_power_density(const Graph& tree, int r) {
  if (r < 2) throw InputError("rooted_power_density requires r >= 2");
  if (tree.n < 2) throw InputError("rooted_power_density requires a tree on >= 2 vertices");
  if (tree.edge_count != tree.n - 1) throw InputError("input is not a tree: e != v - 1");
  // e = v - 1 plus connectivity is equivalent to acyclicity.
  std::vector<char> seen(static_cast<size_t>(tree.n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : tree.adj[u])
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
  }
  if (reached != tree.n) throw InputError("input is not a tree: disconnected");

  TreeStats stats;
  stats.v = tree.n;
  stats.e = tree.edge_count;
  stats.r = r;
  for (int v = 0; v < tree.n; ++v) {
    int d = tree.degree(v);
    if (d == 1) {
      ++stats.leaves;
    } else if (d < r) {
      throw PreconditionError("non-leaf vertex " + std::to_string(v) + " has degree " +
                              std::to_string(d) + " < r=" + std::to_string(r));
    }
  }
  using Rat = boost::rational<long long>;
  stats.rho = Rat(stats.v - stats.leaves, stats.e);
  long long denom = static_cast<long long>(r - 1) * (stats.leaves - 1) - 1;
  if (denom == 0)
    throw InputError("degenerate leaf bound: (r-1)(leaves-1) = 1");
  stats.leaf_bound = Rat(stats.leaves - 2, denom);
  stats.leaf_inequality = stats.rho <= stats.leaf_bound;
  stats.strict_inequality = stats.rho < Rat(1, r - 1);
  return stats;
}

}  // namespace turan
