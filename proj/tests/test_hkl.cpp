#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <utility>
#include <vector>

#include "test_util.hpp"
#include "turan/errors.hpp"
#include "turan/graph.hpp"
#include "turan/hkl.hpp"

using namespace turan;
using namespace testutil;

namespace {

// Independent reconstruction of the pattern's edge set from the four
// defining families, used to cross-check build_hkl edge by edge.
std::set<std::pair<int, int>> reference_edges(const HklGraph& h) {
  int k = h.k, ell = h.ell;
  auto id = [&](int i, int j) {
    int jm = (j - 1) % (2 * ell) + 1;  // column wraparound
    return h.label(i, jm);
  };
  auto norm = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
  std::set<std::pair<int, int>> edges;
  for (int j = 1; j <= 2 * ell; ++j) {
    for (int i = 1; i <= 2 * k; ++i) edges.insert(norm(id(2 * i - 1, j), id(2 * i, j)));
    edges.insert(norm(id(1, j), id(1, j + 1)));
    edges.insert(norm(id(4 * k, j), id(4 * k, j + 1)));
    for (int i = 1; i <= 2 * k - 1; ++i) {
      edges.insert(norm(id(2 * i, j), id(2 * i + 1, j + 1)));
      edges.insert(norm(id(2 * i + 1, j), id(2 * i, j + 1)));
    }
  }
  return edges;
}

}  // namespace

TEST_CASE("pattern size, regularity, bipartiteness over the parameter grid") {
  for (int k = 1; k <= 3; ++k) {
    for (int ell = 2; ell <= 5; ++ell) {
      HklGraph h = build_hkl(k, ell);
      CHECK(h.graph.n == 8 * k * ell);
      CHECK(h.graph.edge_count == 12 * k * ell);
      for (int v = 0; v < h.graph.n; ++v) CHECK(h.graph.degree(v) == 3);
      CHECK(bipartition(h.graph).bipartite);
    }
  }
}

TEST_CASE("pattern edge set matches the defining families") {
  for (auto [k, ell] : {std::pair{1, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
    HklGraph h = build_hkl(k, ell);
    auto ref = reference_edges(h);
    auto got = h.graph.edges();
    CHECK(got.size() == ref.size());
    for (auto e : got) CHECK(ref.count(e) == 1);
  }
}

TEST_CASE("labeling is a grid bijection with contiguous columns") {
  HklGraph h = build_hkl(2, 3);
  std::set<int> seen;
  for (int j = 1; j <= h.cols(); ++j) {
    for (int i = 1; i <= h.rows(); ++i) {
      int id = h.label(i, j);
      CHECK(id >= 0);
      CHECK(id < h.graph.n);
      CHECK(seen.insert(id).second);
      auto [ri, rj] = h.coords(id);
      CHECK(ri == i);
      CHECK(rj == j);
    }
  }
  CHECK(h.label(1, 1) == 0);
  CHECK(h.label(2, 1) == 1);
  CHECK(h.label(1, 2) == h.rows());  // column blocks are contiguous
}

TEST_CASE("frozen small instance") {
  HklGraph h = build_hkl(1, 2);
  CHECK(h.graph.n == 16);
  CHECK(h.graph.edge_count == 24);
  // matching edge in column 1, row pair (1,2)
  CHECK(h.graph.has_edge(h.label(1, 1), h.label(2, 1)));
  // row-1 cycle edge between columns 1 and 2, and the wraparound 4 -> 1
  CHECK(h.graph.has_edge(h.label(1, 1), h.label(1, 2)));
  CHECK(h.graph.has_edge(h.label(1, 4), h.label(1, 1)));
  // diagonal pair between columns 2 and 3
  CHECK(h.graph.has_edge(h.label(2, 2), h.label(3, 3)));
  CHECK(h.graph.has_edge(h.label(3, 2), h.label(2, 3)));
  // no vertical edge between rows 2 and 3
  CHECK(!h.graph.has_edge(h.label(2, 1), h.label(3, 1)));
  CHECK(h.connected_observed);
}

TEST_CASE("pattern construction rejects bad parameters") {
  CHECK_THROWS_AS(build_hkl(0, 2), InputError);
  CHECK_THROWS_AS(build_hkl(1, 1), InputError);
}

TEST_CASE("tree density: star meets the leaf bound with equality") {
  Graph star = from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}});
  TreeStats s = rooted_power_density(star, 3);
  CHECK(s.v == 4);
  CHECK(s.leaves == 3);
  CHECK(s.rho == boost::rational<long long>(1, 3));
  CHECK(s.leaf_bound == boost::rational<long long>(1, 3));
  CHECK(s.leaf_inequality);
  CHECK(s.strict_inequality);  // 1/3 < 1/2
}

TEST_CASE("tree density: double star r=3") {
  // two centers of degree 3 joined by an edge, four leaves
  Graph t = from_edge_list(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
  TreeStats s = rooted_power_density(t, 3);
  CHECK(s.leaves == 4);
  CHECK(s.rho == boost::rational<long long>(2, 5));
  CHECK(s.leaf_bound == boost::rational<long long>(2, 5));  // (4-2)/((2)(3)-1) = 2/5
  CHECK(s.leaf_inequality);
  CHECK(s.strict_inequality);
}

TEST_CASE("tree density preconditions") {
  CHECK_THROWS_AS(rooted_power_density(cycle_graph(4), 3), InputError);
  CHECK_THROWS_AS(rooted_power_density(path_graph(3), 3), PreconditionError);  // middle degree 2
  Graph two = from_edge_list(5, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(rooted_power_density(two, 3), InputError);  // disconnected
}
