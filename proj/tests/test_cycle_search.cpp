#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <vector>

#include "test_util.hpp"
#include "turan/cycle_search.hpp"
#include "turan/errors.hpp"
#include "turan/graph.hpp"
#include "turan/lemmas.hpp"

using namespace turan;
using namespace testutil;

namespace {

void check_is_hom_cycle(const Graph& g, const std::vector<int>& t, int k) {
  REQUIRE(t.size() == static_cast<size_t>(2 * k));
  for (size_t i = 0; i < t.size(); ++i) CHECK(g.has_edge(t[i], t[(i + 1) % t.size()]));
}

}  // namespace

TEST_CASE("unconstrained search finds any homomorphic cycle") {
  CycleSearchResult r =
      conflict_free_cycle_search(complete_graph(3), 2, ConflictRelation::always_false_vertex());
  REQUIRE(r.status == SearchStatus::Found);
  check_is_hom_cycle(complete_graph(3), r.tuple, 2);
}

TEST_CASE("equality relation demands genuine cycles") {
  CycleSearchResult found =
      conflict_free_cycle_search(cycle_graph(6), 3, ConflictRelation::equality_vertex());
  REQUIRE(found.status == SearchStatus::Found);
  check_is_hom_cycle(cycle_graph(6), found.tuple, 3);
  std::set<int> distinct(found.tuple.begin(), found.tuple.end());
  CHECK(distinct.size() == 6);

  // C_6 has no genuine 4-cycle; exhaustion proves absence
  CycleSearchResult absent =
      conflict_free_cycle_search(cycle_graph(6), 2, ConflictRelation::equality_vertex());
  CHECK(absent.status == SearchStatus::AbsentExhausted);

  CycleSearchResult k4 =
      conflict_free_cycle_search(complete_graph(4), 2, ConflictRelation::equality_vertex());
  REQUIRE(k4.status == SearchStatus::Found);
  std::set<int> k4d(k4.tuple.begin(), k4.tuple.end());
  CHECK(k4d.size() == 4);
}

TEST_CASE("trees have no genuine cycles") {
  // back-and-forth walks are homomorphic cycles, so the distinctness
  // relation is what makes tree absence provable
  CycleSearchResult r =
      conflict_free_cycle_search(path_graph(8), 2, ConflictRelation::equality_vertex());
  CHECK(r.status == SearchStatus::AbsentExhausted);

  CycleSearchResult walk =
      conflict_free_cycle_search(path_graph(8), 2, ConflictRelation::always_false_vertex());
  CHECK(walk.status == SearchStatus::Found);
}

TEST_CASE("budget exhaustion is reported as unknown") {
  Graph g = complete_graph(9);
  CycleSearchResult r = conflict_free_cycle_search(
      g, 4, ConflictRelation::vertex([](int, int) { return true; }), 5);
  CHECK(r.status == SearchStatus::BudgetExhausted);
  CHECK(r.nodes_visited >= 5);
}

TEST_CASE("all-conflicting relation admits nothing") {
  CycleSearchResult r = conflict_free_cycle_search(
      complete_graph(4), 2, ConflictRelation::vertex([](int, int) { return true; }));
  CHECK(r.status == SearchStatus::AbsentExhausted);
}

TEST_CASE("edge relations are rejected") {
  CHECK_THROWS_AS(conflict_free_cycle_search(complete_graph(5), 2,
                                             ConflictRelation::share_one_vertex_edge()),
                  InputError);
}
