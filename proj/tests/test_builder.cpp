#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <memory>
#include <set>
#include <vector>

#include "turan/builder.hpp"
#include "turan/collection.hpp"
#include "turan/errors.hpp"
#include "turan/graph.hpp"
#include "test_util.hpp"

using namespace turan;

namespace {

std::shared_ptr<const Graph> shared(Graph g) {
  return std::make_shared<const Graph>(std::move(g));
}

}  // namespace

TEST_CASE("small codegree cycles on an 8-cycle host") {
  auto host = shared(testutil::cycle_graph(8));
  EnumResult r = small_codegree_cycles(host, 1, 1, 0);
  // 8 starting points, 2 orientations, all with distance-two codegree 1
  CHECK(r.collection.tuples.size() == 16);
  CHECK(!r.truncated);
  CHECK(r.nodes > 0);
  CHECK(r.collection.k == 1);
  CHECK(r.collection.host.get() == host.get());
  CHECK(check_collection_wellformed(r.collection).ok);
  CHECK(std::is_sorted(r.collection.tuples.begin(), r.collection.tuples.end()));
}

TEST_CASE("small codegree cycles respect the codegree cap") {
  auto host = shared(testutil::complete_bipartite(4, 4));
  // same-side codegrees are all 4
  EnumResult loose = small_codegree_cycles(host, 1, 4, 0);
  CHECK(loose.collection.tuples.size() == 1152);
  CHECK(check_collection_wellformed(loose.collection).ok);
  EnumResult tight = small_codegree_cycles(host, 1, 3, 0);
  CHECK(tight.collection.tuples.empty());
}

TEST_CASE("small codegree cycles truncate at the node budget") {
  auto host = shared(testutil::complete_bipartite(4, 4));
  EnumResult r = small_codegree_cycles(host, 1, 4, 100);
  CHECK(r.truncated);
  CHECK(r.collection.tuples.size() < 1152);
  CHECK(check_collection_wellformed(r.collection).ok);
}

TEST_CASE("small codegree cycle input validation") {
  auto host = shared(testutil::cycle_graph(8));
  CHECK_THROWS_AS(small_codegree_cycles(nullptr, 1, 1, 0), InputError);
  CHECK_THROWS_AS(small_codegree_cycles(host, 0, 1, 0), InputError);
  CHECK_THROWS_AS(small_codegree_cycles(host, 1, 0, 0), InputError);
}

TEST_CASE("anchor selection on a lone 4-cycle") {
  auto host = shared(testutil::cycle_graph(4));
  TripleFamily fam = find_c4_anchor(host);
  CHECK(fam.anchor == 0);
  // both walks have d(v,y) = 2, landing in the bucket [2,4)
  CHECK(fam.scale == doctest::Approx(4.0));
  std::vector<std::array<int, 3>> expected = {{1, 2, 3}, {3, 2, 1}};
  CHECK(fam.triples == expected);
  CHECK(fam.condition3_max == 1);
  CHECK(fam.host.get() == host.get());
}

TEST_CASE("anchor selection on a balanced biclique") {
  auto host = shared(testutil::complete_bipartite(4, 4));
  TripleFamily fam = find_c4_anchor(host);
  CHECK(fam.anchor == 0);
  CHECK(fam.triples.size() == 36);
  // d(v,y) = 4 lands in the bucket [4,8)
  CHECK(fam.scale == doctest::Approx(8.0));
  CHECK(fam.condition3_max == 3);
  std::set<std::array<int, 3>> members(fam.triples.begin(), fam.triples.end());
  for (const auto& [x, y, z] : fam.triples) {
    CHECK(members.count({z, y, x}) == 1);
    CHECK(x >= 4);
    CHECK(z >= 4);
    CHECK((y >= 1 && y <= 3));
  }
}

TEST_CASE("anchor selection needs a 4-cycle") {
  CHECK_THROWS_AS(find_c4_anchor(shared(testutil::path_graph(5))), NoAnchorError);
  CHECK_THROWS_AS(find_c4_anchor(shared(testutil::cycle_graph(6))), NoAnchorError);
  CHECK_THROWS_AS(find_c4_anchor(nullptr), InputError);
}

TEST_CASE("extension runs dry when middles are scarce") {
  // K_{4,4}: the auxiliary graph is K_4 but each consecutive pair offers only
  // the 3 vertices of A minus the anchor, so 4 distinct middles never exist
  auto host = shared(testutil::complete_bipartite(4, 4));
  TripleFamily fam = find_c4_anchor(host);
  EnumResult r = extend_to_long_cycles(fam, 1, 0);
  CHECK(r.collection.tuples.empty());
  CHECK(!r.truncated);
}

TEST_CASE("extension is vacuously empty without auxiliary 4-cycles") {
  // K_{2,3}: the auxiliary graph is a triangle
  auto host = shared(testutil::complete_bipartite(2, 3));
  TripleFamily fam = find_c4_anchor(host);
  CHECK(fam.anchor == 0);
  EnumResult r = extend_to_long_cycles(fam, 1, 0);
  CHECK(r.collection.tuples.empty());
}

TEST_CASE("extension fills a K55 neighborhood") {
  auto host = shared(testutil::complete_bipartite(5, 5));
  TripleFamily fam = find_c4_anchor(host);
  CHECK(fam.anchor == 0);
  CHECK(fam.triples.size() == 80);
  CHECK(fam.scale == doctest::Approx(8.0));
  EnumResult r = extend_to_long_cycles(fam, 1, 0);
  // 120 labeled auxiliary 4-cycles, each extended by 4! distinct middles
  CHECK(r.collection.tuples.size() == 2880);
  CHECK(!r.truncated);
  CHECK(check_collection_wellformed(r.collection).ok);
  for (const auto& t : r.collection.tuples) {
    for (size_t i = 0; i < t.size(); i += 2) {
      CHECK(t[i] >= 5);                       // anchor neighborhood
      CHECK((t[i + 1] >= 1 && t[i + 1] <= 4));  // middles avoid the anchor
    }
  }
  CHECK(std::is_sorted(r.collection.tuples.begin(), r.collection.tuples.end()));
}

TEST_CASE("extension input validation") {
  TripleFamily empty_family;
  CHECK_THROWS_AS(extend_to_long_cycles(empty_family, 1, 0), InputError);

  auto host = shared(testutil::complete_bipartite(5, 5));
  TripleFamily fam = find_c4_anchor(host);
  CHECK_THROWS_AS(extend_to_long_cycles(fam, 0, 0), InputError);

  TripleFamily lopsided = fam;
  lopsided.triples.pop_back();  // breaks reversal closure
  CHECK_THROWS_AS(extend_to_long_cycles(lopsided, 1, 0), PreconditionError);
}

TEST_CASE("few-cycles branch on an 8-cycle host") {
  auto host = shared(testutil::cycle_graph(8));
  BuilderParams p;
  p.epsilon = 0.15;
  p.k = 1;
  p.tau = 1;
  p.beta_target = 32.0;
  BuilderResult r = build_good_few(host, p);
  CHECK(!r.empty_failure);
  CHECK(r.collection.tuples.size() == 16);
  CHECK(r.s == doctest::Approx(1.0));
  CHECK(r.certificate.verdict);
  CHECK(r.certificate.beta == doctest::Approx(32.0));
  for (const char* key : {"edges", "max_degree", "per_edge_c4_max", "tau", "beta", "asserted"})
    CHECK(r.hypotheses.contains(key));
  CHECK(r.hypotheses["asserted"] == false);
  CHECK(r.hypotheses["tau"] == 1);
}

TEST_CASE("few-cycles branch resolves tau from epsilon") {
  auto host = shared(testutil::cycle_graph(8));
  BuilderParams p;
  p.epsilon = 0.15;
  // ceil(8^{0.30}) = 2
  BuilderResult r = build_good_few(host, p);
  CHECK(r.hypotheses["tau"] == 2);
  CHECK(r.collection.tuples.size() == 16);
}

TEST_CASE("many-cycles branch on a K55 host") {
  auto host = shared(testutil::complete_bipartite(5, 5));
  BuilderParams p;
  p.epsilon = 0.15;
  BuilderResult r = build_good_many(host, p);
  CHECK(!r.empty_failure);
  CHECK(r.collection.tuples.size() == 2880);
  CHECK(r.s == doctest::Approx(8.0));
  CHECK(r.certificate.bullet_wellformed);
  for (const char* key : {"q", "anchor", "scale", "condition3_max", "beta", "asserted"})
    CHECK(r.hypotheses.contains(key));
  CHECK(r.hypotheses["anchor"] == 0);
  CHECK(r.hypotheses["condition3_max"] == 4);
}

TEST_CASE("many-cycles branch reports an empty extension") {
  auto host = shared(testutil::complete_bipartite(4, 4));
  BuilderParams p;
  p.epsilon = 0.15;
  BuilderResult r = build_good_many(host, p);
  CHECK(r.empty_failure);
  CHECK(r.collection.tuples.empty());
}

TEST_CASE("builder parameter validation") {
  auto host = shared(testutil::cycle_graph(8));
  BuilderParams bad_eps;
  bad_eps.epsilon = 0.2;
  CHECK_THROWS_AS(build_good_few(host, bad_eps), InputError);
  CHECK_THROWS_AS(build_good_many(host, bad_eps), InputError);
  BuilderParams bad_k;
  bad_k.k = 0;
  CHECK_THROWS_AS(build_good_few(host, bad_k), InputError);
  CHECK_THROWS_AS(build_good_few(nullptr, BuilderParams{}), InputError);
}
