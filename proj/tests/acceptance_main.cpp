// Acceptance gate: one criterion per line, wall-clock budgets enforced,
// nonzero exit when anything fails. Built with TURAN_CLI_PATH pointing at the
// installed command line binary for the determinism criterion.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "turan/builder.hpp"
#include "turan/census.hpp"
#include "turan/clean.hpp"
#include "turan/collection.hpp"
#include "turan/embedder.hpp"
#include "turan/errors.hpp"
#include "turan/generators.hpp"
#include "turan/graph.hpp"
#include "turan/hkl.hpp"
#include "turan/lemmas.hpp"
#include "turan/oracles.hpp"
#include "turan/pipeline.hpp"
#include "turan/rng.hpp"
#include "turan/weave.hpp"
#include "test_util.hpp"

using namespace turan;
namespace fs = std::filesystem;

namespace {

struct Criterion {
  int id;
  std::string what;
  double budget_seconds;
  std::function<bool(std::string&)> body;
};

bool approx_leq(double a, double b) { return a <= b + 1e-9; }

// ---------- shared small helpers ----------

Graph random_bipartite_min_degree(int a, int b, double p, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::pair<int, int>> edges;
  // forced matchings keep both side minimum degrees at least 1
  for (int i = 0; i < a; ++i) edges.emplace_back(i, a + (i % b));
  for (int j = 0; j < b; ++j) edges.emplace_back(j % a, a + j);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j)
      if (canonical53(rng) < p) edges.emplace_back(i, a + j);
  return from_edge_list(a + b, edges);
}

// Independent odometer over homomorphic 2k-cycles.
template <typename Visit>
void scan_hom_cycles(const Graph& g, int k, Visit&& visit) {
  const int len = 2 * k;
  if (g.n == 0) return;
  std::vector<int> t(static_cast<size_t>(len), 0);
  while (true) {
    bool closed = true;
    for (int i = 0; i < len; ++i)
      if (!g.has_edge(t[static_cast<size_t>(i)], t[static_cast<size_t>((i + 1) % len)])) {
        closed = false;
        break;
      }
    if (closed) visit(t);
    int pos = len - 1;
    while (pos >= 0 && t[static_cast<size_t>(pos)] == g.n - 1) {
      t[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++t[static_cast<size_t>(pos)];
  }
}

// C4-free difference-set block plus pendants, isolated vertices and one
// planted 4-cycle whose edges alone exceed the cleaning threshold.
Graph one_removal_instance() {
  std::vector<std::pair<int, int>> edges;
  const int D[4] = {0, 1, 3, 9};
  for (int a = 0; a < 13; ++a)
    for (int d : D) edges.emplace_back(a, 13 + (a + d) % 13);
  for (int i = 0; i < 4; ++i) edges.emplace_back(i, 26 + i);
  edges.emplace_back(36, 37);
  edges.emplace_back(37, 38);
  edges.emplace_back(38, 39);
  edges.emplace_back(39, 36);
  return from_edge_list(40, edges);
}

CycleCollection product_family(int first_pool) {
  // coordinate 0 draws from a pool of size first_pool, coordinates 1..7 from
  // pools of size 2; all pools disjoint, host complete
  CycleCollection c;
  c.k = 1;
  int base = first_pool;
  c.host = std::make_shared<const Graph>(testutil::complete_graph(base + 14));
  for (int f = 0; f < first_pool; ++f) {
    for (int mask = 0; mask < 128; ++mask) {
      std::vector<int> t(8);
      t[0] = f;
      for (int i = 1; i < 8; ++i)
        t[static_cast<size_t>(i)] = base + 2 * (i - 1) + ((mask >> (i - 1)) & 1);
      c.tuples.push_back(std::move(t));
    }
  }
  return c;
}

// ---------- tree enumeration (criterion 11) ----------

std::string ahu_encode(const std::vector<std::vector<int>>& adj, int root) {
  // iterative-safe recursion: trees here have at most 9 vertices
  std::function<std::string(int, int)> enc = [&](int v, int parent) -> std::string {
    std::vector<std::string> parts;
    for (int w : adj[static_cast<size_t>(v)])
      if (w != parent) parts.push_back(enc(w, v));
    std::sort(parts.begin(), parts.end());
    std::string s = "(";
    for (const auto& p : parts) s += p;
    s += ")";
    return s;
  };
  return enc(root, -1);
}

std::string tree_canonical(const Graph& t) {
  // centers by leaf peeling, then the lexicographically least rooted code
  int n = t.n;
  std::vector<int> deg(static_cast<size_t>(n));
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    deg[static_cast<size_t>(v)] = t.degree(v);
    if (deg[static_cast<size_t>(v)] <= 1) layer.push_back(v);
  }
  int remaining = n;
  std::vector<int> centers = layer;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int v : layer)
      for (int w : t.adj[static_cast<size_t>(v)])
        if (--deg[static_cast<size_t>(w)] == 1) next.push_back(w);
    layer = std::move(next);
    centers = layer;
  }
  std::string best;
  for (int c : centers) {
    std::string code = ahu_encode(t.adj, c);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

std::vector<Graph> all_trees_up_to(int max_n) {
  std::vector<Graph> out;
  std::vector<Graph> level = {testutil::single_edge()};
  out.push_back(level[0]);
  for (int n = 3; n <= max_n; ++n) {
    std::map<std::string, Graph> next;
    for (const Graph& t : level) {
      for (int v = 0; v < t.n; ++v) {
        auto edges = t.edges();
        edges.emplace_back(v, t.n);
        Graph grown = from_edge_list(t.n + 1, edges);
        next.emplace(tree_canonical(grown), std::move(grown));
      }
    }
    level.clear();
    for (auto& [code, tree] : next) {
      out.push_back(tree);
      level.push_back(std::move(tree));
    }
  }
  return out;
}

// ---------- CLI process helpers (criterion 12) ----------

int run_cmd(const std::string& cmd) {
  int status = std::system(cmd.c_str());
  if (status == -1) return -1;
  if (WIFEXITED(status)) return WEXITSTATUS(status);
  return -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main() {
  std::vector<Criterion> criteria;
  auto add = [&](int id, std::string what, double budget, std::function<bool(std::string&)> body) {
    criteria.push_back({id, std::move(what), budget, std::move(body)});
  };

  add(1, "pattern family is 3-regular bipartite with 8k*ell vertices and 12k*ell edges", 1.0,
      [](std::string& note) {
        for (int k = 1; k <= 3; ++k)
          for (int ell = 2; ell <= 5; ++ell) {
            HklGraph h = build_hkl(k, ell);
            if (h.graph.n != 8 * k * ell || h.graph.edge_count != 12LL * k * ell) {
              note = "size mismatch at k=" + std::to_string(k) + " ell=" + std::to_string(ell);
              return false;
            }
            for (int v = 0; v < h.graph.n; ++v)
              if (h.graph.degree(v) != 3) {
                note = "non-cubic vertex at k=" + std::to_string(k);
                return false;
              }
            if (!bipartition(h.graph).bipartite) {
              note = "bipartition failed at k=" + std::to_string(k);
              return false;
            }
          }
        return true;
      });

  add(2, "trace-based closed walk counts equal walk-relaxation brute force (50+ graphs)", 10.0,
      [](std::string& note) {
        int checked = 0;
        for (std::uint64_t seed = 1; seed <= 60; ++seed) {
          int n = 3 + static_cast<int>(seed % 6);
          double p = 0.3 + 0.1 * static_cast<double>(seed % 5);
          Graph g = testutil::random_graph(n, p, seed);
          for (int k = 1; k <= 4; ++k) {
            if (hom_cycle_count(g, k) != hom_count_bruteforce(g, k, 0)) {
              note = "mismatch at seed " + std::to_string(seed) + " k=" + std::to_string(k);
              return false;
            }
          }
          ++checked;
        }
        note = std::to_string(checked) + " graphs";
        return checked >= 50;
      });

  add(3, "closed-walk lower bound (2e/n)^{2k} holds on 100 seeded random graphs", 30.0,
      [](std::string& note) {
        int graphs = 0;
        for (std::uint64_t seed = 1; seed <= 100; ++seed) {
          int n = 5 + static_cast<int>(seed % 26);
          double p = 0.1 + 0.08 * static_cast<double>(seed % 10);
          Graph g = testutil::random_graph(n, p, seed * 7 + 1);
          for (int k : {2, 3}) {
            BoundReport r = check_sidorenko(g, k);
            if (!r.satisfied || !r.exact_comparison) {
              note = "violation at seed " + std::to_string(seed) + " k=" + std::to_string(k);
              return false;
            }
          }
          ++graphs;
        }
        note = std::to_string(graphs) + " graphs, k in {2,3}";
        return graphs >= 100;
      });

  add(4, "alternating walk count beats (st)^k on 50 bipartite graphs with degree floors", 30.0,
      [](std::string& note) {
        int checked = 0;
        for (std::uint64_t seed = 1; seed <= 50; ++seed) {
          int a = 3 + static_cast<int>(seed % 4);
          int b = 3 + static_cast<int>((seed / 4) % 4);
          Graph g = random_bipartite_min_degree(a, b, 0.4, seed * 13 + 5);
          std::vector<int> X(static_cast<size_t>(a)), Y(static_cast<size_t>(b));
          for (int i = 0; i < a; ++i) X[static_cast<size_t>(i)] = i;
          for (int j = 0; j < b; ++j) Y[static_cast<size_t>(j)] = a + j;
          for (int k : {1, 2, 3}) {
            BoundReport r = check_min_degree_hom_bound(g, X, Y, k);
            if (!r.satisfied) {
              note = "violation at seed " + std::to_string(seed) + " k=" + std::to_string(k);
              return false;
            }
          }
          ++checked;
        }
        note = std::to_string(checked) + " graphs";
        return checked >= 50;
      });

  add(5, "conflict-pair cycle counts match independent tuple scans with checked fan-outs", 60.0,
      [](std::string& note) {
        // edge conflicts: share exactly one endpoint
        auto share_one = [](std::pair<int, int> e, std::pair<int, int> f) {
          int shared = (e.first == f.first) + (e.first == f.second) +
                       (e.second == f.first) + (e.second == f.second);
          return shared == 1;
        };
        std::vector<Graph> hosts;
        for (std::uint64_t seed = 31; seed <= 35; ++seed)
          hosts.push_back(testutil::random_graph(5 + static_cast<int>(seed % 4), 0.5, seed));
        hosts.push_back(testutil::complete_graph(5));
        hosts.push_back(testutil::complete_bipartite(3, 3));
        for (size_t hi = 0; hi < hosts.size(); ++hi) {
          const Graph& g = hosts[hi];
          if (g.edge_count == 0) continue;
          auto norm = [](int u, int v) { return std::make_pair(std::min(u, v), std::max(u, v)); };
          // measure the least safe fan-out cap, then hand it to the lemma
          long long s = 0;
          for (auto uv : g.edges())
            for (int w = 0; w < g.n; ++w) {
              long long fan = 0;
              for (int z : g.adj[static_cast<size_t>(w)])
                if (share_one(uv, norm(w, z))) ++fan;
              s = std::max(s, fan);
            }
          BigInt expected = 0;
          scan_hom_cycles(g, 2, [&](const std::vector<int>& t) {
            for (int i = 0; i < 4; ++i) {
              auto ei = norm(t[static_cast<size_t>(i)], t[static_cast<size_t>((i + 1) % 4)]);
              for (int j = i + 1; j < 4; ++j)
                if (share_one(ei, norm(t[static_cast<size_t>(j)],
                                       t[static_cast<size_t>((j + 1) % 4)]))) {
                  expected += 1;
                  return;
                }
            }
          });
          BoundReport r = count_conflicting_edge_cycles(
              g, 2, ConflictRelation::share_one_vertex_edge(), std::max<long long>(s, 1));
          if (r.measured != expected) {
            note = "edge-conflict count mismatch on host " + std::to_string(hi);
            return false;
          }
          if (!r.satisfied) {
            note = "edge-conflict bound violated on host " + std::to_string(hi);
            return false;
          }
        }

        // vertex conflicts: repeated vertex in an alternating cycle
        for (std::uint64_t seed = 41; seed <= 46; ++seed) {
          int a = 3 + static_cast<int>(seed % 2);
          int b = 3 + static_cast<int>((seed / 2) % 2);
          Graph g = random_bipartite_min_degree(a, b, 0.5, seed);
          std::vector<int> X1, X2;
          for (int i = 0; i < a; ++i) X1.push_back(i);
          for (int j = 0; j < b; ++j) X2.push_back(a + j);
          long long D1 = 0, D2 = 0;
          for (int v : X1) D1 = std::max<long long>(D1, g.degree(v));
          for (int v : X2) D2 = std::max<long long>(D2, g.degree(v));
          std::vector<char> in1(static_cast<size_t>(g.n), 0), in2(static_cast<size_t>(g.n), 0);
          for (int v : X1) in1[static_cast<size_t>(v)] = 1;
          for (int v : X2) in2[static_cast<size_t>(v)] = 1;
          BigInt expected = 0;
          scan_hom_cycles(g, 2, [&](const std::vector<int>& t) {
            bool phase1 = true, phase2 = true;
            for (int i = 0; i < 4; ++i) {
              bool odd = (i % 2) != 0;
              char c1 = odd ? in2[static_cast<size_t>(t[static_cast<size_t>(i)])]
                            : in1[static_cast<size_t>(t[static_cast<size_t>(i)])];
              char c2 = odd ? in1[static_cast<size_t>(t[static_cast<size_t>(i)])]
                            : in2[static_cast<size_t>(t[static_cast<size_t>(i)])];
              phase1 = phase1 && c1;
              phase2 = phase2 && c2;
            }
            if (!phase1 && !phase2) return;
            for (int i = 0; i < 4; ++i)
              for (int j = i + 1; j < 4; ++j)
                if (t[static_cast<size_t>(i)] == t[static_cast<size_t>(j)]) {
                  expected += 1;
                  return;
                }
          });
          BoundReport r = count_conflicting_vertex_cycles(
              g, 2, X1, X2, ConflictRelation::equality_vertex(), D1, D2, 1, 1);
          if (r.measured != expected) {
            note = "vertex-conflict count mismatch at seed " + std::to_string(seed);
            return false;
          }
          if (!r.satisfied) {
            note = "vertex-conflict bound violated at seed " + std::to_string(seed);
            return false;
          }
        }
        return true;
      });

  add(6, "4-cycle cleaning certificates on 50 random graphs plus the constructed instance", 60.0,
      [](std::string& note) {
        for (std::uint64_t seed = 1; seed <= 50; ++seed) {
          int n = 20 + static_cast<int>(seed % 41);
          double p = 0.08 + 0.05 * static_cast<double>(seed % 5);
          Graph g = testutil::random_graph(n, p, seed * 3 + 17);
          CleanResult r = clean_c4s(g);
          if (!r.certificate_ok) {
            note = "certificate failed at seed " + std::to_string(seed);
            return false;
          }
          if (2 * r.graph.edge_count < g.edge_count) {
            note = "more than half the edges removed at seed " + std::to_string(seed);
            return false;
          }
          if (4 * static_cast<long long>(r.removals.size()) > g.edge_count + 3) {
            note = "removal cap violated at seed " + std::to_string(seed);
            return false;
          }
          // recount independently and test against the cleaned-graph threshold
          C4Census after = c4_census(r.graph);
          if (after.total != r.q_after) {
            note = "q_after recount mismatch at seed " + std::to_string(seed);
            return false;
          }
          long long worst = 0;
          for (const auto& [e, c] : after.per_edge) worst = std::max(worst, c);
          if (r.graph.edge_count > 0) {
            double threshold = 16.0 * std::log(static_cast<double>(g.n)) /
                               static_cast<double>(r.graph.edge_count) *
                               static_cast<double>(after.total);
            if (!approx_leq(static_cast<double>(worst), threshold)) {
              note = "per-edge census above threshold at seed " + std::to_string(seed);
              return false;
            }
          }
        }
        Graph g = one_removal_instance();
        CleanResult r = clean_c4s(g);
        if (r.removals.size() != 1 || r.removals[0].u != 36 || r.removals[0].v != 37) {
          note = "constructed instance did not remove exactly the planted edge";
          return false;
        }
        return true;
      });

  add(7, "good collections prune to non-empty nice collections; pruning always yields nice", 30.0,
      [](std::string& note) {
        struct GoodCase {
          CycleCollection c;
          double beta;
          double s;
        };
        std::vector<GoodCase> good_cases;
        good_cases.push_back({product_family(2), 8.0, 2.0});
        good_cases.push_back({product_family(4), 16.0, 4.0});
        for (size_t i = 0; i < good_cases.size(); ++i) {
          auto&[c, beta, s] = good_cases[i];
          GoodnessCertificate cert = check_good(c, beta, s);
          if (!cert.verdict) {
            note = "constructed collection " + std::to_string(i) + " is not good";
            return false;
          }
          PruneResult pr = prune_to_nice(c, beta, s);
          if (pr.collection.tuples.empty()) {
            note = "pruning emptied a good collection";
            return false;
          }
          if (!check_nice(pr.collection, beta).verdict) {
            note = "pruned good collection is not nice";
            return false;
          }
          for (const auto& d : pr.deletions)
            if (d.at("rule") != 1) {
              note = "proportion rule fired on a good collection";
              return false;
            }
        }
        // arbitrary collections: output must always be nice, and a subset
        auto host = std::make_shared<const Graph>(testutil::complete_graph(14));
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
          Rng rng(seed * 101);
          CycleCollection c;
          c.k = 1;
          c.host = host;
          std::set<std::vector<int>> seen;
          while (c.tuples.size() < 30) {
            std::vector<int> pool(14);
            for (int i = 0; i < 14; ++i) pool[static_cast<size_t>(i)] = i;
            for (int i = 13; i > 0; --i)
              std::swap(pool[static_cast<size_t>(i)],
                        pool[static_cast<size_t>(rng() % static_cast<unsigned>(i + 1))]);
            pool.resize(8);
            if (seen.insert(pool).second) c.tuples.push_back(pool);
          }
          std::sort(c.tuples.begin(), c.tuples.end());
          PruneResult pr = prune_to_nice(c, 0.7, 1.0);
          if (!check_nice(pr.collection, 0.7).verdict) {
            note = "pruned arbitrary collection is not nice at seed " + std::to_string(seed);
            return false;
          }
          std::set<std::vector<int>> input(c.tuples.begin(), c.tuples.end());
          for (const auto& t : pr.collection.tuples)
            if (!input.count(t)) {
              note = "pruned output is not a subset at seed " + std::to_string(seed);
              return false;
            }
        }
        // a family engineered so the proportion rule itself must fire
        {
          CycleCollection c;
          c.k = 1;
          c.host = std::make_shared<const Graph>(testutil::complete_graph(15));
          for (int b = 0; b < 5; ++b) c.tuples.push_back({0, 10 + b, 2, 3, 4, 5, 6, 7});
          std::sort(c.tuples.begin(), c.tuples.end());
          PruneResult pr = prune_to_nice(c, 0.5, 1.0);
          bool rule2 = false;
          for (const auto& d : pr.deletions)
            if (d.at("rule") == 2) rule2 = true;
          if (!rule2) {
            note = "proportion rule never fired on the skewed family";
            return false;
          }
          if (!check_nice(pr.collection, 0.5).verdict) {
            note = "skewed family prune output is not nice";
            return false;
          }
        }
        return true;
      });

  add(8, "column weave and unweave are mutually inverse on 1000 random pairs", 1.0,
      [](std::string& note) {
        Rng rng(424242);
        for (int trial = 0; trial < 1000; ++trial) {
          int k = 1 + static_cast<int>(rng() % 3);
          std::vector<int> y(static_cast<size_t>(4 * k)), z(static_cast<size_t>(4 * k));
          for (auto& v : y) v = static_cast<int>(rng() % 4096);
          for (auto& v : z) v = static_cast<int>(rng() % 4096);
          auto [y2, z2] = unweave(weave(y, z, k), k);
          if (y2 != y || z2 != z) {
            note = "round trip failed at trial " + std::to_string(trial);
            return false;
          }
        }
        return true;
      });

  add(9, "planted pattern recovered end to end on at least 4 of 5 noisy hosts", 300.0,
      [](std::string& note) {
        HklGraph pattern = build_hkl(1, 2);
        const std::array<std::uint64_t, 5> seeds = {1, 2, 3, 4, 5};
        int found = 0;
        std::string detail;
        for (std::uint64_t seed : seeds) {
          HostSpec spec;
          spec.model = "planted-pattern-plus-noise";
          spec.n = 40;
          spec.p = 0.05;
          spec.seed = seed;
          spec.pattern = pattern.graph;
          HostResult host = generate_host(spec);

          PipelineParams params;
          params.epsilon = 0.15;
          params.k = 1;
          params.ell = 2;
          params.seed = seed;
          params.branch_override = "few";
          params.tau_override = 4;
          params.beta_override = 8.0;
          PipelineResult r = run_pipeline(host.graph, params);
          if (!r.found) {
            detail += " seed" + std::to_string(seed) + ":" + r.failed_stage;
            continue;
          }
          if (!verify_embedding(*r.embedding, host.graph)) {
            note = "returned embedding failed verification at seed " + std::to_string(seed);
            return false;
          }
          EmbedResult brute = embed_bruteforce(pattern.graph, host.graph, 0);
          if (brute.status != SearchStatus::Found) {
            note = "reference search missed the planted pattern at seed " + std::to_string(seed);
            return false;
          }
          ++found;
        }
        note = std::to_string(found) + "/5 found" + detail;
        return found >= 4;
      });

  add(10, "exhaustive extremal oracle: ex(3,C4)=3 and ex(4,C4)=4 under both strategies", 60.0,
      [](std::string& note) {
        Graph c4 = testutil::cycle_graph(4);
        const std::array<std::pair<int, long long>, 2> expect = {{{3, 3}, {4, 4}}};
        for (auto [n, value] : expect) {
          TuranRecord down = turan_exhaustive(c4, n, "descending");
          TuranRecord up = turan_exhaustive(c4, n, "ascending");
          if (down.value != value || up.value != value) {
            note = "wrong value at n=" + std::to_string(n);
            return false;
          }
          if (embed_bruteforce(c4, down.witness, 0).status != SearchStatus::AbsentExhausted ||
              embed_bruteforce(c4, up.witness, 0).status != SearchStatus::AbsentExhausted) {
            note = "witness contains the pattern at n=" + std::to_string(n);
            return false;
          }
        }
        return true;
      });

  add(11, "exact tree density inequalities over all trees on at most 9 vertices", 10.0,
      [](std::string& note) {
        std::vector<Graph> trees = all_trees_up_to(9);
        // 1,1,2,3,6,11,23,47 free trees on 2..9 vertices
        if (trees.size() != 94) {
          note = "tree enumeration produced " + std::to_string(trees.size()) + " trees, not 94";
          return false;
        }
        std::map<int, int> qualifying;
        for (int r : {3, 4}) {
          for (const Graph& t : trees) {
            bool eligible = true;
            for (int v = 0; v < t.n; ++v)
              if (t.degree(v) > 1 && t.degree(v) < r) {
                eligible = false;
                break;
              }
            if (!eligible) continue;
            TreeStats stats = rooted_power_density(t, r);
            if (!stats.leaf_inequality || !stats.strict_inequality) {
              note = "density inequality violated for a tree on " + std::to_string(t.n) +
                     " vertices at r=" + std::to_string(r);
              return false;
            }
            ++qualifying[r];
          }
        }
        note = std::to_string(qualifying[3]) + " trees at r=3, " + std::to_string(qualifying[4]) +
               " at r=4";
        return qualifying[3] >= 10 && qualifying[4] >= 5;
      });

  add(12, "every command line report is byte-identical across two fixed-seed runs", 120.0,
      [](std::string& note) {
#ifndef TURAN_CLI_PATH
        note = "TURAN_CLI_PATH not defined";
        return false;
#else
        const std::string cli = TURAN_CLI_PATH;
        if (!fs::exists(cli)) {
          note = "command line binary missing: " + cli;
          return false;
        }
        fs::path root = fs::temp_directory_path() / "turan_acceptance_cli";
        std::error_code ec;
        fs::remove_all(root, ec);
        fs::create_directories(root / "a");
        fs::create_directories(root / "b");

        // Reports embed their configured paths, so both runs use identical
        // relative filenames and differ only in working directory.
        struct Step {
          std::string args;
          std::vector<std::string> artifacts;
        };
        std::vector<Step> steps = {
            {"gen-hkl --k 1 --ell 2 --format json --out hkl.json", {"hkl.json"}},
            {"gen-hkl --k 1 --ell 2 --format edgelist --out hkl.el", {"hkl.el"}},
            {"gen-host --model erdos-renyi --n 24 --p 0.25 --seed 11 --out er.el "
             "--report er.json",
             {"er.el", "er.json"}},
            {"gen-host --model cycle --n 6 --out c6.el", {"c6.el"}},
            {"gen-host --model cycle --n 4 --out c4.el", {"c4.el"}},
            {"gen-host --model planted-pattern-plus-noise --n 40 --p 0.05 --seed 3 "
             "--pattern-k 1 --pattern-ell 2 --out planted.el --report planted.json",
             {"planted.el", "planted.json"}},
            {"census --graph er.el --k 2 --brute-force --jobs 1 --csv census.csv "
             "--out census.json",
             {"census.csv", "census.json"}},
            {"clean --graph er.el --out cleaned.el --log clean.json", {"cleaned.el", "clean.json"}},
            {"regularize --graph er.el --alpha 0.45 --variant random --seed 9 "
             "--attempts 8 --out reg.el --report reg.json",
             {"reg.el", "reg.json"}},
            {"build-collection --graph hkl.el --k 1 --epsilon 0.15 --branch few --tau 4 "
             "--beta 8 --out coll.json --report coll_rep.json",
             {"coll.json", "coll_rep.json"}},
            {"check-good --collection coll.json --graph hkl.el --beta 8 --s 4 --out good.json",
             {"good.json"}},
            {"prune-nice --collection coll.json --graph hkl.el --beta 8 --s 4 "
             "--out pruned.json --report prune.json",
             {"pruned.json", "prune.json"}},
            {"pipeline --graph hkl.el --k 1 --ell 2 --epsilon 0.15 --branch-override few "
             "--tau 4 --beta 8 --seed 5 --report pipe.json",
             {"pipe.json"}},
            {"verify-embedding --graph hkl.el --embedding pipe.json --out verify.json",
             {"verify.json"}},
            {"oracle embed --pattern c4.el --host er.el --out oembed.json", {"oembed.json"}},
            {"oracle hom --graph c6.el --k 2 --jobs 1 --tuple-scan --out ohom.json",
             {"ohom.json"}},
            {"oracle turan --pattern c4.el --n 4 --strategy both --out oturan.json",
             {"oturan.json"}},
            {"check-lemmas --graph er.el --k 2 --out lemmas.json", {"lemmas.json"}},
        };

        const std::array<std::string, 2> dirs = {(root / "a").string(), (root / "b").string()};
        for (const Step& step : steps) {
          std::array<int, 2> codes{};
          for (int runix = 0; runix < 2; ++runix)
            codes[static_cast<size_t>(runix)] =
                run_cmd("cd " + dirs[static_cast<size_t>(runix)] + " && " + cli + " " +
                        step.args + " >/dev/null 2>&1");
          if (codes[0] != codes[1] || codes[0] < 0 || codes[0] > 1) {
            note = "exit codes diverged or errored for: " + step.args + " (" +
                   std::to_string(codes[0]) + " vs " + std::to_string(codes[1]) + ")";
            return false;
          }
          for (const std::string& artifact : step.artifacts) {
            std::string a = slurp(root / "a" / artifact);
            std::string b = slurp(root / "b" / artifact);
            if (a.empty() || a != b) {
              note = "artifact " + artifact + " differs or is empty";
              return false;
            }
          }
        }
        fs::remove_all(root, ec);
        return true;
#endif
      });

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string note;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.body(note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
      ok = false;
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_budget = elapsed <= c.budget_seconds;
    bool pass = ok && in_budget;
    if (!pass) ++failures;
    char timing[64];
    std::snprintf(timing, sizeof(timing), "%.2fs of %.0fs", elapsed, c.budget_seconds);
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.what << " ["
              << timing << "]";
    if (!note.empty()) std::cout << " (" << note << ")";
    if (ok && !in_budget) std::cout << " (over time budget)";
    std::cout << "\n";
  }
  std::cout << (failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << " ("
            << (criteria.size() - static_cast<size_t>(failures)) << "/" << criteria.size()
            << ")\n";
  return failures == 0 ? 0 : 1;
}
