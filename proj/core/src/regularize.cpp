#include "turan/regularize.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "turan/errors.hpp"
#include "turan/rng.hpp"

namespace turan {

namespace {

double regularity_constant(double alpha) {
  return 10.0 * std::pow(2.0, 1.0 / (alpha * alpha) + 1.0);
}

void recompute_flags(RegularizationResult& r, const Graph& original, bool variant_targets) {
  double n = static_cast<double>(original.n);
  r.m = r.subgraph.n;
  double m = static_cast<double>(r.m);
  double a = r.alpha;
  r.precondition_edges_ok =
      static_cast<double>(original.edge_count) >= std::pow(n, 1.0 + a);
  r.vertex_count_ok = m >= std::pow(n, a * (1.0 - a) / (1.0 + a));
  if (variant_targets) {
    r.edge_lower_ok = static_cast<double>(r.subgraph.edge_count) >= std::pow(m, 1.0 + a) / 3.0;
    r.degree_upper_ok = static_cast<double>(r.subgraph.max_degree()) <= r.K * std::pow(m, a);
  } else {
    r.edge_lower_ok =
        static_cast<double>(r.subgraph.edge_count) >= 0.4 * std::pow(m, 1.0 + a);
    r.degree_upper_ok = r.subgraph.max_degree() <= r.K * r.subgraph.min_degree();
  }
}

}  // namespace

RegularizationResult almost_regular_subgraph(const Graph& g, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw InputError("alpha must lie in (0,1)");
  if (g.edge_count == 0) throw InputError("almost_regular_subgraph requires at least one edge");

  const double K = regularity_constant(alpha);

  // Min-degree peeling order, lowest id on ties.
  std::vector<long long> deg(static_cast<size_t>(g.n));
  for (int v = 0; v < g.n; ++v) deg[v] = g.degree(v);
  std::vector<char> alive(static_cast<size_t>(g.n), 1);
  std::set<std::pair<long long, int>> heap;
  for (int v = 0; v < g.n; ++v) heap.insert({deg[v], v});

  long long cur_edges = g.edge_count;
  // Snapshot the qualifying prefix with the most edges; ties keep the larger
  // (earlier) subgraph.
  long long best_edges = -1;
  int best_t = -1;
  std::vector<int> removal_order;
  removal_order.reserve(static_cast<size_t>(g.n));

  auto eval_current = [&](int t) {
    long long mn = -1, mx = 0;
    for (int v = 0; v < g.n; ++v) {
      if (!alive[v]) continue;
      mn = (mn < 0) ? deg[v] : std::min(mn, deg[v]);
      mx = std::max(mx, deg[v]);
    }
    if (mn < 0) return;
    if (static_cast<double>(mx) <= K * static_cast<double>(mn) && cur_edges > best_edges) {
      best_edges = cur_edges;
      best_t = t;
    }
  };

  eval_current(0);
  for (int t = 1; t <= g.n; ++t) {
    auto it = heap.begin();
    int victim = it->second;
    heap.erase(it);
    alive[victim] = 0;
    removal_order.push_back(victim);
    for (int w : g.adj[victim]) {
      if (!alive[w]) continue;
      heap.erase({deg[w], w});
      --deg[w];
      heap.insert({deg[w], w});
      --cur_edges;
    }
    if (t < g.n) eval_current(t);
  }
  // A bare-edge prefix always qualifies, so best_t is set for any e >= 1.
  std::vector<char> keep(static_cast<size_t>(g.n), 1);
  for (int t = 0; t < best_t; ++t) keep[removal_order[t]] = 0;
  std::vector<int> vertices;
  for (int v = 0; v < g.n; ++v)
    if (keep[v]) vertices.push_back(v);

  RegularizationResult r;
  r.alpha = alpha;
  r.K = K;
  r.subgraph = induced_subgraph(g, vertices);
  r.vertex_map = vertices;
  r.succeeded = true;
  recompute_flags(r, g, false);
  return r;
}

RegularizationResult bounded_degree_subgraph(const Graph& g, double alpha, std::uint64_t seed,
                                             int max_attempts) {
  if (max_attempts < 1) throw InputError("max_attempts must be >= 1");
  RegularizationResult base = almost_regular_subgraph(g, alpha);
  const Graph& gp = base.subgraph;
  double m = static_cast<double>(gp.n);
  double target_edges = std::pow(m, 1.0 + alpha) / 3.0;
  double degree_cap = base.K * std::pow(m, alpha);
  double keep = 0.4 * std::pow(m, 1.0 + alpha) / static_cast<double>(gp.edge_count);

  auto finish = [&](Graph sub, int attempts, bool success) {
    RegularizationResult r;
    r.alpha = alpha;
    r.K = base.K;
    r.subgraph = std::move(sub);
    r.vertex_map = base.vertex_map;
    r.keep_probability = std::min(1.0, keep);
    r.attempts_used = attempts;
    r.succeeded = success;
    recompute_flags(r, g, true);
    return r;
  };

  if (keep >= 1.0) {
    // The clamp makes the subsample deterministic: the whole subgraph.
    Graph sub = gp;
    bool ok = static_cast<double>(sub.edge_count) >= target_edges &&
              static_cast<double>(sub.max_degree()) <= degree_cap;
    return finish(std::move(sub), 1, ok);
  }

  Rng rng(seed);
  auto all_edges = gp.edges();
  Graph best;
  int best_rank = -1;
  long long best_edge_count = -1;
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    std::vector<std::pair<int, int>> kept;
    for (auto e : all_edges)
      if (canonical53(rng) < keep) kept.push_back(e);
    Graph sub = from_edge_list(gp.n, kept);
    bool edges_ok = static_cast<double>(sub.edge_count) >= target_edges;
    bool degree_ok = static_cast<double>(sub.max_degree()) <= degree_cap;
    if (edges_ok && degree_ok) return finish(std::move(sub), attempt, true);
    int rank = (edges_ok ? 1 : 0) + (degree_ok ? 1 : 0);
    if (rank > best_rank || (rank == best_rank && sub.edge_count > best_edge_count)) {
      best_rank = rank;
      best_edge_count = sub.edge_count;
      best = std::move(sub);
    }
  }
  return finish(std::move(best), max_attempts, false);
}

BiregularExtract biregular_extract(const Graph& g) {
  if (g.edge_count < 1) throw InputError("biregular_extract requires at least one edge");

  // Dyadic degree classes over vertices of positive degree.
  auto bucket_of = [](int degree) {
    int b = 0;
    while ((1 << b) < degree) ++b;  // ceil(log2 d), with d=1 -> 0
    return b;
  };
  std::vector<std::vector<int>> buckets;
  for (int v = 0; v < g.n; ++v) {
    if (g.degree(v) == 0) continue;
    int b = bucket_of(g.degree(v));
    if (static_cast<int>(buckets.size()) <= b) buckets.resize(static_cast<size_t>(b) + 1);
    buckets[b].push_back(v);
  }
  std::vector<std::vector<int>> classes;
  for (auto& b : buckets)
    if (!b.empty()) classes.push_back(std::move(b));

  // Candidate side pairs: all distinct class pairs plus a two-way split of
  // each single class (proper 2-coloring if its induced subgraph is bipartite,
  // greedy max-cut in id order otherwise).
  std::vector<std::pair<std::vector<int>, std::vector<int>>> candidates;
  for (size_t i = 0; i < classes.size(); ++i)
    for (size_t j = i + 1; j < classes.size(); ++j) candidates.emplace_back(classes[i], classes[j]);
  for (const auto& cls : classes) {
    if (cls.size() < 2) continue;
    Graph ind = induced_subgraph(g, cls);
    Bipartition bp = bipartition(ind);
    std::vector<int> a, b;
    if (bp.bipartite) {
      for (size_t i = 0; i < cls.size(); ++i)
        (bp.color[i] == 0 ? a : b).push_back(cls[i]);
    } else {
      std::vector<int> side(static_cast<size_t>(g.n), -1);
      for (int v : cls) {
        int toward_a = 0, toward_b = 0;
        for (int w : g.adj[v]) {
          if (side[w] == 0) ++toward_a;
          if (side[w] == 1) ++toward_b;
        }
        side[v] = (toward_a <= toward_b) ? 0 : 1;
        (side[v] == 0 ? a : b).push_back(v);
      }
    }
    if (!a.empty() && !b.empty()) candidates.emplace_back(std::move(a), std::move(b));
  }
  if (candidates.empty()) throw InputError("biregular_extract: no usable degree class pair");

  const double lnn = std::log(std::max(2, g.n));
  const double peel_denom = 256.0 * lnn * lnn;

  BiregularExtract best;
  long long best_cross = -1;
  for (auto& [ca, cb] : candidates) {
    std::vector<char> in_a(static_cast<size_t>(g.n), 0), in_b(static_cast<size_t>(g.n), 0);
    for (int v : ca) in_a[v] = 1;
    for (int v : cb) in_b[v] = 1;
    long long da = 0, db = 0;
    for (int v : ca) da = std::max<long long>(da, g.degree(v));
    for (int v : cb) db = std::max<long long>(db, g.degree(v));
    double ta = static_cast<double>(da) / peel_denom;
    double tb = static_cast<double>(db) / peel_denom;

    // Peel until both sides' cross degrees are stable above their thresholds.
    std::vector<long long> cross_deg(static_cast<size_t>(g.n), 0);
    for (int v = 0; v < g.n; ++v) {
      if (!in_a[v] && !in_b[v]) continue;
      for (int w : g.adj[v])
        if ((in_a[v] && in_b[w]) || (in_b[v] && in_a[w])) ++cross_deg[v];
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 0; v < g.n; ++v) {
        if (!in_a[v] && !in_b[v]) continue;
        double threshold = in_a[v] ? ta : tb;
        if (static_cast<double>(cross_deg[v]) < threshold) {
          for (int w : g.adj[v])
            if ((in_a[v] && in_b[w]) || (in_b[v] && in_a[w])) --cross_deg[w];
          in_a[v] = in_b[v] = 0;
          changed = true;
        }
      }
    }

    long long cross = 0;
    std::vector<std::pair<int, int>> cross_edges;
    for (auto [u, v] : g.edges())
      if ((in_a[u] && in_b[v]) || (in_b[u] && in_a[v])) {
        ++cross;
        cross_edges.emplace_back(u, v);
      }
    if (cross > best_cross) {
      best_cross = cross;
      best = BiregularExtract{};
      for (int v = 0; v < g.n; ++v) {
        if (in_a[v]) best.X1.push_back(v);
        if (in_b[v]) best.X2.push_back(v);
      }
      best.D1 = da;
      best.D2 = db;
      best.peel_threshold1 = ta;
      best.peel_threshold2 = tb;
      best.subgraph = from_edge_list(g.n, cross_edges);
    }
  }
  if (best_cross < 1) throw InputError("biregular_extract: peeling removed every cross edge");

  best.achieved_min1 = -1;
  for (int v : best.X1) {
    long long d = best.subgraph.degree(v);
    best.achieved_min1 = best.achieved_min1 < 0 ? d : std::min(best.achieved_min1, d);
    best.achieved_max1 = std::max(best.achieved_max1, d);
  }
  best.achieved_min2 = -1;
  for (int v : best.X2) {
    long long d = best.subgraph.degree(v);
    best.achieved_min2 = best.achieved_min2 < 0 ? d : std::min(best.achieved_min2, d);
    best.achieved_max2 = std::max(best.achieved_max2, d);
  }
  best.d_over_4 = 2.0 * static_cast<double>(g.edge_count) / static_cast<double>(g.n) / 4.0;
  return best;
}

}  // namespace turan
