#include "turan/builder.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include "turan/census.hpp"
#include "turan/errors.hpp"

namespace turan {

namespace {

void validate_params(const BuilderParams& p) {
  if (!(p.epsilon > 0.0 && p.epsilon < 1.0 / 6.0))
    throw InputError("epsilon must lie in (0, 1/6)");
  if (p.k < 1) throw InputError("k must be at least 1");
}

long long effective_budget(long long budget) {
  return budget <= 0 ? std::numeric_limits<long long>::max() : budget;
}

// 2^{i-1} <= value < 2^i
int dyadic_bucket(long long value) {
  int i = 0;
  while ((1LL << i) <= value) ++i;
  return i;
}

double resolve_beta(const BuilderParams& p, int n) {
  if (p.beta_target > 0.0) return p.beta_target;
  return std::pow(static_cast<double>(std::max(1, n)), -p.epsilon / 2.0);
}

// Labeled cycle enumeration with rotation deduplication disabled. A negative
// tau disables the distance-two codegree pruning (used for the auxiliary
// graph's 4k-cycles).
struct LabeledCycleEnum {
  const Graph& g;
  int length;
  long long tau;
  long long budget;
  long long nodes = 0;
  bool truncated = false;
  std::vector<std::vector<int>> out;
  std::vector<char> used;
  std::vector<int> path;

  LabeledCycleEnum(const Graph& graph, int len, long long t, long long b)
      : g(graph), length(len), tau(t), budget(b), used(static_cast<size_t>(graph.n), 0) {}

  bool codegree_ok(int u, int v) const { return tau < 0 || codegree(g, u, v) <= tau; }

  void run() {
    for (int start = 0; start < g.n && !truncated; ++start) {
      path.assign(1, start);
      used[start] = 1;
      extend();
      used[start] = 0;
    }
  }

  void extend() {
    if (++nodes > budget) {
      truncated = true;
      return;
    }
    int depth = static_cast<int>(path.size());
    if (depth == length) {
      if (g.has_edge(path.back(), path.front()) && codegree_ok(path[length - 2], path[0]) &&
          codegree_ok(path[length - 1], path[1]))
        out.push_back(path);
      return;
    }
    for (int next : g.adj[path.back()]) {
      if (used[next]) continue;
      if (depth >= 2 && !codegree_ok(path[depth - 2], next)) continue;
      used[next] = 1;
      path.push_back(next);
      extend();
      path.pop_back();
      used[next] = 0;
      if (truncated) return;
    }
  }
};

}  // namespace

EnumResult small_codegree_cycles(std::shared_ptr<const Graph> g, int k, long long tau,
                                 long long budget) {
  if (!g) throw InputError("small_codegree_cycles requires a host graph");
  if (k < 1) throw InputError("k must be at least 1");
  if (tau < 1) throw InputError("codegree cap tau must be at least 1");

  LabeledCycleEnum walker(*g, 8 * k, tau, effective_budget(budget));
  walker.run();
  std::sort(walker.out.begin(), walker.out.end());

  EnumResult result;
  result.collection.k = k;
  result.collection.tuples = std::move(walker.out);
  result.collection.host = std::move(g);
  result.truncated = walker.truncated;
  result.nodes = walker.nodes;
  return result;
}

TripleFamily find_c4_anchor(std::shared_ptr<const Graph> g) {
  if (!g) throw InputError("find_c4_anchor requires a host graph");
  const Graph& h = *g;

  // Labeled 4-cycle walks (v, x, y, z) with d(x,z) <= d(v,y), grouped by v.
  std::vector<std::vector<std::array<int, 3>>> per_vertex(static_cast<size_t>(h.n));
  for (int v = 0; v < h.n; ++v) {
    for (int x : h.adj[v]) {
      for (int y : h.adj[x]) {
        if (y == v) continue;
        for (int z : h.adj[y]) {
          if (z == x || z == v) continue;
          if (!h.has_edge(z, v)) continue;
          if (codegree(h, x, z) <= codegree(h, v, y))
            per_vertex[static_cast<size_t>(v)].push_back({x, y, z});
        }
      }
    }
  }

  int anchor = -1;
  size_t best = 0;
  for (int v = 0; v < h.n; ++v) {
    if (per_vertex[static_cast<size_t>(v)].size() > best) {
      best = per_vertex[static_cast<size_t>(v)].size();
      anchor = v;
    }
  }
  if (anchor < 0) throw NoAnchorError("graph has no 4-cycle to anchor a triple family");

  // Largest dyadic d(v,y) bucket, ties to the smaller scale.
  std::map<int, std::vector<std::array<int, 3>>> buckets;
  for (const auto& t : per_vertex[static_cast<size_t>(anchor)])
    buckets[dyadic_bucket(codegree(h, anchor, t[1]))].push_back(t);
  int chosen = -1;
  size_t bucket_size = 0;
  for (const auto& [i, triples] : buckets) {
    if (triples.size() > bucket_size) {
      bucket_size = triples.size();
      chosen = i;
    }
  }

  TripleFamily family;
  family.anchor = anchor;
  family.scale = std::pow(2.0, chosen);
  family.host = std::move(g);
  std::set<std::array<int, 3>> closed;
  for (const auto& t : buckets[chosen]) {
    closed.insert(t);
    closed.insert({t[2], t[1], t[0]});
  }
  family.triples.assign(closed.begin(), closed.end());

  std::map<int, std::set<int>> ys_per_x;
  for (const auto& [x, y, z] : family.triples) {
    if (!(closed.count({z, y, x})))
      throw std::logic_error("triple family lost its reversal closure");
    if (x == y || y == z || x == z || x == anchor || y == anchor || z == anchor ||
        !h.has_edge(anchor, x) || !h.has_edge(x, y) || !h.has_edge(y, z) ||
        !h.has_edge(z, anchor))
      throw std::logic_error("triple family member does not close a 4-cycle with the anchor");
    if (static_cast<double>(codegree(h, anchor, y)) > family.scale ||
        static_cast<double>(codegree(h, x, z)) > family.scale)
      throw std::logic_error("triple family member exceeds the codegree scale");
    ys_per_x[x].insert(y);
  }
  for (const auto& [x, ys] : ys_per_x)
    family.condition3_max = std::max(family.condition3_max, static_cast<long long>(ys.size()));
  return family;
}

EnumResult extend_to_long_cycles(const TripleFamily& d, int k, long long budget) {
  if (!d.host) throw InputError("triple family has no host graph");
  if (k < 1) throw InputError("k must be at least 1");
  const Graph& g = *d.host;
  if (d.anchor < 0 || d.anchor >= g.n) throw InputError("triple family anchor is out of range");

  std::set<std::array<int, 3>> members(d.triples.begin(), d.triples.end());
  std::map<std::pair<int, int>, std::vector<int>> ys;
  for (const auto& [x, y, z] : d.triples) {
    if (!members.count({z, y, x}))
      throw PreconditionError("triple family is not symmetric");
    if (!g.has_edge(d.anchor, x) || !g.has_edge(x, y) || !g.has_edge(y, z) ||
        !g.has_edge(z, d.anchor))
      throw PreconditionError("triple family member does not close a 4-cycle with the anchor");
    ys[{x, z}].push_back(y);
  }
  for (auto& [xz, list] : ys) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }

  // Largest dyadic h(x,z) bucket weighted by triples; the edge threshold is
  // the bucket's lower end.
  std::map<int, long long> bucket_weight;
  for (const auto& [x, y, z] : d.triples)
    ++bucket_weight[dyadic_bucket(static_cast<long long>(ys[{x, z}].size()))];
  EnumResult result;
  result.collection.k = k;
  result.collection.host = d.host;
  if (bucket_weight.empty()) return result;
  int chosen = -1;
  long long weight = 0;
  for (const auto& [i, w] : bucket_weight) {
    if (w > weight) {
      weight = w;
      chosen = i;
    }
  }
  const long long threshold = 1LL << (chosen - 1);

  // Auxiliary graph F on the anchor's neighborhood: x ~ z iff h(x,z) clears
  // the threshold. F vertices keep host ids via the rank maps.
  std::vector<int> t_vertices = g.adj[d.anchor];
  std::vector<std::pair<int, int>> f_edges;
  for (size_t a = 0; a < t_vertices.size(); ++a)
    for (size_t b = a + 1; b < t_vertices.size(); ++b) {
      auto it = ys.find({t_vertices[a], t_vertices[b]});
      if (it != ys.end() && static_cast<long long>(it->second.size()) >= threshold)
        f_edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  Graph f = from_edge_list(static_cast<int>(t_vertices.size()), f_edges);

  const long long cap = effective_budget(budget);
  LabeledCycleEnum walker(f, 4 * k, -1, cap);
  walker.run();
  result.nodes = walker.nodes;
  result.truncated = walker.truncated;

  std::set<int> t_set(t_vertices.begin(), t_vertices.end());
  const int half = 4 * k;
  for (const auto& f_cycle : walker.out) {
    std::vector<int> xs(static_cast<size_t>(half));
    for (int i = 0; i < half; ++i) xs[static_cast<size_t>(i)] = t_vertices[f_cycle[i]];
    std::set<int> taken(xs.begin(), xs.end());
    std::vector<int> picked;
    // Distinct middle vertices, lexicographically ascending per slot.
    std::function<void(int)> choose = [&](int slot) {
      if (result.truncated) return;
      if (++result.nodes > cap) {
        result.truncated = true;
        return;
      }
      if (slot == half) {
        std::vector<int> tuple(static_cast<size_t>(8 * k));
        for (int i = 0; i < half; ++i) {
          tuple[static_cast<size_t>(2 * i)] = xs[static_cast<size_t>(i)];
          tuple[static_cast<size_t>(2 * i + 1)] = picked[static_cast<size_t>(i)];
        }
        for (int i = 0; i < half; ++i) {
          if (!t_set.count(tuple[static_cast<size_t>(2 * i)]))
            throw std::logic_error("extended tuple leaves the anchor neighborhood on an odd slot");
          if (!members.count({tuple[static_cast<size_t>(2 * i)],
                              tuple[static_cast<size_t>(2 * i + 1)],
                              tuple[static_cast<size_t>((2 * i + 2) % (8 * k))]}))
            throw std::logic_error("extended tuple breaks the triple membership invariant");
        }
        result.collection.tuples.push_back(std::move(tuple));
        return;
      }
      const auto& candidates = ys.at({xs[static_cast<size_t>(slot)],
                                      xs[static_cast<size_t>((slot + 1) % half)]});
      for (int y : candidates) {
        if (taken.count(y)) continue;
        taken.insert(y);
        picked.push_back(y);
        choose(slot + 1);
        picked.pop_back();
        taken.erase(y);
        if (result.truncated) return;
      }
    };
    choose(0);
    if (result.truncated) break;
  }

  std::sort(result.collection.tuples.begin(), result.collection.tuples.end());
  WellformedResult wf = check_collection_wellformed(result.collection);
  if (!wf.ok) throw std::logic_error("extension emitted a malformed cycle: " + wf.reason);
  return result;
}

BuilderResult build_good_few(std::shared_ptr<const Graph> g, const BuilderParams& params) {
  if (!g) throw InputError("build_good_few requires a host graph");
  validate_params(params);
  const Graph& h = *g;
  const double n = static_cast<double>(h.n);
  const double eps = params.epsilon;
  const double alpha = 1.0 / 3.0 + eps;
  const double K = 10.0 * std::pow(2.0, 1.0 / (alpha * alpha) + 1.0);

  long long tau = params.tau > 0
                      ? params.tau
                      : std::max<long long>(1, static_cast<long long>(
                                                   std::ceil(std::pow(n, 2.0 * eps))));
  EnumResult en = small_codegree_cycles(g, params.k, tau, params.cycle_budget);

  C4Census census = c4_census(h);
  long long per_edge_max = 0;
  for (const auto& [e, c] : census.per_edge) per_edge_max = std::max(per_edge_max, c);

  const double edge_bound = std::pow(n, 4.0 / 3.0 + eps) / 6.0;
  const double degree_bound = K * std::pow(n, 1.0 / 3.0 + eps);
  const double per_edge_bound = std::pow(n, 1.0 / 3.0 + 2.0 * eps);

  BuilderResult r;
  r.collection = std::move(en.collection);
  r.truncated = en.truncated;
  r.s = static_cast<double>(tau);
  r.empty_failure = r.collection.tuples.empty();
  double beta = resolve_beta(params, h.n);
  r.certificate = check_good(r.collection, beta, r.s);
  r.hypotheses = {
      {"edges", h.edge_count},
      {"edge_bound", edge_bound},
      {"edges_ok", static_cast<double>(h.edge_count) >= edge_bound},
      {"max_degree", h.max_degree()},
      {"degree_bound", degree_bound},
      {"degree_ok", static_cast<double>(h.max_degree()) <= degree_bound},
      {"per_edge_c4_max", per_edge_max},
      {"per_edge_bound", per_edge_bound},
      {"per_edge_ok", static_cast<double>(per_edge_max) <= per_edge_bound},
      {"tau", tau},
      {"beta", beta},
      {"asserted", false},
  };
  return r;
}

BuilderResult build_good_many(std::shared_ptr<const Graph> g, const BuilderParams& params) {
  if (!g) throw InputError("build_good_many requires a host graph");
  validate_params(params);
  const Graph& h = *g;
  const double n = static_cast<double>(h.n);
  const double eps = params.epsilon;
  const double alpha = 1.0 / 3.0 + eps;
  const double K = 10.0 * std::pow(2.0, 1.0 / (alpha * alpha) + 1.0);
  const double logn = log_with(std::max(2.0, n), params.log_base);

  C4Census census = c4_census(h);
  long long per_edge_max = 0;
  for (const auto& [e, c] : census.per_edge) per_edge_max = std::max(per_edge_max, c);
  const double q = static_cast<double>(census.total);

  TripleFamily family = find_c4_anchor(g);
  EnumResult en = extend_to_long_cycles(family, params.k, params.cycle_budget);

  const double degree_bound = K * std::pow(n, 1.0 / 3.0 + eps);
  const double q_bound = std::pow(n, 5.0 / 3.0 + 3.0 * eps) / (96.0 * logn);
  const double per_edge_bound = 96.0 * logn / std::pow(n, 4.0 / 3.0 + eps) * q;
  const double condition3_bound =
      384.0 * logn * q / (std::pow(n, 4.0 / 3.0 + eps) * family.scale);

  BuilderResult r;
  r.collection = std::move(en.collection);
  r.truncated = en.truncated;
  r.s = family.scale;
  r.empty_failure = r.collection.tuples.empty();
  double beta = resolve_beta(params, h.n);
  r.certificate = check_good(r.collection, beta, r.s);
  r.hypotheses = {
      {"max_degree", h.max_degree()},
      {"degree_bound", degree_bound},
      {"degree_ok", static_cast<double>(h.max_degree()) <= degree_bound},
      {"q", census.total},
      {"q_bound", q_bound},
      {"q_ok", q >= q_bound},
      {"per_edge_c4_max", per_edge_max},
      {"per_edge_bound", per_edge_bound},
      {"per_edge_ok", static_cast<double>(per_edge_max) <= per_edge_bound},
      {"anchor", family.anchor},
      {"scale", family.scale},
      {"condition3_max", family.condition3_max},
      {"condition3_bound", condition3_bound},
      {"beta", beta},
      {"asserted", false},
  };
  return r;
}

}  // namespace turan
