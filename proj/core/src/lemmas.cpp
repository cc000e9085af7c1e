#include "turan/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "turan/census.hpp"
#include "turan/errors.hpp"
#include "turan/rng.hpp"

namespace turan {

nlohmann::json bound_report_json(const BoundReport& r) {
  nlohmann::json j;
  j["lemma"] = r.lemma;
  if (fits_int64(r.measured))
    j["measured"] = r.measured.convert_to<std::int64_t>();
  else
    j["measured"] = big_to_string(r.measured);
  j["bound"] = r.bound;
  j["direction"] = r.direction;
  j["satisfied"] = r.satisfied;
  j["exact_comparison"] = r.exact_comparison;
  j["parameters"] = r.parameters;
  return j;
}

ConflictRelation ConflictRelation::vertex(std::function<bool(int, int)> f) {
  ConflictRelation r;
  r.kind = Kind::Vertex;
  r.vertex_rel = std::move(f);
  return r;
}

ConflictRelation ConflictRelation::edge(
    std::function<bool(std::pair<int, int>, std::pair<int, int>)> f) {
  ConflictRelation r;
  r.kind = Kind::Edge;
  r.edge_rel = std::move(f);
  return r;
}

ConflictRelation ConflictRelation::always_false_vertex() {
  return vertex([](int, int) { return false; });
}

ConflictRelation ConflictRelation::equality_vertex() {
  return vertex([](int a, int b) { return a == b; });
}

ConflictRelation ConflictRelation::share_one_vertex_edge() {
  return edge([](std::pair<int, int> e, std::pair<int, int> f) {
    int shared = (e.first == f.first) + (e.first == f.second) + (e.second == f.first) +
                 (e.second == f.second);
    return shared == 1;
  });
}

namespace {

std::pair<int, int> norm_edge(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

void spot_check_vertex_symmetry(const ConflictRelation& rel, int n) {
  if (n < 2) return;
  Rng rng(0x5eedu);
  int samples = std::min(256, n * n);
  for (int t = 0; t < samples; ++t) {
    int a = static_cast<int>(rng() % static_cast<unsigned>(n));
    int b = static_cast<int>(rng() % static_cast<unsigned>(n));
    if (rel.vertex_rel(a, b) != rel.vertex_rel(b, a))
      throw InputError("conflict relation is not symmetric on vertices (" + std::to_string(a) +
                       "," + std::to_string(b) + ")");
  }
}

void spot_check_edge_symmetry(const ConflictRelation& rel,
                              const std::vector<std::pair<int, int>>& edges) {
  if (edges.size() < 2) return;
  Rng rng(0x5eedu);
  size_t samples = std::min<size_t>(256, edges.size() * edges.size());
  for (size_t t = 0; t < samples; ++t) {
    auto e = edges[rng() % edges.size()];
    auto f = edges[rng() % edges.size()];
    if (rel.edge_rel(e, f) != rel.edge_rel(f, e))
      throw InputError("conflict relation is not symmetric on edges");
  }
}

// Depth-first enumeration of homomorphic 2k-cycles; calls visit(tuple) for
// each complete cycle. Node budget counts partial extensions.
template <typename Visit>
void for_each_hom_cycle(const Graph& g, int k, long long budget, Visit&& visit) {
  const int length = 2 * k;
  std::vector<int> tuple;
  tuple.reserve(static_cast<size_t>(length));
  long long nodes = 0;
  auto extend = [&](auto&& self) -> void {
    if (++nodes > budget) throw BudgetError("homomorphic cycle scan exceeded node budget");
    int depth = static_cast<int>(tuple.size());
    if (depth == length) {
      if (g.has_edge(tuple.back(), tuple.front())) visit(tuple);
      return;
    }
    if (depth == 0) {
      for (int v = 0; v < g.n; ++v) {
        tuple.push_back(v);
        self(self);
        tuple.pop_back();
      }
      return;
    }
    for (int v : g.adj[tuple.back()]) {
      tuple.push_back(v);
      self(self);
      tuple.pop_back();
    }
  };
  extend(extend);
}

double hom_power(const BigInt& hom, int k) {
  // hom^{1 - 1/(2k)}
  double h = big_to_double(hom);
  return h <= 0 ? 0.0 : std::pow(h, 1.0 - 1.0 / (2.0 * k));
}

}  // namespace

BoundReport check_sidorenko(const Graph& g, int k) {
  if (k < 2) throw InputError("check_sidorenko requires k >= 2");
  if (g.n < 1) throw InputError("check_sidorenko requires n >= 1");
  BoundReport r;
  r.lemma = "sidorenko";
  r.direction = "measured>=bound";
  r.measured = hom_cycle_count(g, k);
  double n = static_cast<double>(g.n);
  double e = static_cast<double>(g.edge_count);
  r.bound = std::pow(2.0 * e / n, 2 * k);
  // measured * n^{2k} >= (2e)^{2k} decided in exact integers.
  BigInt lhs = r.measured * big_pow(static_cast<long long>(g.n), static_cast<unsigned>(2 * k));
  BigInt rhs = big_pow(2 * g.edge_count, static_cast<unsigned>(2 * k));
  r.satisfied = lhs >= rhs;
  r.exact_comparison = true;
  r.parameters = {{"k", k}, {"n", g.n}, {"e", g.edge_count}};
  return r;
}

BoundReport check_min_degree_hom_bound(const Graph& g, const std::vector<int>& X,
                                       const std::vector<int>& Y, int k) {
  if (k < 1) throw InputError("check_min_degree_hom_bound requires k >= 1");
  std::vector<int> side(static_cast<size_t>(g.n), -1);
  for (int x : X) {
    if (x < 0 || x >= g.n || side[x] != -1) throw InputError("parts must be disjoint valid ids");
    side[x] = 0;
  }
  for (int y : Y) {
    if (y < 0 || y >= g.n || side[y] != -1) throw InputError("parts must be disjoint valid ids");
    side[y] = 1;
  }
  for (int v = 0; v < g.n; ++v)
    if (side[v] == -1) throw InputError("parts must cover every vertex");
  for (auto [u, v] : g.edges())
    if (side[u] == side[v])
      throw InputError("graph is not bipartite relative to the given parts: edge (" +
                       std::to_string(u) + "," + std::to_string(v) + ")");
  if (X.empty() || Y.empty()) throw PreconditionError("both parts must be non-empty");

  long long s = -1, t = -1;
  for (int x : X) s = (s < 0) ? g.degree(x) : std::min<long long>(s, g.degree(x));
  for (int y : Y) t = (t < 0) ? g.degree(y) : std::min<long long>(t, g.degree(y));
  if (s < 1 || t < 1) throw PreconditionError("side minimum degrees must be >= 1");

  // Alternating homomorphic cycles: 2 trace((B B^T)^k) over the parts.
  std::vector<int> xid(static_cast<size_t>(g.n), -1);
  for (size_t i = 0; i < X.size(); ++i) xid[X[i]] = static_cast<int>(i);
  std::vector<int> yid(static_cast<size_t>(g.n), -1);
  for (size_t i = 0; i < Y.size(); ++i) yid[Y[i]] = static_cast<int>(i);
  size_t nx = X.size(), ny = Y.size();
  std::vector<BigInt> m(nx * nx, BigInt(0));  // (B B^T)_{ab} = |N(a) cap N(b)| over Y
  for (size_t a = 0; a < nx; ++a)
    for (size_t b = 0; b < nx; ++b) {
      long long c = 0;
      for (int w : g.adj[X[a]])
        if (yid[w] != -1 && g.has_edge(X[b], w)) ++c;
      m[a * nx + b] = c;
    }
  std::vector<BigInt> acc = m, tmp(nx * nx);
  for (int step = 1; step < k; ++step) {
    for (size_t i = 0; i < nx; ++i)
      for (size_t j = 0; j < nx; ++j) {
        BigInt cell = 0;
        for (size_t t2 = 0; t2 < nx; ++t2) cell += acc[i * nx + t2] * m[t2 * nx + j];
        tmp[i * nx + j] = cell;
      }
    acc.swap(tmp);
  }
  BigInt trace = 0;
  for (size_t i = 0; i < nx; ++i) trace += acc[i * nx + i];

  BoundReport r;
  r.lemma = "homcycles";
  r.direction = "measured>=bound";
  r.measured = trace * 2;
  BigInt rhs = big_pow(s, static_cast<unsigned>(k)) * big_pow(t, static_cast<unsigned>(k));
  r.bound = big_to_double(rhs);
  r.satisfied = r.measured >= rhs;
  r.exact_comparison = true;
  r.parameters = {{"k", k}, {"s", s}, {"t", t},
                  {"X_size", X.size()}, {"Y_size", Y.size()}};
  (void)ny;
  return r;
}

BoundReport count_conflicting_edge_cycles(const Graph& g, int k, const ConflictRelation& rel,
                                          long long s, long long budget) {
  if (k < 2) throw InputError("count_conflicting_edge_cycles requires k >= 2");
  if (rel.kind != ConflictRelation::Kind::Edge || !rel.edge_rel)
    throw InputError("count_conflicting_edge_cycles requires an edge relation");
  auto edges = g.edges();
  spot_check_edge_symmetry(rel, edges);

  // Fan-out precondition: for every uv in E and w in V, w has at most s
  // neighbours z with uv ~ wz.
  for (auto uv : edges) {
    for (int w = 0; w < g.n; ++w) {
      long long fan = 0;
      for (int z : g.adj[w])
        if (rel.edge_rel(uv, norm_edge(w, z))) ++fan;
      if (fan > s)
        throw PreconditionError("edge fan-out precondition violated: edge (" +
                                std::to_string(uv.first) + "," + std::to_string(uv.second) +
                                "), vertex w=" + std::to_string(w) + " has " +
                                std::to_string(fan) + " conflicting neighbours > s=" +
                                std::to_string(s));
    }
  }

  const int length = 2 * k;
  BigInt conflicting = 0;
  for_each_hom_cycle(g, k, budget, [&](const std::vector<int>& t) {
    for (int i = 0; i < length; ++i) {
      auto ei = norm_edge(t[i], t[(i + 1) % length]);
      for (int j = i + 1; j < length; ++j) {
        if (rel.edge_rel(ei, norm_edge(t[j], t[(j + 1) % length]))) {
          conflicting += 1;
          return;
        }
      }
    }
  });

  BigInt hom = hom_cycle_count(g, k);
  BoundReport r;
  r.lemma = "simple with edges";
  r.direction = "measured<=bound";
  r.measured = conflicting;
  r.bound = 32.0 * std::pow(static_cast<double>(k), 1.5) * std::sqrt(static_cast<double>(s)) *
            std::sqrt(static_cast<double>(g.max_degree())) *
            std::pow(static_cast<double>(g.n), 1.0 / (2.0 * k)) * hom_power(hom, k);
  r.satisfied = big_to_double(r.measured) <= r.bound;
  r.parameters = {{"k", k}, {"s", s}, {"n", g.n}, {"max_degree", g.max_degree()}};
  if (fits_int64(hom)) r.parameters["hom"] = hom.convert_to<std::int64_t>();
  else r.parameters["hom"] = big_to_string(hom);
  return r;
}

BoundReport count_conflicting_vertex_cycles(const Graph& g, int k, const std::vector<int>& X1,
                                            const std::vector<int>& X2,
                                            const ConflictRelation& rel, long long D1,
                                            long long D2, long long s1, long long s2,
                                            long long budget) {
  if (k < 2) throw InputError("count_conflicting_vertex_cycles requires k >= 2");
  if (rel.kind != ConflictRelation::Kind::Vertex || !rel.vertex_rel)
    throw InputError("count_conflicting_vertex_cycles requires a vertex relation");
  spot_check_vertex_symmetry(rel, g.n);

  std::vector<char> in1(static_cast<size_t>(g.n), 0), in2(static_cast<size_t>(g.n), 0);
  for (int v : X1) {
    if (v < 0 || v >= g.n) throw InputError("X1 contains an invalid id");
    in1[v] = 1;
  }
  for (int v : X2) {
    if (v < 0 || v >= g.n) throw InputError("X2 contains an invalid id");
    in2[v] = 1;
  }

  // Bullet one: v in X1 has at most D1 neighbours in X2, of which at most s1
  // conflict with any fixed u. Bullet two mirrors it.
  auto check_side = [&](const std::vector<char>& member, const std::vector<char>& other,
                        long long dcap, long long scap, const char* name) {
    for (int v = 0; v < g.n; ++v) {
      if (!member[v]) continue;
      long long deg_other = 0;
      for (int w : g.adj[v])
        if (other[w]) ++deg_other;
      if (deg_other > dcap)
        throw PreconditionError(std::string("vertex fan-out precondition violated on ") + name +
                                ": v=" + std::to_string(v) + " has " + std::to_string(deg_other) +
                                " cross neighbours > " + std::to_string(dcap));
      for (int u = 0; u < g.n; ++u) {
        long long fan = 0;
        for (int w : g.adj[v])
          if (other[w] && rel.vertex_rel(u, w)) ++fan;
        if (fan > scap)
          throw PreconditionError(std::string("vertex fan-out precondition violated on ") + name +
                                  ": u=" + std::to_string(u) + ", v=" + std::to_string(v) +
                                  " sees " + std::to_string(fan) + " conflicting neighbours > " +
                                  std::to_string(scap));
      }
    }
  };
  check_side(in1, in2, D1, s1, "X1");
  check_side(in2, in1, D2, s2, "X2");

  const int length = 2 * k;
  BigInt conflicting = 0;
  for_each_hom_cycle(g, k, budget, [&](const std::vector<int>& t) {
    bool phase1 = true, phase2 = true;
    for (int i = 0; i < length; ++i) {
      if (i % 2 == 0) {
        phase1 = phase1 && in1[t[i]];
        phase2 = phase2 && in2[t[i]];
      } else {
        phase1 = phase1 && in2[t[i]];
        phase2 = phase2 && in1[t[i]];
      }
      if (!phase1 && !phase2) return;
    }
    for (int i = 0; i < length; ++i)
      for (int j = i + 1; j < length; ++j)
        if (rel.vertex_rel(t[i], t[j])) {
          conflicting += 1;
          return;
        }
  });

  BigInt hom = hom_cycle_count(g, k);
  long long M = std::max(D1 * s2, D2 * s1);
  BoundReport r;
  r.lemma = "bipartite with vertices";
  r.direction = "measured<=bound";
  r.measured = conflicting;
  r.bound = 32.0 * std::pow(static_cast<double>(k), 1.5) * std::sqrt(static_cast<double>(M)) *
            std::pow(static_cast<double>(g.n), 1.0 / (2.0 * k)) * hom_power(hom, k);
  r.satisfied = big_to_double(r.measured) <= r.bound;
  r.parameters = {{"k", k}, {"M", M},       {"Delta1", D1}, {"Delta2", D2},
                  {"s1", s1}, {"s2", s2},   {"n", g.n}};
  if (fits_int64(hom)) r.parameters["hom"] = hom.convert_to<std::int64_t>();
  else r.parameters["hom"] = big_to_string(hom);
  return r;
}

BoundReport supersaturation_report(const Graph& g, int k, const SupersatParams& params,
                                   long long budget) {
  if (k < 2) throw InputError("supersaturation_report requires k >= 2");
  BoundReport r;
  r.lemma = "supersaturation";
  r.direction = "measured>=bound";
  r.measured = genuine_cycle_copies(g, k, budget);
  double n = static_cast<double>(g.n);
  double e = static_cast<double>(g.edge_count);
  r.bound = (g.n == 0) ? 0.0
                       : params.c_k * std::pow(e, 2 * k) / std::pow(n, 2 * k);
  r.satisfied = big_to_double(r.measured) >= r.bound;
  bool hypothesis = g.n > 0 && e >= params.C_k * std::pow(n, 1.0 + 1.0 / k);
  r.parameters = {{"k", k},
                  {"n", g.n},
                  {"e", g.edge_count},
                  {"C_k", params.C_k},
                  {"c_k", params.c_k},
                  {"hypothesis_e_ge_C_n_1_plus_1_over_k", hypothesis},
                  {"asserted", false}};
  return r;
}

}  // namespace turan
