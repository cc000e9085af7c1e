#include "turan/census.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

#include "turan/errors.hpp"

namespace turan {

namespace {

// Dense int64 matrix product with overflow detection.
bool mul_checked(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
                 std::vector<std::int64_t>& out, int n) {
  out.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < n; ++t) {
      std::int64_t ait = a[static_cast<size_t>(i) * n + t];
      if (ait == 0) continue;
      for (int j = 0; j < n; ++j) {
        std::int64_t prod = 0;
        if (__builtin_mul_overflow(ait, b[static_cast<size_t>(t) * n + j], &prod)) return false;
        std::int64_t& cell = out[static_cast<size_t>(i) * n + j];
        if (__builtin_add_overflow(cell, prod, &cell)) return false;
      }
    }
  return true;
}

void mul_big(const std::vector<BigInt>& a, const std::vector<BigInt>& b,
             std::vector<BigInt>& out, int n) {
  out.assign(static_cast<size_t>(n) * n, BigInt(0));
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < n; ++t) {
      const BigInt& ait = a[static_cast<size_t>(i) * n + t];
      if (ait == 0) continue;
      for (int j = 0; j < n; ++j)
        out[static_cast<size_t>(i) * n + j] += ait * b[static_cast<size_t>(t) * n + j];
    }
}

BigInt trace_power_big(const Graph& g, unsigned exp) {
  int n = g.n;
  std::vector<BigInt> base(static_cast<size_t>(n) * n, BigInt(0));
  for (int u = 0; u < n; ++u)
    for (int v : g.adj[u]) base[static_cast<size_t>(u) * n + v] = 1;
  std::vector<BigInt> result(static_cast<size_t>(n) * n, BigInt(0));
  for (int i = 0; i < n; ++i) result[static_cast<size_t>(i) * n + i] = 1;
  std::vector<BigInt> tmp;
  while (exp > 0) {
    if (exp & 1u) {
      mul_big(result, base, tmp, n);
      result.swap(tmp);
    }
    mul_big(base, base, tmp, n);
    base.swap(tmp);
    exp >>= 1u;
  }
  BigInt trace = 0;
  for (int i = 0; i < n; ++i) trace += result[static_cast<size_t>(i) * n + i];
  return trace;
}

}  // namespace

BigInt hom_cycle_count(const Graph& g, int k) {
  if (k < 1) throw InputError("hom_cycle_count requires k >= 1");
  int n = g.n;
  if (n == 0) return 0;
  unsigned exp = static_cast<unsigned>(2 * k);

  std::vector<std::int64_t> base(static_cast<size_t>(n) * n, 0);
  for (int u = 0; u < n; ++u)
    for (int v : g.adj[u]) base[static_cast<size_t>(u) * n + v] = 1;
  std::vector<std::int64_t> result(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) result[static_cast<size_t>(i) * n + i] = 1;
  std::vector<std::int64_t> tmp;
  unsigned e = exp;
  bool ok = true;
  while (e > 0 && ok) {
    if (e & 1u) {
      ok = mul_checked(result, base, tmp, n);
      result.swap(tmp);
    }
    if (ok && e > 1) {
      ok = ok && mul_checked(base, base, tmp, n);
      base.swap(tmp);
    }
    e >>= 1u;
  }
  if (ok) {
    std::int64_t trace = 0;
    for (int i = 0; i < n; ++i) {
      if (__builtin_add_overflow(trace, result[static_cast<size_t>(i) * n + i], &trace)) {
        ok = false;
        break;
      }
    }
    if (ok) return BigInt(trace);
  }
  return trace_power_big(g, exp);
}

C4Census c4_census(const Graph& g) {
  C4Census census;
  // Cycles a-b-x-w-a through the edge ab: x a neighbor of b, w a neighbor of a,
  // each copy containing ab is produced exactly once.
  for (auto [a, b] : g.edges()) {
    long long count = 0;
    for (int x : g.adj[b]) {
      if (x == a) continue;
      for (int w : g.adj[a]) {
        if (w == b || w == x) continue;
        if (g.has_edge(x, w)) ++count;
      }
    }
    census.per_edge[{a, b}] = count;
    census.total += count;
  }
  census.total /= 4;

  census.codegree_pair_sum = 0;
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      census.codegree_pair_sum += binomial2(BigInt(codegree(g, u, v)));
  return census;
}

namespace {

struct GenuineCounter {
  const Graph& g;
  int length;
  long long budget;
  long long nodes = 0;
  BigInt count = 0;
  std::vector<char> used;
  std::vector<int> path;

  GenuineCounter(const Graph& graph, int len, long long b)
      : g(graph), length(len), budget(b), used(static_cast<size_t>(graph.n), 0) {}

  // Canonical copies: smallest vertex first, second vertex smaller than last.
  void run() {
    for (int start = 0; start < g.n; ++start) {
      path.assign(1, start);
      used[start] = 1;
      extend(start);
      used[start] = 0;
    }
  }

  void extend(int start) {
    if (++nodes > budget) throw BudgetError("genuine cycle enumeration exceeded node budget");
    int depth = static_cast<int>(path.size());
    if (depth == length) {
      if (g.has_edge(path.back(), start) && path[1] < path.back()) count += 1;
      return;
    }
    for (int next : g.adj[path.back()]) {
      if (next <= start || used[next]) continue;
      used[next] = 1;
      path.push_back(next);
      extend(start);
      path.pop_back();
      used[next] = 0;
    }
  }
};

}  // namespace

BigInt genuine_cycle_copies(const Graph& g, int k, long long budget) {
  if (k < 1) throw InputError("genuine_cycle_copies requires k >= 1");
  int length = 2 * k;
  if (length < 3) {
    // C_2 is not a simple cycle; counting 2-cycles in a simple graph yields 0.
    return 0;
  }
  GenuineCounter counter(g, length, budget);
  counter.run();
  return counter.count;
}

BigInt genuine_cycle_count_labeled(const Graph& g, int k, long long budget) {
  return genuine_cycle_copies(g, k, budget) * (4 * k);
}

}  // namespace turan
