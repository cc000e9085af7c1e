#include "turan/oracles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>
#include <vector>

#include "turan/errors.hpp"

namespace turan {

namespace {

bool verify_map(const Graph& pattern, const Graph& host, const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != pattern.n) return false;
  std::vector<char> used(host.n, 0);
  for (int img : map) {
    if (img < 0 || img >= host.n) return false;
    if (used[img]) return false;
    used[img] = 1;
  }
  for (const auto& [u, v] : pattern.edges()) {
    if (!host.has_edge(map[u], map[v])) return false;
  }
  return true;
}

}  // namespace

EmbedResult embed_bruteforce(const Graph& pattern, const Graph& host, long long budget) {
  EmbedResult res;
  if (pattern.n == 0) {
    res.status = SearchStatus::Found;
    return res;
  }
  if (pattern.n > host.n) {
    res.status = SearchStatus::AbsentExhausted;
    return res;
  }

  std::vector<int> order(pattern.n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    int da = static_cast<int>(pattern.adj[a].size());
    int db = static_cast<int>(pattern.adj[b].size());
    if (da != db) return da > db;
    return a < b;
  });

  // mapped pattern neighbors of order[slot] among earlier slots
  std::vector<int> slot_of(pattern.n, -1);
  for (int s = 0; s < pattern.n; ++s) slot_of[order[s]] = s;
  std::vector<std::vector<int>> back_neighbors(pattern.n);
  for (int s = 0; s < pattern.n; ++s) {
    for (int w : pattern.adj[order[s]]) {
      if (slot_of[w] < s) back_neighbors[s].push_back(w);
    }
  }

  std::vector<int> image(pattern.n, -1);
  std::vector<char> used(host.n, 0);
  bool truncated = false;

  std::function<bool(int)> fill = [&](int slot) -> bool {
    if (slot == pattern.n) return true;
    int pv = order[slot];
    int need = static_cast<int>(pattern.adj[pv].size());
    for (int cand = 0; cand < host.n; ++cand) {
      if (used[cand]) continue;
      if (static_cast<int>(host.adj[cand].size()) < need) continue;
      bool ok = true;
      for (int w : back_neighbors[slot]) {
        if (!host.has_edge(cand, image[w])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      ++res.nodes;
      if (budget > 0 && res.nodes > budget) {
        truncated = true;
        return false;
      }
      image[pv] = cand;
      used[cand] = 1;
      if (fill(slot + 1)) return true;
      used[cand] = 0;
      image[pv] = -1;
      if (truncated) return false;
    }
    return false;
  };

  if (fill(0)) {
    res.status = SearchStatus::Found;
    res.map = image;
    if (!verify_map(pattern, host, res.map)) {
      throw std::logic_error("embed_bruteforce produced an invalid map");
    }
  } else {
    res.status = truncated ? SearchStatus::BudgetExhausted : SearchStatus::AbsentExhausted;
  }
  return res;
}

BigInt hom_count_bruteforce(const Graph& g, int k, long long budget, int jobs) {
  if (k < 1) throw InputError("hom_count_bruteforce requires k >= 1");
  if (jobs < 1) throw InputError("hom_count_bruteforce requires jobs >= 1");
  int n = g.n;
  if (n == 0) return BigInt(0);
  long double work = static_cast<long double>(n) * (2.0L * k) *
                     (2.0L * g.edge_count + n);
  if (budget > 0 && work > static_cast<long double>(budget)) {
    throw BudgetError("hom_count_bruteforce work exceeds budget");
  }

  auto count_range = [&](int lo, int hi) -> BigInt {
    BigInt total = 0;
    std::vector<BigInt> cur(n), nxt(n);
    for (int s = lo; s < hi; ++s) {
      for (int v = 0; v < n; ++v) cur[v] = 0;
      cur[s] = 1;
      for (int step = 0; step < 2 * k; ++step) {
        for (int v = 0; v < n; ++v) {
          nxt[v] = 0;
          for (int u : g.adj[v]) nxt[v] += cur[u];
        }
        cur.swap(nxt);
      }
      total += cur[s];
    }
    return total;
  };

  int threads = std::min(jobs, n);
  if (threads == 1) return count_range(0, n);

  std::vector<BigInt> partial(threads);
  std::vector<std::thread> pool;
  int chunk = (n + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    int lo = t * chunk;
    int hi = std::min(n, lo + chunk);
    pool.emplace_back([&, t, lo, hi]() { partial[t] = count_range(lo, hi); });
  }
  for (auto& th : pool) th.join();
  BigInt total = 0;
  for (const auto& p : partial) total += p;
  return total;
}

BigInt hom_count_tuple_scan(const Graph& g, int k) {
  if (k < 1) throw InputError("hom_count_tuple_scan requires k >= 1");
  if (g.n > 6) throw BudgetError("hom_count_tuple_scan is limited to hosts with at most 6 vertices");
  int n = g.n;
  if (n == 0) return BigInt(0);
  int len = 2 * k;
  long double space = std::pow(static_cast<long double>(n), static_cast<long double>(len));
  if (space > 2.0e8L) throw BudgetError("hom_count_tuple_scan tuple space too large");

  std::vector<int> tuple(len, 0);
  BigInt total = 0;
  while (true) {
    bool closed = true;
    for (int i = 0; i < len; ++i) {
      if (!g.has_edge(tuple[i], tuple[(i + 1) % len])) {
        closed = false;
        break;
      }
    }
    if (closed) total += 1;
    int pos = len - 1;
    while (pos >= 0 && tuple[pos] == n - 1) {
      tuple[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++tuple[pos];
  }
  return total;
}

namespace {

struct CanonicalContext {
  int n = 0;
  int pair_count = 0;
  std::vector<std::pair<int, int>> pairs;          // bit -> (i, j), i < j
  std::array<std::array<int, 8>, 8> pair_index{};  // (i, j) -> bit
  std::vector<std::array<int, 8>> perms;

  explicit CanonicalContext(int vertices) : n(vertices) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        pair_index[i][j] = pair_count;
        pair_index[j][i] = pair_count;
        pairs.emplace_back(i, j);
        ++pair_count;
      }
    }
    std::array<int, 8> p{};
    std::iota(p.begin(), p.begin() + n, 0);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.begin() + n));
  }

  std::uint32_t canonical(std::uint32_t mask) const {
    std::uint32_t best = UINT32_MAX;
    for (const auto& p : perms) {
      std::uint32_t remapped = 0;
      for (int b = 0; b < pair_count; ++b) {
        if (!(mask >> b & 1u)) continue;
        remapped |= 1u << pair_index[p[pairs[b].first]][p[pairs[b].second]];
      }
      if (remapped < best) best = remapped;
    }
    return best;
  }

  Graph graph_of(std::uint32_t mask) const {
    std::vector<std::pair<int, int>> edges;
    for (int b = 0; b < pair_count; ++b) {
      if (mask >> b & 1u) edges.push_back(pairs[b]);
    }
    return from_edge_list(n, edges);
  }
};

}  // namespace

TuranRecord turan_exhaustive(const Graph& pattern, int n, const std::string& strategy) {
  if (pattern.edge_count < 1) throw InputError("turan_exhaustive requires a pattern with at least one edge");
  if (n < 1) throw InputError("turan_exhaustive requires n >= 1");
  if (n > 8) throw BudgetError("turan_exhaustive is limited to n <= 8");
  if (strategy != "descending" && strategy != "ascending") {
    throw InputError("turan_exhaustive strategy must be descending or ascending");
  }

  CanonicalContext ctx(n);
  auto pattern_free = [&](std::uint32_t mask) {
    return embed_bruteforce(pattern, ctx.graph_of(mask), 0).status == SearchStatus::AbsentExhausted;
  };

  TuranRecord rec;
  rec.n = n;

  if (strategy == "descending") {
    std::uint32_t full = ctx.pair_count == 32 ? UINT32_MAX : (1u << ctx.pair_count) - 1u;
    std::set<std::uint32_t> level = {ctx.canonical(full)};
    for (int e = ctx.pair_count; e >= 0; --e) {
      for (std::uint32_t mask : level) {
        if (pattern_free(mask)) {
          rec.value = e;
          rec.witness = ctx.graph_of(mask);
          if (!pattern_free(mask) || rec.witness.edge_count != rec.value) {
            throw std::logic_error("turan_exhaustive witness check failed");
          }
          return rec;
        }
      }
      std::set<std::uint32_t> next;
      for (std::uint32_t mask : level) {
        for (int b = 0; b < ctx.pair_count; ++b) {
          if (mask >> b & 1u) next.insert(ctx.canonical(mask & ~(1u << b)));
        }
      }
      level = std::move(next);
    }
    throw std::logic_error("turan_exhaustive descending ran past the empty graph");
  }

  std::set<std::uint32_t> level = {0u};
  int e = 0;
  while (true) {
    std::set<std::uint32_t> next;
    for (std::uint32_t mask : level) {
      for (int b = 0; b < ctx.pair_count; ++b) {
        if (mask >> b & 1u) continue;
        std::uint32_t c = ctx.canonical(mask | (1u << b));
        if (next.count(c)) continue;
        if (pattern_free(c)) next.insert(c);
      }
    }
    if (next.empty()) break;
    level = std::move(next);
    ++e;
  }
  rec.value = e;
  rec.witness = ctx.graph_of(*level.begin());
  if (!pattern_free(*level.begin()) || rec.witness.edge_count != rec.value) {
    throw std::logic_error("turan_exhaustive witness check failed");
  }
  return rec;
}

}  // namespace turan
