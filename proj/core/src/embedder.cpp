#include "turan/embedder.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include "turan/errors.hpp"
#include "turan/hkl.hpp"
#include "turan/weave.hpp"

namespace turan {

namespace {

// Sorted-coordinate views make the pairwise clash test a merge.
std::vector<int> sorted_coords(const std::vector<int>& t) {
  std::vector<int> s = t;
  std::sort(s.begin(), s.end());
  return s;
}

bool sorted_intersect(const std::vector<int>& a, const std::vector<int>& b) {
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return true;
    if (a[i] < b[j])
      ++i;
    else
      ++j;
  }
  return false;
}

struct AuxIndex {
  std::vector<std::vector<int>> candidates;          // column tuples, deduplicated
  std::vector<std::vector<int>> sorted;              // sorted coordinates per candidate
  std::vector<std::vector<int>> neighbors;           // aux adjacency between candidates
  std::vector<int> order;                            // candidate ranks, best first
};

AuxIndex build_aux_index(const CycleCollection& c) {
  AuxIndex ix;
  std::map<std::vector<int>, int> id_of;
  auto intern = [&](const std::vector<int>& t) {
    auto [it, fresh] = id_of.try_emplace(t, static_cast<int>(ix.candidates.size()));
    if (fresh) ix.candidates.push_back(t);
    return it->second;
  };
  std::set<std::pair<int, int>> edges;
  for (const auto& t : c.tuples) {
    auto [y, z] = unweave(t, c.k);
    int a = intern(y);
    int b = intern(z);
    edges.insert({a, b});
    edges.insert({b, a});
  }
  ix.neighbors.resize(ix.candidates.size());
  for (auto [a, b] : edges) ix.neighbors[static_cast<size_t>(a)].push_back(b);

  ix.sorted.reserve(ix.candidates.size());
  for (const auto& t : ix.candidates) ix.sorted.push_back(sorted_coords(t));

  // Exact conflict degree per candidate via coordinate incidence lists.
  std::map<int, std::vector<int>> holders;
  for (size_t i = 0; i < ix.candidates.size(); ++i)
    for (int v : ix.sorted[i]) holders[v].push_back(static_cast<int>(i));
  std::vector<long long> conflicts(ix.candidates.size(), 0);
  std::vector<int> stamp(ix.candidates.size(), -1);
  for (size_t i = 0; i < ix.candidates.size(); ++i) {
    long long cnt = 0;
    for (int v : ix.sorted[i]) {
      for (int other : holders[v]) {
        if (other == static_cast<int>(i)) continue;
        if (stamp[static_cast<size_t>(other)] == static_cast<int>(i)) continue;
        stamp[static_cast<size_t>(other)] = static_cast<int>(i);
        ++cnt;
      }
    }
    conflicts[i] = cnt;
  }

  std::vector<int> ranked(ix.candidates.size());
  for (size_t i = 0; i < ranked.size(); ++i) ranked[i] = static_cast<int>(i);
  std::sort(ranked.begin(), ranked.end(), [&](int a, int b) {
    if (conflicts[static_cast<size_t>(a)] != conflicts[static_cast<size_t>(b)])
      return conflicts[static_cast<size_t>(a)] < conflicts[static_cast<size_t>(b)];
    return ix.candidates[static_cast<size_t>(a)] < ix.candidates[static_cast<size_t>(b)];
  });
  std::vector<int> rank_of(ix.candidates.size());
  for (size_t pos = 0; pos < ranked.size(); ++pos)
    rank_of[static_cast<size_t>(ranked[pos])] = static_cast<int>(pos);
  ix.order = ranked;
  for (auto& list : ix.neighbors)
    std::sort(list.begin(), list.end(),
              [&](int a, int b) { return rank_of[static_cast<size_t>(a)] < rank_of[static_cast<size_t>(b)]; });
  return ix;
}

}  // namespace

bool aux_conflict(const std::vector<int>& y, const std::vector<int>& z) {
  for (int a : y)
    for (int b : z)
      if (a == b) return true;
  return false;
}

bool aux_adjacent(const std::vector<int>& y, const std::vector<int>& z,
                  const CycleCollection& c) {
  if (y.size() != static_cast<size_t>(4 * c.k) || z.size() != static_cast<size_t>(4 * c.k))
    throw InputError("aux adjacency requires two tuples of length 4k");
  std::vector<int> forward = weave(y, z, c.k);
  std::vector<int> backward = weave(z, y, c.k);
  for (const auto& t : c.tuples)
    if (t == forward || t == backward) return true;
  return false;
}

EmbedSearchResult find_pattern_embedding(const Graph& g, const CycleCollection& c, int k, int ell,
                                         long long budget) {
  if (k != c.k) throw InputError("pattern k does not match the collection's k");
  if (ell < 2) throw InputError("ell must be at least 2");
  WellformedResult wf = check_collection_wellformed(c);
  if (!wf.ok)
    throw PreconditionError("find_pattern_embedding requires a wellformed collection: " + wf.reason);

  EmbedSearchResult result;
  if (c.tuples.empty()) return result;

  AuxIndex ix = build_aux_index(c);
  const int slots = 2 * ell;
  const long long cap = budget <= 0 ? std::numeric_limits<long long>::max() : budget;
  std::vector<int> chosen;
  bool truncated = false;

  // Slot-filling DFS over candidate ids; every prefix is pairwise
  // conflict-free and consecutively aux-adjacent.
  std::function<bool(int)> fill = [&](int slot) -> bool {
    if (++result.nodes > cap) {
      truncated = true;
      return false;
    }
    if (slot == slots) {
      const auto& last_nb = ix.neighbors[static_cast<size_t>(chosen.back())];
      return std::find(last_nb.begin(), last_nb.end(), chosen.front()) != last_nb.end();
    }
    const std::vector<int>& pool =
        slot == 0 ? ix.order : ix.neighbors[static_cast<size_t>(chosen.back())];
    for (int cand : pool) {
      bool clash = false;
      for (int prev : chosen) {
        if (sorted_intersect(ix.sorted[static_cast<size_t>(cand)],
                             ix.sorted[static_cast<size_t>(prev)])) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      chosen.push_back(cand);
      if (fill(slot + 1)) return true;
      chosen.pop_back();
      if (truncated) return false;
    }
    return false;
  };

  if (!fill(0)) {
    result.status = truncated ? SearchStatus::BudgetExhausted : SearchStatus::AbsentExhausted;
    return result;
  }

  // Independent re-check of the found cycle against the definitions.
  for (int j = 0; j < slots; ++j) {
    const auto& a = ix.candidates[static_cast<size_t>(chosen[static_cast<size_t>(j)])];
    const auto& b =
        ix.candidates[static_cast<size_t>(chosen[static_cast<size_t>((j + 1) % slots)])];
    if (!aux_adjacent(a, b, c))
      throw std::logic_error("embedding search produced a non-adjacent column pair");
    for (int j2 = j + 1; j2 < slots; ++j2)
      if (aux_conflict(a, ix.candidates[static_cast<size_t>(chosen[static_cast<size_t>(j2)])]))
        throw std::logic_error("embedding search produced clashing columns");
  }

  Embedding emb;
  emb.k = k;
  emb.ell = ell;
  emb.map.assign(static_cast<size_t>(8 * k * ell), -1);
  for (int j = 0; j < slots; ++j) {
    const auto& column = ix.candidates[static_cast<size_t>(chosen[static_cast<size_t>(j)])];
    for (int i = 0; i < 4 * k; ++i)
      emb.map[static_cast<size_t>(j * 4 * k + i)] = column[static_cast<size_t>(i)];
  }
  if (!verify_embedding(emb, g))
    throw std::logic_error("assembled embedding failed pattern verification");

  result.status = SearchStatus::Found;
  result.embedding = std::move(emb);
  return result;
}

bool verify_embedding(const Embedding& emb, const Graph& host) {
  if (emb.k < 1 || emb.ell < 2) return false;
  const size_t expect = static_cast<size_t>(8 * emb.k * emb.ell);
  if (emb.map.size() != expect) return false;
  std::set<int> images;
  for (int v : emb.map) {
    if (v < 0 || v >= host.n) return false;
    images.insert(v);
  }
  if (images.size() != expect) return false;
  HklGraph pattern = build_hkl(emb.k, emb.ell);
  for (auto [a, b] : pattern.graph.edges())
    if (!host.has_edge(emb.map[static_cast<size_t>(a)], emb.map[static_cast<size_t>(b)]))
      return false;
  return true;
}

ClaimMeasurement measure_u_hit_proportion(const CycleCollection& c) {
  ClaimMeasurement m;
  m.witness = nullptr;
  if (c.tuples.empty()) return m;
  AuxIndex ix = build_aux_index(c);
  long long worst_count = 0, worst_degree = 1;
  for (size_t y = 0; y < ix.candidates.size(); ++y) {
    const auto& nb = ix.neighbors[y];
    if (nb.empty()) continue;
    std::map<int, long long> hit;
    for (int z : nb) {
      const auto& coords = ix.sorted[static_cast<size_t>(z)];
      for (size_t i = 0; i < coords.size(); ++i) {
        if (i > 0 && coords[i] == coords[i - 1]) continue;
        ++hit[coords[i]];
      }
    }
    for (const auto& [u, cnt] : hit) {
      if (cnt * worst_degree > worst_count * static_cast<long long>(nb.size())) {
        worst_count = cnt;
        worst_degree = static_cast<long long>(nb.size());
        m.witness = {{"column", ix.candidates[y]},
                     {"vertex", u},
                     {"hits", cnt},
                     {"degree", nb.size()}};
      }
    }
  }
  m.worst_proportion = static_cast<double>(worst_count) / static_cast<double>(worst_degree);
  return m;
}

}  // namespace turan
