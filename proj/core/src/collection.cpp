#include "turan/collection.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "turan/errors.hpp"

namespace turan {

namespace {

void require_shape(const CycleCollection& c) {
  if (c.k < 1) throw InputError("cycle collection requires k >= 1");
  if (!c.host) throw InputError("cycle collection has no host graph");
  const int len = c.tuple_length();
  for (const auto& t : c.tuples) {
    if (static_cast<int>(t.size()) != len)
      throw InputError("cycle collection tuple has wrong length");
    for (int v : t)
      if (v < 0 || v >= c.host->n)
        throw InputError("cycle collection tuple has out-of-range vertex");
  }
}

std::vector<int> drop_pair_projection(const std::vector<int>& tuple, int p, int len) {
  std::vector<int> key;
  key.reserve(static_cast<size_t>(len) - 2);
  int q = (p + 1) % len;
  for (int i = 0; i < len; ++i)
    if (i != p && i != q) key.push_back(tuple[i]);
  return key;
}

std::vector<int> drop_one_projection(const std::vector<int>& tuple, int p, int len) {
  std::vector<int> key;
  key.reserve(static_cast<size_t>(len) - 1);
  for (int i = 0; i < len; ++i)
    if (i != p) key.push_back(tuple[i]);
  return key;
}

using FiberMap = std::map<std::vector<int>, std::vector<size_t>>;

FiberMap fibers_at(const CycleCollection& c, int p) {
  FiberMap fibers;
  const int len = c.tuple_length();
  for (size_t idx = 0; idx < c.tuples.size(); ++idx)
    fibers[drop_pair_projection(c.tuples[idx], p, len)].push_back(idx);
  return fibers;
}

// Worst vertex inside one projection group: (count, vertex) with count the
// number of members whose dropped slots contain the vertex.
std::pair<long long, int> worst_vertex_in_fiber(const CycleCollection& c, int p,
                                                const std::vector<size_t>& members) {
  const int len = c.tuple_length();
  int q = (p + 1) % len;
  std::map<int, long long> counts;
  for (size_t idx : members) {
    const auto& t = c.tuples[idx];
    ++counts[t[p]];
    if (t[q] != t[p]) ++counts[t[q]];
  }
  long long best_count = 0;
  int best_vertex = -1;
  for (const auto& [u, cnt] : counts) {
    if (cnt > best_count) {
      best_count = cnt;
      best_vertex = u;
    }
  }
  return {best_count, best_vertex};
}

}  // namespace

WellformedResult check_collection_wellformed(const CycleCollection& c) {
  require_shape(c);
  const int len = c.tuple_length();
  WellformedResult r;
  for (const auto& t : c.tuples) {
    std::set<int> distinct(t.begin(), t.end());
    if (static_cast<int>(distinct.size()) != len) {
      r.ok = false;
      r.reason = "tuple repeats a vertex";
      r.bad_tuple = t;
      return r;
    }
    for (int i = 0; i < len; ++i) {
      if (!c.host->has_edge(t[i], t[(i + 1) % len])) {
        r.ok = false;
        r.reason = "cyclically consecutive entries are not adjacent";
        r.bad_tuple = t;
        return r;
      }
    }
  }
  return r;
}

long long infer_s(const CycleCollection& c) {
  require_shape(c);
  if (c.tuples.empty()) throw InputError("cannot infer a fiber scale from an empty collection");
  const int len = c.tuple_length();
  long long best = 0;
  for (int p = 0; p < len; ++p) {
    std::map<std::vector<int>, long long> fiber;
    for (const auto& t : c.tuples) ++fiber[drop_one_projection(t, p, len)];
    for (const auto& [key, cnt] : fiber) best = std::max(best, cnt);
  }
  return best;
}

GoodnessCertificate check_good(const CycleCollection& c, double beta, double s) {
  require_shape(c);
  if (!(beta > 0.0)) throw InputError("beta must be positive");
  if (!(s > 0.0)) throw InputError("fiber scale s must be positive");

  GoodnessCertificate cert;
  cert.beta = beta;
  cert.s = s;
  cert.witnesses = nlohmann::json::object();

  WellformedResult wf = check_collection_wellformed(c);
  cert.bullet_wellformed = wf.ok;
  if (!wf.ok) cert.witnesses["wellformed"] = {{"reason", wf.reason}, {"tuple", wf.bad_tuple}};

  const int len = c.tuple_length();
  cert.bullet_fiber_cap = true;
  for (int p = 0; p < len && cert.bullet_fiber_cap; ++p) {
    std::map<std::vector<int>, std::vector<size_t>> fiber;
    for (size_t idx = 0; idx < c.tuples.size(); ++idx)
      fiber[drop_one_projection(c.tuples[idx], p, len)].push_back(idx);
    for (const auto& [key, members] : fiber) {
      if (static_cast<double>(members.size()) > s) {
        cert.bullet_fiber_cap = false;
        cert.witnesses["fiber"] = {{"position", p},
                                   {"tuple", c.tuples[members.front()]},
                                   {"count", members.size()}};
        break;
      }
    }
  }

  const double cap = beta * static_cast<double>(c.size()) / (16.0 * static_cast<double>(c.k) * s);
  cert.bullet_projection_cap = true;
  for (int p = 0; p < len; ++p) {
    auto fibers = fibers_at(c, p);
    long long distinct = static_cast<long long>(fibers.size());
    if (static_cast<double>(distinct) > cap) {
      cert.bullet_projection_cap = false;
      cert.witnesses["projection"] = {{"drop_pair", p}, {"distinct", distinct}, {"cap", cap}};
      break;
    }
  }

  cert.verdict = cert.bullet_wellformed && cert.bullet_fiber_cap && cert.bullet_projection_cap;
  return cert;
}

NicenessReport check_nice(const CycleCollection& c, double beta) {
  require_shape(c);
  if (!(beta > 0.0)) throw InputError("beta must be positive");

  NicenessReport report;
  report.beta = beta;
  report.verdict = true;
  report.worst_witness = nullptr;
  if (c.tuples.empty()) return report;

  const int len = c.tuple_length();
  // Track the worst proportion exactly: count/size ordered by cross products.
  long long worst_count = 0, worst_size = 1;
  for (int p = 0; p < len; ++p) {
    for (const auto& [key, members] : fibers_at(c, p)) {
      auto [cnt, u] = worst_vertex_in_fiber(c, p, members);
      long long size = static_cast<long long>(members.size());
      if (cnt * worst_size > worst_count * size) {
        worst_count = cnt;
        worst_size = size;
        report.worst_witness = {{"drop_pair", p},
                                {"projection", key},
                                {"vertex", u},
                                {"count", cnt},
                                {"fiber_size", size}};
      }
    }
  }
  report.worst_proportion = static_cast<double>(worst_count) / static_cast<double>(worst_size);
  report.verdict = static_cast<double>(worst_count) <= beta * static_cast<double>(worst_size);
  return report;
}

PruneResult prune_to_nice(const CycleCollection& c, double beta, double s) {
  WellformedResult wf = check_collection_wellformed(c);
  if (!wf.ok) throw PreconditionError("prune_to_nice requires a wellformed collection: " + wf.reason);
  if (!(beta > 0.0)) throw InputError("beta must be positive");
  if (!(s > 0.0)) throw InputError("fiber scale s must be positive");

  PruneResult result;
  result.collection = c;
  result.deletions = nlohmann::json::array();
  const int len = c.tuple_length();
  const double size_floor = 2.0 * s / beta;

  bool deleted = true;
  while (deleted) {
    deleted = false;
    for (int p = 0; p < len && !deleted; ++p) {
      for (const auto& [key, members] : fibers_at(result.collection, p)) {
        long long size = static_cast<long long>(members.size());
        int rule = 0;
        if (static_cast<double>(size) < size_floor) {
          rule = 1;
        } else {
          auto [cnt, u] = worst_vertex_in_fiber(result.collection, p, members);
          if (static_cast<double>(cnt) > beta * static_cast<double>(size)) rule = 2;
        }
        if (rule == 0) continue;
        result.deletions.push_back(
            {{"drop_pair", p}, {"projection", key}, {"size", size}, {"rule", rule}});
        ++result.deleted_fibers;
        result.deleted_tuples += size;
        std::set<size_t> doomed(members.begin(), members.end());
        std::vector<std::vector<int>> kept;
        kept.reserve(result.collection.tuples.size() - members.size());
        for (size_t idx = 0; idx < result.collection.tuples.size(); ++idx)
          if (!doomed.count(idx)) kept.push_back(std::move(result.collection.tuples[idx]));
        result.collection.tuples = std::move(kept);
        deleted = true;
        break;
      }
    }
  }

  if (!check_nice(result.collection, beta).verdict)
    throw std::logic_error("prune_to_nice postcondition failed");
  return result;
}

nlohmann::json collection_to_json(const CycleCollection& c) {
  return {{"k", c.k}, {"tuples", c.tuples}};
}

CycleCollection collection_from_json(const nlohmann::json& j,
                                     std::shared_ptr<const Graph> host) {
  if (!j.is_object() || !j.contains("k") || !j.contains("tuples"))
    throw InputError("collection json requires fields k and tuples");
  CycleCollection c;
  c.k = j.at("k").get<int>();
  c.tuples = j.at("tuples").get<std::vector<std::vector<int>>>();
  c.host = std::move(host);
  require_shape(c);
  return c;
}

}  // namespace turan
