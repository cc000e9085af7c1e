#include "turan/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "turan/builder.hpp"
#include "turan/clean.hpp"
#include "turan/collection.hpp"
#include "turan/errors.hpp"
#include "turan/regularize.hpp"

namespace turan {

namespace {

class StageClock {
 public:
  explicit StageClock(bool enabled) : enabled_(enabled) { reset(); }
  void reset() { start_ = std::chrono::steady_clock::now(); }
  long long elapsed_ms() const {
    if (!enabled_) return 0;
    auto now = std::chrono::steady_clock::now();
    return std::chrono::duration_cast<std::chrono::milliseconds>(now - start_).count();
  }

 private:
  bool enabled_;
  std::chrono::steady_clock::time_point start_;
};

nlohmann::json graph_sizes(const Graph& g) {
  return {{"vertices", g.n}, {"edges", g.edge_count}};
}

}  // namespace

PipelineResult run_pipeline(const Graph& g, const PipelineParams& params) {
  if (!(params.epsilon > 0.0 && params.epsilon < 1.0 / 6.0))
    throw InputError("epsilon must lie in (0, 1/6)");
  if (params.k < 1) throw InputError("k must be at least 1");
  if (params.ell < 2) throw InputError("ell must be at least 2");
  if (!params.branch_override.empty() && params.branch_override != "few" &&
      params.branch_override != "many")
    throw InputError("branch override must be empty, \"few\" or \"many\"");

  const double eps = params.epsilon;
  const double alpha = 1.0 / 3.0 + eps;
  const double delta = params.delta > 0.0 ? params.delta : eps / 2.0;

  PipelineResult result;
  result.report = nlohmann::json::object();
  result.report["params"] = {
      {"epsilon", eps},
      {"k", params.k},
      {"ell", params.ell},
      {"alpha", alpha},
      {"delta", delta},
      {"seed", params.seed},
      {"cycle_budget", params.cycle_budget},
      {"embed_budget", params.embed_budget},
      {"max_attempts", params.max_attempts},
      {"branch_override", params.branch_override},
      {"log_base", params.log_base == LogBase::Two ? "two" : "natural"},
      {"timings", params.timings},
      {"k_literal_ok", static_cast<double>(params.k) >= 1.0 / eps},
      {"ell_literal_ok", static_cast<double>(params.ell) >= 16.0 * params.k / eps},
  };
  result.report["stages"] = nlohmann::json::array();
  auto& stages = result.report["stages"];

  auto fail = [&](const std::string& stage, const std::string& reason) {
    result.failed_stage = stage;
    result.report["found"] = false;
    result.report["failed_stage"] = stage;
    result.report["failure_reason"] = reason;
    return result;
  };

  StageClock clock(params.timings);

  if (g.edge_count == 0) {
    stages.push_back({{"name", "regularize"},
                      {"hypotheses", {{"edges", 0}}},
                      {"sizes", graph_sizes(g)},
                      {"elapsed_ms", 0}});
    return fail("regularize", "input graph has no edges");
  }

  clock.reset();
  RegularizationResult reg =
      bounded_degree_subgraph(g, alpha, params.seed, params.max_attempts);
  stages.push_back({{"name", "regularize"},
                    {"hypotheses",
                     {{"alpha", reg.alpha},
                      {"K", reg.K},
                      {"precondition_edges_ok", reg.precondition_edges_ok},
                      {"vertex_count_ok", reg.vertex_count_ok},
                      {"edge_lower_ok", reg.edge_lower_ok},
                      {"degree_upper_ok", reg.degree_upper_ok},
                      {"keep_probability", reg.keep_probability},
                      {"attempts_used", reg.attempts_used},
                      {"succeeded", reg.succeeded}}},
                    {"sizes", graph_sizes(reg.subgraph)},
                    {"elapsed_ms", clock.elapsed_ms()}});
  if (reg.subgraph.edge_count == 0)
    return fail("regularize", "degree-bounded subsample kept no edges");

  clock.reset();
  CleanResult cl = clean_c4s(reg.subgraph, params.log_base);
  stages.push_back({{"name", "clean"},
                    {"hypotheses",
                     {{"q_before", cl.q_before},
                      {"q_after", cl.q_after},
                      {"removals", cl.removals.size()},
                      {"final_threshold", cl.final_threshold},
                      {"max_per_edge_after", cl.max_per_edge_after},
                      {"certificate_ok", cl.certificate_ok}}},
                    {"sizes", graph_sizes(cl.graph)},
                    {"elapsed_ms", clock.elapsed_ms()}});
  if (cl.graph.edge_count == 0) return fail("clean", "cleaning removed every edge");

  const Graph& work = cl.graph;
  const double m = static_cast<double>(work.n);
  const double logm = log_with(std::max(2.0, m), params.log_base);
  const double branch_threshold = std::pow(m, 5.0 / 3.0 + 3.0 * eps) / (96.0 * logm);
  const std::string literal_branch =
      static_cast<double>(cl.q_after) <= branch_threshold ? "few" : "many";
  const std::string branch =
      params.branch_override.empty() ? literal_branch : params.branch_override;
  stages.push_back({{"name", "branch"},
                    {"hypotheses",
                     {{"q", cl.q_after},
                      {"q_threshold", branch_threshold},
                      {"literal_branch", literal_branch},
                      {"chosen_branch", branch},
                      {"override_used", !params.branch_override.empty()}}},
                    {"sizes", graph_sizes(work)},
                    {"elapsed_ms", 0}});

  const double beta =
      params.beta_override > 0.0 ? params.beta_override : std::pow(m, -delta);
  BuilderParams bp;
  bp.epsilon = eps;
  bp.k = params.k;
  bp.tau = params.tau_override;
  bp.cycle_budget = params.cycle_budget;
  bp.beta_target = beta;
  bp.log_base = params.log_base;

  clock.reset();
  auto host = std::make_shared<const Graph>(work);
  BuilderResult built;
  try {
    built = branch == "few" ? build_good_few(host, bp) : build_good_many(host, bp);
  } catch (const NoAnchorError&) {
    stages.push_back({{"name", "collection"},
                      {"hypotheses", {{"branch", branch}}},
                      {"sizes", {{"tuples", 0}}},
                      {"elapsed_ms", clock.elapsed_ms()}});
    return fail("collection", "dense branch found no 4-cycle anchor");
  }
  nlohmann::json cert = {{"verdict", built.certificate.verdict},
                         {"bullet_wellformed", built.certificate.bullet_wellformed},
                         {"bullet_fiber_cap", built.certificate.bullet_fiber_cap},
                         {"bullet_projection_cap", built.certificate.bullet_projection_cap},
                         {"beta", built.certificate.beta},
                         {"s", built.certificate.s}};
  stages.push_back({{"name", "collection"},
                    {"hypotheses",
                     {{"branch", branch},
                      {"lemma", built.hypotheses},
                      {"certificate", cert},
                      {"s", built.s},
                      {"truncated", built.truncated}}},
                    {"sizes", {{"tuples", built.collection.size()}}},
                    {"elapsed_ms", clock.elapsed_ms()}});
  if (built.empty_failure)
    return fail("collection", "no cycles satisfied the branch lemma's construction at this scale");

  clock.reset();
  PruneResult pruned = prune_to_nice(built.collection, beta, built.s);
  NicenessReport nice = check_nice(pruned.collection, beta);
  stages.push_back({{"name", "prune"},
                    {"hypotheses",
                     {{"beta", beta},
                      {"s", built.s},
                      {"deleted_tuples", pruned.deleted_tuples},
                      {"deleted_fibers", pruned.deleted_fibers},
                      {"nice_verdict", nice.verdict},
                      {"worst_proportion", nice.worst_proportion}}},
                    {"sizes", {{"tuples", pruned.collection.size()}}},
                    {"elapsed_ms", clock.elapsed_ms()}});
  if (pruned.collection.tuples.empty())
    return fail("prune", "pruning to a nice collection emptied it");

  clock.reset();
  EmbedSearchResult search =
      find_pattern_embedding(work, pruned.collection, params.k, params.ell, params.embed_budget);
  std::string status = search.status == SearchStatus::Found
                           ? "found"
                           : (search.status == SearchStatus::BudgetExhausted ? "budget_exhausted"
                                                                             : "absent");
  stages.push_back({{"name", "embed"},
                    {"hypotheses", {{"status", status}, {"nodes", search.nodes}}},
                    {"sizes", {{"tuples", pruned.collection.size()}}},
                    {"elapsed_ms", clock.elapsed_ms()}});
  if (search.status != SearchStatus::Found)
    return fail("embed", search.status == SearchStatus::BudgetExhausted
                             ? "embedding search exhausted its budget"
                             : "no conflict-free auxiliary cycle exists in the collection");

  // Compose back to the input graph's ids; the subsample stages only removed
  // edges and vertices, so images stay valid under the vertex map.
  Embedding composed;
  composed.k = params.k;
  composed.ell = params.ell;
  composed.map.reserve(search.embedding->map.size());
  for (int v : search.embedding->map)
    composed.map.push_back(reg.vertex_map[static_cast<size_t>(v)]);
  if (!verify_embedding(composed, g))
    throw std::logic_error("composed embedding failed verification on the input graph");

  nlohmann::json emb_json = nlohmann::json::object();
  for (int j = 1; j <= 2 * params.ell; ++j)
    for (int i = 1; i <= 4 * params.k; ++i) {
      std::string key = std::to_string(i) + "," + std::to_string(j);
      emb_json[key] =
          composed.map[static_cast<size_t>((j - 1) * 4 * params.k + (i - 1))];
    }
  result.report["embedding"] = emb_json;
  result.report["found"] = true;
  result.report["failed_stage"] = "";
  result.found = true;
  result.embedding = std::move(composed);
  return result;
}

}  // namespace turan
