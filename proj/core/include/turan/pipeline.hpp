#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "turan/common.hpp"
#include "turan/embedder.hpp"
#include "turan/graph.hpp"

namespace turan {

struct PipelineParams {
  double epsilon = 0.05;  // must lie in (0, 1/6)
  int k = 1;
  int ell = 2;
  double delta = 0.0;  // niceness exponent; 0 resolves to epsilon/2
  std::uint64_t seed = 0;
  long long cycle_budget = 10'000'000;
  long long embed_budget = 10'000'000;
  int max_attempts = 16;       // edge subsample retries
  double beta_override = 0.0;  // 0 resolves to m^{-delta} on the working graph
  long long tau_override = 0;  // 0 resolves to ceil(m^{2 epsilon})
  std::string branch_override;  // "", "few" or "many"
  LogBase log_base = LogBase::Natural;
  bool timings = false;  // elapsed_ms stays 0 unless set, keeping reports byte-stable
};

struct PipelineResult {
  bool found = false;
  std::optional<Embedding> embedding;  // vertex ids of the original input graph
  nlohmann::json report;
  std::string failed_stage;
};

// Full proof-order pipeline: degree-bounded subsample, 4-cycle cleaning, the
// literal branch test (overridable), the chosen collection builder, pruning to
// a nice collection, and the auxiliary-cycle embedding search. Every stage
// reports measured hypotheses and sizes; a returned embedding is composed back
// to the input graph's vertex ids and verified there.
PipelineResult run_pipeline(const Graph& g, const PipelineParams& params);

}  // namespace turan
