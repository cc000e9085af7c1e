#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "turan/builder.hpp"
#include "turan/census.hpp"
#include "turan/clean.hpp"
#include "turan/collection.hpp"
#include "turan/embedder.hpp"
#include "turan/errors.hpp"
#include "turan/generators.hpp"
#include "turan/graph_io.hpp"
#include "turan/hkl.hpp"
#include "turan/lemmas.hpp"
#include "turan/oracles.hpp"
#include "turan/pipeline.hpp"
#include "turan/regularize.hpp"
#include "turan/report.hpp"

namespace {

using nlohmann::json;

std::uint64_t env_seed() {
  const char* raw = std::getenv("EXTREMAL_SEED");
  if (!raw || !*raw) return 0;
  char* end = nullptr;
  unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0') return 0;
  return static_cast<std::uint64_t>(v);
}

void emit(const json& j, const std::string& out_path) {
  std::string text = j.dump(2) + "\n";
  if (out_path.empty())
    std::cout << text;
  else
    turan::write_text_file(out_path, text);
}

void emit_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    turan::write_text_file(out_path, text);
}

turan::LogBase parse_log_base(const std::string& name) {
  if (name == "natural") return turan::LogBase::Natural;
  if (name == "two") return turan::LogBase::Two;
  throw turan::InputError("log base must be natural or two");
}

std::string status_string(turan::SearchStatus s) {
  switch (s) {
    case turan::SearchStatus::Found: return "found";
    case turan::SearchStatus::AbsentExhausted: return "absent";
    case turan::SearchStatus::BudgetExhausted: return "unknown";
  }
  return "unknown";
}

json certificate_json(const turan::GoodnessCertificate& c) {
  return {{"beta", c.beta},
          {"s", c.s},
          {"verdict", c.verdict},
          {"bullet_wellformed", c.bullet_wellformed},
          {"bullet_fiber_cap", c.bullet_fiber_cap},
          {"bullet_projection_cap", c.bullet_projection_cap},
          {"witnesses", c.witnesses}};
}

json niceness_json(const turan::NicenessReport& r) {
  return {{"beta", r.beta},
          {"verdict", r.verdict},
          {"worst_proportion", r.worst_proportion},
          {"worst_witness", r.worst_witness}};
}

struct GenHklOpts {
  int k = 1;
  int ell = 2;
  std::string format = "edgelist";
  std::string out;
};

int run_gen_hkl(const GenHklOpts& o) {
  auto h = turan::build_hkl(o.k, o.ell);
  if (o.format == "edgelist") {
    emit_text(turan::to_edgelist_text(h.graph), o.out);
    return 0;
  }
  json config = {{"k", o.k}, {"ell", o.ell}, {"format", o.format}, {"out", o.out}};
  json j = turan::report_envelope("gen-hkl", config);
  json g = turan::graph_to_json(h.graph);
  j["n"] = g["n"];
  j["edges"] = g["edges"];
  json labels = json::object();
  for (int col = 1; col <= h.cols(); ++col) {
    for (int row = 1; row <= h.rows(); ++row) {
      labels[std::to_string(row) + "," + std::to_string(col)] = h.label(row, col);
    }
  }
  j["labels"] = labels;
  j["connected_observed"] = h.connected_observed;
  emit(j, o.out);
  return 0;
}

struct GenHostOpts {
  std::string model = "erdos-renyi";
  int n = 0;
  double p = 0.0;
  std::uint64_t seed = env_seed();
  int pattern_k = 1;
  int pattern_ell = 2;
  std::string out;
  std::string report;
};

int run_gen_host(const GenHostOpts& o) {
  turan::HostSpec spec;
  spec.model = o.model;
  spec.n = o.n;
  spec.p = o.p;
  spec.seed = o.seed;
  if (o.model == "planted-pattern-plus-noise") {
    spec.pattern = turan::build_hkl(o.pattern_k, o.pattern_ell).graph;
  }
  auto res = turan::generate_host(spec);
  turan::write_graph_file(res.graph, o.out);
  json config = {{"model", o.model}, {"n", o.n},
                 {"p", o.p},         {"seed", o.seed},
                 {"pattern_k", o.pattern_k}, {"pattern_ell", o.pattern_ell},
                 {"out", o.out}};
  json j = turan::report_envelope("gen-host", config);
  j["vertices"] = res.graph.n;
  j["edges"] = res.graph.edge_count;
  j["pattern_vertices"] = res.pattern_vertices;
  if (!o.report.empty()) emit(j, o.report);
  return 0;
}

struct CensusOpts {
  std::string graph;
  int k = 2;
  bool brute_force = false;
  long long budget = 50'000'000;
  int jobs = 1;
  std::string csv;
  std::string out;
};

int run_census(const CensusOpts& o) {
  turan::Graph g = turan::read_graph_file(o.graph);
  json config = {{"graph", o.graph}, {"k", o.k},       {"brute_force", o.brute_force},
                 {"budget", o.budget}, {"jobs", o.jobs}, {"csv", o.csv}};
  json reports = json::array();
  bool all_ok = true;

  turan::BigInt hom = turan::hom_cycle_count(g, o.k);
  reports.push_back({{"lemma", "hom_cycle_count"},
                     {"measured", turan::count_json(hom)},
                     {"bound", 0.0},
                     {"direction", "measured>=bound"},
                     {"satisfied", true},
                     {"exact_comparison", true},
                     {"parameters", {{"n", g.n}, {"k", o.k}, {"method", "trace_power"}}}});

  if (o.brute_force) {
    turan::BigInt brute = turan::hom_count_bruteforce(g, o.k, o.budget, o.jobs);
    bool equal = brute == hom;
    all_ok = all_ok && equal;
    reports.push_back({{"lemma", "hom_bruteforce_equality"},
                       {"measured", turan::count_json(brute)},
                       {"bound", turan::big_to_double(hom)},
                       {"direction", "measured<=bound"},
                       {"satisfied", equal},
                       {"exact_comparison", true},
                       {"parameters", {{"trace", turan::count_json(hom)}, {"jobs", o.jobs}}}});
  }

  turan::C4Census census = turan::c4_census(g);
  turan::BigInt per_edge_sum = 0;
  for (const auto& [e, c] : census.per_edge) per_edge_sum += c;
  bool identity = census.codegree_pair_sum == turan::BigInt(2) * census.total &&
                  per_edge_sum == turan::BigInt(4) * census.total;
  all_ok = all_ok && identity;
  reports.push_back({{"lemma", "c4_codegree_identity"},
                     {"measured", turan::count_json(census.codegree_pair_sum)},
                     {"bound", 2.0 * static_cast<double>(census.total)},
                     {"direction", "measured<=bound"},
                     {"satisfied", identity},
                     {"exact_comparison", true},
                     {"parameters",
                      {{"q", census.total},
                       {"per_edge_sum", turan::count_json(per_edge_sum)},
                       {"edges", g.edge_count}}}});

  turan::BigInt copies = turan::genuine_cycle_copies(g, o.k, o.budget);
  reports.push_back({{"lemma", "genuine_cycle_copies"},
                     {"measured", turan::count_json(copies)},
                     {"bound", 0.0},
                     {"direction", "measured>=bound"},
                     {"satisfied", true},
                     {"exact_comparison", true},
                     {"parameters", {{"k", o.k}, {"budget", o.budget}}}});

  json j = turan::report_envelope("census", config);
  j["reports"] = reports;
  emit(j, o.out);

  if (!o.csv.empty()) {
    std::ostringstream csv;
    csv << "u,v,count\n";
    for (const auto& [e, c] : census.per_edge) {
      csv << e.first << "," << e.second << "," << c << "\n";
    }
    turan::write_text_file(o.csv, csv.str());
  }
  return all_ok ? 0 : 1;
}

struct CleanOpts {
  std::string graph;
  std::string out;
  std::string log;
  std::string log_base = "natural";
};

int run_clean(const CleanOpts& o) {
  turan::Graph g = turan::read_graph_file(o.graph);
  turan::CleanResult res = turan::clean_c4s(g, parse_log_base(o.log_base));
  turan::write_graph_file(res.graph, o.out);
  json config = {{"graph", o.graph}, {"out", o.out}, {"log", o.log}, {"log_base", o.log_base}};
  json j = turan::report_envelope("clean", config);
  j["edges_before"] = g.edge_count;
  j["edges_after"] = res.graph.edge_count;
  j["q_before"] = res.q_before;
  j["q_after"] = res.q_after;
  j["final_threshold"] = res.final_threshold;
  j["max_per_edge_after"] = res.max_per_edge_after;
  j["certificate_ok"] = res.certificate_ok;
  json removals = json::array();
  for (const auto& r : res.removals) {
    removals.push_back({{"u", r.u},
                        {"v", r.v},
                        {"count_at_removal", r.count_at_removal},
                        {"threshold_at_removal", r.threshold_at_removal}});
  }
  j["removals"] = removals;
  if (!o.log.empty()) emit(j, o.log);
  return res.certificate_ok ? 0 : 1;
}

struct RegularizeOpts {
  std::string graph;
  double alpha = 1.0 / 3.0;
  std::uint64_t seed = env_seed();
  std::string variant = "es";
  int attempts = 16;
  std::string out;
  std::string report;
};

int run_regularize(const RegularizeOpts& o) {
  turan::Graph g = turan::read_graph_file(o.graph);
  turan::RegularizationResult r;
  if (o.variant == "es") {
    r = turan::almost_regular_subgraph(g, o.alpha);
  } else if (o.variant == "random") {
    r = turan::bounded_degree_subgraph(g, o.alpha, o.seed, o.attempts);
  } else {
    throw turan::InputError("regularize variant must be es or random");
  }
  if (!o.out.empty()) turan::write_graph_file(r.subgraph, o.out);
  json config = {{"graph", o.graph},   {"alpha", o.alpha},       {"seed", o.seed},
                 {"variant", o.variant}, {"attempts", o.attempts}, {"out", o.out}};
  json j = turan::report_envelope("regularize", config);
  j["m"] = r.m;
  j["edges"] = r.subgraph.edge_count;
  j["K"] = r.K;
  j["precondition_edges_ok"] = r.precondition_edges_ok;
  j["vertex_count_ok"] = r.vertex_count_ok;
  j["edge_lower_ok"] = r.edge_lower_ok;
  j["degree_upper_ok"] = r.degree_upper_ok;
  j["keep_probability"] = r.keep_probability;
  j["attempts_used"] = r.attempts_used;
  j["succeeded"] = r.succeeded;
  j["vertex_map"] = r.vertex_map;
  emit(j, o.report);
  return (o.variant == "random" && !r.succeeded) ? 1 : 0;
}

struct BuildCollectionOpts {
  std::string graph;
  int k = 1;
  double epsilon = 0.05;
  std::string branch = "auto";
  long long tau = 0;
  long long budget = 10'000'000;
  double beta = 0.0;
  std::string log_base = "natural";
  std::string out;
  std::string report;
};

int run_build_collection(const BuildCollectionOpts& o) {
  auto host = std::make_shared<const turan::Graph>(turan::read_graph_file(o.graph));
  turan::LogBase base = parse_log_base(o.log_base);

  json config = {{"graph", o.graph},   {"k", o.k},         {"epsilon", o.epsilon},
                 {"branch", o.branch}, {"tau", o.tau},     {"budget", o.budget},
                 {"beta", o.beta},     {"log_base", o.log_base}, {"out", o.out}};
  json j = turan::report_envelope("build-collection", config);

  std::string used = o.branch;
  if (o.branch == "auto") {
    long long q = turan::c4_census(*host).total;
    double m = static_cast<double>(std::max(2, host->n));
    double threshold =
        std::pow(m, 5.0 / 3.0 + 3.0 * o.epsilon) / (96.0 * turan::log_with(m, base));
    used = static_cast<double>(q) <= threshold ? "few" : "many";
    j["branch_test"] = {{"q", q}, {"threshold", threshold}, {"chosen", used}};
  } else if (o.branch != "few" && o.branch != "many") {
    throw turan::InputError("branch must be auto, few or many");
  }
  j["branch_used"] = used;

  turan::BuilderParams params;
  params.epsilon = o.epsilon;
  params.k = o.k;
  params.tau = o.tau;
  params.cycle_budget = o.budget;
  params.beta_target = o.beta;
  params.log_base = base;

  turan::BuilderResult res;
  try {
    res = used == "few" ? turan::build_good_few(host, params)
                        : turan::build_good_many(host, params);
  } catch (const turan::NoAnchorError& e) {
    j["failure"] = {{"kind", "no_anchor"}, {"message", e.what()}};
    emit(j, o.report);
    return 1;
  }

  j["size"] = res.collection.size();
  j["s"] = res.s;
  j["truncated"] = res.truncated;
  j["empty_failure"] = res.empty_failure;
  j["hypotheses"] = res.hypotheses;
  j["certificate"] = certificate_json(res.certificate);
  emit(j, o.report);
  if (!o.out.empty()) {
    emit(turan::collection_to_json(res.collection), o.out);
  }
  return res.empty_failure ? 1 : 0;
}

struct CheckGoodOpts {
  std::string collection;
  std::string graph;
  double beta = 0.5;
  double s = 0.0;
  std::string out;
};

int run_check_good(const CheckGoodOpts& o) {
  auto host = std::make_shared<const turan::Graph>(turan::read_graph_file(o.graph));
  json cj = json::parse(turan::read_text_file(o.collection));
  turan::CycleCollection c = turan::collection_from_json(cj, host);
  double s = o.s;
  bool inferred = false;
  if (s <= 0.0) {
    s = static_cast<double>(turan::infer_s(c));
    inferred = true;
  }
  turan::GoodnessCertificate cert = turan::check_good(c, o.beta, s);
  json config = {{"collection", o.collection}, {"graph", o.graph}, {"beta", o.beta}, {"s", o.s}};
  json j = turan::report_envelope("check-good", config);
  j["size"] = c.size();
  j["s_inferred"] = inferred;
  j["certificate"] = certificate_json(cert);
  emit(j, o.out);
  return cert.verdict ? 0 : 1;
}

struct PruneNiceOpts {
  std::string collection;
  std::string graph;
  double beta = 0.5;
  double s = 0.0;
  std::string out;
  std::string report;
};

int run_prune_nice(const PruneNiceOpts& o) {
  auto host = std::make_shared<const turan::Graph>(turan::read_graph_file(o.graph));
  json cj = json::parse(turan::read_text_file(o.collection));
  turan::CycleCollection c = turan::collection_from_json(cj, host);
  double s = o.s;
  bool inferred = false;
  if (s <= 0.0) {
    s = static_cast<double>(turan::infer_s(c));
    inferred = true;
  }
  turan::PruneResult pr = turan::prune_to_nice(c, o.beta, s);
  emit(turan::collection_to_json(pr.collection), o.out);
  json config = {{"collection", o.collection}, {"graph", o.graph},
                 {"beta", o.beta},             {"s", o.s},
                 {"out", o.out}};
  json j = turan::report_envelope("prune-nice", config);
  j["size_before"] = c.size();
  j["size_after"] = pr.collection.size();
  j["s_inferred"] = inferred;
  j["deleted_tuples"] = pr.deleted_tuples;
  j["deleted_fibers"] = pr.deleted_fibers;
  j["deletions"] = pr.deletions;
  j["nice"] = niceness_json(turan::check_nice(pr.collection, o.beta));
  if (!o.report.empty()) emit(j, o.report);
  return 0;
}

struct PipelineOpts {
  std::string graph;
  int k = 1;
  int ell = 2;
  double epsilon = 0.05;
  double delta = 0.0;
  std::uint64_t seed = env_seed();
  double beta = 0.0;
  long long tau = 0;
  std::string branch_override;
  long long cycle_budget = 10'000'000;
  long long embed_budget = 10'000'000;
  int attempts = 16;
  std::string log_base = "natural";
  bool timings = false;
  std::string report;
};

int run_pipeline_cmd(const PipelineOpts& o) {
  turan::Graph g = turan::read_graph_file(o.graph);
  turan::PipelineParams params;
  params.epsilon = o.epsilon;
  params.k = o.k;
  params.ell = o.ell;
  params.delta = o.delta;
  params.seed = o.seed;
  params.cycle_budget = o.cycle_budget;
  params.embed_budget = o.embed_budget;
  params.max_attempts = o.attempts;
  params.beta_override = o.beta;
  params.tau_override = o.tau;
  params.branch_override = o.branch_override;
  params.log_base = parse_log_base(o.log_base);
  params.timings = o.timings;

  turan::PipelineResult res = turan::run_pipeline(g, params);

  json config = {{"graph", o.graph},
                 {"k", o.k},
                 {"ell", o.ell},
                 {"epsilon", o.epsilon},
                 {"delta", o.delta},
                 {"seed", o.seed},
                 {"beta", o.beta},
                 {"tau", o.tau},
                 {"branch_override", o.branch_override},
                 {"cycle_budget", o.cycle_budget},
                 {"embed_budget", o.embed_budget},
                 {"attempts", o.attempts},
                 {"log_base", o.log_base},
                 {"timings", o.timings}};
  json j = turan::report_envelope("pipeline", config);
  j["pipeline"] = res.report;
  emit(j, o.report);
  return res.found ? 0 : 1;
}

struct VerifyEmbeddingOpts {
  std::string graph;
  std::string embedding;
  int k = 0;
  int ell = 0;
  std::string out;
};

int run_verify_embedding(const VerifyEmbeddingOpts& o) {
  turan::Graph g = turan::read_graph_file(o.graph);
  json j = json::parse(turan::read_text_file(o.embedding));
  if (j.contains("pipeline")) j = j.at("pipeline");

  int k = o.k;
  int ell = o.ell;
  if (k == 0 && j.contains("params") && j.at("params").contains("k"))
    k = j.at("params").at("k").get<int>();
  if (k == 0 && j.contains("k")) k = j.at("k").get<int>();
  if (ell == 0 && j.contains("params") && j.at("params").contains("ell"))
    ell = j.at("params").at("ell").get<int>();
  if (ell == 0 && j.contains("ell")) ell = j.at("ell").get<int>();
  if (k < 1 || ell < 2) throw turan::InputError("verify-embedding: k and ell unresolved");

  turan::Embedding emb;
  emb.k = k;
  emb.ell = ell;
  if (j.contains("embedding") && j.at("embedding").is_object()) {
    emb.map.assign(static_cast<size_t>(8 * k * ell), -1);
    for (const auto& [key, val] : j.at("embedding").items()) {
      auto comma = key.find(',');
      if (comma == std::string::npos)
        throw turan::InputError("embedding key must look like \"i,j\": " + key);
      int row = std::stoi(key.substr(0, comma));
      int col = std::stoi(key.substr(comma + 1));
      if (row < 1 || row > 4 * k || col < 1 || col > 2 * ell)
        throw turan::InputError("embedding key out of grid range: " + key);
      emb.map[static_cast<size_t>((col - 1) * 4 * k + (row - 1))] = val.get<int>();
    }
    for (int v : emb.map)
      if (v < 0) throw turan::InputError("embedding is missing a grid label");
  } else if (j.contains("map") && j.at("map").is_array()) {
    emb.map = j.at("map").get<std::vector<int>>();
  } else {
    throw turan::InputError("embedding file needs an \"embedding\" object or \"map\" array");
  }

  bool ok = turan::verify_embedding(emb, g);
  json config = {{"graph", o.graph}, {"embedding", o.embedding}, {"k", k}, {"ell", ell}};
  json r = turan::report_envelope("verify-embedding", config);
  r["valid"] = ok;
  r["vertices"] = static_cast<long long>(emb.map.size());
  emit(r, o.out);
  return ok ? 0 : 1;
}

struct OracleEmbedOpts {
  std::string pattern;
  std::string host;
  long long budget = 10'000'000;
  std::string out;
};

int run_oracle_embed(const OracleEmbedOpts& o) {
  turan::Graph pattern = turan::read_graph_file(o.pattern);
  turan::Graph host = turan::read_graph_file(o.host);
  turan::EmbedResult r = turan::embed_bruteforce(pattern, host, o.budget);
  json config = {{"pattern", o.pattern}, {"host", o.host}, {"budget", o.budget}};
  json j = turan::report_envelope("oracle-embed", config);
  j["status"] = status_string(r.status);
  j["nodes"] = r.nodes;
  if (r.status == turan::SearchStatus::Found) j["map"] = r.map;
  emit(j, o.out);
  return r.status == turan::SearchStatus::Found ? 0 : 1;
}

struct OracleHomOpts {
  std::string graph;
  int k = 2;
  long long budget = 50'000'000;
  int jobs = 1;
  bool tuple_scan = false;
  std::string out;
};

int run_oracle_hom(const OracleHomOpts& o) {
  turan::Graph g = turan::read_graph_file(o.graph);
  turan::BigInt trace = turan::hom_cycle_count(g, o.k);
  turan::BigInt brute = turan::hom_count_bruteforce(g, o.k, o.budget, o.jobs);
  bool agree = trace == brute;
  json config = {{"graph", o.graph}, {"k", o.k},           {"budget", o.budget},
                 {"jobs", o.jobs},   {"tuple_scan", o.tuple_scan}};
  json j = turan::report_envelope("oracle-hom", config);
  j["trace"] = turan::count_json(trace);
  j["bruteforce"] = turan::count_json(brute);
  if (o.tuple_scan) {
    turan::BigInt scan = turan::hom_count_tuple_scan(g, o.k);
    j["tuple_scan"] = turan::count_json(scan);
    agree = agree && scan == trace;
  }
  j["agree"] = agree;
  emit(j, o.out);
  return agree ? 0 : 1;
}

struct OracleTuranOpts {
  std::string pattern;
  int n = 4;
  std::string strategy = "both";
  std::string out;
};

int run_oracle_turan(const OracleTuranOpts& o) {
  turan::Graph pattern = turan::read_graph_file(o.pattern);
  json config = {{"pattern", o.pattern}, {"n", o.n}, {"strategy", o.strategy}};
  json j = turan::report_envelope("oracle-turan", config);
  bool agree = true;
  turan::TuranRecord rec;
  if (o.strategy == "both") {
    turan::TuranRecord down = turan::turan_exhaustive(pattern, o.n, "descending");
    turan::TuranRecord up = turan::turan_exhaustive(pattern, o.n, "ascending");
    agree = down.value == up.value;
    j["strategies"] = {{"descending", down.value}, {"ascending", up.value}};
    rec = down;
  } else {
    rec = turan::turan_exhaustive(pattern, o.n, o.strategy);
  }
  j["n"] = rec.n;
  j["value"] = rec.value;
  j["witness"] = turan::graph_to_json(rec.witness);
  j["agree"] = agree;
  emit(j, o.out);
  return agree ? 0 : 1;
}

struct CheckLemmasOpts {
  std::string graph;
  int k = 2;
  std::string lemmas = "sidorenko,homcycles,conflict-edges,conflict-vertices,supersaturation";
  long long budget = 50'000'000;
  std::string out;
};

int run_check_lemmas(const CheckLemmasOpts& o) {
  turan::Graph g = turan::read_graph_file(o.graph);
  std::vector<std::string> wanted;
  {
    std::stringstream ss(o.lemmas);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) wanted.push_back(item);
    }
  }
  auto want = [&](const std::string& name) {
    return std::find(wanted.begin(), wanted.end(), name) != wanted.end();
  };
  for (const auto& name : wanted) {
    if (name != "sidorenko" && name != "homcycles" && name != "conflict-edges" &&
        name != "conflict-vertices" && name != "supersaturation") {
      throw turan::InputError("unknown lemma name: " + name);
    }
  }

  json reports = json::array();
  bool violation = false;
  auto add = [&](const turan::BoundReport& r, bool asserted) {
    json rj = turan::bound_report_json(r);
    rj["asserted"] = asserted;
    if (asserted && !r.satisfied) violation = true;
    reports.push_back(rj);
  };
  auto skip = [&](const std::string& lemma, const std::string& reason) {
    reports.push_back({{"lemma", lemma}, {"skipped", true}, {"reason", reason}});
  };

  turan::Bipartition bp = turan::bipartition(g);
  std::vector<int> X, Y;
  if (bp.bipartite) {
    for (int v = 0; v < g.n; ++v) (bp.color[v] == 0 ? X : Y).push_back(v);
  }

  if (want("sidorenko")) add(turan::check_sidorenko(g, o.k), true);

  if (want("homcycles")) {
    if (!bp.bipartite) {
      skip("min degree hom bound", "graph is not bipartite");
    } else if (X.empty() || Y.empty()) {
      skip("min degree hom bound", "a side is empty");
    } else {
      long long min_deg = g.n;
      for (int v = 0; v < g.n; ++v)
        min_deg = std::min<long long>(min_deg, static_cast<long long>(g.adj[v].size()));
      if (min_deg < 1) {
        skip("min degree hom bound", "a side minimum degree is 0");
      } else {
        add(turan::check_min_degree_hom_bound(g, X, Y, o.k), true);
      }
    }
  }

  if (want("conflict-edges")) {
    if (o.k < 2) {
      skip("simple with edges", "requires k >= 2");
    } else if (g.edge_count < 1) {
      skip("simple with edges", "graph has no edges");
    } else {
      long long s_cap = g.edge_count;
      add(turan::count_conflicting_edge_cycles(
              g, o.k, turan::ConflictRelation::share_one_vertex_edge(), s_cap, o.budget),
          true);
    }
  }

  if (want("conflict-vertices")) {
    if (o.k < 2) {
      skip("bipartite with vertices", "requires k >= 2");
    } else if (!bp.bipartite || X.empty() || Y.empty()) {
      skip("bipartite with vertices", "needs a bipartition with two non-empty sides");
    } else {
      long long d1 = 1, d2 = 1;
      for (int v : X) d1 = std::max<long long>(d1, static_cast<long long>(g.adj[v].size()));
      for (int v : Y) d2 = std::max<long long>(d2, static_cast<long long>(g.adj[v].size()));
      add(turan::count_conflicting_vertex_cycles(g, o.k, X, Y,
                                                 turan::ConflictRelation::equality_vertex(), d1,
                                                 d2, 1, 1, o.budget),
          true);
    }
  }

  if (want("supersaturation")) {
    add(turan::supersaturation_report(g, o.k, turan::SupersatParams{}, o.budget), false);
  }

  json config = {{"graph", o.graph}, {"k", o.k}, {"lemmas", o.lemmas}, {"budget", o.budget}};
  json j = turan::report_envelope("check-lemmas", config);
  j["reports"] = reports;
  j["violation"] = violation;
  emit(j, o.out);
  return violation ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extremal-graph toolkit: pattern construction, cycle census, cleaning, "
               "collection building, and embedding search"};
  app.require_subcommand(1);
  int rc = 0;

  GenHklOpts gen_hkl;
  auto* sub_gen_hkl = app.add_subcommand("gen-hkl", "Construct the 3-regular bipartite pattern");
  sub_gen_hkl->add_option("--k", gen_hkl.k, "Row scale (4k rows)")->capture_default_str();
  sub_gen_hkl->add_option("--ell", gen_hkl.ell, "Column scale (2ell columns)")->capture_default_str();
  sub_gen_hkl->add_option("--format", gen_hkl.format, "edgelist or json")
      ->check(CLI::IsMember({"edgelist", "json"}))
      ->capture_default_str();
  sub_gen_hkl->add_option("--out", gen_hkl.out, "Output path (stdout if omitted)");
  sub_gen_hkl->callback([&]() { rc = run_gen_hkl(gen_hkl); });

  GenHostOpts gen_host;
  auto* sub_gen_host = app.add_subcommand("gen-host", "Generate a host graph");
  sub_gen_host->add_option("--model", gen_host.model,
                           "erdos-renyi, planted-pattern-plus-noise, complete, "
                           "complete-bipartite or cycle")
      ->capture_default_str();
  sub_gen_host->add_option("--n", gen_host.n, "Vertex count")->required();
  sub_gen_host->add_option("--p", gen_host.p, "Edge probability")->capture_default_str();
  sub_gen_host->add_option("--seed", gen_host.seed, "RNG seed (default from EXTREMAL_SEED)")
      ->capture_default_str();
  sub_gen_host->add_option("--pattern-k", gen_host.pattern_k, "Planted pattern k")
      ->capture_default_str();
  sub_gen_host->add_option("--pattern-ell", gen_host.pattern_ell, "Planted pattern ell")
      ->capture_default_str();
  sub_gen_host->add_option("--out", gen_host.out, "Graph output path")->required();
  sub_gen_host->add_option("--report", gen_host.report, "JSON report path");
  sub_gen_host->callback([&]() { rc = run_gen_host(gen_host); });

  CensusOpts census;
  auto* sub_census = app.add_subcommand("census", "Cycle and 4-cycle census");
  sub_census->add_option("--graph", census.graph, "Graph path")->required();
  sub_census->add_option("--k", census.k, "Cycle half-length")->capture_default_str();
  sub_census->add_flag("--brute-force", census.brute_force, "Cross-check with the walk oracle");
  sub_census->add_option("--budget", census.budget, "Enumeration node cap")->capture_default_str();
  sub_census->add_option("--jobs", census.jobs, "Parallel jobs for the brute-force oracle")
      ->capture_default_str();
  sub_census->add_option("--csv", census.csv, "Write per-edge 4-cycle counts as CSV");
  sub_census->add_option("--out", census.out, "JSON report path (stdout if omitted)");
  sub_census->callback([&]() { rc = run_census(census); });

  CleanOpts clean;
  auto* sub_clean = app.add_subcommand("clean", "Delete edges on too many 4-cycles");
  sub_clean->add_option("--graph", clean.graph, "Graph path")->required();
  sub_clean->add_option("--out", clean.out, "Cleaned graph output path")->required();
  sub_clean->add_option("--log", clean.log, "JSON log path");
  sub_clean->add_option("--log-base", clean.log_base, "natural or two")
      ->check(CLI::IsMember({"natural", "two"}))
      ->capture_default_str();
  sub_clean->callback([&]() { rc = run_clean(clean); });

  RegularizeOpts regularize;
  auto* sub_reg = app.add_subcommand("regularize", "Extract an almost-regular subgraph");
  sub_reg->add_option("--graph", regularize.graph, "Graph path")->required();
  sub_reg->add_option("--alpha", regularize.alpha, "Density exponent")->capture_default_str();
  sub_reg->add_option("--seed", regularize.seed, "RNG seed (default from EXTREMAL_SEED)")
      ->capture_default_str();
  sub_reg->add_option("--variant", regularize.variant, "es (peeling) or random (edge subsample)")
      ->check(CLI::IsMember({"es", "random"}))
      ->capture_default_str();
  sub_reg->add_option("--attempts", regularize.attempts, "Subsample retries")
      ->capture_default_str();
  sub_reg->add_option("--out", regularize.out, "Subgraph output path");
  sub_reg->add_option("--report", regularize.report, "JSON report path (stdout if omitted)");
  sub_reg->callback([&]() { rc = run_regularize(regularize); });

  BuildCollectionOpts build;
  auto* sub_build = app.add_subcommand("build-collection", "Build a good cycle collection");
  sub_build->add_option("--graph", build.graph, "Graph path")->required();
  sub_build->add_option("--k", build.k, "Cycle scale (tuples have 8k entries)")
      ->capture_default_str();
  sub_build->add_option("--epsilon", build.epsilon, "Exponent slack in (0, 1/6)")
      ->capture_default_str();
  sub_build->add_option("--branch", build.branch, "auto, few or many")
      ->check(CLI::IsMember({"auto", "few", "many"}))
      ->capture_default_str();
  sub_build->add_option("--tau", build.tau, "Codegree cap (0 resolves from epsilon)")
      ->capture_default_str();
  sub_build->add_option("--budget", build.budget, "DFS node cap (<= 0 unlimited)")
      ->capture_default_str();
  sub_build->add_option("--beta", build.beta, "Goodness target (0 resolves from epsilon)")
      ->capture_default_str();
  sub_build->add_option("--log-base", build.log_base, "natural or two")
      ->check(CLI::IsMember({"natural", "two"}))
      ->capture_default_str();
  sub_build->add_option("--out", build.out, "Collection JSON output path");
  sub_build->add_option("--report", build.report, "JSON report path (stdout if omitted)");
  sub_build->callback([&]() { rc = run_build_collection(build); });

  CheckGoodOpts check_good;
  auto* sub_good = app.add_subcommand("check-good", "Certify collection goodness");
  sub_good->add_option("--collection", check_good.collection, "Collection JSON path")->required();
  sub_good->add_option("--graph", check_good.graph, "Host graph path")->required();
  sub_good->add_option("--beta", check_good.beta, "Goodness parameter")->capture_default_str();
  sub_good->add_option("--s", check_good.s, "Agreement scale (0 infers the least valid s)")
      ->capture_default_str();
  sub_good->add_option("--out", check_good.out, "JSON report path (stdout if omitted)");
  sub_good->callback([&]() { rc = run_check_good(check_good); });

  PruneNiceOpts prune;
  auto* sub_prune = app.add_subcommand("prune-nice", "Prune a collection until nice");
  sub_prune->add_option("--collection", prune.collection, "Collection JSON path")->required();
  sub_prune->add_option("--graph", prune.graph, "Host graph path")->required();
  sub_prune->add_option("--beta", prune.beta, "Niceness parameter")->capture_default_str();
  sub_prune->add_option("--s", prune.s, "Agreement scale (0 infers the least valid s)")
      ->capture_default_str();
  sub_prune->add_option("--out", prune.out, "Pruned collection output path")->required();
  sub_prune->add_option("--report", prune.report, "JSON report path");
  sub_prune->callback([&]() { rc = run_prune_nice(prune); });

  PipelineOpts pipeline;
  auto* sub_pipe = app.add_subcommand("pipeline", "Full embedding pipeline");
  sub_pipe->add_option("--graph", pipeline.graph, "Graph path")->required();
  sub_pipe->add_option("--k", pipeline.k, "Pattern row scale")->capture_default_str();
  sub_pipe->add_option("--ell", pipeline.ell, "Pattern column scale")->capture_default_str();
  sub_pipe->add_option("--epsilon", pipeline.epsilon, "Exponent slack in (0, 1/6)")
      ->capture_default_str();
  sub_pipe->add_option("--delta", pipeline.delta, "Niceness exponent (0 resolves to epsilon/2)")
      ->capture_default_str();
  sub_pipe->add_option("--seed", pipeline.seed, "RNG seed (default from EXTREMAL_SEED)")
      ->capture_default_str();
  sub_pipe->add_option("--beta", pipeline.beta, "Niceness override (0 resolves to m^-delta)")
      ->capture_default_str();
  sub_pipe->add_option("--tau", pipeline.tau, "Codegree cap override")->capture_default_str();
  sub_pipe->add_option("--branch-override", pipeline.branch_override, "Force few or many")
      ->check(CLI::IsMember({"few", "many"}));
  sub_pipe->add_option("--cycle-budget", pipeline.cycle_budget, "Collection DFS node cap")
      ->capture_default_str();
  sub_pipe->add_option("--embed-budget", pipeline.embed_budget, "Embedding DFS node cap")
      ->capture_default_str();
  sub_pipe->add_option("--attempts", pipeline.attempts, "Edge subsample retries")
      ->capture_default_str();
  sub_pipe->add_option("--log-base", pipeline.log_base, "natural or two")
      ->check(CLI::IsMember({"natural", "two"}))
      ->capture_default_str();
  sub_pipe->add_flag("--timings", pipeline.timings, "Record per-stage elapsed milliseconds");
  sub_pipe->add_option("--report", pipeline.report, "JSON report path (stdout if omitted)");
  sub_pipe->callback([&]() { rc = run_pipeline_cmd(pipeline); });

  VerifyEmbeddingOpts verify;
  auto* sub_verify = app.add_subcommand("verify-embedding", "Check an embedding against a host");
  sub_verify->add_option("--graph", verify.graph, "Host graph path")->required();
  sub_verify->add_option("--embedding", verify.embedding, "Embedding or pipeline report JSON")
      ->required();
  sub_verify->add_option("--k", verify.k, "Pattern row scale (0 reads it from the file)")
      ->capture_default_str();
  sub_verify->add_option("--ell", verify.ell, "Pattern column scale (0 reads it from the file)")
      ->capture_default_str();
  sub_verify->add_option("--out", verify.out, "JSON report path (stdout if omitted)");
  sub_verify->callback([&]() { rc = run_verify_embedding(verify); });

  auto* sub_oracle = app.add_subcommand("oracle", "Exhaustive reference oracles");
  sub_oracle->require_subcommand(1);

  OracleEmbedOpts oracle_embed;
  auto* sub_oe = sub_oracle->add_subcommand("embed", "Subgraph embedding search");
  sub_oe->add_option("--pattern", oracle_embed.pattern, "Pattern graph path")->required();
  sub_oe->add_option("--host", oracle_embed.host, "Host graph path")->required();
  sub_oe->add_option("--budget", oracle_embed.budget, "Search node cap")->capture_default_str();
  sub_oe->add_option("--out", oracle_embed.out, "JSON report path (stdout if omitted)");
  sub_oe->callback([&]() { rc = run_oracle_embed(oracle_embed); });

  OracleHomOpts oracle_hom;
  auto* sub_oh = sub_oracle->add_subcommand("hom", "Closed-walk count cross-check");
  sub_oh->add_option("--graph", oracle_hom.graph, "Graph path")->required();
  sub_oh->add_option("--k", oracle_hom.k, "Cycle half-length")->capture_default_str();
  sub_oh->add_option("--budget", oracle_hom.budget, "Work cap")->capture_default_str();
  sub_oh->add_option("--jobs", oracle_hom.jobs, "Parallel jobs")->capture_default_str();
  sub_oh->add_flag("--tuple-scan", oracle_hom.tuple_scan, "Also run the unpruned tuple scan");
  sub_oh->add_option("--out", oracle_hom.out, "JSON report path (stdout if omitted)");
  sub_oh->callback([&]() { rc = run_oracle_hom(oracle_hom); });

  OracleTuranOpts oracle_turan;
  auto* sub_ot = sub_oracle->add_subcommand("turan", "Exact extremal edge count");
  sub_ot->add_option("--pattern", oracle_turan.pattern, "Pattern graph path")->required();
  sub_ot->add_option("--n", oracle_turan.n, "Host vertex count (at most 8)")
      ->capture_default_str();
  sub_ot->add_option("--strategy", oracle_turan.strategy, "descending, ascending or both")
      ->check(CLI::IsMember({"descending", "ascending", "both"}))
      ->capture_default_str();
  sub_ot->add_option("--out", oracle_turan.out, "JSON report path (stdout if omitted)");
  sub_ot->callback([&]() { rc = run_oracle_turan(oracle_turan); });

  CheckLemmasOpts check_lemmas;
  auto* sub_lemmas = app.add_subcommand("check-lemmas", "Run the counting lemma battery");
  sub_lemmas->add_option("--graph", check_lemmas.graph, "Graph path")->required();
  sub_lemmas->add_option("--k", check_lemmas.k, "Cycle half-length")->capture_default_str();
  sub_lemmas->add_option("--lemmas", check_lemmas.lemmas, "Comma list of lemma names")
      ->capture_default_str();
  sub_lemmas->add_option("--budget", check_lemmas.budget, "Enumeration node cap")
      ->capture_default_str();
  sub_lemmas->add_option("--out", check_lemmas.out, "JSON report path (stdout if omitted)");
  sub_lemmas->callback([&]() { rc = run_check_lemmas(check_lemmas); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const turan::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const turan::PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return 1;
  } catch (const turan::BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 1;
  } catch (const turan::NoAnchorError& e) {
    std::cerr << "no anchor: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
