#include "turan/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "turan/errors.hpp"

namespace turan {

std::string to_edgelist_text(const Graph& g) {
  std::ostringstream out;
  out << g.n << ' ' << g.edge_count << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph graph_from_edgelist_text(const std::string& text) {
  std::istringstream in(text);
  long long n = 0, m = 0;
  if (!(in >> n >> m)) throw InputError("edge list: missing 'n m' header");
  if (n < 0 || m < 0) throw InputError("edge list: negative header values");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(m));
  for (long long i = 0; i < m; ++i) {
    int u = 0, v = 0;
    if (!(in >> u >> v)) throw InputError("edge list: expected " + std::to_string(m) +
                                          " edges, got " + std::to_string(i));
    edges.emplace_back(u, v);
  }
  return from_edge_list(static_cast<int>(n), edges);
}

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.n;
  auto& arr = j["edges"] = nlohmann::json::array();
  for (auto [u, v] : g.edges()) arr.push_back({u, v});
  return j;
}

Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw InputError("graph JSON: expected {\"n\": int, \"edges\": [[u,v],...]}");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw InputError("graph JSON: bad edge entry");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return from_edge_list(j.at("n").get<int>(), edges);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write file: " + path);
  out << content;
}

static bool has_json_extension(const std::string& path) {
  return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}

Graph read_graph_file(const std::string& path) {
  std::string text = read_text_file(path);
  if (has_json_extension(path)) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw InputError("invalid JSON in " + path);
    return graph_from_json(j);
  }
  return graph_from_edgelist_text(text);
}

void write_graph_file(const Graph& g, const std::string& path) {
  if (has_json_extension(path)) {
    write_text_file(path, graph_to_json(g).dump(2) + "\n");
  } else {
    write_text_file(path, to_edgelist_text(g));
  }
}

}  // namespace turan
