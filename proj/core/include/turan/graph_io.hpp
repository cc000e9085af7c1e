#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "turan/graph.hpp"

namespace turan {

// Text format: first line "n m", then m lines "u v" with u < v, ascending.
std::string to_edgelist_text(const Graph& g);
Graph graph_from_edgelist_text(const std::string& text);

// JSON format: {"n": int, "edges": [[u,v],...]} with the same edge ordering.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// Dispatches on extension: .json uses the JSON format, anything else the text format.
Graph read_graph_file(const std::string& path);
void write_graph_file(const Graph& g, const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace turan
