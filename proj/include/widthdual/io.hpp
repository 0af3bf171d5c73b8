#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "widthdual/engine.hpp"
#include "widthdual/universe.hpp"

namespace wdk {

constexpr int kWitnessSchemaVersion = 1;

Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);
// 1-based `p edge n m` / `e u v` text; PACE `p tw` headers and bare `u v` lines are accepted too.
Graph graph_from_dimacs(const std::string& text);

Matroid matroid_from_json(const nlohmann::json& j);
nlohmann::json matroid_to_json(const Matroid& m);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);
nlohmann::json parse_json(const std::string& text, const std::string& what);

// Chooses the format from the content: JSON if it starts with '{'.
Graph read_graph(const std::string& path);
// Matroid JSON, or a plain graph file read as its cycle matroid.
Matroid read_matroid(const std::string& path);

// {"stars": [[{"A":[..],"B":[..]}, ...], ...]}
std::vector<std::vector<Sep>> family_from_json(const nlohmann::json& j);

nlohmann::json witness_to_json(const Witness& w);
Witness witness_from_json(const nlohmann::json& j);

}  // namespace wdk
