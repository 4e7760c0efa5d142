#pragma once

// Text edge lists ("n m" header, then "u v [weight]" lines, '#' comments) and
// JSON documents tagged {"fmt": 1, "type": "simple" | "weighted" | "multigraph"}.

#include "slb/graph.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <string_view>

namespace slb {

inline constexpr int graph_json_format = 1;

/// Parses either format; a document whose first non-comment byte is '{' is JSON.
/// Repeated pairs in an edge list add up. Errors carry the offending line number.
auto parse_graph(std::string_view text) -> WeightedGraph;
auto read_graph_file(const std::string& path) -> WeightedGraph;

/// parse_graph followed by the conversion to a simple graph; throws InputError
/// when the input has loops or non-unit weights.
auto parse_simple_graph(std::string_view text) -> SimpleGraph;

auto write_edge_list(std::ostream& out, const SimpleGraph& g) -> void;
auto write_edge_list(std::ostream& out, const WeightedGraph& g) -> void;

auto to_json(const SimpleGraph& g) -> nlohmann::json;
auto to_json(const WeightedGraph& g) -> nlohmann::json;
auto to_json(const Multigraph& g) -> nlohmann::json;

auto simple_graph_from_json(const nlohmann::json& j) -> SimpleGraph;
auto weighted_graph_from_json(const nlohmann::json& j) -> WeightedGraph;
auto multigraph_from_json(const nlohmann::json& j) -> Multigraph;

}  // namespace slb
