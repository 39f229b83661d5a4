#pragma once

#include <string>
#include <utility>

#include "json.hpp"

#include "kautz/digraph.hpp"
#include "kautz/word.hpp"

namespace kautz {

/// Graphviz DOT with word labels; vertices and arcs sorted by label.
std::string to_dot(const Digraph& g, const FamilySpec& spec);

/// One "src_word,dst_word" line per arc, sorted by label. Words containing
/// commas (d >= 10) are double-quoted.
std::string to_edges_csv(const Digraph& g, const FamilySpec& spec);

/// {spec, vertices, arcs, metadata{order, arc_count, regularity}}. Arcs are
/// index pairs into vertices.
nlohmann::json graph_to_json(const Digraph& g, const FamilySpec& spec);

/// Inverse of graph_to_json. Throws std::invalid_argument on malformed input.
std::pair<FamilySpec, Digraph> graph_from_json(const nlohmann::json& doc);

}  // namespace kautz
