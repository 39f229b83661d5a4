#include "kautz/io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kautz {

using nlohmann::json;

namespace {

/// Arcs ordered by (tail label, head label).
std::vector<Arc> sorted_arcs(const Digraph& g) {
  std::vector<Arc> arcs = g.arcs();
  std::sort(arcs.begin(), arcs.end(), [&](const Arc& a, const Arc& b) {
    if (g.label(a.tail) != g.label(b.tail)) return g.label(a.tail) < g.label(b.tail);
    return g.label(a.head) < g.label(b.head);
  });
  return arcs;
}

std::vector<VertexId> sorted_vertices(const Digraph& g) {
  std::vector<VertexId> order(g.order());
  for (VertexId v = 0; v < g.order(); ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return g.label(a) < g.label(b); });
  return order;
}

std::string csv_field(std::string text) {
  if (text.find(',') == std::string::npos) return text;
  return "\"" + text + "\"";
}

}  // namespace

std::string to_dot(const Digraph& g, const FamilySpec& spec) {
  std::ostringstream os;
  os << "digraph \"" << spec.name() << "\" {\n";
  for (VertexId v : sorted_vertices(g)) os << "  \"" << format_word(g.label(v), spec.d) << "\";\n";
  for (const Arc& a : sorted_arcs(g))
    os << "  \"" << format_word(g.label(a.tail), spec.d) << "\" -> \"" << format_word(g.label(a.head), spec.d)
       << "\";\n";
  os << "}\n";
  return os.str();
}

std::string to_edges_csv(const Digraph& g, const FamilySpec& spec) {
  std::ostringstream os;
  for (const Arc& a : sorted_arcs(g))
    os << csv_field(format_word(g.label(a.tail), spec.d)) << ',' << csv_field(format_word(g.label(a.head), spec.d))
       << '\n';
  return os.str();
}

json graph_to_json(const Digraph& g, const FamilySpec& spec) {
  json vertices = json::array();
  for (const Word& w : g.labels()) vertices.push_back(format_word(w, spec.d));
  json arcs = json::array();
  for (const Arc& a : g.arcs()) arcs.push_back({a.tail, a.head});
  return {{"spec", {{"family", std::string(to_string(spec.family))}, {"d", spec.d}, {"l", spec.l}}},
          {"vertices", vertices},
          {"arcs", arcs},
          {"metadata",
           {{"order", g.order()},
            {"arc_count", g.arc_count()},
            {"regularity",
             {{"regular", g.is_regular()}, {"min_degree", g.min_degree()}, {"max_degree", g.max_degree()}}}}}};
}

std::pair<FamilySpec, Digraph> graph_from_json(const json& doc) {
  try {
    const json& s = doc.at("spec");
    FamilySpec spec{parse_family(s.at("family").get<std::string>()), s.at("d").get<int>(), s.at("l").get<int>()};
    spec.validate();
    std::vector<Word> labels;
    for (const auto& v : doc.at("vertices")) {
      Word w = parse_word(v.get<std::string>(), spec.d);
      if (!is_valid_vertex(w, spec)) throw std::invalid_argument(v.get<std::string>() + " is not a vertex");
      labels.push_back(std::move(w));
    }
    std::vector<Arc> arcs;
    for (const auto& a : doc.at("arcs")) {
      if (!a.is_array() || a.size() != 2) throw std::invalid_argument("arc must be a pair of vertex indices");
      arcs.push_back({a[0].get<VertexId>(), a[1].get<VertexId>()});
    }
    return {spec, Digraph(std::move(labels), std::move(arcs))};
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed digraph JSON: ") + e.what());
  }
}

}  // namespace kautz
