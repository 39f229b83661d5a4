#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "kautz/families.hpp"
#include "kautz/io.hpp"
#include "kautz/metrics.hpp"
#include "kautz/routing.hpp"
#include "kautz/verify.hpp"

using namespace kautz;
using nlohmann::json;

namespace {

enum Exit { kExitOk = 0, kExitMismatch = 1, kExitBadInput = 2, kExitIo = 3, kExitUnreachable = 4 };

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SpecArgs {
  std::string family;
  int d = 0;
  int l = 0;

  FamilySpec spec() const {
    FamilySpec s{parse_family(family), d, l};
    s.validate();
    return s;
  }
};

void add_spec_args(CLI::App* cmd, SpecArgs& args) {
  cmd->add_option("family", args.family, "K, sK, CK or MCK")->required();
  cmd->add_option("d", args.d, "alphabet parameter (symbols 0..d)")->required();
  cmd->add_option("l", args.l, "word length")->required();
}

void warn_if_disconnected(const FamilySpec& spec) {
  if (known_disconnected(spec)) std::cerr << "warning: " << spec.name() << " is disconnected\n";
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoFailure("cannot open " + path + " for writing");
  out << text;
  if (!out) throw IoFailure("write to " + path + " failed");
}

FamilySpec parse_spec_list_entry(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ',');) parts.push_back(part);
  if (parts.size() != 3) throw std::invalid_argument("--spec expects FAMILY,d,l, got " + text);
  FamilySpec s{parse_family(parts[0]), std::stoi(parts[1]), std::stoi(parts[2])};
  s.validate();
  return s;
}

std::vector<Check> parse_checks(const std::vector<std::string>& names) {
  if (names.empty()) return all_checks();
  std::vector<Check> out;
  for (const auto& n : names) out.push_back(parse_check(n));
  return out;
}

int cmd_gen(const SpecArgs& args, const std::string& format, const std::string& out) {
  const FamilySpec spec = args.spec();
  warn_if_disconnected(spec);
  const Digraph g = build(spec);
  if (format == "dot")
    write_output(out, to_dot(g, spec));
  else if (format == "edges")
    write_output(out, to_edges_csv(g, spec));
  else
    write_output(out, graph_to_json(g, spec).dump(2) + "\n");
  return kExitOk;
}

/// BFS answer for instances the path-word solver does not bound (MCK, d = 2).
int dist_by_bfs(const FamilySpec& spec, const Word& x, const Word& y, bool show_path, bool as_json) {
  const Digraph g = build(spec);
  const VertexId s = *g.find(x);
  const VertexId t = *g.find(y);
  const DistanceField field = bfs(g, s);
  if (field.dist[t] == kUnreachable) {
    std::cerr << "unreachable: no walk from " << format_word(x, spec.d) << " to " << format_word(y, spec.d) << " in "
              << spec.name() << "\n";
    return kExitUnreachable;
  }
  std::vector<VertexId> path{t};
  while (path.back() != s) {
    const VertexId v = path.back();
    for (VertexId u : g.in(v)) {
      if (field.dist[u] == field.dist[v] - 1) {
        path.push_back(u);
        break;
      }
    }
  }
  std::reverse(path.begin(), path.end());
  if (as_json) {
    json doc{{"distance", field.dist[t]}, {"case", "bfs"}};
    if (show_path) {
      doc["path"] = json::array();
      for (VertexId v : path) doc["path"].push_back(format_word(g.label(v), spec.d));
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << field.dist[t] << "\ncase: bfs\n";
    if (show_path)
      for (VertexId v : path) std::cout << format_word(g.label(v), spec.d) << "\n";
  }
  return kExitOk;
}

int cmd_dist(const SpecArgs& args, const std::string& xs, const std::string& ys, bool show_path, bool as_json) {
  const FamilySpec spec = args.spec();
  warn_if_disconnected(spec);
  const Word x = parse_word(xs, spec.d);
  const Word y = parse_word(ys, spec.d);
  for (const Word* w : {&x, &y})
    if (!is_valid_vertex(*w, spec))
      throw std::invalid_argument(format_word(*w, spec.d) + " is not a vertex of " + spec.name());
  if (spec.family == Family::MCK || !search_limit(spec).in_guard) return dist_by_bfs(spec, x, y, show_path, as_json);

  RouteResult r;
  try {
    r = route(x, y, spec);
  } catch (const UnreachablePair& e) {
    std::cerr << "unreachable: " << e.what() << "\n";
    return kExitUnreachable;
  }
  if (r.discrepancy)
    std::cerr << "warning: analytic distance " << *r.analytic << " disagrees with solver distance " << r.distance
              << "\n";
  const std::vector<Word> path = show_path ? shortest_path(x, y, spec) : std::vector<Word>{};
  if (as_json) {
    json doc{{"distance", r.distance}, {"case", std::string(to_string(r.kind))}};
    doc["analytic"] = r.analytic ? json(*r.analytic) : json(nullptr);
    if (show_path) {
      doc["path"] = json::array();
      for (const Word& w : path) doc["path"].push_back(format_word(w, spec.d));
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << r.distance << "\ncase: " << to_string(r.kind) << "\n";
    for (const Word& w : path) std::cout << format_word(w, spec.d) << "\n";
  }
  return kExitOk;
}

Budget make_budget(bool no_timing) {
  Budget b;
  b.timing = !no_timing;
  return b;
}

int cmd_analyze(const SpecArgs& args, const std::vector<std::string>& checks, bool table, bool no_timing) {
  const FamilySpec spec = args.spec();
  warn_if_disconnected(spec);
  const std::vector<AnalysisReport> reports{analyze(spec, parse_checks(checks), make_budget(no_timing))};
  std::cout << (table ? render_table(reports) : to_json(reports).dump(2) + "\n");
  return reports.front().any_mismatch() ? kExitMismatch : kExitOk;
}

int cmd_verify(const std::string& grid, const std::vector<std::string>& specs, const std::vector<std::string>& checks,
               const std::string& out, bool no_timing) {
  std::vector<FamilySpec> instances;
  if (!grid.empty()) instances = preset_grid(grid);
  for (const auto& s : specs) instances.push_back(parse_spec_list_entry(s));
  if (instances.empty()) instances = preset_grid("quick");
  const std::vector<AnalysisReport> reports = run_suite(instances, parse_checks(checks), make_budget(no_timing));
  std::cout << render_table(reports);
  if (!out.empty()) write_output(out, to_json(reports).dump(2) + "\n");
  bool mismatch = false;
  for (const auto& r : reports) mismatch = mismatch || r.any_mismatch();
  return mismatch ? kExitMismatch : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kautz, subKautz and cyclic Kautz digraphs: build, route, verify"};
  app.require_subcommand(1);

  SpecArgs gen_args;
  std::string format = "dot";
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "write a digraph as DOT, edge list or JSON");
  add_spec_args(gen, gen_args);
  gen->add_option("--format", format, "dot, edges or json")->check(CLI::IsMember({"dot", "edges", "json"}));
  gen->add_option("--out,-o", gen_out, "output file (default stdout)");

  SpecArgs dist_args;
  std::string x;
  std::string y;
  bool show_path = false;
  bool dist_json = false;
  auto* dist = app.add_subcommand("dist", "distance between two vertices from their labels");
  add_spec_args(dist, dist_args);
  dist->add_option("x", x, "source word")->required();
  dist->add_option("y", y, "target word")->required();
  dist->add_flag("--show-path", show_path, "print the vertices of a shortest path");
  dist->add_flag("--json", dist_json, "JSON output");

  SpecArgs analyze_args;
  std::vector<std::string> analyze_checks;
  bool analyze_table = false;
  bool analyze_no_timing = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "measure one instance against its closed forms");
  add_spec_args(analyze_cmd, analyze_args);
  analyze_cmd->add_option("--checks", analyze_checks, "comma-separated checks (default all)")->delimiter(',');
  analyze_cmd->add_flag("--table", analyze_table, "plain-text table instead of JSON");
  analyze_cmd->add_flag("--no-timing", analyze_no_timing, "report runtime_ms as 0");

  std::string grid;
  std::vector<std::string> specs;
  std::vector<std::string> verify_checks;
  std::string verify_out;
  bool verify_no_timing = false;
  auto* verify = app.add_subcommand("verify", "run the verification suite over a grid of instances");
  verify->add_option("--grid", grid, "preset grid: quick or full")->check(CLI::IsMember({"quick", "full"}));
  verify->add_option("--spec", specs, "FAMILY,d,l (repeatable)");
  verify->add_option("--checks", verify_checks, "comma-separated checks (default all)")->delimiter(',');
  verify->add_option("--out,-o", verify_out, "write the JSON report here");
  verify->add_flag("--no-timing", verify_no_timing, "report runtime_ms as 0");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (*gen) return cmd_gen(gen_args, format, gen_out);
    if (*dist) return cmd_dist(dist_args, x, y, show_path, dist_json);
    if (*analyze_cmd) return cmd_analyze(analyze_args, analyze_checks, analyze_table, analyze_no_timing);
    if (*verify) return cmd_verify(grid, specs, verify_checks, verify_out, verify_no_timing);
  } catch (const IoFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
