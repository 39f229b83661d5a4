#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "kautz/connectivity.hpp"
#include "kautz/word.hpp"

namespace kautz {

enum class Check {
  order,
  degrees,
  line_digraph,
  converse,
  subkautz_removal,
  distances,
  diameter,
  girth,
  semigirth,
  connectivity,
  superconnectivity,
  mean_distance,
  layers,
  antipodality,
  eulerian_hamiltonian,
};

std::string_view to_string(Check check);
/// Accepts the names printed by to_string; also "eulerian" and "hamiltonian"
/// for eulerian_hamiltonian.
Check parse_check(std::string_view text);
const std::vector<Check>& all_checks();

/// Largest instance (vertex count) a check will build and analyse. The
/// superconnectivity scan is additionally bounded by Budget::subset_limit.
struct CheckGuard {
  Check check;
  std::int64_t max_order;
};
const std::vector<CheckGuard>& check_guards();
std::int64_t guard_for(Check check);

struct Budget {
  std::uint64_t subset_limit = kDefaultSubsetLimit;
  std::uint64_t hamiltonian_expansions = 10'000'000;
  int girth_k_max = 12;
  bool timing = true;  // false zeroes runtime_ms so reports are byte-identical
};

enum class VerdictKind { match, mismatch, skipped, indeterminate };

struct Verdict {
  VerdictKind kind = VerdictKind::skipped;
  std::string reason;  // why a check was skipped or indeterminate
  std::string text() const;  // "match", "skipped(guard)", ...
};

struct CheckRecord {
  FamilySpec spec;
  Check check = Check::order;
  nlohmann::json predicted;
  nlohmann::json measured;
  Verdict verdict;
  std::string citation;
  double runtime_ms = 0;
  nlohmann::json detail;  // reproducers, guards, derivations
};

struct AnalysisReport {
  FamilySpec spec;
  std::vector<CheckRecord> records;
  bool any_mismatch() const;
};

AnalysisReport analyze(const FamilySpec& spec, const std::vector<Check>& checks, const Budget& budget = {});
/// Instances are analysed concurrently; the result follows the grid order.
std::vector<AnalysisReport> run_suite(const std::vector<FamilySpec>& grid, const std::vector<Check>& checks,
                                      const Budget& budget = {});

nlohmann::json to_json(const CheckRecord& record);
nlohmann::json to_json(const std::vector<AnalysisReport>& reports);
std::string render_table(const std::vector<AnalysisReport>& reports);

struct PairMismatch {
  Word x;
  Word y;
  std::optional<int> analytic;
  std::optional<int> solver;
  int bfs = 0;
  std::string route_case;
};

struct TriangleResult {
  bool match = false;
  std::uint64_t pairs = 0;
  std::map<std::string, std::uint64_t> cases;  // analytic case tag -> pair count
  std::optional<PairMismatch> mismatch;        // first offending pair in index order
};

/// Analytic, solver and BFS distances on every ordered pair. n <= 300;
/// std::invalid_argument for larger, disconnected or unrouted instances.
TriangleResult verify_distance_triangle(const FamilySpec& spec);

struct SemigirthChain {
  bool match = false;
  int gamma = 0;
  int gamma_line = 0;
  int diameter = 0;
  int diameter_line = 0;
};

/// gamma and D of CK(d,l+1) exceed those of sK(d,l) by exactly one. sK(d,l)
/// must have at most 120 vertices.
SemigirthChain verify_semigirth_chain(int d, int l);

/// Named grids. "quick": sK and CK with d in {3,4}, l in {2,3,4} and n <= 120,
/// plus K(3,3), MCK(3,4) and CK(2,3). "full": the same with l up to 5 and
/// n <= 300. "full" also runs the periodic girth search on CK(3,13).
std::vector<FamilySpec> preset_grid(std::string_view name);

}  // namespace kautz
