#pragma once

#include <optional>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "kautz/word.hpp"

namespace kautz {

// A t-hop walk x -> y in a shift-based family is a word P of length l + t
// starting with x and ending with y in which every length-l window is a
// vertex and consecutive windows are arcs. All such conditions reduce to
// inequalities P[i] != P[i + o] for a small set of offsets o:
//   K  : {1}
//   sK : {1, l}       (appended symbol differs from the window's first)
//   CK : {1, l - 1}   (window's first differs from its last)

/// Offsets of the inequality constraints for the family. MCK is not a pure
/// shift family and is rejected with std::invalid_argument.
std::vector<int> path_word_offsets(const FamilySpec& spec);

struct PathWord {
  std::vector<Symbol> symbols;            // length l + hops
  int hops = 0;
  std::pair<int, int> free_span{0, 0};    // [begin, end) positions forced by neither endpoint

  /// The length-l windows, i.e. the vertices of the walk in order.
  std::vector<Word> windows(int l) const;
};

/// Exhaustive backtracking over the free span. Returns the lexicographically
/// smallest valid path word with exactly t hops, or nullopt.
std::optional<PathWord> solve_path_word(const Word& x, const Word& y, const FamilySpec& spec, int t);

struct SearchLimit {
  int max_hops = 0;
  bool in_guard = true;  // false when no diameter result bounds the search
};

/// 2l for sK (d >= 3), 2l - 1 for CK (d, l >= 3, or l = 2), l for K, and 3l
/// with in_guard = false otherwise.
SearchLimit search_limit(const FamilySpec& spec);

/// Smallest t with a feasible path word, scanning t = 0..search_limit.
std::optional<int> distance_solver(const Word& x, const Word& y, const FamilySpec& spec);

enum class RouteCase { case_a, case_b, case_c, case_d, solver_fallback };
std::string_view to_string(RouteCase c);

/// Alignment of y against the extended sequence of x: x followed by l - 1
/// barred positions, position l + i carrying the constraint != x[i + 1].
struct OverlapResult {
  RouteCase kind = RouteCase::case_a;
  int overlap_len = 0;  // |x~ meet y|
  int suffix_len = 0;   // |x meet y|, longest suffix of x equal to a prefix of y
  int alignment = 0;    // offset of y's first symbol in x~ (0-based), i.e. the hop count
};

/// Largest admissible alignment: literal agreement on x, barred constraints
/// on the extension. CK only (std::invalid_argument otherwise).
OverlapResult overlap(const Word& x, const Word& y, const FamilySpec& spec);

struct AnalyticDistance {
  int distance = 0;
  RouteCase kind = RouteCase::case_a;
};

/// Distance from the labels through the extended-sequence case analysis.
/// CK: alignments scanned by decreasing overlap, each checked with its
/// literal, barred and junction conditions, filler symbols resolved as a
/// chain. sK: through the line digraph, dist_sK(u, v) = dist_CK(a.u, v.b) - 1.
/// K: classic suffix/prefix overlap. Throws std::invalid_argument for MCK and
/// for disconnected or unguarded instances (CK or sK with d = 2).
AnalyticDistance distance_analytic(const Word& x, const Word& y, const FamilySpec& spec);

class UnreachablePair : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RouteResult {
  int distance = 0;
  RouteCase kind = RouteCase::solver_fallback;
  std::optional<int> analytic;  // empty when no analytic route applies
  bool discrepancy = false;     // analytic disagreed with the solver (solver wins)
};

/// Solver distance with the analytic answer as a cross-check. Throws
/// UnreachablePair when no walk exists within the search limit.
RouteResult route(const Word& x, const Word& y, const FamilySpec& spec);

/// Vertices of a shortest x -> y walk, read off the minimal path word.
std::vector<Word> shortest_path(const Word& x, const Word& y, const FamilySpec& spec);

}  // namespace kautz
