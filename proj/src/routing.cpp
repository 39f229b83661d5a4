#include "kautz/routing.hpp"

#include <algorithm>
#include <string>

namespace kautz {

std::vector<int> path_word_offsets(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::K: return {1};
    case Family::sK: return {1, spec.l};
    case Family::CK: return spec.l == 2 ? std::vector<int>{1} : std::vector<int>{1, spec.l - 1};
    case Family::MCK: break;
  }
  throw std::invalid_argument("MCK arcs are not pure shifts; path words do not apply");
}

std::vector<Word> PathWord::windows(int l) const {
  std::vector<Word> out;
  for (int i = 0; i + l <= static_cast<int>(symbols.size()); ++i)
    out.emplace_back(std::vector<Symbol>(symbols.begin() + i, symbols.begin() + i + l));
  return out;
}

namespace {

void require_vertex(const Word& w, const FamilySpec& spec) {
  if (!is_valid_vertex(w, spec))
    throw std::invalid_argument(format_word(w, spec.d) + " is not a vertex of " + spec.name());
}

class PathWordSearch {
 public:
  PathWordSearch(const FamilySpec& spec, int length) : d_(spec.d), offsets_(path_word_offsets(spec)), p_(length, -1) {}

  bool place(int pos, Symbol s) {
    if (p_[pos] >= 0 && p_[pos] != s) return false;
    p_[pos] = s;
    return true;
  }

  bool fixed_consistent() const {
    const int n = static_cast<int>(p_.size());
    for (int i = 0; i < n; ++i)
      for (int o : offsets_)
        if (i + o < n && p_[i] >= 0 && p_[i] == p_[i + o]) return false;
    return true;
  }

  bool fill(int begin, int end) { return fill_from(begin, end); }

  std::vector<Symbol> symbols() const { return {p_.begin(), p_.end()}; }

 private:
  bool fill_from(int pos, int end) {
    if (pos >= end) return true;
    const int n = static_cast<int>(p_.size());
    for (int s = 0; s <= d_; ++s) {
      bool ok = true;
      for (int o : offsets_) {
        if (pos - o >= 0 && p_[pos - o] == s) ok = false;
        if (pos + o < n && p_[pos + o] == s) ok = false;  // only fixed positions are set ahead
      }
      if (!ok) continue;
      p_[pos] = s;
      if (fill_from(pos + 1, end)) return true;
      p_[pos] = -1;
    }
    return false;
  }

  int d_;
  std::vector<int> offsets_;
  std::vector<int> p_;
};

bool ck_in_guard(const FamilySpec& spec) { return spec.l == 2 || (spec.d >= 3 && spec.l >= 3); }

/// True when filler positions l..t-1 of a CK path word admit symbols. Each
/// filler z_i is kept apart from its neighbours, from x[i] (barred position)
/// and from the y symbol closing its window; only neighbouring fillers
/// interact, so a forward sweep of candidate sets decides feasibility.
bool ck_fill_feasible(const Word& x, const Word& y, int d, int t) {
  const int l = static_cast<int>(x.size());
  const int fillers = t - l;
  std::vector<bool> previous;  // candidate set of the previous filler
  for (int i = 1; i <= fillers; ++i) {
    std::vector<bool> allowed(d + 1, true);
    allowed[x[i]] = false;                  // barred position l + i - 1
    allowed[y[2 * l + i - 2 - t]] = false;  // window starting here ends in y
    if (i == 1) allowed[x[l - 1]] = false;
    if (i == fillers) allowed[y[0]] = false;
    if (i > 1) {
      const auto count = std::count(previous.begin(), previous.end(), true);
      if (count == 1) {
        for (int s = 0; s <= d; ++s)
          if (previous[s]) allowed[s] = false;
      }
    }
    if (std::none_of(allowed.begin(), allowed.end(), [](bool b) { return b; })) return false;
    previous = std::move(allowed);
  }
  return true;
}

/// y symbols landing on barred positions of x~ when y starts at offset t.
bool barred_admissible(const Word& x, const Word& y, int t) {
  const int l = static_cast<int>(x.size());
  for (int j = 0; j < l; ++j) {
    const int pos = t + j;
    if (pos < l || pos > 2 * l - 2) continue;
    if (y[j] == x[pos - l + 1]) return false;
  }
  return true;
}

bool literal_overlap(const Word& x, const Word& y, int t) {
  const int l = static_cast<int>(x.size());
  for (int j = 0; t + j < l; ++j)
    if (x[t + j] != y[j]) return false;
  return true;
}

AnalyticDistance ck_analytic(const Word& x, const Word& y, const FamilySpec& spec) {
  const int l = spec.l;
  if (x == y) return {0, RouteCase::case_a};
  for (int t = 1; t <= 2 * l - 1; ++t) {
    if (t < l) {
      // Case (a): y begins inside x.
      if (literal_overlap(x, y, t) && barred_admissible(x, y, t)) return {t, RouteCase::case_a};
    } else if (t == l) {
      // Case (b): y starts right after x; needs y1 != xl.
      if (barred_admissible(x, y, t) && y[0] != x[l - 1]) return {t, RouteCase::case_b};
    } else if (barred_admissible(x, y, t) && ck_fill_feasible(x, y, spec.d, t)) {
      return {t, t == 2 * l - 1 ? RouteCase::case_d : RouteCase::case_c};
    }
  }
  // Beyond 2l - 1 fillers constrain each other; only the solver applies.
  if (auto d = distance_solver(x, y, spec)) return {*d, RouteCase::solver_fallback};
  throw UnreachablePair("no walk from " + format_word(x, spec.d) + " to " + format_word(y, spec.d));
}

AnalyticDistance k_analytic(const Word& x, const Word& y, const FamilySpec& spec) {
  const int l = spec.l;
  for (int t = 0; t < l; ++t)
    if (literal_overlap(x, y, t)) return {t, RouteCase::case_a};
  // No overlap at all means y1 != xl, so y can simply be appended.
  return {l, RouteCase::case_b};
}

Symbol smallest_outside(Symbol a, Symbol b, Symbol c) {
  Symbol s = 0;
  while (s == a || s == b || s == c) ++s;
  return s;
}

Symbol smallest_outside(Symbol a, Symbol b) { return smallest_outside(a, b, b); }

}  // namespace

std::optional<PathWord> solve_path_word(const Word& x, const Word& y, const FamilySpec& spec, int t) {
  spec.validate();
  require_vertex(x, spec);
  require_vertex(y, spec);
  if (t < 0) return std::nullopt;
  const int l = spec.l;
  PathWordSearch search(spec, l + t);
  for (int i = 0; i < l; ++i) search.place(i, x[i]);
  for (int j = 0; j < l; ++j)
    if (!search.place(t + j, y[j])) return std::nullopt;
  if (!search.fixed_consistent()) return std::nullopt;
  const int free_begin = l;
  const int free_end = std::max(l, t);
  if (!search.fill(free_begin, free_end)) return std::nullopt;
  return PathWord{search.symbols(), t, {free_begin, free_end}};
}

SearchLimit search_limit(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::K: return {spec.l, true};
    case Family::sK:
      if (spec.d >= 3) return {2 * spec.l, true};
      break;
    case Family::CK:
      if (ck_in_guard(spec)) return {2 * spec.l - 1, true};
      break;
    case Family::MCK: path_word_offsets(spec);  // throws
  }
  return {3 * spec.l, false};
}

std::optional<int> distance_solver(const Word& x, const Word& y, const FamilySpec& spec) {
  const SearchLimit limit = search_limit(spec);
  for (int t = 0; t <= limit.max_hops; ++t)
    if (solve_path_word(x, y, spec, t)) return t;
  return std::nullopt;
}

std::string_view to_string(RouteCase c) {
  switch (c) {
    case RouteCase::case_a: return "a";
    case RouteCase::case_b: return "b";
    case RouteCase::case_c: return "c";
    case RouteCase::case_d: return "d";
    case RouteCase::solver_fallback: return "solver";
  }
  return "?";
}

OverlapResult overlap(const Word& x, const Word& y, const FamilySpec& spec) {
  if (spec.family != Family::CK)
    throw std::invalid_argument("extended-sequence overlap is defined for CK; use the path-word solver");
  require_vertex(x, spec);
  require_vertex(y, spec);
  const int l = spec.l;
  OverlapResult r;
  for (int k = l; k >= 0; --k) {
    if (literal_overlap(x, y, l - k)) {
      r.suffix_len = k;
      break;
    }
  }
  r.alignment = 2 * l - 1;
  for (int t = 0; t <= 2 * l - 1; ++t) {
    if (literal_overlap(x, y, t) && barred_admissible(x, y, t)) {
      r.alignment = t;
      break;
    }
  }
  r.overlap_len = r.alignment <= l - 1 ? l : 2 * l - 1 - r.alignment;
  if (r.overlap_len > l - 1)
    r.kind = RouteCase::case_a;
  else if (r.overlap_len == l - 1)
    r.kind = RouteCase::case_b;
  else if (r.overlap_len >= 1)
    r.kind = RouteCase::case_c;
  else
    r.kind = RouteCase::case_d;
  return r;
}

AnalyticDistance distance_analytic(const Word& x, const Word& y, const FamilySpec& spec) {
  spec.validate();
  require_vertex(x, spec);
  require_vertex(y, spec);
  switch (spec.family) {
    case Family::K: return k_analytic(x, y, spec);
    case Family::CK:
      if (!ck_in_guard(spec)) throw std::invalid_argument("no analytic routing for " + spec.name());
      return ck_analytic(x, y, spec);
    case Family::sK: {
      if (spec.d < 3) throw std::invalid_argument("no analytic routing for " + spec.name());
      if (x == y) return {0, RouteCase::case_a};
      // a.x is an arc into x and y.b an arc out of y; both are CK(d, l+1) vertices.
      // b != x_l keeps the two arcs distinct when y -> x is itself an arc.
      std::vector<Symbol> head(1, smallest_outside(x.front(), x.back()));
      head.insert(head.end(), x.symbols().begin(), x.symbols().end());
      const Word arc_into_x(std::move(head));
      const Word arc_out_of_y = y.extended(smallest_outside(y.front(), y.back(), x.back()));
      const FamilySpec line{Family::CK, spec.d, spec.l + 1};
      const AnalyticDistance through_line = ck_analytic(arc_into_x, arc_out_of_y, line);
      return {through_line.distance - 1, through_line.kind};
    }
    case Family::MCK: break;
  }
  throw std::invalid_argument("no analytic routing for MCK");
}

RouteResult route(const Word& x, const Word& y, const FamilySpec& spec) {
  RouteResult r;
  const auto solved = distance_solver(x, y, spec);
  if (!solved)
    throw UnreachablePair(format_word(y, spec.d) + " is unreachable from " + format_word(x, spec.d) + " in " +
                          spec.name());
  r.distance = *solved;
  try {
    const AnalyticDistance a = distance_analytic(x, y, spec);
    r.analytic = a.distance;
    r.kind = a.kind;
    r.discrepancy = a.distance != r.distance;
  } catch (const std::invalid_argument&) {
    r.kind = RouteCase::solver_fallback;
  }
  return r;
}

std::vector<Word> shortest_path(const Word& x, const Word& y, const FamilySpec& spec) {
  const auto hops = distance_solver(x, y, spec);
  if (!hops)
    throw UnreachablePair(format_word(y, spec.d) + " is unreachable from " + format_word(x, spec.d) + " in " +
                          spec.name());
  return solve_path_word(x, y, spec, *hops)->windows(spec.l);
}

}  // namespace kautz
