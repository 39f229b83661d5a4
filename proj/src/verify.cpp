#include "kautz/verify.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "kautz/digraph.hpp"
#include "kautz/families.hpp"
#include "kautz/formulas.hpp"
#include "kautz/metrics.hpp"
#include "kautz/parallel.hpp"
#include "kautz/routing.hpp"

namespace kautz {

using nlohmann::json;

namespace {

struct CheckInfo {
  Check check;
  std::string_view name;
  std::int64_t max_order;
  bool needs_strong;
};

// Guards: largest vertex count each check builds and analyses.
const std::vector<CheckInfo>& check_table() {
  static const std::vector<CheckInfo> table = {
      {Check::order, "order", 1'000'000, false},
      {Check::degrees, "degrees", 200'000, false},
      {Check::line_digraph, "line_digraph", 200'000, false},
      {Check::converse, "converse", 200'000, false},
      {Check::subkautz_removal, "subkautz_removal", 200'000, false},
      {Check::distances, "distances", 300, true},
      {Check::diameter, "diameter", 5'000, true},
      {Check::girth, "girth", 5'000, false},
      {Check::semigirth, "semigirth", 3'000, true},
      {Check::connectivity, "connectivity", 2'000, true},
      {Check::superconnectivity, "superconnectivity", 2'000, true},
      {Check::mean_distance, "mean_distance", 5'000, true},
      {Check::layers, "layers", 5'000, true},
      {Check::antipodality, "antipodality", 5'000, true},
      {Check::eulerian_hamiltonian, "eulerian_hamiltonian", 200'000, true},
  };
  return table;
}

const CheckInfo& info(Check check) {
  for (const auto& entry : check_table())
    if (entry.check == check) return entry;
  throw std::logic_error("check missing from table");
}

constexpr std::int64_t kHamiltonianMaxOrder = 100;
constexpr std::int64_t kTriangleMaxOrder = 300;
constexpr std::int64_t kChainMaxOrder = 120;

std::string rational_text(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

json claims_json(const ConnectivityClaims& c) {
  return {{"lambda_max", c.lambda_max},
          {"kappa_max", c.kappa_max},
          {"super_lambda", c.super_lambda},
          {"super_kappa", c.super_kappa}};
}

bool routable(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::K: return true;
    case Family::sK: return spec.d >= 3;
    case Family::CK: return spec.l == 2 || (spec.d >= 3 && spec.l >= 3);
    case Family::MCK: return false;
  }
  return false;
}

/// Family-level girth lower bound: CK(d,l) from l, sK(d,l) through its line
/// digraph CK(d,l+1), 2 for K.
std::optional<int> girth_bound(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::CK: return girth_lower_bound(spec.l);
    case Family::sK: return girth_lower_bound(spec.l + 1);
    case Family::K: return 2;
    case Family::MCK: break;
  }
  return std::nullopt;
}

Verdict match_if(bool ok) { return {ok ? VerdictKind::match : VerdictKind::mismatch, ""}; }
Verdict skipped(std::string reason) { return {VerdictKind::skipped, std::move(reason)}; }

/// Lazily built digraph and derived tables for one instance.
class Instance {
 public:
  explicit Instance(const FamilySpec& spec) : spec_(spec), order_(order_formula(spec)) {}

  const FamilySpec& spec() const { return spec_; }
  std::int64_t order() const { return order_; }

  const Digraph& graph() {
    if (!graph_) graph_ = std::make_unique<Digraph>(build(spec_));
    return *graph_;
  }
  const std::optional<Arc>& unreachable() {
    if (!connectivity_known_) {
      unreachable_ = unreachable_pair(graph());
      connectivity_known_ = true;
    }
    return unreachable_;
  }
  const DistanceTable& distances() {
    if (!table_) table_ = std::make_unique<DistanceTable>(graph());
    return *table_;
  }
  int kappa() {
    if (!kappa_) kappa_ = vertex_connectivity(graph());
    return *kappa_;
  }
  int lambda() {
    if (!lambda_) lambda_ = arc_connectivity(graph());
    return *lambda_;
  }

 private:
  FamilySpec spec_;
  std::int64_t order_;
  std::unique_ptr<Digraph> graph_;
  bool connectivity_known_ = false;
  std::optional<Arc> unreachable_;
  std::unique_ptr<DistanceTable> table_;
  std::optional<int> kappa_;
  std::optional<int> lambda_;
};

std::string word(const Digraph& g, VertexId v, int d) { return format_word(g.label(v), d); }

void check_order(Instance& in, CheckRecord& r) {
  const FamilySpec& s = in.spec();
  const std::int64_t closed = order_formula(s);
  r.predicted = {{"closed_form", closed}};
  bool ok = true;
  if (s.family == Family::CK || s.family == Family::MCK) {
    const std::int64_t rec = order_recurrence(s.d, s.l);
    r.predicted["recurrence"] = rec;
    ok = rec == closed;
  }
  const auto count = static_cast<std::int64_t>(enumerate_vertices(s).size());
  r.measured = {{"enumerated", count}};
  r.verdict = match_if(ok && count == closed);
  r.citation = "order d^l + d^(l-1) for K and sK; d^l + (-1)^l d for CK and MCK";
}

void check_degrees(Instance& in, CheckRecord& r) {
  const FamilySpec& s = in.spec();
  const Digraph& g = in.graph();
  std::int64_t predicted_arcs = 0;
  std::optional<VertexId> offending;
  for (VertexId v = 0; v < g.order(); ++v) {
    const DegreePair p = degree_formula(s, g.label(v));
    predicted_arcs += p.out;
    const bool ok = p.out == g.out_degree(v) && (p.in < 0 || p.in == g.in_degree(v));
    if (!ok && !offending) offending = v;
  }
  r.predicted = {{"arc_count", predicted_arcs}};
  bool ok = !offending && predicted_arcs == static_cast<std::int64_t>(g.arc_count());
  if (s.family == Family::CK && s.l == 3 && s.d >= 3) {
    const std::int64_t d = s.d;
    r.predicted["arc_count_closed_form"] = (d + 1) * d * (d - 1) * (d - 1);
    r.predicted["regular_degree"] = d - 1;
    ok = ok && (d + 1) * d * (d - 1) * (d - 1) == static_cast<std::int64_t>(g.arc_count()) && g.is_regular() &&
         g.min_degree() == d - 1;
  } else if (s.family == Family::K) {
    r.predicted["regular_degree"] = s.d;
    ok = ok && g.is_regular() && g.min_degree() == s.d;
  }
  r.measured = {{"arc_count", g.arc_count()},
                {"min_degree", g.min_degree()},
                {"max_degree", g.max_degree()},
                {"regular", g.is_regular()}};
  if (offending) {
    const DegreePair p = degree_formula(s, g.label(*offending));
    r.detail["offending_vertex"] = {{"word", word(g, *offending, s.d)},
                                    {"predicted", {p.out, p.in}},
                                    {"measured", {g.out_degree(*offending), g.in_degree(*offending)}}};
  }
  r.verdict = match_if(ok);
  r.citation = s.family == Family::MCK ? "MCK(d,l) is d-out-regular"
                                       : "vertex degrees determined by the first, second and last symbols";
}

void check_line_digraph(Instance& in, CheckRecord& r) {
  const FamilySpec& s = in.spec();
  if (s.l < 3 || s.family == Family::sK) {
    r.verdict = skipped("not applicable");
    return;
  }
  const Digraph& g = in.graph();
  switch (s.family) {
    case Family::CK: {
      const bool ok = labeled_equal(line_digraph(build({Family::sK, s.d, s.l - 1})), g);
      r.predicted = "CK(d,l) = L(sK(d,l-1))";
      r.measured = {{"label_identical", ok}};
      r.verdict = match_if(ok);
      r.citation = "CK(d,l) is the line digraph of sK(d,l-1)";
      break;
    }
    case Family::K: {
      const bool ok = labeled_equal(line_digraph(build({Family::K, s.d, s.l - 1})), g);
      r.predicted = "K(d,l) = L(K(d,l-1))";
      r.measured = {{"label_identical", ok}};
      r.verdict = match_if(ok);
      r.citation = "Kautz digraphs are iterated line digraphs";
      break;
    }
    case Family::MCK: {
      const Digraph kautz = build({Family::K, s.d, s.l - 1});
      const Digraph sub = build({Family::sK, s.d, s.l - 1});
      std::vector<Arc> kept;
      for (const Arc& a : sub.arcs()) kept.push_back({*kautz.find(sub.label(a.tail)), *kautz.find(sub.label(a.head))});
      const bool pl = labeled_equal(partial_line_digraph(kautz, kept), g);
      const Digraph cyclic = build({Family::CK, s.d, s.l});
      const bool same_vertices = cyclic.labels() == g.labels();
      bool subset = same_vertices;
      for (const Arc& a : cyclic.arcs()) subset = subset && g.has_arc(a.tail, a.head);
      r.predicted = "MCK(d,l) = PL(K(d,l-1)) keeping the arcs of sK(d,l-1)";
      r.measured = {{"label_identical", pl}, {"same_vertices_as_CK", same_vertices}, {"contains_CK_arcs", subset}};
      r.detail["substitute_policy"] = "smallest-labelled in-neighbour";
      r.verdict = match_if(pl && same_vertices && subset);
      r.citation = "MCK(d,l) is a partial line digraph of K(d,l-1) obtained by adding arcs to CK(d,l)";
      break;
    }
    case Family::sK: break;
  }
}

void check_converse(Instance& in, CheckRecord& r) {
  const FamilySpec& s = in.spec();
  if (s.family == Family::MCK) {
    r.verdict = skipped("not applicable");
    return;
  }
  const bool iso = reversal_is_isomorphism(s);
  const bool involution = labeled_equal(converse(converse(in.graph())), in.graph());
  r.predicted = {{"reversal_isomorphism", true}};
  r.measured = {{"reversal_isomorphism", iso}, {"converse_involution", involution}};
  r.verdict = match_if(iso && involution);
  r.citation = "word reversal maps K, sK and CK onto their converses";
}

void check_subkautz_removal(Instance& in, CheckRecord& r) {
  const FamilySpec& s = in.spec();
  if (s.family != Family::K && s.family != Family::sK) {
    r.verdict = skipped("not applicable");
    return;
  }
  const bool ok = verify_subkautz_removal(s.d, s.l);
  r.predicted = "arcs(K(d,l)) minus closed-walk arcs = arcs(sK(d,l))";
  r.measured = {{"identity_holds", ok}, {"removed_arcs", closed_walk_arcs(s.d, s.l).size()}};
  r.verdict = match_if(ok);
  r.citation = "sK(d,l) is K(d,l) without the arcs of closed walks of length l in the complete symmetric digraph";
}

void check_distances(Instance& in, CheckRecord& r) {
  const FamilySpec& s = in.spec();
  if (!routable(s)) {
    r.verdict = skipped("no analytic routing");
    return;
  }
  if (in.order() > kTriangleMaxOrder) {
    r.verdict = skipped("guard");
    return;
  }
  const TriangleResult t = verify_distance_triangle(s);
  r.predicted = "analytic = solver = BFS on every ordered pair";
  r.measured = {{"pairs", t.pairs}, {"agree", t.match}, {"cases", t.cases}};
  if (t.mismatch) {
    const PairMismatch& m = *t.mismatch;
    r.detail["pair"] = {{"x", format_word(m.x, s.d)},
                        {"y", format_word(m.y, s.d)},
                        {"analytic", m.analytic ? json(*m.analytic) : json(nullptr)},
                        {"solver", m.solver ? json(*m.solver) : json(nullptr)},
                        {"bfs", m.bfs},
                        {"case", m.route_case}};
  }
  r.verdict = match_if(t.match);
  r.citation = "distance between any two vertices from the overlap of their labels";
}

void check_diameter(Instance& in, CheckRecord& r) {
  const Formula<int> f = diameter_formula(in.spec());
  const int measured = in.distances().diameter();
  r.measured = measured;
  r.citation = f.citation;
  r.detail["guard"] = f.guard;
  if (!f.value) {
    r.predicted = nullptr;
    r.verdict = skipped("no closed form");
    return;
  }
  r.predicted = *f.value;
  r.verdict = match_if(measured == *f.value);
}

void check_girth(Instance& in, const Budget& budget, CheckRecord& r) {
  const FamilySpec& s = in.spec();
  const std::optional<int> bound = girth_bound(s);
  std::optional<int> bfs_girth;
  const bool bfs_ran = in.order() <= info(Check::girth).max_order;
  if (bfs_ran) bfs_girth = girth_bfs(in.graph());
  r.measured = json::object();
  if (bfs_ran) r.measured["bfs"] = bfs_girth ? json(*bfs_girth) : json(nullptr);
  r.citation = "girth of CK(d,l) is at least the least k with l not congruent to 1 mod k";
  if (!bound) {
    r.predicted = nullptr;
    r.verdict = bfs_ran ? skipped("no claim") : skipped("guard");
    return;
  }
  r.predicted = {{"lower_bound", *bound}};
  const PeriodicGirth p = girth_periodic_search(s, budget.girth_k_max);
  r.measured["periodic"] = p.girth ? json(*p.girth) : json(nullptr);
  r.detail["patterns_checked"] = p.patterns_checked;
  r.detail["searched_up_to"] = p.searched_up_to;
  if (p.witness) r.detail["witness"] = format_word(*p.witness, s.d);

  bool ok = !p.girth || *p.girth >= *bound;
  if (bfs_ran) {
    ok = ok && (!bfs_girth || *bfs_girth >= *bound);
    if (p.girth)
      ok = ok && bfs_girth == p.girth;
    else
      ok = ok && (!bfs_girth || *bfs_girth > p.searched_up_to);
  }
  if (s.family == Family::sK && order_formula({Family::CK, s.d, s.l + 1}) <= info(Check::girth).max_order) {
    const bool invariant = girth_line_digraph_invariance(s.d, s.l);
    r.measured["equals_girth_of_CK(d,l+1)"] = invariant;
    ok = ok && invariant;
  }
  if (!ok) {
    r.verdict = match_if(false);
  } else if (!p.girth && !bfs_ran) {
    r.verdict = {VerdictKind::indeterminate, "girth > " + std::to_string(p.searched_up_to)};
  } else {
    r.verdict = match_if(true);
  }
}

json semigirth_witness_json(const Digraph& g, const SemigirthResult& result, int d) {
  if (!result.witness) return nullptr;
  const SemigirthWitness& w = *result.witness;
  return {{"x", word(g, w.x, d)}, {"y", word(g, w.y, d)}, {"distance", w.distance}, {"reason", w.reason}};
}

void check_semigirth(Instance& in, CheckRecord& r) {
  const FamilySpec& s = in.spec();
  const Digraph& g = in.graph();
  const SemigirthResult result = semigirth(g);
  r.measured = result.gamma;
  r.detail["witness"] = semigirth_witness_json(g, result, s.d);
  r.detail["self_pairs"] = "distance from x to x read as the shortest closed walk through x";
  const bool kautz = s.family == Family::K || (s.family == Family::CK && s.l == 2);
  if (s.family == Family::MCK) {
    r.predicted = nullptr;
    r.verdict = skipped("no claim");
    return;
  }
  bool ok;
  if (kautz) {
    r.predicted = s.l;
    r.citation = "K(d,l) has semigirth l";
    ok = result.gamma == s.l;
  } else {
    r.predicted = {{"at_least", s.l}};
    r.citation = "subdigraphs of K(d,l) have semigirth at least l";
    ok = result.gamma >= s.l;
  }
  if (s.family == Family::sK && in.order() <= kChainMaxOrder && s.d >= 3) {
    const SemigirthChain chain = verify_semigirth_chain(s.d, s.l);
    r.detail["line_digraph_chain"] = {{"gamma", {chain.gamma, chain.gamma_line}},
                                      {"diameter", {chain.diameter, chain.diameter_line}},
                                      {"holds", chain.match}};
    ok = ok && chain.match;
  }
  r.verdict = match_if(ok);
}

void check_connectivity(Instance& in, CheckRecord& r) {
  const FamilySpec& s = in.spec();
  const Digraph& g = in.graph();
  const ConnectivityPrediction p = connectivity_prediction(s);
  const int delta = g.min_degree();
  const int kappa = in.kappa();
  const int lambda = in.lambda();
  r.measured = {{"delta", delta}, {"kappa", kappa}, {"lambda", lambda}};
  r.predicted = {{"claimed", claims_json(p.claimed)}, {"derived", claims_json(p.derived)}};
  r.detail["derivation"] = p.derivation;
  r.citation = p.citation;
  bool ok = kappa <= lambda && lambda <= delta;
  if (p.delta) ok = ok && *p.delta == delta;
  const bool lambda_claim = p.claimed.lambda_max || p.derived.lambda_max;
  const bool kappa_claim = p.claimed.kappa_max || p.derived.kappa_max;
  if (lambda_claim) ok = ok && lambda == delta;
  if (kappa_claim) ok = ok && kappa == delta;
  if (ok && !lambda_claim && !kappa_claim) {
    r.verdict = skipped("no claim");
    return;
  }
  r.verdict = match_if(ok);
}

void check_superconnectivity(Instance& in, const Budget& budget, CheckRecord& r) {
  const FamilySpec& s = in.spec();
  const Digraph& g = in.graph();
  const ConnectivityPrediction p = connectivity_prediction(s);
  const int delta = g.min_degree();
  const bool claim_lambda = p.claimed.super_lambda || p.derived.super_lambda;
  const bool claim_kappa = p.claimed.super_kappa || p.derived.super_kappa;
  r.predicted = {{"super_lambda", claim_lambda ? json(true) : json(nullptr)},
                 {"super_kappa", claim_kappa ? json(true) : json(nullptr)}};
  r.detail["claimed"] = claims_json(p.claimed);
  r.detail["derived"] = claims_json(p.derived);
  r.detail["subset_limit"] = budget.subset_limit;
  r.citation = p.citation;

  const bool lambda_fits = binomial(g.arc_count(), delta) <= budget.subset_limit;
  const bool kappa_fits = binomial(static_cast<std::uint64_t>(g.order()), delta) <= budget.subset_limit;
  std::optional<bool> super_lambda;
  std::optional<bool> super_kappa;
  if (lambda_fits) {
    if (in.lambda() < delta) {
      super_lambda = false;
    } else {
      const SuperLambdaResult res = is_super_lambda(g, delta, budget.subset_limit);
      super_lambda = res.holds;
      r.detail["arc_subsets_checked"] = res.subsets_checked;
      if (res.witness) {
        json cut = json::array();
        for (const Arc& a : *res.witness) cut.push_back({word(g, a.tail, s.d), word(g, a.head, s.d)});
        r.detail["nontrivial_arc_cut"] = cut;
      }
    }
  }
  if (kappa_fits) {
    if (in.kappa() < delta) {
      super_kappa = false;
    } else {
      const SuperKappaResult res = is_super_kappa(g, delta, budget.subset_limit);
      super_kappa = res.holds;
      r.detail["vertex_subsets_checked"] = res.subsets_checked;
      if (res.witness) {
        json cut = json::array();
        for (VertexId v : *res.witness) cut.push_back(word(g, v, s.d));
        r.detail["nontrivial_vertex_cut"] = cut;
      }
    }
  }
  r.measured = {{"super_lambda", super_lambda ? json(*super_lambda) : json(nullptr)},
                {"super_kappa", super_kappa ? json(*super_kappa) : json(nullptr)}};

  bool failed = false;
  bool evaluated = false;
  bool unevaluated = false;
  auto judge = [&](bool claimed, const std::optional<bool>& value) {
    if (!claimed) return;
    if (!value) {
      unevaluated = true;
      return;
    }
    evaluated = true;
    failed = failed || !*value;
  };
  judge(claim_lambda, super_lambda);
  judge(claim_kappa, super_kappa);
  if (failed)
    r.verdict = match_if(false);
  else if (evaluated)
    r.verdict = match_if(true);
  else if (unevaluated || (!lambda_fits && !kappa_fits))
    r.verdict = skipped("guard");
  else
    r.verdict = skipped("no claim");
  if (unevaluated && evaluated) r.detail["partially_guarded"] = true;
}

void check_mean_distance(Instance& in, CheckRecord& r) {
  const FamilySpec& s = in.spec();
  const Digraph& g = in.graph();
  const DistanceTable& t = in.distances();
  const std::int64_t n = g.order();
  const Rational mean(t.total(), n * n);
  r.measured = rational_text(mean);
  const int max_degree = g.max_degree();
  if (max_degree >= 2) {
    r.detail["moore_mean_distance"] = rational_text(moore_mean_distance(max_degree, t.diameter()));
    r.detail["log_ratio"] = mean_distance_log_ratio(mean, n, max_degree);
    r.detail["asymptotically_optimal"] = asymptotically_optimal(mean, n, max_degree);
  }
  const bool covered = s.d >= 3 && ((s.family == Family::sK && s.l == 2) || (s.family == Family::CK && s.l == 3));
  if (!covered) {
    r.predicted = nullptr;
    r.verdict = skipped("no closed form");
    return;
  }
  const Rational f = mean_distance_formula(s);
  r.predicted = rational_text(f);
  r.citation = s.family == Family::sK ? "mean distance of sK(d,2) is (2d^2+3d-1)/(d^2+d)"
                                      : "mean distance of CK(d,3) is (3d^3+d^2-5d-2)/(d^3-d)";
  r.verdict = match_if(f == mean);
}

void check_layers(Instance& in, CheckRecord& r) {
  const FamilySpec& s = in.spec();
  const Digraph& g = in.graph();
  const DistanceTable& t = in.distances();
  std::vector<std::int64_t> first;
  bool identical = true;
  std::optional<VertexId> differing;
  for (VertexId v = 0; v < g.order(); ++v) {
    std::vector<std::int64_t> profile(t.diameter() + 1, 0);
    for (VertexId w = 0; w < g.order(); ++w) ++profile[t(v, w)];
    while (profile.size() > 1 && profile.back() == 0) profile.pop_back();
    if (v == 0) {
      first = profile;
    } else if (profile != first && !differing) {
      identical = false;
      differing = v;
    }
  }
  r.measured = {{"profile_from_first_vertex", first}, {"identical_from_every_vertex", identical}};
  if (differing) r.detail["differing_vertex"] = word(g, *differing, s.d);
  const bool covered = s.d >= 3 && ((s.family == Family::sK && s.l == 2) || (s.family == Family::CK && s.l == 3));
  if (!covered) {
    r.predicted = nullptr;
    r.verdict = skipped("no closed form");
    return;
  }
  const std::vector<std::int64_t> f = layer_formula(s);
  r.predicted = {{"profile", f}, {"identical_from_every_vertex", true}};
  r.citation = s.family == Family::sK ? "distance layers of sK(d,2): 1, d-1, (d-1)^2, 2(d-1), 1"
                                      : "distance layers of CK(d,3): 1, d-1, (d-1)^2, (d-1)^3-1, 2(d-1)^2, d-1";
  r.verdict = match_if(identical && first == f);
}

void check_antipodality(Instance& in, CheckRecord& r) {
  const FamilySpec& s = in.spec();
  const Antipodality a = antipodality_class(in.graph());
  r.measured = std::string(to_string(a));
  if (s.family == Family::sK && s.l == 2 && s.d >= 3) {
    r.predicted = "antipodal";
    r.citation = "sK(d,2) is antipodal";
    r.verdict = match_if(a == Antipodality::antipodal);
    return;
  }
  r.predicted = nullptr;
  r.verdict = skipped("no claim");
}

void check_eulerian_hamiltonian(Instance& in, const Budget& budget, CheckRecord& r) {
  const FamilySpec& s = in.spec();
  const Digraph& g = in.graph();
  const bool eulerian = is_eulerian(g);
  r.measured = {{"eulerian", eulerian}};
  std::optional<HamiltonianSearch> search;
  if (in.order() <= kHamiltonianMaxOrder) {
    search = find_hamiltonian_cycle(g, budget.hamiltonian_expansions);
    r.detail["expansions"] = search->expansions;
    switch (search->status) {
      case HamiltonianSearch::Status::found: {
        const bool certified = is_hamiltonian_cycle(g, search->cycle);
        r.measured["hamiltonian"] = certified;
        json cycle = json::array();
        for (VertexId v : search->cycle) cycle.push_back(word(g, v, s.d));
        r.detail["cycle"] = cycle;
        break;
      }
      case HamiltonianSearch::Status::exhausted: r.measured["hamiltonian"] = false; break;
      case HamiltonianSearch::Status::budget_exceeded: r.measured["hamiltonian"] = nullptr; break;
    }
  } else {
    r.detail["hamiltonian"] = "not searched: more than 100 vertices";
  }

  const bool ck3 = s.family == Family::CK && s.l == 3 && s.d >= 3;
  const bool regular_family = s.family == Family::K || (s.family == Family::sK && s.l == 2 && s.d >= 3);
  if (!ck3 && !regular_family) {
    r.predicted = nullptr;
    r.verdict = skipped("no claim");
    return;
  }
  r.predicted = {{"eulerian", true}};
  r.citation = ck3 ? "CK(d,3) is Eulerian and Hamiltonian" : "regular strongly connected digraphs are Eulerian";
  bool ok = eulerian;
  if (ck3) {
    r.predicted["hamiltonian"] = true;
    if (!search) {
      r.verdict = ok ? skipped("guard") : match_if(false);
      return;
    }
    if (search->status == HamiltonianSearch::Status::budget_exceeded) {
      r.verdict = ok ? Verdict{VerdictKind::indeterminate, "budget"} : match_if(false);
      return;
    }
    ok = ok && r.measured["hamiltonian"] == true;
  }
  r.verdict = match_if(ok);
}

CheckRecord run_check(Instance& in, Check check, const Budget& budget) {
  CheckRecord r;
  r.spec = in.spec();
  r.check = check;
  const auto start = std::chrono::steady_clock::now();
  const CheckInfo& guard = info(check);
  try {
    // girth runs its periodic search without building; the guard covers the BFS part only.
    if (check != Check::girth && in.order() > guard.max_order) {
      r.verdict = skipped("guard");
      r.detail["max_order"] = guard.max_order;
      r.detail["order"] = in.order();
    } else if (guard.needs_strong && in.unreachable()) {
      const Arc pair = *in.unreachable();
      r.verdict = skipped("disconnected");
      r.detail["unreachable_pair"] = {word(in.graph(), pair.tail, r.spec.d), word(in.graph(), pair.head, r.spec.d)};
    } else {
      switch (check) {
        case Check::order: check_order(in, r); break;
        case Check::degrees: check_degrees(in, r); break;
        case Check::line_digraph: check_line_digraph(in, r); break;
        case Check::converse: check_converse(in, r); break;
        case Check::subkautz_removal: check_subkautz_removal(in, r); break;
        case Check::distances: check_distances(in, r); break;
        case Check::diameter: check_diameter(in, r); break;
        case Check::girth: check_girth(in, budget, r); break;
        case Check::semigirth: check_semigirth(in, r); break;
        case Check::connectivity: check_connectivity(in, r); break;
        case Check::superconnectivity: check_superconnectivity(in, budget, r); break;
        case Check::mean_distance: check_mean_distance(in, r); break;
        case Check::layers: check_layers(in, r); break;
        case Check::antipodality: check_antipodality(in, r); break;
        case Check::eulerian_hamiltonian: check_eulerian_hamiltonian(in, budget, r); break;
      }
    }
  } catch (const GuardExceeded& e) {
    r.verdict = skipped("guard");
    r.detail["error"] = e.what();
  }
  if (known_disconnected(r.spec)) r.detail["known_disconnected"] = true;
  if (budget.timing)
    r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string truncate(std::string s, std::size_t width) {
  if (s.size() <= width) return s;
  s.resize(width - 3);
  return s + "...";
}

}  // namespace

std::string_view to_string(Check check) { return info(check).name; }

Check parse_check(std::string_view text) {
  for (const auto& entry : check_table())
    if (entry.name == text) return entry.check;
  if (text == "eulerian" || text == "hamiltonian") return Check::eulerian_hamiltonian;
  throw std::invalid_argument("unknown check: " + std::string(text));
}

const std::vector<Check>& all_checks() {
  static const std::vector<Check> checks = [] {
    std::vector<Check> out;
    for (const auto& entry : check_table()) out.push_back(entry.check);
    return out;
  }();
  return checks;
}

const std::vector<CheckGuard>& check_guards() {
  static const std::vector<CheckGuard> guards = [] {
    std::vector<CheckGuard> out;
    for (const auto& entry : check_table()) out.push_back({entry.check, entry.max_order});
    return out;
  }();
  return guards;
}

std::int64_t guard_for(Check check) { return info(check).max_order; }

std::string Verdict::text() const {
  switch (kind) {
    case VerdictKind::match: return "match";
    case VerdictKind::mismatch: return "mismatch";
    case VerdictKind::skipped: return "skipped(" + reason + ")";
    case VerdictKind::indeterminate: return "indeterminate(" + reason + ")";
  }
  return "?";
}

bool AnalysisReport::any_mismatch() const {
  return std::any_of(records.begin(), records.end(),
                     [](const CheckRecord& r) { return r.verdict.kind == VerdictKind::mismatch; });
}

AnalysisReport analyze(const FamilySpec& spec, const std::vector<Check>& checks, const Budget& budget) {
  spec.validate();
  AnalysisReport report{spec, {}};
  Instance instance(spec);
  for (Check c : checks) report.records.push_back(run_check(instance, c, budget));
  return report;
}

std::vector<AnalysisReport> run_suite(const std::vector<FamilySpec>& grid, const std::vector<Check>& checks,
                                      const Budget& budget) {
  for (const auto& spec : grid) spec.validate();
  std::vector<AnalysisReport> reports(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) { reports[i] = analyze(grid[i], checks, budget); });
  return reports;
}

json to_json(const CheckRecord& r) {
  return {{"family", std::string(to_string(r.spec.family))},
          {"d", r.spec.d},
          {"l", r.spec.l},
          {"check", std::string(to_string(r.check))},
          {"predicted", r.predicted},
          {"measured", r.measured},
          {"verdict", r.verdict.text()},
          {"citation", r.citation},
          {"runtime_ms", r.runtime_ms},
          {"detail", r.detail}};
}

json to_json(const std::vector<AnalysisReport>& reports) {
  json out = json::array();
  for (const auto& report : reports)
    for (const auto& r : report.records) out.push_back(to_json(r));
  return out;
}

std::string render_table(const std::vector<AnalysisReport>& reports) {
  std::ostringstream os;
  os << std::left << std::setw(10) << "instance" << std::setw(22) << "check" << std::setw(34) << "predicted"
     << std::setw(34) << "measured"
     << "verdict\n";
  for (const auto& report : reports) {
    for (const auto& r : report.records) {
      os << std::setw(10) << r.spec.name() << std::setw(22) << to_string(r.check) << std::setw(34)
         << truncate(r.predicted.is_null() ? "-" : r.predicted.dump(), 32) << std::setw(34)
         << truncate(r.measured.is_null() ? "-" : r.measured.dump(), 32) << r.verdict.text() << '\n';
    }
  }
  return os.str();
}

TriangleResult verify_distance_triangle(const FamilySpec& spec) {
  spec.validate();
  if (!routable(spec)) throw std::invalid_argument("no analytic routing for " + spec.name());
  if (order_formula(spec) > kTriangleMaxOrder)
    throw std::invalid_argument("distance triangle limited to 300 vertices; " + spec.name() + " is larger");
  const Digraph g = build(spec);
  const DistanceTable table(g);
  const VertexId n = g.order();

  struct Row {
    std::map<std::string, std::uint64_t> cases;
    std::optional<PairMismatch> mismatch;
  };
  std::vector<Row> rows(n);
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t i) {
    const auto s = static_cast<VertexId>(i);
    Row& row = rows[i];
    for (VertexId t = 0; t < n; ++t) {
      const Word& x = g.label(s);
      const Word& y = g.label(t);
      const AnalyticDistance a = distance_analytic(x, y, spec);
      const std::optional<int> solved = distance_solver(x, y, spec);
      const int bfs = table(s, t);
      const std::string tag(to_string(a.kind));
      ++row.cases[tag];
      // A solver fallback inside the classifier means the case analysis itself found no alignment.
      const bool ok = a.kind != RouteCase::solver_fallback && a.distance == bfs && solved == bfs;
      if (!ok && !row.mismatch) row.mismatch = PairMismatch{x, y, a.distance, solved, bfs, tag};
    }
  });

  TriangleResult result;
  result.pairs = static_cast<std::uint64_t>(n) * n;
  for (auto& row : rows) {
    for (const auto& [tag, count] : row.cases) result.cases[tag] += count;
    if (row.mismatch && !result.mismatch) result.mismatch = row.mismatch;
  }
  result.match = !result.mismatch;
  return result;
}

SemigirthChain verify_semigirth_chain(int d, int l) {
  const FamilySpec base{Family::sK, d, l};
  base.validate();
  if (order_formula(base) > kChainMaxOrder)
    throw std::invalid_argument("semigirth chain limited to 120 vertices; " + base.name() + " is larger");
  const Digraph g = build(base);
  const Digraph line = build({Family::CK, d, l + 1});
  SemigirthChain c;
  c.gamma = semigirth(g).gamma;
  c.gamma_line = semigirth(line).gamma;
  c.diameter = diameter(g);
  c.diameter_line = diameter(line);
  c.match = c.gamma_line == c.gamma + 1 && c.diameter_line == c.diameter + 1;
  return c;
}

std::vector<FamilySpec> preset_grid(std::string_view name) {
  int max_l = 0;
  std::int64_t max_order = 0;
  if (name == "quick") {
    max_l = 4;
    max_order = 120;
  } else if (name == "full") {
    max_l = 5;
    max_order = 300;
  } else {
    throw std::invalid_argument("unknown grid preset: " + std::string(name) + " (expected quick or full)");
  }
  std::vector<FamilySpec> grid;
  for (Family f : {Family::sK, Family::CK})
    for (int d = 3; d <= 4; ++d)
      for (int l = 2; l <= max_l; ++l)
        if (order_formula({f, d, l}) <= max_order) grid.push_back({f, d, l});
  grid.push_back({Family::K, 3, 3});
  grid.push_back({Family::MCK, 3, 4});
  grid.push_back({Family::CK, 2, 3});
  if (name == "full") grid.push_back({Family::CK, 3, 13});
  return grid;
}

}  // namespace kautz
