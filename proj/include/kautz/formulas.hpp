#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kautz/metrics.hpp"
#include "kautz/word.hpp"

namespace kautz {

/// A closed-form prediction together with the parameter range it is valid
/// for and the published claim it comes from.
template <typename T>
struct Formula {
  std::optional<T> value;  // empty: no closed form for this instance
  std::string guard;
  std::string citation;
};

/// Diameter by family and parameters:
///   CK: 2l-2 (d,l >= 4), 6 for CK(3,4), 2l-1 (d = 3, l != 4; d >= 4, l = 3), 2 for l = 2
///   sK: 2l-1 (d >= 4, l >= 3; and sK(3,3)), 2l (d = 3, l >= 4; d >= 3, l = 2)
///   K : l
/// MCK and d = 2 (other than CK(2,2)) have no closed form.
Formula<int> diameter_formula(const FamilySpec& spec);

/// Smallest k >= 2 with l mod k != 1.
int girth_lower_bound(int l);

struct PeriodicGirth {
  int lower_bound = 0;
  int searched_up_to = 0;
  std::optional<int> girth;       // empty: no cycle of length <= searched_up_to
  std::optional<Word> witness;    // a vertex on a shortest cycle
  std::uint64_t patterns_checked = 0;  // partial patterns extended by the search
};

/// A closed walk of length k through x is a path word of length l + k with
/// period k. For k from the lower bound up to k_max the period patterns are
/// enumerated lexicographically; the first k admitting one is the girth.
/// The lower bound is girth_lower_bound(l) for CK, girth_lower_bound(l + 1)
/// for sK (its line digraph is CK(d,l+1)) and 2 for K. k_max <= 12.
PeriodicGirth girth_periodic_search(const FamilySpec& spec, int k_max);

/// girth_bfs(sK(d,l)) == girth_bfs(CK(d,l+1)).
bool girth_line_digraph_invariance(int d, int l);

/// Which maximal-connectivity properties hold (or are asserted).
struct ConnectivityClaims {
  bool lambda_max = false;    // lambda == delta
  bool kappa_max = false;     // kappa == delta
  bool super_lambda = false;
  bool super_kappa = false;
  bool any() const { return lambda_max || kappa_max || super_lambda || super_kappa; }
  friend bool operator==(const ConnectivityClaims&, const ConnectivityClaims&) = default;
};

/// Sufficient conditions for a loopless digraph with semigirth gamma,
/// diameter D and minimum degree delta:
///   delta > 1 : D <= 2 gamma     => lambda = delta
///               D <= 2 gamma - 1 => kappa = delta
///   delta >= 3: D <= 2 gamma     => super-lambda
///               D <= 2 gamma - 2 => super-kappa
ConnectivityClaims connectivity_conditions(int gamma, int diameter, int delta);

struct ConnectivityPrediction {
  ConnectivityClaims claimed;  // published summary for the family
  ConnectivityClaims derived;  // connectivity_conditions(l, diameter_formula, delta)
  std::optional<int> delta;
  int gamma_lower_bound = 0;
  std::optional<int> diameter;
  std::vector<std::string> derivation;
  std::string guard;
  std::string citation;
  bool has_prediction() const { return claimed.any() || derived.any(); }
};

ConnectivityPrediction connectivity_prediction(const FamilySpec& spec);

/// Exact mean distance of sK(d,2) and CK(d,3), d >= 3 (std::invalid_argument otherwise).
Rational mean_distance_formula(const FamilySpec& spec);
/// Distance layer sizes from any vertex of sK(d,2) or CK(d,3), d >= 3.
std::vector<std::int64_t> layer_formula(const FamilySpec& spec);

/// 1 + m + ... + m^D for maximum degree m, so N(1, D) = D + 1.
std::int64_t moore_bound(int max_degree, int diameter);
/// Mean distance of a digraph meeting the Moore bound, self-distances included.
Rational moore_mean_distance(int max_degree, int diameter);
/// mean / log_max_degree(order). Values near 1 mean the mean distance grows
/// like log N, the best possible rate.
double mean_distance_log_ratio(const Rational& mean, std::int64_t order, int max_degree);
/// Flag for mean_distance_log_ratio <= 1.5.
bool asymptotically_optimal(const Rational& mean, std::int64_t order, int max_degree);

}  // namespace kautz
