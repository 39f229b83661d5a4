#include "kautz/formulas.hpp"

#include <cmath>
#include <stdexcept>

#include "kautz/families.hpp"
#include "kautz/routing.hpp"

namespace kautz {

namespace {

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

Formula<int> ck_diameter(int d, int l) {
  if (l == 2) return {2, "l = 2", "CK(d,2) coincides with K(d,2), diameter l"};
  if (d == 2) return {std::nullopt, "d = 2", "no diameter result for CK(2,l)"};
  if (d >= 4 && l >= 4) return {2 * l - 2, "d, l >= 4", "CK(d,l) has diameter 2l-2 for d, l >= 4"};
  if (d == 3 && l == 4) return {6, "d = 3, l = 4", "CK(3,4) has diameter 2l-2 = 6"};
  if (d == 3) return {2 * l - 1, "d = 3, l != 4", "CK(3,l) has diameter 2l-1 for l != 4"};
  return {2 * l - 1, "d >= 4, l = 3", "CK(d,3) has diameter 2l-1 = 5"};
}

Formula<int> sk_diameter(int d, int l) {
  if (d == 2) return {std::nullopt, "d = 2", "no diameter result for sK(2,l)"};
  if (l == 2) return {2 * l, "d >= 3, l = 2", "sK(d,2) has diameter 2l = 4"};
  if (d >= 4) return {2 * l - 1, "d >= 4, l >= 3", "sK(d,l) has diameter 2l-1 for d >= 4, l >= 3"};
  if (l == 3) return {5, "d = l = 3", "sK(3,3) has diameter 2l-1 = 5"};
  return {2 * l, "d = 3, l >= 4", "sK(3,l) has diameter 2l for l >= 4"};
}

/// Minimum degree of the family, when it is a function of (d, l) alone.
std::optional<int> family_min_degree(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::K: return spec.d;
    case Family::sK: return spec.d - 1;
    case Family::CK: return spec.l == 2 ? spec.d : spec.d - 1;
    case Family::MCK: break;
  }
  return std::nullopt;
}

ConnectivityClaims published_claims(const FamilySpec& spec) {
  const int d = spec.d;
  const int l = spec.l;
  ConnectivityClaims c;
  const bool kautz = spec.family == Family::K || (spec.family == Family::CK && l == 2);
  if (kautz) {
    c.lambda_max = c.kappa_max = true;
    return c;
  }
  if (spec.family == Family::sK && d >= 3) {
    c.super_lambda = c.lambda_max = true;
    c.kappa_max = (d == 3 && l == 3) || (d >= 4 && l >= 3);
  }
  if (spec.family == Family::CK && d >= 3 && l >= 3) {
    c.super_lambda = c.lambda_max = true;
    c.super_kappa = (d == 3 && l == 4) || (d >= 4 && l >= 4);
    c.kappa_max = true;
  }
  return c;
}

std::string claims_text(const ConnectivityClaims& c) {
  std::string out;
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!out.empty()) out += ", ";
    out += name;
  };
  add(c.lambda_max, "lambda = delta");
  add(c.kappa_max, "kappa = delta");
  add(c.super_lambda, "super-lambda");
  add(c.super_kappa, "super-kappa");
  return out.empty() ? "none" : out;
}

class PeriodicPatterns {
 public:
  PeriodicPatterns(int d, int k, std::vector<int> offsets) : d_(d), k_(k), offsets_(std::move(offsets)), p_(k, -1) {
    for (int& o : offsets_) o %= k_;
  }

  bool search(std::uint64_t& checked) {
    for (int o : offsets_)
      if (o == 0) return false;  // p[i] != p[i] is unsatisfiable
    return extend(0, checked);
  }

  const std::vector<int>& pattern() const { return p_; }

 private:
  bool compatible(int pos, int s) const {
    for (int o : offsets_) {
      // Both neighbours at cyclic distance o, restricted to positions already fixed.
      const int after = (pos + o) % k_;
      const int before = (pos - o + k_) % k_;
      if (after < pos && p_[after] == s) return false;
      if (before < pos && p_[before] == s) return false;
    }
    return true;
  }

  bool extend(int pos, std::uint64_t& checked) {
    if (pos == k_) return true;
    for (int s = 0; s <= d_; ++s) {
      if (!compatible(pos, s)) continue;
      ++checked;
      p_[pos] = s;
      if (extend(pos + 1, checked)) return true;
    }
    p_[pos] = -1;
    return false;
  }

  int d_;
  int k_;
  std::vector<int> offsets_;
  std::vector<int> p_;
};

}  // namespace

Formula<int> diameter_formula(const FamilySpec& spec) {
  spec.validate();
  switch (spec.family) {
    case Family::K: return {spec.l, "d, l >= 2", "K(d,l) has diameter l"};
    case Family::sK: return sk_diameter(spec.d, spec.l);
    case Family::CK: return ck_diameter(spec.d, spec.l);
    case Family::MCK: break;
  }
  return {std::nullopt, "MCK", "no diameter result for MCK; measured only"};
}

int girth_lower_bound(int l) {
  if (l < 2) throw std::invalid_argument("girth lower bound needs l >= 2");
  int k = 2;
  while (l % k == 1) ++k;
  return k;
}

PeriodicGirth girth_periodic_search(const FamilySpec& spec, int k_max) {
  spec.validate();
  if (spec.family == Family::MCK) throw std::invalid_argument("periodic girth search needs a shift family");
  if (k_max > 12) throw std::invalid_argument("k_max must be at most 12");
  PeriodicGirth r;
  // A closed walk of length k in sK(d,l) lifts to one in its line digraph CK(d,l+1).
  switch (spec.family) {
    case Family::CK: r.lower_bound = girth_lower_bound(spec.l); break;
    case Family::sK: r.lower_bound = girth_lower_bound(spec.l + 1); break;
    default: r.lower_bound = 2; break;
  }
  const std::vector<int> offsets = path_word_offsets(spec);
  for (int k = std::max(2, r.lower_bound); k <= k_max; ++k) {
    r.searched_up_to = k;
    PeriodicPatterns patterns(spec.d, k, offsets);
    if (!patterns.search(r.patterns_checked)) continue;
    std::vector<Symbol> x(spec.l);
    for (int i = 0; i < spec.l; ++i) x[i] = static_cast<Symbol>(patterns.pattern()[i % k]);
    r.girth = k;
    r.witness = Word(std::move(x));
    break;
  }
  if (!r.girth) r.searched_up_to = std::max(r.searched_up_to, k_max);
  return r;
}

bool girth_line_digraph_invariance(int d, int l) {
  return girth_bfs(build({Family::sK, d, l})) == girth_bfs(build({Family::CK, d, l + 1}));
}

ConnectivityClaims connectivity_conditions(int gamma, int diameter, int delta) {
  ConnectivityClaims c;
  if (delta > 1) {
    c.lambda_max = diameter <= 2 * gamma;
    c.kappa_max = diameter <= 2 * gamma - 1;
  }
  if (delta >= 3) {
    c.super_lambda = diameter <= 2 * gamma;
    c.super_kappa = diameter <= 2 * gamma - 2;
  }
  return c;
}

ConnectivityPrediction connectivity_prediction(const FamilySpec& spec) {
  spec.validate();
  ConnectivityPrediction p;
  p.claimed = published_claims(spec);
  p.delta = family_min_degree(spec);
  p.gamma_lower_bound = spec.l;
  const Formula<int> diam = diameter_formula(spec);
  p.diameter = diam.value;
  p.guard = diam.guard;
  if (p.claimed.any())
    p.citation = spec.family == Family::K || spec.l == 2
                     ? "Kautz digraphs are maximally connected"
                     : "sK(d,l) and CK(d,l) are maximally vertex-connected and super-lambda";
  if (spec.family == Family::MCK || !p.delta || !p.diameter) {
    p.derivation.push_back("no prediction: diameter or minimum degree unknown for " + spec.name());
    return p;
  }
  p.derivation.push_back("semigirth >= l = " + std::to_string(spec.l) + " (subdigraph of K(d,l))");
  p.derivation.push_back("diameter D = " + std::to_string(*p.diameter) + " (" + diam.guard + ")");
  p.derivation.push_back("minimum degree delta = " + std::to_string(*p.delta));
  p.derived = connectivity_conditions(spec.l, *p.diameter, *p.delta);
  if (*p.delta < 3) p.derivation.push_back("delta < 3: superconnectivity conditions do not apply");
  p.derivation.push_back("implied: " + claims_text(p.derived));
  p.derivation.push_back("claimed: " + claims_text(p.claimed));
  return p;
}

Rational mean_distance_formula(const FamilySpec& spec) {
  const std::int64_t d = spec.d;
  if (d >= 3 && spec.family == Family::sK && spec.l == 2) return Rational(2 * d * d + 3 * d - 1, d * d + d);
  if (d >= 3 && spec.family == Family::CK && spec.l == 3)
    return Rational(3 * d * d * d + d * d - 5 * d - 2, d * d * d - d);
  throw std::invalid_argument("mean distance formula covers sK(d,2) and CK(d,3) with d >= 3, not " + spec.name());
}

std::vector<std::int64_t> layer_formula(const FamilySpec& spec) {
  const std::int64_t d = spec.d;
  if (d >= 3 && spec.family == Family::sK && spec.l == 2) return {1, d - 1, (d - 1) * (d - 1), 2 * (d - 1), 1};
  if (d >= 3 && spec.family == Family::CK && spec.l == 3)
    return {1, d - 1, (d - 1) * (d - 1), (d - 1) * (d - 1) * (d - 1) - 1, 2 * (d - 1) * (d - 1), d - 1};
  throw std::invalid_argument("layer formula covers sK(d,2) and CK(d,3) with d >= 3, not " + spec.name());
}

std::int64_t moore_bound(int max_degree, int diameter) {
  if (max_degree < 1 || diameter < 1) throw std::invalid_argument("Moore bound needs degree and diameter >= 1");
  if (max_degree == 1) return diameter + 1;
  return (ipow(max_degree, diameter + 1) - 1) / (max_degree - 1);
}

Rational moore_mean_distance(int max_degree, int diameter) {
  if (max_degree < 1 || diameter < 1) throw std::invalid_argument("Moore mean distance needs degree and diameter >= 1");
  const std::int64_t D = diameter;
  if (max_degree == 1) return Rational(D, 2);
  const std::int64_t g = max_degree;
  const std::int64_t num = D * ipow(g, diameter + 2) - (1 + D) * ipow(g, diameter + 1) + g;
  const std::int64_t den = ipow(g, diameter + 2) - ipow(g, diameter + 1) - g + 1;
  return Rational(num, den);
}

double mean_distance_log_ratio(const Rational& mean, std::int64_t order, int max_degree) {
  if (max_degree < 2 || order < 2) throw std::invalid_argument("log ratio needs degree >= 2 and order >= 2");
  const double m = static_cast<double>(mean.numerator()) / static_cast<double>(mean.denominator());
  return m / (std::log(static_cast<double>(order)) / std::log(static_cast<double>(max_degree)));
}

bool asymptotically_optimal(const Rational& mean, std::int64_t order, int max_degree) {
  return mean_distance_log_ratio(mean, order, max_degree) <= 1.5;
}

}  // namespace kautz
