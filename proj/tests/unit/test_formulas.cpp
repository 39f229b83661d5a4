#include "doctest.h"

#include <chrono>
#include <numeric>

#include "kautz/families.hpp"
#include "kautz/formulas.hpp"
#include "kautz/metrics.hpp"
#include "oracles.hpp"

using namespace kautz;

TEST_CASE("diameter formula examples") {
  CHECK(diameter_formula({Family::CK, 3, 4}).value == 6);
  CHECK(diameter_formula({Family::sK, 3, 4}).value == 8);
  CHECK(diameter_formula({Family::sK, 4, 2}).value == 4);
  CHECK(diameter_formula({Family::sK, 3, 3}).value == 5);
  CHECK(diameter_formula({Family::CK, 3, 5}).value == 9);
  CHECK(diameter_formula({Family::CK, 4, 4}).value == 6);
  CHECK(diameter_formula({Family::CK, 4, 3}).value == 5);
  CHECK(diameter_formula({Family::CK, 5, 2}).value == 2);
  CHECK(diameter_formula({Family::K, 3, 5}).value == 5);
  CHECK_FALSE(diameter_formula({Family::MCK, 3, 4}).value.has_value());
  CHECK_FALSE(diameter_formula({Family::CK, 2, 4}).value.has_value());
  CHECK_FALSE(diameter_formula({Family::sK, 2, 3}).value.has_value());
  CHECK_FALSE(diameter_formula({Family::CK, 4, 4}).citation.empty());
  CHECK_FALSE(diameter_formula({Family::CK, 4, 4}).guard.empty());
}

TEST_CASE("diameter formula matches BFS wherever it applies") {
  int compared = 0;
  for (Family f : {Family::K, Family::sK, Family::CK, Family::MCK}) {
    for (int d = 2; d <= 5; ++d) {
      for (int l = 2; l <= 6; ++l) {
        const FamilySpec spec{f, d, l};
        if (order_formula(spec) > 1200) continue;
        const auto predicted = diameter_formula(spec).value;
        if (!predicted) continue;
        CAPTURE(spec.name());
        CHECK(diameter(build(spec)) == *predicted);
        ++compared;
      }
    }
  }
  CHECK(compared >= 30);
}

TEST_CASE("girth lower bound") {
  CHECK(girth_lower_bound(13) == 5);
  CHECK(girth_lower_bound(7) == 4);
  CHECK(girth_lower_bound(4) == 2);
  CHECK(girth_lower_bound(3) == 3);
  CHECK_THROWS_AS(girth_lower_bound(1), std::invalid_argument);
  for (int l = 2; l <= 60; ++l) {
    const int k = girth_lower_bound(l);
    CHECK(l % k != 1);
    for (int j = 2; j < k; ++j) CHECK(l % j == 1);
  }
}

TEST_CASE("periodic girth of CK(3,13)") {
  const auto start = std::chrono::steady_clock::now();
  const PeriodicGirth r = girth_periodic_search({Family::CK, 3, 13}, 12);
  const auto elapsed = std::chrono::steady_clock::now() - start;
  CHECK(r.lower_bound == 5);
  CHECK(r.girth == 7);
  REQUIRE(r.witness.has_value());
  CHECK(format_word(*r.witness, 3) == "0120123012012");
  CHECK(is_valid_vertex(*r.witness, {Family::CK, 3, 13}));
  CHECK(elapsed < std::chrono::seconds(1));

  const PeriodicGirth capped = girth_periodic_search({Family::CK, 3, 13}, 6);
  CHECK_FALSE(capped.girth.has_value());
  CHECK(capped.searched_up_to == 6);
  CHECK_FALSE(capped.witness.has_value());
}

TEST_CASE("periodic girth matches BFS girth") {
  for (Family f : {Family::K, Family::sK, Family::CK}) {
    for (int d = 2; d <= 4; ++d) {
      for (int l = 2; l <= 5; ++l) {
        const FamilySpec spec{f, d, l};
        if (order_formula(spec) > 800) continue;
        CAPTURE(spec.name());
        const Digraph g = build(spec);
        const PeriodicGirth r = girth_periodic_search(spec, 12);
        CHECK(r.girth == girth_bfs(g));
        if (r.girth) {
          CHECK(*r.girth >= r.lower_bound);
          CHECK(is_valid_vertex(*r.witness, spec));
        }
      }
    }
  }
}

TEST_CASE("girth bound for sK follows its line digraph") {
  CHECK(girth_bfs(build({Family::sK, 3, 3})) == 2);
  CHECK(girth_periodic_search({Family::sK, 3, 3}, 12).lower_bound == 2);
  CHECK(girth_periodic_search({Family::sK, 3, 4}, 12).lower_bound == 3);
  CHECK(girth_bfs(build({Family::sK, 3, 4})) >= 3);
}

TEST_CASE("girth is preserved by the line digraph") {
  CHECK(girth_line_digraph_invariance(3, 2));
  CHECK(girth_line_digraph_invariance(3, 3));
  CHECK(girth_line_digraph_invariance(4, 3));
}

TEST_CASE("connectivity conditions") {
  CHECK(connectivity_conditions(3, 5, 2) == ConnectivityClaims{true, true, false, false});
  CHECK(connectivity_conditions(3, 6, 2) == ConnectivityClaims{true, false, false, false});
  CHECK(connectivity_conditions(4, 6, 3) == ConnectivityClaims{true, true, true, true});
  CHECK(connectivity_conditions(3, 6, 3) == ConnectivityClaims{true, false, true, false});
  CHECK_FALSE(connectivity_conditions(3, 5, 1).any());
}

TEST_CASE("connectivity predictions") {
  const auto ck44 = connectivity_prediction({Family::CK, 4, 4});
  CHECK(ck44.claimed.super_kappa);
  CHECK(ck44.derived.super_kappa);
  CHECK(ck44.delta == 3);
  CHECK(ck44.diameter == 6);

  const auto sk33 = connectivity_prediction({Family::sK, 3, 3});
  CHECK(sk33.claimed.kappa_max);
  CHECK(sk33.derived.kappa_max);

  const auto ck35 = connectivity_prediction({Family::CK, 3, 5});
  CHECK(ck35.claimed.kappa_max);
  CHECK(ck35.derived.kappa_max);
  CHECK_FALSE(ck35.claimed.super_kappa);

  const auto mck = connectivity_prediction({Family::MCK, 3, 4});
  CHECK_FALSE(mck.derived.any());
  CHECK_FALSE(mck.derivation.empty());

  CHECK(connectivity_prediction({Family::K, 3, 3}).claimed == ConnectivityClaims{true, true, false, false});
}

TEST_CASE("derived claims hold for the measured semigirth and diameter") {
  for (const FamilySpec& spec : {FamilySpec{Family::sK, 3, 2}, FamilySpec{Family::sK, 3, 3},
                                 FamilySpec{Family::CK, 3, 3}, FamilySpec{Family::CK, 3, 4},
                                 FamilySpec{Family::CK, 4, 3}, FamilySpec{Family::K, 3, 3}}) {
    CAPTURE(spec.name());
    const Digraph g = build(spec);
    const int gamma = semigirth(g).gamma;
    CHECK(gamma >= spec.l);
    const ConnectivityClaims measured = connectivity_conditions(gamma, diameter(g), g.min_degree());
    const ConnectivityClaims derived = connectivity_prediction(spec).derived;
    // A larger measured semigirth can only add implications.
    CHECK((!derived.lambda_max || measured.lambda_max));
    CHECK((!derived.kappa_max || measured.kappa_max));
    CHECK((!derived.super_lambda || measured.super_lambda));
    CHECK((!derived.super_kappa || measured.super_kappa));
  }
}

TEST_CASE("mean distance closed forms") {
  CHECK(mean_distance_formula({Family::sK, 3, 2}) == Rational(13, 6));
  CHECK(mean_distance_formula({Family::CK, 3, 3}) == Rational(73, 24));
  CHECK(layer_formula({Family::CK, 3, 3}) == std::vector<std::int64_t>{1, 2, 4, 7, 8, 2});
  CHECK(layer_formula({Family::sK, 3, 2}) == std::vector<std::int64_t>{1, 2, 4, 4, 1});
  CHECK_THROWS_AS(mean_distance_formula({Family::CK, 3, 4}), std::invalid_argument);
  CHECK_THROWS_AS(mean_distance_formula({Family::sK, 2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(layer_formula({Family::K, 3, 2}), std::invalid_argument);

  for (int d = 3; d <= 6; ++d) {
    for (const FamilySpec& spec : {FamilySpec{Family::sK, d, 2}, FamilySpec{Family::CK, d, 3}}) {
      CAPTURE(spec.name());
      const Digraph g = build(spec);
      CHECK(mean_distance(g) == mean_distance_formula(spec));
      const auto layers = layer_formula(spec);
      CHECK(std::accumulate(layers.begin(), layers.end(), std::int64_t{0}) == g.order());
      std::int64_t weighted = 0;
      for (std::size_t k = 0; k < layers.size(); ++k) weighted += static_cast<std::int64_t>(k) * layers[k];
      CHECK(Rational(weighted, g.order()) == mean_distance_formula(spec));
    }
  }
}

TEST_CASE("Moore bound") {
  CHECK(moore_bound(2, 2) == 7);
  CHECK(moore_bound(1, 4) == 5);
  CHECK(moore_bound(3, 3) == 40);
  CHECK(moore_mean_distance(2, 2) == Rational(10, 7));
  CHECK(moore_mean_distance(1, 4) == Rational(2));
  for (int degree = 1; degree <= 5; ++degree) {
    for (int diam = 1; diam <= 6; ++diam) {
      const auto [num, den] = oracle::moore_mean_by_sum(degree, diam);
      CHECK(moore_mean_distance(degree, diam) == Rational(num, den));
    }
  }
}

TEST_CASE("mean distance against the Moore rate") {
  const Rational moore = moore_mean_distance(3, 4);
  CHECK(asymptotically_optimal(moore, moore_bound(3, 4), 3));
  const Digraph g = build({Family::CK, 4, 3});
  const double ratio = mean_distance_log_ratio(mean_distance(g), g.order(), g.max_degree());
  CHECK(ratio > 0.5);
  CHECK(ratio < 2.0);
  // A directed cycle has linear mean distance.
  CHECK_FALSE(asymptotically_optimal(Rational(99, 2), 100, 2));
}
