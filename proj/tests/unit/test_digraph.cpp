#include "doctest.h"

#include <set>

#include "kautz/connectivity.hpp"
#include "kautz/families.hpp"
#include "kautz/metrics.hpp"
#include "oracles.hpp"

using namespace kautz;

namespace {

Digraph cycle(int n) {
  std::vector<Word> labels;
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) {
    labels.push_back(Word{i});
    arcs.push_back({i, (i + 1) % n});
  }
  return Digraph(labels, arcs);
}

Digraph complete_symmetric(int n) {
  std::vector<Word> labels;
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) {
    labels.push_back(Word{i});
    for (int j = 0; j < n; ++j)
      if (i != j) arcs.push_back({i, j});
  }
  return Digraph(labels, arcs);
}

oracle::Graph to_oracle(const Digraph& g) {
  oracle::Graph o;
  for (const Word& w : g.labels()) o.labels.emplace_back(w.symbols().begin(), w.symbols().end());
  o.adj.assign(g.order(), std::vector<char>(g.order(), 0));
  for (const Arc& a : g.arcs()) o.adj[a.tail][a.head] = 1;
  return o;
}

VertexId id(const Digraph& g, std::string_view text) { return *g.find(parse_word(text, 9)); }

const std::vector<FamilySpec> kSmall = {
    {Family::K, 2, 2},  {Family::K, 2, 3},  {Family::K, 3, 2},  {Family::sK, 3, 2}, {Family::sK, 3, 3},
    {Family::CK, 3, 3}, {Family::CK, 2, 4}, {Family::sK, 4, 2}, {Family::MCK, 3, 3},
};

}  // namespace

TEST_CASE("digraph container rejects malformed input") {
  CHECK_THROWS_AS(Digraph({Word{0}, Word{1}}, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Digraph({Word{0}, Word{1}}, {{0, 1}, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Digraph({Word{0}, Word{1}}, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Digraph({Word{0}, Word{0}}, {}), std::invalid_argument);
}

TEST_CASE("forward and reverse lists agree") {
  const Digraph g = build({Family::CK, 3, 4});
  std::size_t in_total = 0;
  std::size_t out_total = 0;
  for (VertexId v = 0; v < g.order(); ++v) {
    out_total += g.out_degree(v);
    in_total += g.in_degree(v);
    for (VertexId w : g.out(v)) {
      const auto in = g.in(w);
      CHECK(std::find(in.begin(), in.end(), v) != in.end());
    }
    CHECK(std::is_sorted(g.out(v).begin(), g.out(v).end()));
  }
  CHECK(in_total == g.arc_count());
  CHECK(out_total == g.arc_count());
  CHECK(labeled_equal(converse(converse(g)), g));
}

TEST_CASE("bfs") {
  CHECK(bfs(cycle(3), 0).dist == std::vector<int>{0, 1, 2});

  const Digraph ck33 = build({Family::CK, 3, 3});
  const auto field = bfs(ck33, id(ck33, "012"));
  const int far = *std::max_element(field.dist.begin(), field.dist.end());
  CHECK(far == 5);
  std::set<std::string> at_max;
  for (VertexId v = 0; v < ck33.order(); ++v)
    if (field.dist[v] == far) at_max.insert(format_word(ck33.label(v), 3));
  CHECK(at_max == std::set<std::string>{"210", "213"});

  const Digraph sk32 = build({Family::sK, 3, 2});
  CHECK(layer_profile(sk32, id(sk32, "01")) == std::vector<int>{1, 2, 4, 4, 1});
}

TEST_CASE("distances agree with Floyd-Warshall") {
  for (const auto& spec : kSmall) {
    CAPTURE(spec.name());
    const Digraph g = build(spec);
    const auto fw = oracle::floyd_warshall(to_oracle(g));
    for (VertexId s = 0; s < g.order(); ++s) {
      const auto field = bfs(g, s);
      for (VertexId t = 0; t < g.order(); ++t) {
        const int expected = fw[s][t] >= oracle::kInf ? kUnreachable : fw[s][t];
        CHECK(field.dist[t] == expected);
      }
    }
  }
}

TEST_CASE("diameter and mean distance") {
  CHECK(diameter(build({Family::CK, 3, 4})) == 6);
  CHECK(diameter(build({Family::sK, 3, 3})) == 5);
  CHECK(mean_distance(build({Family::CK, 3, 3})) == Rational(73, 24));
  for (const auto& spec : kSmall) {
    const Digraph g = build(spec);
    const auto fw = oracle::floyd_warshall(to_oracle(g));
    std::int64_t total = 0;
    for (const auto& row : fw)
      for (int v : row) total += v;
    const std::int64_t n = g.order();
    CHECK(mean_distance(g) * Rational(n * n) == Rational(total));
  }
}

TEST_CASE("metrics fail loudly on non-strong digraphs") {
  const Digraph g = build({Family::CK, 2, 3});
  CHECK_FALSE(is_strongly_connected(g));
  CHECK(unreachable_pair(g).has_value());
  CHECK_THROWS_AS(diameter(g), NotStronglyConnected);
  CHECK_THROWS_AS(mean_distance(g), NotStronglyConnected);
  CHECK_THROWS_AS(semigirth(g), NotStronglyConnected);
  try {
    diameter(g);
  } catch (const NotStronglyConnected& e) {
    CHECK(bfs(g, e.from()).dist[e.to()] == kUnreachable);
  }
}

TEST_CASE("girth") {
  CHECK(girth_bfs(cycle(4)) == 4);
  CHECK(girth_bfs(build({Family::CK, 3, 3})) == 3);
  CHECK_FALSE(girth_bfs(Digraph({Word{0}, Word{1}}, {{0, 1}})).has_value());
  for (const auto& spec : kSmall) {
    CAPTURE(spec.name());
    const Digraph g = build(spec);
    CHECK(girth_bfs(g) == oracle::girth_by_matrix_powers(to_oracle(g)));
  }
}

TEST_CASE("semigirth") {
  CHECK(semigirth(build({Family::K, 2, 2})).gamma == 2);
  CHECK(semigirth(build({Family::K, 3, 3})).gamma == 3);
  for (int n = 3; n <= 6; ++n) {
    const auto r = semigirth(cycle(n));
    CHECK(r.gamma == n - 1);
    CHECK_FALSE(r.witness.has_value());
  }
}

TEST_CASE("semigirth agrees with walk enumeration") {
  for (const auto& spec : kSmall) {
    const Digraph g = build(spec);
    if (g.order() > 40 || !is_strongly_connected(g)) continue;
    CAPTURE(spec.name());
    const auto r = semigirth(g);
    CHECK(r.gamma == oracle::semigirth(to_oracle(g)));
    CHECK(r.gamma >= 1);
    CHECK(r.gamma <= diameter(g));
  }
}

TEST_CASE("connectivity") {
  const Digraph k4 = complete_symmetric(4);
  CHECK(vertex_connectivity(k4) == 3);
  CHECK(arc_connectivity(k4) == 3);

  const Digraph ck43 = build({Family::CK, 4, 3});
  CHECK(vertex_connectivity(ck43) == 3);
  CHECK(arc_connectivity(ck43) == 3);
  CHECK(ck43.min_degree() == 3);

  CHECK(arc_connectivity(build({Family::sK, 3, 2})) == 2);
  CHECK(vertex_connectivity(cycle(5)) == 1);
}

TEST_CASE("connectivity agrees with subset brute force") {
  for (const auto& spec : {FamilySpec{Family::K, 2, 2}, FamilySpec{Family::K, 2, 3}, FamilySpec{Family::sK, 3, 2},
                           FamilySpec{Family::CK, 3, 3}, FamilySpec{Family::CK, 2, 4}, FamilySpec{Family::MCK, 3, 3}}) {
    CAPTURE(spec.name());
    const Digraph g = build(spec);
    const auto o = to_oracle(g);
    const int kappa = vertex_connectivity(g);
    const int lambda = arc_connectivity(g);
    CHECK(kappa == oracle::vertex_connectivity(o));
    CHECK(lambda == oracle::arc_connectivity(o));
    CHECK(kappa <= lambda);
    CHECK(lambda <= g.min_degree());
  }
}

TEST_CASE("superconnectivity") {
  const Digraph ck33 = build({Family::CK, 3, 3});
  const auto sl = is_super_lambda(ck33, 2);
  CHECK(sl.holds);
  CHECK(sl.subsets_checked <= binomial(ck33.arc_count(), 2));
  const auto o = to_oracle(ck33);
  const std::vector<Arc> arcs = ck33.arcs();
  const std::vector<char> no_vertices(ck33.order(), 0);
  bool nontrivial = false;
  oracle::for_each_subset(static_cast<int>(arcs.size()), 2, [&](const std::vector<int>& s) {
    std::vector<std::vector<char>> removed(ck33.order(), std::vector<char>(ck33.order(), 0));
    for (int a : s) removed[arcs[a].tail][arcs[a].head] = 1;
    if (oracle::strongly_connected(o, no_vertices, removed)) return true;
    const Arc a = arcs[s[0]];
    const Arc b = arcs[s[1]];
    const bool trivial = (a.tail == b.tail && ck33.out_degree(a.tail) == 2) ||
                         (a.head == b.head && ck33.in_degree(a.head) == 2);
    nontrivial = nontrivial || !trivial;
    return true;
  });
  CHECK(sl.holds == !nontrivial);

  const auto c = is_super_lambda(cycle(5), 1);
  CHECK(c.holds);

  // Two triangles joined in both directions through one arc each: the
  // joining arcs form a non-trivial minimum arc cut.
  std::vector<Word> labels;
  for (int i = 0; i < 6; ++i) labels.push_back(Word{i});
  const Digraph joined(labels, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {3, 0}});
  const auto j = is_super_lambda(joined, 1);
  CHECK_FALSE(j.holds);
  REQUIRE(j.witness.has_value());
  CHECK_FALSE(strongly_connected_without_arcs(joined, *j.witness));

  CHECK_THROWS_AS(is_super_lambda(Digraph({Word{0}, Word{1}}, {{0, 1}}), 1), NotStronglyConnected);
  CHECK_THROWS_AS(is_super_lambda(build({Family::CK, 9, 3}), 8), GuardExceeded);
  CHECK_THROWS_AS(is_super_lambda(ck33, 1), std::invalid_argument);
}

TEST_CASE("super-kappa scan matches brute-force cut classification") {
  const Digraph g = build({Family::CK, 3, 4});
  const auto r = is_super_kappa(g, 2);
  const auto o = to_oracle(g);
  bool nontrivial = false;
  const std::vector<std::vector<char>> no_arcs(g.order(), std::vector<char>(g.order(), 0));
  oracle::for_each_subset(g.order(), 2, [&](const std::vector<int>& s) {
    std::vector<char> removed(g.order(), 0);
    for (int v : s) removed[v] = 1;
    if (oracle::strongly_connected(o, removed, no_arcs)) return true;
    std::vector<VertexId> cut(s.begin(), s.end());
    bool trivial = false;
    for (VertexId v = 0; v < g.order(); ++v) {
      const std::vector<VertexId> out(g.out(v).begin(), g.out(v).end());
      const std::vector<VertexId> in(g.in(v).begin(), g.in(v).end());
      trivial = trivial || out == cut || in == cut;
    }
    nontrivial = nontrivial || !trivial;
    return true;
  });
  CHECK(r.holds == !nontrivial);
}

TEST_CASE("Eulerian and Hamiltonian") {
  const Digraph ck33 = build({Family::CK, 3, 3});
  CHECK(is_eulerian(ck33));
  const auto h = find_hamiltonian_cycle(ck33, 10'000'000);
  REQUIRE(h.status == HamiltonianSearch::Status::found);
  CHECK(h.cycle.size() == 24);
  CHECK(is_hamiltonian_cycle(ck33, h.cycle));

  const Digraph c3 = cycle(3);
  CHECK(is_eulerian(c3));
  const auto hc = find_hamiltonian_cycle(c3, 100);
  REQUIRE(hc.status == HamiltonianSearch::Status::found);
  CHECK(hc.cycle == std::vector<VertexId>{0, 1, 2});

  CHECK_FALSE(is_hamiltonian_cycle(c3, {0, 2, 1}));
  CHECK_FALSE(is_hamiltonian_cycle(c3, {0, 1}));
  CHECK_FALSE(is_eulerian(build({Family::CK, 2, 3})));
}

TEST_CASE("antipodality") {
  CHECK(antipodality_class(cycle(5)) == Antipodality::weakly_antipodal);
  CHECK(antipodality_class(cycle(2)) == Antipodality::antipodal);
  CHECK(antipodality_class(build({Family::sK, 3, 2})) == Antipodality::antipodal);
  CHECK(antipodality_class(complete_symmetric(3)) == Antipodality::neither);
}
