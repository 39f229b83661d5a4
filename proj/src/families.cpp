#include "kautz/families.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace kautz {

namespace {

VertexId index_of(const std::vector<Word>& sorted, const Word& w) {
  const auto it = std::lower_bound(sorted.begin(), sorted.end(), w);
  if (it == sorted.end() || *it != w) throw std::logic_error("successor word is not a vertex");
  return static_cast<VertexId>(it - sorted.begin());
}

/// Appended symbols allowed after x by the shift rule of the family.
bool shift_allowed(const FamilySpec& spec, const Word& x, Symbol next) {
  const std::size_t l = x.size();
  switch (spec.family) {
    case Family::K: return next != x[l - 1];
    case Family::sK: return next != x[l - 1] && next != x[0];
    case Family::CK:
    case Family::MCK: return next != x[l - 1] && next != x[1];
  }
  return false;
}

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

Digraph build(const FamilySpec& spec) {
  spec.validate();
  std::vector<Word> vertices = enumerate_vertices(spec);
  std::vector<Arc> arcs;
  for (VertexId v = 0; v < static_cast<VertexId>(vertices.size()); ++v) {
    const Word& x = vertices[v];
    for (int s = 0; s <= spec.d; ++s) {
      const auto next = static_cast<Symbol>(s);
      if (shift_allowed(spec, x, next)) {
        arcs.push_back({v, index_of(vertices, x.shifted(next))});
      } else if (spec.family == Family::MCK && spec.l >= 3 && next == x[1] && next != x[spec.l - 1]) {
        // Head clash a2 == a(l+1): replace a2 by the smallest a2' not in {a3, a(l+1)}.
        Word target = x.shifted(next);
        Symbol replacement = 0;
        while (replacement == target[1] || replacement == next) ++replacement;
        std::vector<Symbol> repaired(target.symbols().begin(), target.symbols().end());
        repaired[0] = replacement;
        arcs.push_back({v, index_of(vertices, Word(std::move(repaired)))});
      }
    }
  }
  return Digraph(std::move(vertices), std::move(arcs));
}

std::int64_t order_formula(const FamilySpec& spec) {
  spec.validate();
  switch (spec.family) {
    case Family::K:
    case Family::sK: return ipow(spec.d, spec.l) + ipow(spec.d, spec.l - 1);
    case Family::CK:
    case Family::MCK: return ipow(spec.d, spec.l) + (spec.l % 2 == 0 ? 1 : -1) * spec.d;
  }
  return 0;
}

std::int64_t order_recurrence(int d, int l) {
  if (l < 1) throw std::invalid_argument("order recurrence needs l >= 1");
  std::int64_t n = d + 1;
  if (l == 1) return n;
  n = ipow(d, 2) + d;  // every Kautz word of length 2 has distinct ends
  for (int k = 3; k <= l; ++k) n = ipow(d, k) + ipow(d, k - 1) - n;
  return n;
}

Digraph line_digraph(const Digraph& g) {
  const auto arcs = g.arcs();
  std::vector<std::pair<Word, std::size_t>> keyed;
  keyed.reserve(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i)
    keyed.emplace_back(g.label(arcs[i].tail).extended(g.label(arcs[i].head).back()), i);
  std::sort(keyed.begin(), keyed.end());

  std::vector<VertexId> new_id(arcs.size());
  std::vector<Word> labels;
  labels.reserve(keyed.size());
  for (std::size_t k = 0; k < keyed.size(); ++k) {
    new_id[keyed[k].second] = static_cast<VertexId>(k);
    labels.push_back(std::move(keyed[k].first));
  }
  // arcs are sorted by (tail, head), so arcs leaving v occupy a contiguous block.
  std::vector<std::size_t> first_arc(g.order() + 1, 0);
  for (VertexId v = 0; v < g.order(); ++v) first_arc[v + 1] = first_arc[v] + g.out_degree(v);

  std::vector<Arc> line_arcs;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const VertexId v = arcs[i].head;
    for (std::size_t j = first_arc[v]; j < first_arc[v + 1]; ++j) line_arcs.push_back({new_id[i], new_id[j]});
  }
  return Digraph(std::move(labels), std::move(line_arcs));
}

Digraph partial_line_digraph(const Digraph& g, const std::vector<Arc>& kept_arcs) {
  std::set<Arc> kept(kept_arcs.begin(), kept_arcs.end());
  std::vector<bool> covered(g.order(), false);
  for (const Arc& a : kept) {
    if (a.tail < 0 || a.tail >= g.order() || a.head < 0 || a.head >= g.order() || !g.has_arc(a.tail, a.head))
      throw std::invalid_argument("kept arc is not an arc of the digraph");
    covered[a.head] = true;
  }
  for (VertexId v = 0; v < g.order(); ++v)
    if (!covered[v])
      throw std::invalid_argument("kept arcs do not reach vertex " + std::to_string(v) +
                                  "; every vertex must be the head of a kept arc");

  std::vector<std::pair<Word, Arc>> keyed;
  for (const Arc& a : kept) keyed.emplace_back(g.label(a.tail).extended(g.label(a.head).back()), a);
  std::sort(keyed.begin(), keyed.end());
  std::vector<Word> labels;
  std::vector<Arc> sorted_kept;
  for (auto& [label, a] : keyed) {
    labels.push_back(std::move(label));
    sorted_kept.push_back(a);
  }
  std::map<Arc, VertexId> index;
  for (std::size_t k = 0; k < sorted_kept.size(); ++k) index.emplace(sorted_kept[k], static_cast<VertexId>(k));

  // Substitute tail for w: smallest-labelled in-neighbour with a kept arc into w.
  std::vector<VertexId> substitute(g.order(), -1);
  for (VertexId w = 0; w < g.order(); ++w) {
    for (VertexId u : g.in(w)) {
      if (!kept.count({u, w})) continue;
      if (substitute[w] < 0 || g.label(u) < g.label(substitute[w])) substitute[w] = u;
    }
  }

  std::vector<Arc> arcs;
  for (std::size_t k = 0; k < sorted_kept.size(); ++k) {
    const VertexId v = sorted_kept[k].head;
    for (VertexId w : g.out(v)) {
      const Arc target = kept.count({v, w}) ? Arc{v, w} : Arc{substitute[w], w};
      arcs.push_back({static_cast<VertexId>(k), index.at(target)});
    }
  }
  return Digraph(std::move(labels), std::move(arcs));
}

bool reversal_is_isomorphism(const FamilySpec& spec) {
  if (spec.family == Family::MCK) throw std::invalid_argument("reversal isomorphism is defined for K, sK and CK");
  const Digraph g = build(spec);
  std::vector<VertexId> psi(g.order());
  for (VertexId v = 0; v < g.order(); ++v) {
    const auto image = g.find(reverse(g.label(v)));
    if (!image) return false;
    psi[v] = *image;
  }
  // u -> v in g must map to psi(u) -> psi(v) in the converse, i.e. psi(v) -> psi(u) in g.
  for (const Arc& a : g.arcs())
    if (!g.has_arc(psi[a.head], psi[a.tail])) return false;
  return true;
}

std::vector<Arc> closed_walk_arcs(int d, int l) {
  const FamilySpec spec{Family::K, d, l};
  const Digraph g = build(spec);
  std::vector<Arc> out;
  for (VertexId v = 0; v < g.order(); ++v) {
    const Word& x = g.label(v);
    if (x.front() == x.back()) continue;  // x1 cannot follow xl
    const auto head = g.find(x.shifted(x.front()));
    if (!head || !g.has_arc(v, *head)) throw std::logic_error("rotation arc missing from Kautz digraph");
    out.push_back({v, *head});
  }
  return out;
}

bool verify_subkautz_removal(int d, int l) {
  const Digraph kautz = build({Family::K, d, l});
  const Digraph sub = build({Family::sK, d, l});
  const auto removed = closed_walk_arcs(d, l);
  const std::set<Arc> removed_set(removed.begin(), removed.end());

  for (const Arc& a : removed) {
    const Word walk = kautz.label(a.tail).extended(kautz.label(a.tail).front());
    // Closed walk of length l in the complete symmetric digraph: consecutive symbols differ, ends agree.
    for (std::size_t i = 0; i + 1 < walk.size(); ++i)
      if (walk[i] == walk[i + 1]) return false;
    if (walk.front() != walk.back()) return false;
  }
  std::size_t remaining = 0;
  for (const Arc& a : kautz.arcs()) {
    if (removed_set.count(a)) continue;
    ++remaining;
    const auto tail = sub.find(kautz.label(a.tail));
    const auto head = sub.find(kautz.label(a.head));
    if (!tail || !head || !sub.has_arc(*tail, *head)) return false;
  }
  return remaining == sub.arc_count() && sub.order() == kautz.order();
}

DegreePair degree_formula(const FamilySpec& spec, const Word& w) {
  if (!is_valid_vertex(w, spec)) throw std::invalid_argument("word is not a vertex of " + spec.name());
  const int alphabet = spec.d + 1;
  const std::size_t l = w.size();
  auto distinct = [](Symbol a, Symbol b) { return a == b ? 1 : 2; };
  switch (spec.family) {
    case Family::K: return {spec.d, spec.d};
    case Family::sK: {
      const int k = alphabet - distinct(w[0], w[l - 1]);
      return {k, k};
    }
    case Family::CK: return {alphabet - distinct(w[1], w[l - 1]), alphabet - distinct(w[0], w[l - 2])};
    case Family::MCK: return {spec.d, -1};
  }
  return {};
}

}  // namespace kautz
