#include "kautz/digraph.hpp"

#include <algorithm>
#include <string>

namespace kautz {

Digraph::Digraph(std::vector<Word> labels, std::vector<Arc> arcs) : labels_(std::move(labels)) {
  const auto n = static_cast<VertexId>(labels_.size());
  for (VertexId v = 0; v < n; ++v) {
    if (!index_.emplace(labels_[v], v).second)
      throw std::invalid_argument("duplicate vertex label at index " + std::to_string(v));
  }
  std::sort(arcs.begin(), arcs.end());
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const Arc& a = arcs[i];
    if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n)
      throw std::invalid_argument("arc endpoint out of range");
    if (a.tail == a.head) throw std::invalid_argument("loop at vertex " + std::to_string(a.tail));
    if (i > 0 && arcs[i - 1] == a)
      throw std::invalid_argument("parallel arc " + std::to_string(a.tail) + "->" + std::to_string(a.head));
  }

  out_offsets_.assign(n + 1, 0);
  in_offsets_.assign(n + 1, 0);
  for (const Arc& a : arcs) {
    ++out_offsets_[a.tail + 1];
    ++in_offsets_[a.head + 1];
  }
  for (VertexId v = 0; v < n; ++v) {
    out_offsets_[v + 1] += out_offsets_[v];
    in_offsets_[v + 1] += in_offsets_[v];
  }
  out_targets_.resize(arcs.size());
  in_targets_.resize(arcs.size());
  std::vector<std::size_t> in_fill(in_offsets_.begin(), in_offsets_.end() - 1);
  // arcs are sorted by (tail, head), so both lists come out sorted.
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    out_targets_[i] = arcs[i].head;
    in_targets_[in_fill[arcs[i].head]++] = arcs[i].tail;
  }
}

int Digraph::min_degree() const {
  int best = order() > 0 ? out_degree(0) : 0;
  for (VertexId v = 0; v < order(); ++v) best = std::min({best, out_degree(v), in_degree(v)});
  return best;
}

int Digraph::max_degree() const {
  int best = 0;
  for (VertexId v = 0; v < order(); ++v) best = std::max({best, out_degree(v), in_degree(v)});
  return best;
}

bool Digraph::is_regular() const {
  const int delta = min_degree();
  return max_degree() == delta;
}

std::optional<VertexId> Digraph::find(const Word& w) const {
  if (auto it = index_.find(w); it != index_.end()) return it->second;
  return std::nullopt;
}

bool Digraph::has_arc(VertexId tail, VertexId head) const {
  const auto nbrs = out(tail);
  return std::binary_search(nbrs.begin(), nbrs.end(), head);
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out_arcs;
  out_arcs.reserve(arc_count());
  for (VertexId v = 0; v < order(); ++v)
    for (VertexId w : out(v)) out_arcs.push_back({v, w});
  return out_arcs;
}

bool labeled_equal(const Digraph& a, const Digraph& b) {
  if (a.order() != b.order() || a.arc_count() != b.arc_count()) return false;
  std::vector<VertexId> to_b(a.order());
  for (VertexId v = 0; v < a.order(); ++v) {
    const auto mapped = b.find(a.label(v));
    if (!mapped) return false;
    to_b[v] = *mapped;
  }
  for (VertexId v = 0; v < a.order(); ++v)
    for (VertexId w : a.out(v))
      if (!b.has_arc(to_b[v], to_b[w])) return false;
  return true;
}

Digraph converse(const Digraph& g) {
  std::vector<Arc> arcs;
  arcs.reserve(g.arc_count());
  for (const Arc& a : g.arcs()) arcs.push_back({a.head, a.tail});
  return Digraph(g.labels(), std::move(arcs));
}

}  // namespace kautz
