#include "kautz/connectivity.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "kautz/metrics.hpp"

namespace kautz {

namespace {

/// Residual network for unit-capacity augmenting-path flow.
class UnitFlowNetwork {
 public:
  explicit UnitFlowNetwork(int nodes) : adjacency_(nodes) {}

  void add_edge(int from, int to, int capacity = 1) {
    adjacency_[from].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({to, capacity});
    adjacency_[to].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({from, 0});
  }

  /// Augments along BFS paths until no path remains or `limit` is reached.
  int max_flow(int source, int sink, int limit) {
    int flow = 0;
    std::vector<int> parent_edge(adjacency_.size());
    std::vector<int> queue;
    queue.reserve(adjacency_.size());
    while (flow < limit) {
      std::fill(parent_edge.begin(), parent_edge.end(), -1);
      queue.clear();
      queue.push_back(source);
      parent_edge[source] = -2;
      for (std::size_t head = 0; head < queue.size() && parent_edge[sink] == -1; ++head) {
        const int v = queue[head];
        for (int e : adjacency_[v]) {
          const int w = edges_[e].to;
          if (edges_[e].capacity > 0 && parent_edge[w] == -1) {
            parent_edge[w] = e;
            queue.push_back(w);
          }
        }
      }
      if (parent_edge[sink] == -1) break;
      for (int v = sink; v != source;) {
        const int e = parent_edge[v];
        --edges_[e].capacity;
        ++edges_[e ^ 1].capacity;
        v = edges_[e ^ 1].to;
      }
      ++flow;
    }
    return flow;
  }

 private:
  struct Edge {
    int to;
    int capacity;
  };
  std::vector<std::vector<int>> adjacency_;
  std::vector<Edge> edges_;
};

constexpr int kInfinite = std::numeric_limits<int>::max() / 4;

/// Iterates k-subsets of {0..n-1} in lexicographic order.
class Combinations {
 public:
  Combinations(int n, int k) : n_(n), index_(k) { std::iota(index_.begin(), index_.end(), 0); }
  const std::vector<int>& current() const { return index_; }
  bool next() {
    const int k = static_cast<int>(index_.size());
    int i = k - 1;
    while (i >= 0 && index_[i] == n_ - k + i) --i;
    if (i < 0) return false;
    ++index_[i];
    for (int j = i + 1; j < k; ++j) index_[j] = index_[j - 1] + 1;
    return true;
  }

 private:
  int n_;
  std::vector<int> index_;
};

/// BFS over g ignoring arcs flagged in `removed_arc` (indexed by position in
/// g.arcs()) and vertices flagged in `removed_vertex`.
class MaskedReachability {
 public:
  explicit MaskedReachability(const Digraph& g) : g_(g), in_arc_id_(g.arc_count()), out_base_(g.order() + 1, 0) {
    for (VertexId v = 0; v < g.order(); ++v) out_base_[v + 1] = out_base_[v] + g.out_degree(v);
    std::vector<std::size_t> in_base(g.order() + 1, 0);
    for (VertexId v = 0; v < g.order(); ++v) in_base[v + 1] = in_base[v] + g.in_degree(v);
    std::vector<std::size_t> fill(in_base.begin(), in_base.end() - 1);
    for (VertexId v = 0; v < g.order(); ++v) {
      const auto nbrs = g.out(v);
      for (std::size_t i = 0; i < nbrs.size(); ++i) in_arc_id_[fill[nbrs[i]]++] = out_base_[v] + i;
    }
    in_base_ = std::move(in_base);
    seen_.resize(g.order());
    queue_.reserve(g.order());
  }

  std::size_t arc_id(VertexId tail, std::size_t slot) const { return out_base_[tail] + slot; }

  bool strongly_connected(const std::vector<char>& removed_arc, const std::vector<char>& removed_vertex) {
    VertexId root = -1;
    VertexId alive = 0;
    for (VertexId v = 0; v < g_.order(); ++v) {
      if (removed_vertex.empty() || !removed_vertex[v]) {
        if (root < 0) root = v;
        ++alive;
      }
    }
    if (alive < 2) return false;
    return sweep(root, removed_arc, removed_vertex, true) == alive &&
           sweep(root, removed_arc, removed_vertex, false) == alive;
  }

 private:
  VertexId sweep(VertexId root, const std::vector<char>& removed_arc, const std::vector<char>& removed_vertex,
                 bool forward) {
    std::fill(seen_.begin(), seen_.end(), 0);
    queue_.clear();
    queue_.push_back(root);
    seen_[root] = 1;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const VertexId v = queue_[head];
      const auto nbrs = forward ? g_.out(v) : g_.in(v);
      for (std::size_t i = 0; i < nbrs.size(); ++i) {
        const VertexId w = nbrs[i];
        const std::size_t id = forward ? out_base_[v] + i : in_arc_id_[in_base_[v] + i];
        if (seen_[w] || (!removed_arc.empty() && removed_arc[id]) || (!removed_vertex.empty() && removed_vertex[w]))
          continue;
        seen_[w] = 1;
        queue_.push_back(w);
      }
    }
    return static_cast<VertexId>(queue_.size());
  }

  const Digraph& g_;
  std::vector<std::size_t> in_arc_id_;
  std::vector<std::size_t> out_base_;
  std::vector<std::size_t> in_base_;
  std::vector<char> seen_;
  std::vector<VertexId> queue_;
};

void require_connected_input(const Digraph& g) {
  if (g.order() < 2) throw std::invalid_argument("connectivity needs at least two vertices");
  if (auto pair = unreachable_pair(g))
    throw NotStronglyConnected(pair->tail, pair->head,
                               "digraph is not strongly connected: vertex " + std::to_string(pair->head) +
                                   " is unreachable from vertex " + std::to_string(pair->tail));
}

}  // namespace

int local_vertex_connectivity(const Digraph& g, VertexId s, VertexId t, int limit) {
  if (s == t || g.has_arc(s, t)) throw std::invalid_argument("local vertex connectivity needs non-adjacent s != t");
  // Vertex v becomes in-node 2v and out-node 2v+1 joined by a unit arc.
  UnitFlowNetwork net(2 * g.order());
  for (VertexId v = 0; v < g.order(); ++v) {
    net.add_edge(2 * v, 2 * v + 1, (v == s || v == t) ? kInfinite : 1);
    for (VertexId w : g.out(v)) net.add_edge(2 * v + 1, 2 * w, 1);
  }
  return net.max_flow(2 * s + 1, 2 * t, limit);
}

int local_arc_connectivity(const Digraph& g, VertexId s, VertexId t, int limit) {
  if (s == t) throw std::invalid_argument("local arc connectivity needs s != t");
  UnitFlowNetwork net(g.order());
  for (const Arc& a : g.arcs()) net.add_edge(a.tail, a.head, 1);
  return net.max_flow(s, t, limit);
}

int vertex_connectivity(const Digraph& g) {
  require_connected_input(g);
  const VertexId n = g.order();
  int best = n - 1;
  // Some minimum separator misses one of the first best+1 vertices, and that
  // vertex is separated from some other vertex in one direction.
  for (VertexId i = 0; i < n && i <= best; ++i) {
    for (VertexId j = 0; j < n; ++j) {
      if (j == i) continue;
      if (!g.has_arc(i, j)) best = std::min(best, local_vertex_connectivity(g, i, j, best));
      if (!g.has_arc(j, i)) best = std::min(best, local_vertex_connectivity(g, j, i, best));
    }
  }
  return best;
}

int arc_connectivity(const Digraph& g) {
  require_connected_input(g);
  int best = g.min_degree();
  for (VertexId t = 1; t < g.order(); ++t) {
    best = std::min(best, local_arc_connectivity(g, 0, t, best));
    best = std::min(best, local_arc_connectivity(g, t, 0, best));
  }
  return best;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  __extension__ using Wide = unsigned __int128;
  Wide result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(result);
}

SuperLambdaResult is_super_lambda(const Digraph& g, int lambda, std::uint64_t subset_limit) {
  require_connected_input(g);
  if (lambda != g.min_degree()) throw std::invalid_argument("super-lambda scan requires lambda == delta");
  const std::uint64_t total = binomial(g.arc_count(), static_cast<std::uint64_t>(lambda));
  if (total > subset_limit)
    throw GuardExceeded("instance too large for exhaustive superconnectivity: C(" + std::to_string(g.arc_count()) +
                        "," + std::to_string(lambda) + ") = " + std::to_string(total) + " arc subsets");

  const auto arcs = g.arcs();
  MaskedReachability reach(g);
  std::vector<char> removed(arcs.size(), 0);
  const std::vector<char> no_vertices;
  SuperLambdaResult result;
  result.holds = true;
  Combinations combo(static_cast<int>(arcs.size()), lambda);
  do {
    ++result.subsets_checked;
    const auto& pick = combo.current();
    const VertexId tail = arcs[pick.front()].tail;
    const VertexId head = arcs[pick.front()].head;
    const bool same_tail = std::all_of(pick.begin(), pick.end(), [&](int i) { return arcs[i].tail == tail; });
    const bool same_head = std::all_of(pick.begin(), pick.end(), [&](int i) { return arcs[i].head == head; });
    // A lambda-set of arcs sharing a tail of out-degree lambda is that vertex's whole out-arc set.
    const bool trivial = (same_tail && g.out_degree(tail) == lambda) || (same_head && g.in_degree(head) == lambda);
    if (trivial) continue;
    for (int i : pick) removed[i] = 1;
    const bool connected = reach.strongly_connected(removed, no_vertices);
    for (int i : pick) removed[i] = 0;
    if (!connected) {
      result.holds = false;
      std::vector<Arc> cut;
      for (int i : pick) cut.push_back(arcs[i]);
      result.witness = std::move(cut);
      return result;
    }
  } while (combo.next());
  return result;
}

SuperKappaResult is_super_kappa(const Digraph& g, int kappa, std::uint64_t subset_limit) {
  require_connected_input(g);
  if (kappa != g.min_degree()) throw std::invalid_argument("super-kappa scan requires kappa == delta");
  const std::uint64_t total = binomial(static_cast<std::uint64_t>(g.order()), static_cast<std::uint64_t>(kappa));
  if (total > subset_limit)
    throw GuardExceeded("instance too large for exhaustive superconnectivity: C(" + std::to_string(g.order()) + "," +
                        std::to_string(kappa) + ") = " + std::to_string(total) + " vertex subsets");

  // Neighbourhoods of size kappa, as sorted vectors, are the trivial cuts.
  std::vector<std::vector<VertexId>> trivial;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (g.out_degree(v) == kappa) trivial.emplace_back(g.out(v).begin(), g.out(v).end());
    if (g.in_degree(v) == kappa) trivial.emplace_back(g.in(v).begin(), g.in(v).end());
  }
  std::sort(trivial.begin(), trivial.end());

  MaskedReachability reach(g);
  std::vector<char> removed(g.order(), 0);
  const std::vector<char> no_arcs;
  SuperKappaResult result;
  result.holds = true;
  Combinations combo(g.order(), kappa);
  std::vector<VertexId> subset(kappa);
  do {
    ++result.subsets_checked;
    const auto& pick = combo.current();
    std::copy(pick.begin(), pick.end(), subset.begin());
    if (std::binary_search(trivial.begin(), trivial.end(), subset)) continue;
    for (VertexId v : subset) removed[v] = 1;
    const bool connected = reach.strongly_connected(no_arcs, removed);
    for (VertexId v : subset) removed[v] = 0;
    if (!connected) {
      result.holds = false;
      result.witness = subset;
      return result;
    }
  } while (combo.next());
  return result;
}

bool strongly_connected_without_arcs(const Digraph& g, const std::vector<Arc>& removed) {
  MaskedReachability reach(g);
  std::vector<char> mask(g.arc_count(), 0);
  for (const Arc& a : removed) {
    const auto nbrs = g.out(a.tail);
    const auto it = std::lower_bound(nbrs.begin(), nbrs.end(), a.head);
    if (it == nbrs.end() || *it != a.head) continue;
    mask[reach.arc_id(a.tail, static_cast<std::size_t>(it - nbrs.begin()))] = 1;
  }
  return reach.strongly_connected(mask, {});
}

bool strongly_connected_without_vertices(const Digraph& g, const std::vector<VertexId>& removed) {
  MaskedReachability reach(g);
  std::vector<char> mask(g.order(), 0);
  for (VertexId v : removed) mask[v] = 1;
  return reach.strongly_connected({}, mask);
}

ConnectivityReport analyze_connectivity(const Digraph& g, std::uint64_t subset_limit) {
  ConnectivityReport report;
  report.delta = g.min_degree();
  report.kappa = vertex_connectivity(g);
  report.lambda = arc_connectivity(g);
  if (report.lambda < report.delta) {
    report.super_lambda = false;
  } else if (binomial(g.arc_count(), report.lambda) <= subset_limit) {
    auto scan = is_super_lambda(g, report.lambda, subset_limit);
    report.super_lambda = scan.holds;
    report.nontrivial_arc_cut = std::move(scan.witness);
  }
  if (report.kappa < report.delta) {
    report.super_kappa = false;
  } else if (binomial(g.order(), report.kappa) <= subset_limit) {
    auto scan = is_super_kappa(g, report.kappa, subset_limit);
    report.super_kappa = scan.holds;
    report.nontrivial_vertex_cut = std::move(scan.witness);
  }
  return report;
}

}  // namespace kautz
