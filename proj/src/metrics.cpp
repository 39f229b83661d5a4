#include "kautz/metrics.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "kautz/parallel.hpp"

namespace kautz {

namespace {

void bfs_into(const Digraph& g, VertexId source, std::vector<int>& dist, std::vector<VertexId>& queue) {
  dist.assign(g.order(), kUnreachable);
  queue.clear();
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId v = queue[head];
    for (VertexId w : g.out(v)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
}

std::string pair_text(const Digraph& g, VertexId from, VertexId to) {
  return "vertex " + std::to_string(to) + " is unreachable from vertex " + std::to_string(from) + " (" +
         format_word(g.label(from), kMaxAlphabetParameter) + " -> " +
         format_word(g.label(to), kMaxAlphabetParameter) + ")";
}

[[noreturn]] void throw_unreachable(const Digraph& g, VertexId from, VertexId to) {
  throw NotStronglyConnected(from, to, "digraph is not strongly connected: " + pair_text(g, from, to));
}

}  // namespace

DistanceField bfs(const Digraph& g, VertexId source) {
  if (source < 0 || source >= g.order()) throw std::invalid_argument("bfs source out of range");
  DistanceField field{source, {}};
  std::vector<VertexId> queue;
  queue.reserve(g.order());
  bfs_into(g, source, field.dist, queue);
  return field;
}

DistanceTable::DistanceTable(const Digraph& g) : n_(g.order()) {
  dist_.assign(static_cast<std::size_t>(n_) * n_, kUnreachable);
  parallel_for(static_cast<std::size_t>(n_), [&](std::size_t s) {
    std::vector<int> row;
    std::vector<VertexId> queue;
    queue.reserve(n_);
    bfs_into(g, static_cast<VertexId>(s), row, queue);
    std::copy(row.begin(), row.end(), dist_.begin() + static_cast<std::ptrdiff_t>(s * n_));
  });
  for (VertexId s = 0; s < n_; ++s) {
    for (VertexId t = 0; t < n_; ++t) {
      const int d = (*this)(s, t);
      if (d == kUnreachable) throw_unreachable(g, s, t);
      diameter_ = std::max(diameter_, d);
      total_ += d;
    }
  }
}

std::optional<Arc> unreachable_pair(const Digraph& g) {
  if (g.order() == 0) return std::nullopt;
  // Strong connectivity iff vertex 0 reaches everything in g and in its converse.
  const auto forward = bfs(g, 0).dist;
  for (VertexId v = 0; v < g.order(); ++v)
    if (forward[v] == kUnreachable) return Arc{0, v};
  const auto backward = bfs(converse(g), 0).dist;
  for (VertexId v = 0; v < g.order(); ++v)
    if (backward[v] == kUnreachable) return Arc{v, 0};
  return std::nullopt;
}

bool is_strongly_connected(const Digraph& g) { return !unreachable_pair(g).has_value(); }

int diameter(const Digraph& g) { return DistanceTable(g).diameter(); }

Rational mean_distance(const Digraph& g) {
  const DistanceTable table(g);
  const auto n = static_cast<std::int64_t>(g.order());
  return Rational(table.total(), n * n);
}

std::vector<int> layer_profile(const Digraph& g, VertexId source) {
  const auto field = bfs(g, source);
  std::vector<int> layers;
  for (VertexId v = 0; v < g.order(); ++v) {
    const int d = field.dist[v];
    if (d == kUnreachable) throw_unreachable(g, source, v);
    if (static_cast<std::size_t>(d) >= layers.size()) layers.resize(d + 1, 0);
    ++layers[d];
  }
  return layers;
}

std::optional<int> girth_bfs(const Digraph& g) {
  std::vector<int> best(g.order(), std::numeric_limits<int>::max());
  parallel_for(static_cast<std::size_t>(g.order()), [&](std::size_t s) {
    const auto v = static_cast<VertexId>(s);
    const auto field = bfs(g, v);
    // Shortest cycle through v: v -> ... -> u -> v for an in-neighbour u.
    for (VertexId u : g.in(v))
      if (field.dist[u] != kUnreachable) best[v] = std::min(best[v], field.dist[u] + 1);
  });
  const int girth = *std::min_element(best.begin(), best.end());
  if (g.order() == 0 || girth == std::numeric_limits<int>::max()) return std::nullopt;
  return girth;
}

SemigirthResult semigirth(const Digraph& g) {
  const DistanceTable table(g);
  const int diam = table.diameter();
  const VertexId n = g.order();
  constexpr int kNone = std::numeric_limits<int>::max();

  // Per source: smallest distance of a pair breaking clause (a), and of a
  // pair breaking clause (b), each with its witness.
  struct SourceScan {
    int fail_a = kNone;
    SemigirthWitness witness_a;
    std::vector<std::pair<int, SemigirthWitness>> fail_b;
  };
  std::vector<SourceScan> scans(n);

  parallel_for(static_cast<std::size_t>(n), [&](std::size_t s) {
    const auto x = static_cast<VertexId>(s);
    SourceScan& scan = scans[s];
    // counts[k][y]: number of x->y walks of length k, saturated at 2.
    const int max_len = diam + 2;
    std::vector<std::vector<std::uint8_t>> counts(max_len + 1, std::vector<std::uint8_t>(n, 0));
    counts[0][x] = 1;
    for (int k = 1; k <= max_len; ++k) {
      for (VertexId v = 0; v < n; ++v) {
        const std::uint8_t c = counts[k - 1][v];
        if (c == 0) continue;
        for (VertexId w : g.out(v)) counts[k][w] = static_cast<std::uint8_t>(std::min(2, counts[k][w] + c));
      }
    }
    for (VertexId y = 0; y < n; ++y) {
      int dist = table(x, y);
      if (x == y) {
        dist = kNone;
        for (int k = 1; k <= max_len; ++k) {
          if (counts[k][x] > 0) {
            dist = k;
            break;
          }
        }
        if (dist == kNone || dist > diam) continue;  // cannot constrain gamma <= diameter
      }
      const bool unique = counts[dist][y] == 1;
      const bool longer = dist + 1 <= max_len && counts[dist + 1][y] > 0;
      if ((!unique || longer) && dist < scan.fail_a) {
        scan.fail_a = dist;
        scan.witness_a = {x, y, dist,
                          unique ? "a walk of length dist+1 exists" : "shortest path is not unique"};
      }
      if (!unique) scan.fail_b.push_back({dist, {x, y, dist, "shortest path is not unique"}});
    }
  });

  int fail_a = kNone;
  SemigirthWitness witness_a;
  for (const auto& scan : scans) {
    if (scan.fail_a < fail_a) {
      fail_a = scan.fail_a;
      witness_a = scan.witness_a;
    }
  }
  // Largest gamma with no clause-(a) failure below it and no clause-(b)
  // failure at it, capped by the diameter.
  SemigirthResult result;
  result.gamma = std::min(diam, fail_a);
  if (fail_a <= diam) result.witness = witness_a;
  const int candidate = result.gamma;
  for (const auto& scan : scans) {
    const auto hit = std::find_if(scan.fail_b.begin(), scan.fail_b.end(),
                                  [&](const auto& entry) { return entry.first == candidate; });
    if (hit != scan.fail_b.end()) {
      result.gamma = candidate - 1;
      result.witness = hit->second;
      break;
    }
  }
  result.gamma = std::max(result.gamma, 1);
  return result;
}

std::string_view to_string(Antipodality a) {
  switch (a) {
    case Antipodality::antipodal: return "antipodal";
    case Antipodality::weakly_antipodal: return "weakly_antipodal";
    case Antipodality::neither: return "neither";
  }
  return "?";
}

Antipodality antipodality_class(const Digraph& g) {
  const DistanceTable table(g);
  const int diam = table.diameter();
  std::vector<VertexId> far(g.order(), -1);
  for (VertexId u = 0; u < g.order(); ++u) {
    int count = 0;
    for (VertexId v = 0; v < g.order(); ++v) {
      if (table(u, v) == diam) {
        ++count;
        far[u] = v;
      }
    }
    if (count != 1) return Antipodality::neither;
  }
  for (VertexId u = 0; u < g.order(); ++u)
    if (far[far[u]] != u) return Antipodality::weakly_antipodal;
  return Antipodality::antipodal;
}

bool is_eulerian(const Digraph& g) {
  for (VertexId v = 0; v < g.order(); ++v)
    if (g.in_degree(v) != g.out_degree(v)) return false;
  return is_strongly_connected(g);
}

namespace {

class HamiltonianSearcher {
 public:
  HamiltonianSearcher(const Digraph& g, std::uint64_t budget)
      : g_(g), budget_(budget), visited_(g.order(), false), unvisited_in_(g.order()) {
    for (VertexId v = 0; v < g.order(); ++v) unvisited_in_[v] = g.in_degree(v);
  }

  HamiltonianSearch run() {
    HamiltonianSearch result;
    if (g_.order() == 0) return result;
    visit(0);
    path_.push_back(0);
    const bool found = extend();
    result.expansions = expansions_;
    if (found) {
      result.status = HamiltonianSearch::Status::found;
      result.cycle = path_;
    } else {
      result.status = out_of_budget_ ? HamiltonianSearch::Status::budget_exceeded
                                     : HamiltonianSearch::Status::exhausted;
    }
    return result;
  }

 private:
  void visit(VertexId v) {
    visited_[v] = true;
    for (VertexId w : g_.out(v)) --unvisited_in_[w];
  }
  void unvisit(VertexId v) {
    visited_[v] = false;
    for (VertexId w : g_.out(v)) ++unvisited_in_[w];
  }
  int onward(VertexId v) const {
    int c = 0;
    for (VertexId w : g_.out(v)) c += visited_[w] ? 0 : 1;
    return c;
  }

  bool extend() {
    if (++expansions_ > budget_) {
      out_of_budget_ = true;
      return false;
    }
    const VertexId current = path_.back();
    if (static_cast<VertexId>(path_.size()) == g_.order()) return g_.has_arc(current, path_.front());

    std::vector<std::pair<int, VertexId>> candidates;
    for (VertexId w : g_.out(current))
      if (!visited_[w]) candidates.push_back({onward(w), w});
    std::sort(candidates.begin(), candidates.end());
    for (const auto& [unused, w] : candidates) {
      visit(w);
      path_.push_back(w);
      // The start vertex must still be enterable from something unvisited or from w.
      const bool start_reachable = unvisited_in_[path_.front()] > 0 || g_.has_arc(w, path_.front());
      if (start_reachable && extend()) return true;
      path_.pop_back();
      unvisit(w);
      if (out_of_budget_) return false;
    }
    return false;
  }

  const Digraph& g_;
  std::uint64_t budget_;
  std::uint64_t expansions_ = 0;
  bool out_of_budget_ = false;
  std::vector<bool> visited_;
  std::vector<int> unvisited_in_;
  std::vector<VertexId> path_;
};

}  // namespace

HamiltonianSearch find_hamiltonian_cycle(const Digraph& g, std::uint64_t budget) {
  if (g.order() > 100) throw std::invalid_argument("Hamiltonian search is limited to 100 vertices");
  return HamiltonianSearcher(g, budget).run();
}

bool is_hamiltonian_cycle(const Digraph& g, const std::vector<VertexId>& cycle) {
  if (static_cast<VertexId>(cycle.size()) != g.order() || cycle.empty()) return false;
  std::vector<bool> seen(g.order(), false);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const VertexId v = cycle[i];
    if (v < 0 || v >= g.order() || seen[v]) return false;
    seen[v] = true;
    if (!g.has_arc(v, cycle[(i + 1) % cycle.size()])) return false;
  }
  return true;
}

}  // namespace kautz
