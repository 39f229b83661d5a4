#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kautz/digraph.hpp"

namespace kautz {

/// Maximum number of vertex-disjoint (internally) s->t paths. s and t must
/// be distinct and non-adjacent. Stops early once `limit` paths are found.
int local_vertex_connectivity(const Digraph& g, VertexId s, VertexId t, int limit = 1 << 30);
/// Maximum number of arc-disjoint s->t paths, capped at `limit`.
int local_arc_connectivity(const Digraph& g, VertexId s, VertexId t, int limit = 1 << 30);

/// Strong vertex-connectivity: minimum of local_vertex_connectivity over
/// ordered non-adjacent pairs, or n-1 when every pair is adjacent.
int vertex_connectivity(const Digraph& g);
/// Strong arc-connectivity.
int arc_connectivity(const Digraph& g);

inline constexpr std::uint64_t kDefaultSubsetLimit = 10'000'000;

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

struct SuperLambdaResult {
  bool holds = false;
  std::optional<std::vector<Arc>> witness;  // first non-trivial disconnecting arc set
  std::uint64_t subsets_checked = 0;
};

struct SuperKappaResult {
  bool holds = false;
  std::optional<std::vector<VertexId>> witness;  // first non-trivial disconnecting vertex set
  std::uint64_t subsets_checked = 0;
};

/// Exhaustive scan of all lambda-subsets of arcs. `lambda` must equal the
/// minimum degree (std::invalid_argument otherwise). Throws GuardExceeded
/// when C(m, lambda) > subset_limit.
SuperLambdaResult is_super_lambda(const Digraph& g, int lambda, std::uint64_t subset_limit = kDefaultSubsetLimit);
/// Exhaustive scan of all kappa-subsets of vertices, same contract.
SuperKappaResult is_super_kappa(const Digraph& g, int kappa, std::uint64_t subset_limit = kDefaultSubsetLimit);

/// True when deleting the arcs leaves the digraph strongly connected.
bool strongly_connected_without_arcs(const Digraph& g, const std::vector<Arc>& removed);
/// True when deleting the vertices leaves a strongly connected digraph on at
/// least two vertices.
bool strongly_connected_without_vertices(const Digraph& g, const std::vector<VertexId>& removed);

struct ConnectivityReport {
  int delta = 0;
  int kappa = 0;
  int lambda = 0;
  std::optional<bool> super_kappa;   // empty when not evaluated (guard or kappa < delta)
  std::optional<bool> super_lambda;
  std::optional<std::vector<Arc>> nontrivial_arc_cut;
  std::optional<std::vector<VertexId>> nontrivial_vertex_cut;
};

/// kappa, lambda and delta always; the super flags only when the exhaustive
/// scans fit in subset_limit. A flag is false without a scan when the
/// matching connectivity is below delta.
ConnectivityReport analyze_connectivity(const Digraph& g, std::uint64_t subset_limit = kDefaultSubsetLimit);

}  // namespace kautz
