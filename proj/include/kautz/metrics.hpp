#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kautz/digraph.hpp"

namespace kautz {

using Rational = boost::rational<std::int64_t>;

inline constexpr int kUnreachable = -1;

struct DistanceField {
  VertexId source = 0;
  std::vector<int> dist;  // kUnreachable where no path exists
};

DistanceField bfs(const Digraph& g, VertexId source);

/// Row-major n*n distance table built from one BFS per source (run in
/// parallel). Throws NotStronglyConnected naming the first unreachable pair.
class DistanceTable {
 public:
  explicit DistanceTable(const Digraph& g);
  VertexId order() const noexcept { return n_; }
  int operator()(VertexId from, VertexId to) const { return dist_[static_cast<std::size_t>(from) * n_ + to]; }
  int diameter() const noexcept { return diameter_; }
  std::int64_t total() const noexcept { return total_; }

 private:
  VertexId n_ = 0;
  std::vector<int> dist_;
  int diameter_ = 0;
  std::int64_t total_ = 0;
};

bool is_strongly_connected(const Digraph& g);
/// First (from, to) pair in index order with no from->to path.
std::optional<Arc> unreachable_pair(const Digraph& g);

int diameter(const Digraph& g);
/// Sum of all ordered-pair distances (self-distances included as 0) over n^2.
Rational mean_distance(const Digraph& g);
/// Number of vertices at each distance 0, 1, ... from source.
std::vector<int> layer_profile(const Digraph& g, VertexId source);

/// Length of a shortest directed cycle, or nullopt when g is acyclic.
std::optional<int> girth_bfs(const Digraph& g);

struct SemigirthWitness {
  VertexId x = 0;
  VertexId y = 0;
  int distance = 0;  // shortest closed-walk length when x == y
  std::string reason;
};

struct SemigirthResult {
  int gamma = 1;
  std::optional<SemigirthWitness> witness;  // why gamma + 1 fails; empty when gamma == diameter
};

/// Semigirth from walk counts saturated at two. For x == y the distance is
/// read as the length of a shortest closed walk through x.
SemigirthResult semigirth(const Digraph& g);

enum class Antipodality { antipodal, weakly_antipodal, neither };
std::string_view to_string(Antipodality a);
Antipodality antipodality_class(const Digraph& g);

/// Strongly connected with equal in- and out-degree at every vertex.
bool is_eulerian(const Digraph& g);

struct HamiltonianSearch {
  enum class Status { found, exhausted, budget_exceeded };
  Status status = Status::exhausted;
  std::vector<VertexId> cycle;  // vertex order, first vertex not repeated
  std::uint64_t expansions = 0;
};

/// Backtracking search from vertex 0, trying successors with the fewest
/// unvisited out-neighbours first. `exhausted` means the whole search space
/// was covered without success; `budget_exceeded` proves nothing.
HamiltonianSearch find_hamiltonian_cycle(const Digraph& g, std::uint64_t budget);

/// True when consecutive entries (cyclically) are arcs and every vertex
/// appears exactly once.
bool is_hamiltonian_cycle(const Digraph& g, const std::vector<VertexId>& cycle);

}  // namespace kautz
