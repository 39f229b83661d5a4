#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "kautz/word.hpp"

namespace kautz {

using VertexId = std::int32_t;

struct Arc {
  VertexId tail = 0;
  VertexId head = 0;
  friend auto operator<=>(const Arc&, const Arc&) = default;
  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Finite simple digraph with word labels. Out- and in-neighbour lists are
/// stored in CSR form and kept sorted by vertex index. Immutable once built.
class Digraph {
 public:
  Digraph() = default;
  /// Throws std::invalid_argument on loops, parallel arcs, out-of-range
  /// endpoints or duplicate labels.
  Digraph(std::vector<Word> labels, std::vector<Arc> arcs);

  VertexId order() const noexcept { return static_cast<VertexId>(labels_.size()); }
  std::size_t arc_count() const noexcept { return out_targets_.size(); }

  std::span<const VertexId> out(VertexId v) const {
    return {out_targets_.data() + out_offsets_[v], out_targets_.data() + out_offsets_[v + 1]};
  }
  std::span<const VertexId> in(VertexId v) const {
    return {in_targets_.data() + in_offsets_[v], in_targets_.data() + in_offsets_[v + 1]};
  }
  int out_degree(VertexId v) const { return static_cast<int>(out_offsets_[v + 1] - out_offsets_[v]); }
  int in_degree(VertexId v) const { return static_cast<int>(in_offsets_[v + 1] - in_offsets_[v]); }

  /// Minimum over all in- and out-degrees.
  int min_degree() const;
  int max_degree() const;
  bool is_regular() const;

  const Word& label(VertexId v) const { return labels_[v]; }
  const std::vector<Word>& labels() const noexcept { return labels_; }
  std::optional<VertexId> find(const Word& w) const;
  bool has_arc(VertexId tail, VertexId head) const;

  /// Arcs ordered by (tail, head).
  std::vector<Arc> arcs() const;

 private:
  std::vector<Word> labels_;
  std::map<Word, VertexId> index_;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<VertexId> out_targets_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<VertexId> in_targets_;
};

/// Same label set and, through the labels, the same arc set. Vertex order
/// may differ.
bool labeled_equal(const Digraph& a, const Digraph& b);

/// Reverses every arc. Labels are kept.
Digraph converse(const Digraph& g);

/// Raised by metric operations on a digraph that is not strongly connected.
class NotStronglyConnected : public std::runtime_error {
 public:
  NotStronglyConnected(VertexId from, VertexId to, const std::string& what)
      : std::runtime_error(what), from_(from), to_(to) {}
  VertexId from() const noexcept { return from_; }
  VertexId to() const noexcept { return to_; }

 private:
  VertexId from_;
  VertexId to_;
};

/// Raised when an exhaustive check would exceed its configured size limit.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kautz
