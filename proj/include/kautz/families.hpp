#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "kautz/digraph.hpp"
#include "kautz/word.hpp"

namespace kautz {

/// Builds K, sK, CK or MCK. Vertices are enumerate_vertices(spec) in that
/// order; CK(2,l) with l not in {2,4} is built even though it is not
/// strongly connected (see known_disconnected).
Digraph build(const FamilySpec& spec);

/// Number of vertices: d^l + d^(l-1) for K and sK, d^l + (-1)^l d for CK and
/// MCK.
std::int64_t order_formula(const FamilySpec& spec);
/// CK order through n(l) = d^l + d^(l-1) - n(l-1), seeded with n(1) = d + 1.
std::int64_t order_recurrence(int d, int l);

/// Vertices are the arcs (u, v) of g, labelled by u's word followed by the
/// last symbol of v's word; (u, v) -> (v, w). Vertices come out sorted by
/// label.
Digraph line_digraph(const Digraph& g);

/// Vertices are kept_arcs. Vertex uv is joined to v'w for every w in
/// out(v), with v' = v when vw is kept and otherwise the smallest-labelled
/// in-neighbour of w whose arc to w is kept. Throws std::invalid_argument
/// unless every vertex of g is the head of some kept arc.
Digraph partial_line_digraph(const Digraph& g, const std::vector<Arc>& kept_arcs);

/// Checks that word reversal maps the arc set of build(spec) exactly onto
/// the arc set of its converse. Defined for K, sK and CK.
bool reversal_is_isomorphism(const FamilySpec& spec);

/// Arcs x1..xl -> x2..xl x1 of K(d,l): the ones whose extended word closes a
/// walk of length l in the complete symmetric digraph on d+1 symbols.
/// Indices refer to build(K(d,l)).
std::vector<Arc> closed_walk_arcs(int d, int l);
/// arcs(K(d,l)) minus closed_walk_arcs(d,l) equals arcs(sK(d,l)), and every
/// removed arc's word x1..xl x1 traces a closed walk.
bool verify_subkautz_removal(int d, int l);

struct DegreePair {
  int out = 0;
  int in = 0;
  friend bool operator==(const DegreePair&, const DegreePair&) = default;
};

/// Out- and in-degree of w predicted from its symbols alone. MCK is
/// d-out-regular; its in-degree has no closed form here and is reported as
/// -1.
DegreePair degree_formula(const FamilySpec& spec, const Word& w);

}  // namespace kautz
