#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hpcc/graph.hpp"

namespace hpcc {

struct CompletionEdge {
  VertexId from = kNoVertex;
  VertexId to = kNoVertex;

  friend auto operator<=>(const CompletionEdge&, const CompletionEdge&) = default;
};

struct CrossingRecord {
  CompletionEdge completion_edge;
  Edge crossed_edge;
  std::uint32_t ordinal = 0;  // position along the completion edge, from its origin

  friend bool operator==(const CrossingRecord&, const CrossingRecord&) = default;
};

// Linear-size index answering "which edges separate x from y" for interior
// vertices on opposite sides. Counting is O(1); listing is O(output).
//
// An edge (a,b) separates x and y when neither x nor y is an endpoint and
// exactly one of them lies strictly between a and b on the outer cycle.
// One-sided chords covering a vertex form a nested chain per side, so each
// side keeps a forest of chords; two-sided chords sorted by (left rank,
// right rank) are monotone in both ranks, so the separating ones form a
// contiguous range.
class CrossingIndex {
 public:
  explicit CrossingIndex(const OuterplanarStDigraph& g);

  std::uint32_t count(VertexId x, VertexId y) const;
  // Appends the separating edges ordered by distance from x along the
  // straight route x -> y.
  void append_crossed(VertexId x, VertexId y, std::vector<Edge>& out) const;

 private:
  struct Forest {
    std::vector<Edge> chord;
    std::vector<std::int32_t> parent;
    std::vector<std::int32_t> innermost;  // per side rank, -1 when uncovered
    std::vector<std::uint32_t> depth;     // per side rank
  };

  void build_forest(Forest& f, std::uint32_t len, const std::vector<Edge>& chords,
                    bool left_side);
  void append_chain(const Forest& f, std::uint32_t rank, bool reversed,
                    std::vector<Edge>& out) const;
  std::uint32_t left_rank(VertexId v) const;
  std::uint32_t right_rank(VertexId v) const;

  const OuterplanarStDigraph* g_;
  Forest left_, right_;
  std::vector<Edge> two_sided_;  // sorted by (left rank, right rank)
  std::vector<std::uint32_t> a_lt_, a_le_, b_lt_, b_le_;
};

// True when the completion edge is handled by CrossingIndex (both endpoints
// interior and on opposite sides).
bool is_two_sided_pair(const OuterplanarStDigraph& g, VertexId x, VertexId y);

// Edges of g crossed by routing ce straight through the drawing, ordered from
// ce.from outward. Errors: SameSideCompletionEdge.
std::vector<Edge> edge_crossings(const OuterplanarStDigraph& g, CompletionEdge ce);
std::vector<Edge> edge_crossings(const OuterplanarStDigraph& g, const CrossingIndex& index,
                                 CompletionEdge ce);
std::uint32_t crossing_count(const OuterplanarStDigraph& g, const CrossingIndex& index,
                             CompletionEdge ce);

struct SolutionCrossings {
  std::vector<CompletionEdge> completion_edges;
  std::vector<CrossingRecord> records;
  std::uint64_t total = 0;
};

// Errors: NotAPermutation, NotLinearExtension.
SolutionCrossings solution_crossings(const OuterplanarStDigraph& g,
                                     std::span<const VertexId> order);
SolutionCrossings solution_crossings(const OuterplanarStDigraph& g, const CrossingIndex& index,
                                     std::span<const VertexId> order);

struct HpExtendedGraph {
  std::size_t original_vertex_count = 0;
  std::size_t vertex_count = 0;
  std::vector<Edge> edges;
  std::vector<VertexId> hamiltonian_order;
  // crossing vertex original_vertex_count + i comes from records[i]
  std::vector<CrossingRecord> records;
};

// Errors: NotAPermutation, NotLinearExtension.
HpExtendedGraph build_hp_extended(const OuterplanarStDigraph& g,
                                  std::span<const VertexId> order);

// First violated invariant of an HP-extended graph, or nullopt when it is
// acyclic, its order is a hamiltonian path, and crossing vertices have
// in/out degree 2.
std::optional<std::string> hp_extended_defect(const HpExtendedGraph& h);

}  // namespace hpcc
