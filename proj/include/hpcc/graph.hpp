#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hpcc/error.hpp"

namespace hpcc {

using VertexId = std::uint32_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();
inline constexpr std::uint32_t kSinkRank = std::numeric_limits<std::uint32_t>::max();

enum class Side : std::uint8_t { Left, Right, Source, Sink };

struct SidePosition {
  Side side = Side::Source;
  std::uint32_t rank = 0;  // Source = 0, Sink = kSinkRank
};

struct Edge {
  VertexId from = kNoVertex;
  VertexId to = kNoVertex;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class EdgeClass : std::uint8_t { OneSidedLeft, OneSidedRight, TwoSided };

std::string_view to_string(EdgeClass c);

// Name-level description of an instance, as read from JSON.
struct GraphInput {
  std::vector<std::string> left;
  std::vector<std::string> right;
  std::string s = "s";
  std::string t = "t";
  std::vector<std::pair<std::string, std::string>> edges;
};

// Vertex ids are canonical: s = 0, left vertex i (1-based) = i, t = k + 1,
// right vertex j (1-based) = k + 1 + j.
class OuterplanarStDigraph {
 public:
  std::size_t vertex_count() const { return k_ + m_ + 2; }
  std::size_t edge_count() const { return edges_.size(); }
  std::uint32_t left_count() const { return k_; }
  std::uint32_t right_count() const { return m_; }

  VertexId source() const { return 0; }
  VertexId sink() const { return k_ + 1; }
  VertexId left(std::uint32_t i) const { return i; }
  VertexId right(std::uint32_t j) const { return k_ + 1 + j; }

  std::vector<VertexId> left_seq() const;
  std::vector<VertexId> right_seq() const;

  // Edges sorted by (from, to).
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const VertexId> out(VertexId v) const {
    return {out_.data() + out_off_[v], out_.data() + out_off_[v + 1]};
  }
  std::span<const VertexId> in(VertexId v) const {
    return {in_.data() + in_off_[v], in_.data() + in_off_[v + 1]};
  }
  bool has_edge(VertexId from, VertexId to) const;
  bool has_edge(Edge e) const { return has_edge(e.from, e.to); }

  Side side(VertexId v) const {
    if (v == 0) return Side::Source;
    if (v <= k_) return Side::Left;
    if (v == k_ + 1) return Side::Sink;
    return Side::Right;
  }
  std::uint32_t rank(VertexId v) const {
    if (v == 0) return 0;
    if (v <= k_) return v;
    if (v == k_ + 1) return kSinkRank;
    return v - k_ - 1;
  }
  SidePosition position(VertexId v) const { return {side(v), rank(v)}; }
  bool is_interior(VertexId v) const { return v != 0 && v != k_ + 1; }

  // Position on the outer cycle, clockwise: s, left bottom-up, t, right top-down.
  std::uint32_t cyclic_position(VertexId v) const {
    return v <= k_ + 1 ? v : static_cast<std::uint32_t>(vertex_count()) - (v - k_ - 1);
  }
  VertexId vertex_at(std::uint32_t pos) const {
    return pos <= k_ + 1 ? pos : static_cast<VertexId>(k_ + 1 + (vertex_count() - pos));
  }
  bool is_boundary_edge(Edge e) const;

  const std::string& name(VertexId v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<VertexId> find(const std::string& name) const;

  GraphInput to_input() const;

 private:
  friend OuterplanarStDigraph build_graph(std::uint32_t, std::uint32_t, std::vector<Edge>,
                                          std::vector<std::string>);

  std::uint32_t k_ = 0;
  std::uint32_t m_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> out_off_, in_off_;
  std::vector<VertexId> out_, in_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> ids_;
};

// Validates and builds from names. Errors: UnknownVertex, DuplicateVertex,
// DuplicateEdge, MultipleSources, MultipleSinks, CycleDetected, SideNotAPath,
// EmbeddingNotPlane.
OuterplanarStDigraph build_graph(const GraphInput& input);
OuterplanarStDigraph build_graph(const std::vector<std::string>& left,
                                 const std::vector<std::string>& right,
                                 const std::vector<std::pair<std::string, std::string>>& edges,
                                 const std::string& s = "s", const std::string& t = "t");

// Builds from canonical ids with k left and m right vertices. Empty names
// get the defaults s, t, l1.., r1...
OuterplanarStDigraph build_graph(std::uint32_t k, std::uint32_t m, std::vector<Edge> edges,
                                 std::vector<std::string> names = {});

// The boundary edges of the outer cycle for a k/m split, in canonical ids.
std::vector<Edge> boundary_edges(std::uint32_t k, std::uint32_t m);

EdgeClass classify_edge(const OuterplanarStDigraph& g, Edge e);

// Linear extension; ties broken by lower side rank, Left before Right.
std::vector<VertexId> topological_order(const OuterplanarStDigraph& g);

bool is_linear_extension(const OuterplanarStDigraph& g, std::span<const VertexId> order);

// Throws NotAPermutation unless order is a permutation of the vertex ids.
void require_permutation(const OuterplanarStDigraph& g, std::span<const VertexId> order);

}  // namespace hpcc
