#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hpcc/graph.hpp"
#include "hpcc/hamiltonicity.hpp"

namespace hpcc {

// A maximal st-polygon. left_vertices and right_vertices are the interior
// vertices of its two sides, bottom-up; they are G-left and G-right vertices
// respectively. The limiting edges join the two sides at the bottom and top;
// a missing limit means the polygon starts at s or ends at t.
struct StPolygon {
  VertexId source = kNoVertex;
  VertexId sink = kNoVertex;
  std::vector<VertexId> left_vertices;
  std::vector<VertexId> right_vertices;
  bool median_present = false;
  std::optional<Edge> lower_limit;
  std::optional<Edge> upper_limit;

  std::size_t size() const { return left_vertices.size() + right_vertices.size() + 2; }
  friend bool operator==(const StPolygon&, const StPolygon&) = default;
};

struct DecompositionElement {
  enum class Kind : std::uint8_t { Polygon, FreeVertex };

  Kind kind = Kind::FreeVertex;
  StPolygon polygon;           // when kind == Polygon
  VertexId vertex = kNoVertex;  // when kind == FreeVertex
  VertexId representative = kNoVertex;

  bool is_polygon() const { return kind == Kind::Polygon; }
};

struct StPolygonDecomposition {
  std::vector<DecompositionElement> elements;

  std::size_t lambda() const { return elements.size(); }
};

struct MedianCandidate {
  Edge median;
  Rhombus rhombus;  // witnesses are the pair of extra vertices
  std::optional<Edge> lower_limit;
  std::optional<Edge> upper_limit;
};

struct WeakSeed {
  Face face;
  Rhombus rhombus;
  std::optional<Edge> lower_limit;
  std::optional<Edge> upper_limit;
};

std::vector<MedianCandidate> median_candidates(const OuterplanarStDigraph& g);
std::vector<WeakSeed> weak_polygon_seeds(const OuterplanarStDigraph& g);

// Maximal polygons (strong seeds first, then weak faces not already inside
// a polygon) and free vertices, ordered by the topological number of their
// representative. s and t are never free vertices.
StPolygonDecomposition decompose(const OuterplanarStDigraph& g);

// Lowest out-edge of u to the opposite side and highest in-edge of v from
// the opposite side; nullopt at s and t respectively.
std::optional<Edge> lower_limit_of(const OuterplanarStDigraph& g, VertexId u);
std::optional<Edge> upper_limit_of(const OuterplanarStDigraph& g, VertexId v);

// The maximal polygon with the given source and sink.
StPolygon grow_polygon(const OuterplanarStDigraph& g, VertexId source, VertexId sink,
                       bool median_present);

// The polygon as a standalone graph (its sides become the left and right
// sequences). Names are kept.
OuterplanarStDigraph polygon_graph(const OuterplanarStDigraph& g, const StPolygon& p);

// The subgraph induced by vertices, with the given source and sink; sides
// are the G-sides restricted to the vertex set. Repeated vertices are
// ignored. Throws build_graph errors
// when the result is not an outerplanar st-digraph.
OuterplanarStDigraph induced_st_subgraph(const OuterplanarStDigraph& g,
                                         std::span<const VertexId> vertices, VertexId source,
                                         VertexId sink);

}  // namespace hpcc
