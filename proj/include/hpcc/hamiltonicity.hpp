#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "hpcc/graph.hpp"

namespace hpcc {

// An inner face of the outerplanar drawing. Each inner face of an
// outerplanar st-digraph has one source and one sink; its two source-sink
// paths are the sides. The left side runs clockwise from source to sink.
struct Face {
  std::vector<VertexId> boundary;  // by increasing cyclic position
  VertexId source = kNoVertex;
  VertexId sink = kNoVertex;
  std::vector<VertexId> left_side;   // interior vertices, source to sink
  std::vector<VertexId> right_side;  // interior vertices, source to sink
};

struct FaceStructure {
  std::vector<Face> faces;
  // Per edge of g (in g.edges() order): the face on the clockwise arc from
  // the lower-position endpoint to the higher one, then the face on the
  // other arc. -1 marks the outer face.
  std::vector<std::array<std::int32_t, 2>> edge_faces;
};

// O(n) sweep over the outer cycle: each chord closes the face between it
// and the chords nested directly below it.
FaceStructure inner_faces(const OuterplanarStDigraph& g);

enum class RhombusKind : std::uint8_t { Strong, Weak };

struct Rhombus {
  RhombusKind kind = RhombusKind::Weak;
  VertexId source = kNoVertex;
  VertexId sink = kNoVertex;
  VertexId left_witness = kNoVertex;
  VertexId right_witness = kNoVertex;

  friend bool operator==(const Rhombus&, const Rhombus&) = default;
};

struct Median {
  std::size_t edge_index = 0;  // into g.edges()
  Rhombus rhombus;
};

// An edge is a median when both faces next to it have its tail as source
// and its head as sink.
std::vector<Median> medians(const OuterplanarStDigraph& g, const FaceStructure& faces);
// Faces with at least one interior vertex on each side.
std::vector<Rhombus> weak_rhombus_faces(const OuterplanarStDigraph& g,
                                        const FaceStructure& faces,
                                        std::vector<std::size_t>* face_ids = nullptr);

// Lowest in topological order (by source, then sink).
std::optional<Rhombus> find_strong_rhombus(const OuterplanarStDigraph& g);
std::optional<Rhombus> find_weak_rhombus(const OuterplanarStDigraph& g);

bool is_hamiltonian(const OuterplanarStDigraph& g);

// The hamiltonian path as a vertex order, when one exists. A DAG with a
// hamiltonian path has exactly one topological order, so it suffices to
// check consecutive adjacency in topological_order.
std::optional<std::vector<VertexId>> extract_hamiltonian_path(const OuterplanarStDigraph& g);

}  // namespace hpcc
