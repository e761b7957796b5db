#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hpcc/dp_solver.hpp"

namespace hpcc {

enum class Page : std::uint8_t { Left, Right };

std::string_view to_string(Page p);

// Spine coordinates count every vertex and every spine crossing point in
// spine order, so crossing r of interval i sits just after spine[i].
struct Segment {
  Page page = Page::Left;
  std::uint32_t from = 0;
  std::uint32_t to = 0;

  friend bool operator==(const Segment&, const Segment&) = default;
};

struct EdgeLayout {
  Edge edge;
  std::vector<Segment> segments;

  friend bool operator==(const EdgeLayout&, const EdgeLayout&) = default;
};

struct SpineCrossing {
  Edge edge;
  std::uint32_t interval = 0;  // between spine[interval] and spine[interval + 1]
  std::uint32_t rank = 0;      // order inside the interval, bottom-up

  friend bool operator==(const SpineCrossing&, const SpineCrossing&) = default;
};

struct BookEmbedding {
  std::vector<VertexId> spine;
  std::vector<EdgeLayout> edges;  // one per edge of g, in g.edges() order
  std::vector<SpineCrossing> spine_crossings;

  // Spine coordinate of each spine vertex, by spine index.
  std::vector<std::uint32_t> vertex_coordinates() const;
  std::uint32_t crossing_coordinate(const SpineCrossing& c) const;
};

// Places the order on the spine and splits every crossed edge at its spine
// crossings. Spine edges of g go on the left page; every other edge starts
// on the side of the path it leaves its tail on and switches page at each
// crossing. Any consistent solution is accepted, optimal or not.
// Errors: InvalidSolution.
BookEmbedding to_book_embedding(const OuterplanarStDigraph& g, const CompletionSolution& sol);

// Completion edges are the consecutive spine pairs that are not edges of g;
// crossings are recomputed. Errors: SpineNotLinearExtension.
CompletionSolution from_book_embedding(const OuterplanarStDigraph& g, const BookEmbedding& be);

struct EmbeddingReport {
  bool valid = true;
  std::vector<std::string> problems;

  explicit operator bool() const { return valid; }
};

// Checks upwardness, that each edge is a chain of segments through exactly
// its own crossing points with alternating pages, that no two segments on a
// page interleave, and that no spine interval holding an edge of g is
// crossed.
EmbeddingReport validate_book_embedding(const OuterplanarStDigraph& g, const BookEmbedding& be);

}  // namespace hpcc
