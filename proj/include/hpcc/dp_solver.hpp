#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hpcc/crossing.hpp"
#include "hpcc/decomposition.hpp"
#include "hpcc/polygon_solver.hpp"

namespace hpcc {

struct CompletionSolution {
  std::vector<CompletionEdge> completion_edges;  // in path order
  std::vector<VertexId> hamiltonian_order;
  std::uint64_t total_crossings = 0;
  std::vector<CrossingRecord> records;
};

// How a DP value was reached: the side the previous prefix ended on, the
// channel used for this element (polygons only) and whether the limiting
// edge shared with the previous polygon is crossed.
struct DpBack {
  std::optional<Side> previous;
  Channel channel = Channel::OneLeft;
  std::uint32_t split = 0;
  bool crosses_shared_edge = false;
};

// Cost of the best path through the first i+1 elements that enters the
// last element's sink from the left or the right side.
struct DpCell {
  Cost cL = kInfeasible;
  Cost cR = kInfeasible;
  DpBack backL, backR;
  bool shares_edge = false;  // with the previous polygon
};

std::vector<DpCell> dp_table(const OuterplanarStDigraph& g, const StPolygonDecomposition& d,
                             const CrossingIndex& index);

// Crossing-optimal acyclic HP-completion in O(n).
CompletionSolution solve(const OuterplanarStDigraph& g);

struct VerifyReport {
  bool valid = true;
  std::vector<std::string> problems;

  explicit operator bool() const { return valid; }
};

// Checks that the order is a linear extension whose gaps are exactly the
// completion edges and that records and totals match a recomputation.
VerifyReport check_solution_consistency(const OuterplanarStDigraph& g,
                                        const CompletionSolution& sol);

// check_solution_consistency plus the structure of optimal solutions: no
// edge is crossed more than twice, that each upper limiting edge of the
// decomposition is crossed at most once and only by an edge entering the
// region below it, and that the HP-extended graph is sound.
VerifyReport verify_solution(const OuterplanarStDigraph& g, const CompletionSolution& sol);

}  // namespace hpcc
