#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hpcc/graph.hpp"

namespace hpcc {

struct GeneratorParams {
  std::uint32_t n = 4;
  double left_fraction = 0.5;
  double chord_density = 0.5;
  std::uint64_t seed = 0;
};

// Random outerplanar st-digraph. Chords are sampled non-crossing by a sweep
// over the outer cycle that keeps the stack of still-visible vertices; each
// chord joins the current vertex to a visible one. Two-sided chords are
// oriented by a random interleaving of the sides, so the result is acyclic.
// Errors: InfeasibleParams.
OuterplanarStDigraph generate(const GeneratorParams& params);

// Random st-polygon: one or more vertices per side, one-sided chords only,
// plus the median (s,t) when strong is set. n >= 4.
OuterplanarStDigraph generate_st_polygon(std::uint32_t n, double left_fraction,
                                         double chord_density, bool strong, std::uint64_t seed);

// Calls visit for every linear extension of g (left-first merge order).
// Stops early when visit returns false.
void enumerate_hamiltonian_orders(const OuterplanarStDigraph& g,
                                  const std::function<bool(std::span<const VertexId>)>& visit);

std::uint64_t count_hamiltonian_orders(const OuterplanarStDigraph& g);

struct OracleResult {
  std::uint64_t crossings = 0;
  std::vector<VertexId> order;
};

inline constexpr std::size_t kDefaultMaxOracle = 12;

// Minimum total crossings over all linear extensions; first minimum in
// enumeration order. Errors: InstanceTooLarge.
OracleResult brute_force_optimal(const OuterplanarStDigraph& g,
                                 std::size_t max_vertices = kDefaultMaxOracle);

// Same, restricted to orders whose completion edges cross every edge of g
// at most max_per_edge times; nullopt when no order qualifies.
std::optional<OracleResult> brute_force_restricted(const OuterplanarStDigraph& g,
                                                   std::uint32_t max_per_edge,
                                                   std::size_t max_vertices = kDefaultMaxOracle);

// Exact optimum by a grid program over (left placed, right placed, last side).
// O(k*m) time; a serial reference for sizes beyond the brute-force bound.
std::uint64_t reference_optimal(const OuterplanarStDigraph& g);

}  // namespace hpcc
