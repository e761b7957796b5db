#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <vector>

#include "hpcc/crossing.hpp"
#include "hpcc/decomposition.hpp"

namespace hpcc {

using Cost = std::uint64_t;

// Saturating sentinel for a channel whose witness edges cannot exist.
inline constexpr Cost kInfeasible = std::numeric_limits<Cost>::max();

inline Cost add_cost(Cost a, Cost b) {
  return (a == kInfeasible || b == kInfeasible || a > kInfeasible - b) ? kInfeasible : a + b;
}

// How a polygon is traversed from its source to its sink. One-edge channels
// visit one side and then the other; two-edge channels split one side at q.
// The letter names the side the path enters the sink from.
enum class Channel : std::uint8_t { OneLeft, OneRight, TwoLeft, TwoRight };

std::string_view to_string(Channel c);

struct PolygonCosts {
  Cost c1L = kInfeasible;
  Cost c1R = kInfeasible;
  Cost c2L = kInfeasible;
  Cost c2R = kInfeasible;
  CompletionEdge w1L, w1R;
  std::array<CompletionEdge, 2> w2L{}, w2R{};
  std::uint32_t q2L = 0;  // split point of the best two-edge channel, 0 if infeasible
  std::uint32_t q2R = 0;

  Cost cost(Channel c) const;
  std::uint32_t split(Channel c) const;
  // Ties broken in the order c1L, c1R, c2L, c2R.
  Channel best_channel() const;
  Cost best() const { return cost(best_channel()); }
  // Best channel entering the sink from the given side (one-edge on ties).
  Channel best_on(Side side) const;
};

// Errors: NotAnStPolygon (an empty side, or an edge joining the two sides).
PolygonCosts polygon_costs(const OuterplanarStDigraph& g, const StPolygon& p);
PolygonCosts polygon_costs(const OuterplanarStDigraph& g, const CrossingIndex& index,
                           const StPolygon& p);

// Vertex sequence of a channel from source to sink.
std::vector<VertexId> channel_path(const StPolygon& p, Channel c, std::uint32_t q);

// Completion edges of a channel.
std::vector<CompletionEdge> channel_witnesses(const StPolygon& p, Channel c, std::uint32_t q);

}  // namespace hpcc
