#include "hpcc/polygon_solver.hpp"

#include <stdexcept>

namespace hpcc {

namespace {

void check_side(const OuterplanarStDigraph& g, const std::vector<VertexId>& vs, Side side) {
  if (vs.empty()) throw Error(ErrorCode::NotAnStPolygon, "polygon side is empty");
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (g.side(vs[i]) != side || (i > 0 && g.rank(vs[i]) != g.rank(vs[i - 1]) + 1)) {
      throw Error(ErrorCode::NotAnStPolygon,
                  "polygon side is not a contiguous run of " + g.name(vs[i]) + "'s side");
    }
  }
}

void check_polygon(const OuterplanarStDigraph& g, const StPolygon& p) {
  check_side(g, p.left_vertices, Side::Left);
  check_side(g, p.right_vertices, Side::Right);
  const std::uint32_t lo = g.rank(p.right_vertices.front());
  const std::uint32_t hi = g.rank(p.right_vertices.back());
  for (VertexId x : p.left_vertices) {
    for (auto nbrs : {g.out(x), g.in(x)}) {
      for (VertexId w : nbrs) {
        if (g.side(w) == Side::Right && lo <= g.rank(w) && g.rank(w) <= hi) {
          throw Error(ErrorCode::NotAnStPolygon,
                      "two-sided edge between " + g.name(x) + " and " + g.name(w));
        }
      }
    }
  }
}

}  // namespace

std::string_view to_string(Channel c) {
  switch (c) {
    case Channel::OneLeft: return "c1L";
    case Channel::OneRight: return "c1R";
    case Channel::TwoLeft: return "c2L";
    case Channel::TwoRight: return "c2R";
  }
  return "?";
}

Cost PolygonCosts::cost(Channel c) const {
  switch (c) {
    case Channel::OneLeft: return c1L;
    case Channel::OneRight: return c1R;
    case Channel::TwoLeft: return c2L;
    case Channel::TwoRight: return c2R;
  }
  return kInfeasible;
}

std::uint32_t PolygonCosts::split(Channel c) const {
  if (c == Channel::TwoLeft) return q2L;
  if (c == Channel::TwoRight) return q2R;
  return 0;
}

Channel PolygonCosts::best_channel() const {
  Channel best = Channel::OneLeft;
  for (Channel c : {Channel::OneRight, Channel::TwoLeft, Channel::TwoRight}) {
    if (cost(c) < cost(best)) best = c;
  }
  return best;
}

Channel PolygonCosts::best_on(Side side) const {
  if (side == Side::Left) return c2L < c1L ? Channel::TwoLeft : Channel::OneLeft;
  return c2R < c1R ? Channel::TwoRight : Channel::OneRight;
}

PolygonCosts polygon_costs(const OuterplanarStDigraph& g, const StPolygon& p) {
  return polygon_costs(g, CrossingIndex(g), p);
}

PolygonCosts polygon_costs(const OuterplanarStDigraph& g, const CrossingIndex& index,
                           const StPolygon& p) {
  check_polygon(g, p);
  const auto& lf = p.left_vertices;
  const auto& rf = p.right_vertices;
  const auto k = static_cast<std::uint32_t>(lf.size());
  const auto m = static_cast<std::uint32_t>(rf.size());
  auto sep = [&](VertexId x, VertexId y) -> Cost { return index.count(x, y); };

  PolygonCosts c;
  c.w1R = {lf.back(), rf.front()};
  c.c1R = sep(lf.back(), rf.front());
  c.w1L = {rf.back(), lf.front()};
  c.c1L = sep(rf.back(), lf.front());
  for (std::uint32_t q = 1; q < k; ++q) {
    const Cost cost = sep(lf[q - 1], rf.front()) + sep(rf.back(), lf[q]);
    if (cost < c.c2L) {
      c.c2L = cost;
      c.q2L = q;
      c.w2L = {CompletionEdge{lf[q - 1], rf.front()}, CompletionEdge{rf.back(), lf[q]}};
    }
  }
  for (std::uint32_t q = 1; q < m; ++q) {
    const Cost cost = sep(rf[q - 1], lf.front()) + sep(lf.back(), rf[q]);
    if (cost < c.c2R) {
      c.c2R = cost;
      c.q2R = q;
      c.w2R = {CompletionEdge{rf[q - 1], lf.front()}, CompletionEdge{lf.back(), rf[q]}};
    }
  }
  return c;
}

std::vector<VertexId> channel_path(const StPolygon& p, Channel c, std::uint32_t q) {
  const auto& lf = p.left_vertices;
  const auto& rf = p.right_vertices;
  std::vector<VertexId> path{p.source};
  auto add = [&](const std::vector<VertexId>& side, std::size_t from, std::size_t to) {
    path.insert(path.end(), side.begin() + static_cast<std::ptrdiff_t>(from),
                side.begin() + static_cast<std::ptrdiff_t>(to));
  };
  switch (c) {
    case Channel::OneLeft:
      add(rf, 0, rf.size());
      add(lf, 0, lf.size());
      break;
    case Channel::OneRight:
      add(lf, 0, lf.size());
      add(rf, 0, rf.size());
      break;
    case Channel::TwoLeft:
      if (q < 1 || q >= lf.size()) throw std::invalid_argument("split point out of range");
      add(lf, 0, q);
      add(rf, 0, rf.size());
      add(lf, q, lf.size());
      break;
    case Channel::TwoRight:
      if (q < 1 || q >= rf.size()) throw std::invalid_argument("split point out of range");
      add(rf, 0, q);
      add(lf, 0, lf.size());
      add(rf, q, rf.size());
      break;
  }
  path.push_back(p.sink);
  return path;
}

std::vector<CompletionEdge> channel_witnesses(const StPolygon& p, Channel c, std::uint32_t q) {
  const auto& lf = p.left_vertices;
  const auto& rf = p.right_vertices;
  switch (c) {
    case Channel::OneLeft: return {{rf.back(), lf.front()}};
    case Channel::OneRight: return {{lf.back(), rf.front()}};
    case Channel::TwoLeft: return {{lf[q - 1], rf.front()}, {rf.back(), lf[q]}};
    case Channel::TwoRight: return {{rf[q - 1], lf.front()}, {lf.back(), rf[q]}};
  }
  return {};
}

}  // namespace hpcc
