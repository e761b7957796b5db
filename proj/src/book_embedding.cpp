#include "hpcc/book_embedding.hpp"

#include <algorithm>
#include <map>

namespace hpcc {

namespace {

Page flip(Page p) { return p == Page::Left ? Page::Right : Page::Left; }

// Side of the spine path that edge (u,w) leaves u on, in the convex drawing.
// Around u the neighbours sit in clockwise order of their offsets; the left
// page is the wedge swept counter-clockwise from the outgoing path edge to
// the incoming one.
Page first_page(const OuterplanarStDigraph& g, VertexId u, VertexId w, VertexId prev,
                VertexId next) {
  const auto n = static_cast<std::uint32_t>(g.vertex_count());
  auto offset = [&](VertexId x) {
    return (g.cyclic_position(x) + n - g.cyclic_position(u)) % n;
  };
  const std::uint32_t on = offset(next);
  const std::uint32_t oe = offset(w);
  const std::uint32_t op = prev == kNoVertex ? 0 : offset(prev);
  return (on + n - oe) % n < (on + n - op) % n ? Page::Left : Page::Right;
}

}  // namespace

std::string_view to_string(Page p) { return p == Page::Left ? "L" : "R"; }

std::vector<std::uint32_t> BookEmbedding::vertex_coordinates() const {
  std::vector<std::uint32_t> per_interval(spine.size(), 0);
  for (const SpineCrossing& c : spine_crossings) {
    if (c.interval < per_interval.size()) ++per_interval[c.interval];
  }
  std::vector<std::uint32_t> coord(spine.size());
  std::uint32_t at = 0;
  for (std::size_t i = 0; i < spine.size(); ++i) {
    coord[i] = at;
    at += 1 + per_interval[i];
  }
  return coord;
}

std::uint32_t BookEmbedding::crossing_coordinate(const SpineCrossing& c) const {
  return vertex_coordinates()[c.interval] + 1 + c.rank;
}

BookEmbedding to_book_embedding(const OuterplanarStDigraph& g, const CompletionSolution& sol) {
  const VerifyReport report = check_solution_consistency(g, sol);
  if (!report.valid) throw Error(ErrorCode::InvalidSolution, report.problems.front());

  BookEmbedding be;
  be.spine = sol.hamiltonian_order;
  const std::size_t n = be.spine.size();
  std::vector<std::uint32_t> at(g.vertex_count());
  for (std::uint32_t i = 0; i < n; ++i) at[be.spine[i]] = i;

  for (const CrossingRecord& r : sol.records) {
    be.spine_crossings.push_back({r.crossed_edge, at[r.completion_edge.from], r.ordinal});
  }
  const auto coord = be.vertex_coordinates();

  std::map<Edge, std::vector<std::uint32_t>> points;
  for (const SpineCrossing& c : be.spine_crossings) {
    points[c.edge].push_back(coord[c.interval] + 1 + c.rank);
  }
  for (const Edge& e : g.edges()) {
    EdgeLayout layout{e, {}};
    const std::uint32_t iu = at[e.from];
    std::vector<std::uint32_t> stops{coord[iu]};
    if (auto it = points.find(e); it != points.end()) {
      std::sort(it->second.begin(), it->second.end());
      stops.insert(stops.end(), it->second.begin(), it->second.end());
    }
    stops.push_back(coord[at[e.to]]);
    Page page = Page::Left;
    if (at[e.to] != iu + 1) {
      const VertexId prev = iu > 0 ? be.spine[iu - 1] : kNoVertex;
      page = first_page(g, e.from, e.to, prev, be.spine[iu + 1]);
    }
    for (std::size_t i = 0; i + 1 < stops.size(); ++i) {
      layout.segments.push_back({page, stops[i], stops[i + 1]});
      page = flip(page);
    }
    be.edges.push_back(std::move(layout));
  }
  return be;
}

CompletionSolution from_book_embedding(const OuterplanarStDigraph& g, const BookEmbedding& be) {
  SolutionCrossings sc;
  try {
    sc = solution_crossings(g, be.spine);
  } catch (const Error& err) {
    throw Error(ErrorCode::SpineNotLinearExtension, err.what());
  }
  return {std::move(sc.completion_edges), be.spine, sc.total, std::move(sc.records)};
}

EmbeddingReport validate_book_embedding(const OuterplanarStDigraph& g, const BookEmbedding& be) {
  EmbeddingReport report;
  auto fail = [&](std::string msg) {
    report.valid = false;
    report.problems.push_back(std::move(msg));
  };
  auto edge_name = [&](Edge e) { return "(" + g.name(e.from) + "," + g.name(e.to) + ")"; };

  if (!is_linear_extension(g, be.spine)) {
    fail("spine is not a linear extension");
    return report;
  }
  const std::size_t n = be.spine.size();
  for (const SpineCrossing& c : be.spine_crossings) {
    if (c.interval + 1 >= n) {
      fail("spine crossing of " + edge_name(c.edge) + " outside the spine");
      return report;
    }
  }
  const auto coord = be.vertex_coordinates();
  std::vector<std::uint32_t> at(g.vertex_count());
  for (std::uint32_t i = 0; i < n; ++i) at[be.spine[i]] = i;

  // Crossing points: each coordinate is used once and belongs to one edge.
  std::map<std::uint32_t, Edge> owner;
  std::map<Edge, std::vector<std::uint32_t>> points;
  std::vector<std::uint32_t> per_interval(n, 0);
  for (const SpineCrossing& c : be.spine_crossings) ++per_interval[c.interval];
  for (const SpineCrossing& c : be.spine_crossings) {
    if (c.rank >= per_interval[c.interval]) {
      fail("crossing rank out of range in interval " + std::to_string(c.interval));
      continue;
    }
    const std::uint32_t x = coord[c.interval] + 1 + c.rank;
    if (!owner.emplace(x, c.edge).second) {
      fail("two crossings share spine point " + std::to_string(x));
    }
    points[c.edge].push_back(x);
    if (g.has_edge(be.spine[c.interval], be.spine[c.interval + 1])) {
      fail(edge_name(c.edge) + " crosses the spine edge " +
           edge_name({be.spine[c.interval], be.spine[c.interval + 1]}));
    }
  }

  if (be.edges.size() != g.edge_count()) fail("layout does not list every edge once");
  std::vector<Segment> left, right;
  for (const EdgeLayout& layout : be.edges) {
    const Edge e = layout.edge;
    if (!g.has_edge(e)) {
      fail(edge_name(e) + " is not an edge of g");
      continue;
    }
    std::vector<std::uint32_t> stops{coord[at[e.from]]};
    if (auto it = points.find(e); it != points.end()) {
      std::sort(it->second.begin(), it->second.end());
      stops.insert(stops.end(), it->second.begin(), it->second.end());
    }
    stops.push_back(coord[at[e.to]]);
    const auto& segs = layout.segments;
    if (segs.size() + 1 != stops.size()) {
      fail(edge_name(e) + " has " + std::to_string(segs.size()) + " segments for " +
           std::to_string(stops.size() - 2) + " crossings");
      continue;
    }
    for (std::size_t i = 0; i < segs.size(); ++i) {
      if (segs[i].from != stops[i] || segs[i].to != stops[i + 1] || segs[i].from >= segs[i].to) {
        fail(edge_name(e) + " segment " + std::to_string(i) + " does not run upward between " +
             "its crossing points");
      }
      if (i > 0 && segs[i].page == segs[i - 1].page) {
        fail(edge_name(e) + " does not switch page at a crossing");
      }
      (segs[i].page == Page::Left ? left : right).push_back(segs[i]);
    }
  }

  // Segments on one page must nest or be disjoint.
  for (auto* page : {&left, &right}) {
    std::sort(page->begin(), page->end(), [](const Segment& a, const Segment& b) {
      return a.from != b.from ? a.from < b.from : a.to > b.to;
    });
    std::vector<std::uint32_t> open;  // upper ends of enclosing segments
    for (const Segment& s : *page) {
      while (!open.empty() && open.back() <= s.from) open.pop_back();
      if (!open.empty() && s.to > open.back()) {
        fail(std::string("segments interleave on page ") + std::string(to_string(s.page)) +
             " at spine point " + std::to_string(s.from));
        break;
      }
      open.push_back(s.to);
    }
  }
  return report;
}

}  // namespace hpcc
