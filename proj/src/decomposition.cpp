#include "hpcc/decomposition.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "counting_sort.hpp"

namespace hpcc {

namespace {

Side opposite(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

struct Strip {
  std::uint32_t left_lo = 0, right_lo = 0;
  std::uint32_t left_hi = kSinkRank, right_hi = kSinkRank;
};

void set_ranks(const OuterplanarStDigraph& g, Edge e, std::uint32_t& left, std::uint32_t& right) {
  if (g.side(e.from) == Side::Left) {
    left = g.rank(e.from);
    right = g.rank(e.to);
  } else {
    left = g.rank(e.to);
    right = g.rank(e.from);
  }
}

Strip strip_of(const OuterplanarStDigraph& g, const StPolygon& p) {
  Strip s;
  if (p.lower_limit) set_ranks(g, *p.lower_limit, s.left_lo, s.right_lo);
  if (p.upper_limit) set_ranks(g, *p.upper_limit, s.left_hi, s.right_hi);
  return s;
}

bool polygon_contains(const OuterplanarStDigraph& g, const StPolygon& p, const Strip& s,
                      VertexId v) {
  if (v == p.source || v == p.sink) return true;
  const Side side = g.side(v);
  const std::uint32_t r = g.rank(v);
  if (side == Side::Left) return s.left_lo <= r && r <= s.left_hi;
  if (side == Side::Right) return s.right_lo <= r && r <= s.right_hi;
  return false;
}

OuterplanarStDigraph build_sub(const OuterplanarStDigraph& g, std::vector<VertexId> left,
                               std::vector<VertexId> right, VertexId source, VertexId sink) {
  std::unordered_set<VertexId> inside(left.begin(), left.end());
  inside.insert(right.begin(), right.end());
  inside.insert(source);
  inside.insert(sink);
  GraphInput input;
  input.s = g.name(source);
  input.t = g.name(sink);
  for (VertexId v : left) input.left.push_back(g.name(v));
  for (VertexId v : right) input.right.push_back(g.name(v));
  std::vector<VertexId> all(inside.begin(), inside.end());
  std::sort(all.begin(), all.end());
  for (VertexId v : all) {
    for (VertexId w : g.out(v)) {
      if (inside.count(w)) input.edges.emplace_back(g.name(v), g.name(w));
    }
  }
  return build_graph(input);
}

}  // namespace

std::optional<Edge> lower_limit_of(const OuterplanarStDigraph& g, VertexId u) {
  if (u == g.source() || !g.is_interior(u)) return std::nullopt;
  const Side want = opposite(g.side(u));
  std::optional<Edge> best;
  for (VertexId w : g.out(u)) {
    if (g.side(w) != want) continue;
    if (!best || g.rank(w) < g.rank(best->to)) best = Edge{u, w};
  }
  return best;
}

std::optional<Edge> upper_limit_of(const OuterplanarStDigraph& g, VertexId v) {
  if (v == g.sink() || !g.is_interior(v)) return std::nullopt;
  const Side want = opposite(g.side(v));
  std::optional<Edge> best;
  for (VertexId w : g.in(v)) {
    if (g.side(w) != want) continue;
    if (!best || g.rank(w) > g.rank(best->from)) best = Edge{w, v};
  }
  return best;
}

StPolygon grow_polygon(const OuterplanarStDigraph& g, VertexId source, VertexId sink,
                       bool median_present) {
  StPolygon p;
  p.source = source;
  p.sink = sink;
  p.median_present = median_present;
  p.lower_limit = lower_limit_of(g, source);
  p.upper_limit = upper_limit_of(g, sink);
  if (source != g.source() && !p.lower_limit) {
    throw std::logic_error("polygon source " + g.name(source) + " has no lower limit");
  }
  if (sink != g.sink() && !p.upper_limit) {
    throw std::logic_error("polygon sink " + g.name(sink) + " has no upper limit");
  }
  const Strip s = strip_of(g, p);
  const std::uint32_t k = g.left_count();
  const std::uint32_t m = g.right_count();
  for (std::uint32_t r = std::max(s.left_lo, 1u); r <= std::min(s.left_hi, k); ++r) {
    const VertexId v = g.left(r);
    if (v != source && v != sink) p.left_vertices.push_back(v);
  }
  for (std::uint32_t r = std::max(s.right_lo, 1u); r <= std::min(s.right_hi, m); ++r) {
    const VertexId v = g.right(r);
    if (v != source && v != sink) p.right_vertices.push_back(v);
  }
  if (p.left_vertices.empty() || p.right_vertices.empty()) {
    throw std::logic_error("polygon " + g.name(source) + "->" + g.name(sink) +
                           " has an empty side");
  }
  return p;
}

std::vector<MedianCandidate> median_candidates(const OuterplanarStDigraph& g) {
  std::vector<MedianCandidate> result;
  for (const Median& m : medians(g, inner_faces(g))) {
    const Edge e = g.edges()[m.edge_index];
    result.push_back({e, m.rhombus, lower_limit_of(g, e.from), upper_limit_of(g, e.to)});
  }
  return result;
}

std::vector<WeakSeed> weak_polygon_seeds(const OuterplanarStDigraph& g) {
  const FaceStructure fs = inner_faces(g);
  std::vector<std::size_t> ids;
  const auto rhombi = weak_rhombus_faces(g, fs, &ids);
  std::vector<WeakSeed> result;
  for (std::size_t i = 0; i < rhombi.size(); ++i) {
    const Rhombus& r = rhombi[i];
    result.push_back(
        {fs.faces[ids[i]], r, lower_limit_of(g, r.source), upper_limit_of(g, r.sink)});
  }
  return result;
}

StPolygonDecomposition decompose(const OuterplanarStDigraph& g) {
  const std::size_t n = g.vertex_count();
  const FaceStructure fs = inner_faces(g);

  std::vector<StPolygon> polygons;
  std::vector<Strip> strips;
  // Polygons holding each vertex as source or sink; a vertex touches at most a few.
  std::vector<std::vector<std::uint32_t>> touching(n);
  auto add = [&](StPolygon p) {
    const auto id = static_cast<std::uint32_t>(polygons.size());
    touching[p.source].push_back(id);
    touching[p.sink].push_back(id);
    strips.push_back(strip_of(g, p));
    polygons.push_back(std::move(p));
  };
  for (const Median& m : medians(g, fs)) {
    const Edge e = g.edges()[m.edge_index];
    add(grow_polygon(g, e.from, e.to, true));
  }
  std::vector<std::size_t> face_ids;
  weak_rhombus_faces(g, fs, &face_ids);
  for (std::size_t fid : face_ids) {
    const Face& f = fs.faces[fid];
    bool inside = false;
    for (std::uint32_t id : touching[f.source]) {
      inside = std::all_of(f.boundary.begin(), f.boundary.end(), [&](VertexId v) {
        return polygon_contains(g, polygons[id], strips[id], v);
      });
      if (inside) break;
    }
    if (!inside) add(grow_polygon(g, f.source, f.sink, false));
  }

  std::vector<bool> covered(n, false);
  for (const StPolygon& p : polygons) {
    covered[p.source] = covered[p.sink] = true;
    for (VertexId v : p.left_vertices) covered[v] = true;
    for (VertexId v : p.right_vertices) covered[v] = true;
  }

  const auto order = topological_order(g);
  std::vector<std::uint32_t> num(n);
  for (std::uint32_t i = 0; i < n; ++i) num[order[i]] = i;

  StPolygonDecomposition d;
  for (StPolygon& p : polygons) {
    DecompositionElement e;
    e.kind = DecompositionElement::Kind::Polygon;
    e.representative = p.source;
    e.polygon = std::move(p);
    d.elements.push_back(std::move(e));
  }
  for (VertexId v = 0; v < n; ++v) {
    if (covered[v] || !g.is_interior(v)) continue;
    DecompositionElement e;
    e.kind = DecompositionElement::Kind::FreeVertex;
    e.vertex = v;
    e.representative = v;
    d.elements.push_back(std::move(e));
  }
  auto sink_num = [&](const DecompositionElement& e) {
    return num[e.is_polygon() ? e.polygon.sink : e.vertex];
  };
  detail::counting_sort(d.elements, n, sink_num);
  detail::counting_sort(d.elements, n,
                        [&](const DecompositionElement& e) { return num[e.representative]; });
  return d;
}

OuterplanarStDigraph polygon_graph(const OuterplanarStDigraph& g, const StPolygon& p) {
  return build_sub(g, p.left_vertices, p.right_vertices, p.source, p.sink);
}

OuterplanarStDigraph induced_st_subgraph(const OuterplanarStDigraph& g,
                                         std::span<const VertexId> vertices, VertexId source,
                                         VertexId sink) {
  std::vector<VertexId> left, right;
  for (VertexId v : vertices) {
    if (v == source || v == sink) continue;
    if (g.side(v) == Side::Left) left.push_back(v);
    if (g.side(v) == Side::Right) right.push_back(v);
  }
  auto by_rank = [&](VertexId a, VertexId b) { return g.rank(a) < g.rank(b); };
  for (auto* side : {&left, &right}) {
    std::sort(side->begin(), side->end(), by_rank);
    side->erase(std::unique(side->begin(), side->end()), side->end());
  }
  return build_sub(g, std::move(left), std::move(right), source, sink);
}

}  // namespace hpcc
