#include "hpcc/crossing.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "counting_sort.hpp"

namespace hpcc {

namespace {

bool on_left_boundary(const OuterplanarStDigraph& g, VertexId v) {
  return g.side(v) != Side::Right;
}

bool on_right_boundary(const OuterplanarStDigraph& g, VertexId v) {
  return g.side(v) != Side::Left;
}

// Number of outer-cycle positions strictly inside the arc of chord (a,b)
// that contains position p, where p is not an endpoint.
std::uint32_t arc_size_containing(std::uint32_t n, std::uint32_t a, std::uint32_t b,
                                  std::uint32_t p) {
  if (a > b) std::swap(a, b);
  const std::uint32_t inner = b - a - 1;
  return (a < p && p < b) ? inner : n - inner - 2;
}

bool separates(std::uint32_t a, std::uint32_t b, std::uint32_t x, std::uint32_t y) {
  if (a > b) std::swap(a, b);
  const bool x_in = a < x && x < b;
  const bool y_in = a < y && y < b;
  return x_in != y_in;
}

// Reference routine for any pair of distinct vertices: scans all edges.
std::vector<Edge> crossed_by_scan(const OuterplanarStDigraph& g, VertexId x, VertexId y) {
  const auto n = static_cast<std::uint32_t>(g.vertex_count());
  const std::uint32_t px = g.cyclic_position(x);
  const std::uint32_t py = g.cyclic_position(y);
  std::vector<std::pair<std::uint32_t, Edge>> hits;
  for (const Edge& e : g.edges()) {
    if (e.from == x || e.from == y || e.to == x || e.to == y) continue;
    const std::uint32_t pa = g.cyclic_position(e.from);
    const std::uint32_t pb = g.cyclic_position(e.to);
    if (!separates(pa, pb, px, py)) continue;
    hits.emplace_back(arc_size_containing(n, pa, pb, px), e);
  }
  std::sort(hits.begin(), hits.end());
  std::vector<Edge> result;
  result.reserve(hits.size());
  for (const auto& h : hits) result.push_back(h.second);
  return result;
}

void check_completion_edge(const OuterplanarStDigraph& g, CompletionEdge ce) {
  if (ce.from >= g.vertex_count() || ce.to >= g.vertex_count()) {
    throw Error(ErrorCode::UnknownVertex, "completion edge endpoint out of range");
  }
  if (ce.from == ce.to) {
    throw Error(ErrorCode::SameSideCompletionEdge, "completion edge is a loop");
  }
  const Side a = g.side(ce.from);
  const Side b = g.side(ce.to);
  if (a == b && (a == Side::Left || a == Side::Right)) {
    throw Error(ErrorCode::SameSideCompletionEdge,
                "(" + g.name(ce.from) + "," + g.name(ce.to) + ")");
  }
}

}  // namespace

bool is_two_sided_pair(const OuterplanarStDigraph& g, VertexId x, VertexId y) {
  const Side a = g.side(x);
  const Side b = g.side(y);
  return (a == Side::Left && b == Side::Right) || (a == Side::Right && b == Side::Left);
}

std::uint32_t CrossingIndex::left_rank(VertexId v) const {
  return v == g_->sink() ? g_->left_count() + 1 : g_->rank(v);
}

std::uint32_t CrossingIndex::right_rank(VertexId v) const {
  return v == g_->sink() ? g_->right_count() + 1 : g_->rank(v);
}

CrossingIndex::CrossingIndex(const OuterplanarStDigraph& g) : g_(&g) {
  const std::uint32_t k = g.left_count();
  const std::uint32_t m = g.right_count();
  std::vector<Edge> left_chords, right_chords;
  for (const Edge& e : g.edges()) {
    if (g.is_boundary_edge(e)) continue;
    if (on_left_boundary(g, e.from) && on_left_boundary(g, e.to)) {
      left_chords.push_back(e);
    } else if (on_right_boundary(g, e.from) && on_right_boundary(g, e.to)) {
      right_chords.push_back(e);
    } else {
      two_sided_.push_back(e);
    }
  }
  build_forest(left_, k, left_chords, true);
  build_forest(right_, m, right_chords, false);

  auto a_of = [&](const Edge& e) {
    return g.side(e.from) == Side::Left ? g.rank(e.from) : g.rank(e.to);
  };
  auto b_of = [&](const Edge& e) {
    return g.side(e.from) == Side::Right ? g.rank(e.from) : g.rank(e.to);
  };
  detail::counting_sort(two_sided_, m + 2, b_of);
  detail::counting_sort(two_sided_, k + 2, a_of);

  std::vector<std::uint32_t> count_a(k + 3, 0), count_b(m + 3, 0);
  for (const Edge& e : two_sided_) {
    ++count_a[a_of(e) + 1];
    ++count_b[b_of(e) + 1];
  }
  for (std::uint32_t i = 0; i + 1 < count_a.size(); ++i) count_a[i + 1] += count_a[i];
  for (std::uint32_t j = 0; j + 1 < count_b.size(); ++j) count_b[j + 1] += count_b[j];
  // count_a[i] = number of chords with a < i
  a_lt_.assign(count_a.begin(), count_a.end() - 1);
  a_le_.assign(count_a.begin() + 1, count_a.end());
  b_lt_.assign(count_b.begin(), count_b.end() - 1);
  b_le_.assign(count_b.begin() + 1, count_b.end());
}

void CrossingIndex::build_forest(Forest& f, std::uint32_t len, const std::vector<Edge>& chords,
                                 bool left_side) {
  struct Item {
    std::uint32_t lo, hi;
    Edge edge;
  };
  std::vector<Item> items;
  items.reserve(chords.size());
  for (const Edge& e : chords) {
    std::uint32_t a = left_side ? left_rank(e.from) : right_rank(e.from);
    std::uint32_t b = left_side ? left_rank(e.to) : right_rank(e.to);
    if (a > b) std::swap(a, b);
    items.push_back({a, b, e});
  }
  detail::counting_sort(items, len + 2, [&](const Item& it) { return len + 1 - it.hi; });
  detail::counting_sort(items, len + 2, [](const Item& it) { return it.lo; });

  f.chord.resize(items.size());
  f.parent.assign(items.size(), -1);
  f.innermost.assign(len + 2, -1);
  f.depth.assign(len + 2, 0);
  std::vector<std::int32_t> stack;
  std::size_t next = 0;
  for (std::uint32_t p = 0; p <= len + 1; ++p) {
    while (!stack.empty() && items[stack.back()].hi <= p) stack.pop_back();
    f.innermost[p] = stack.empty() ? -1 : stack.back();
    f.depth[p] = static_cast<std::uint32_t>(stack.size());
    while (next < items.size() && items[next].lo == p) {
      const auto id = static_cast<std::int32_t>(next);
      f.chord[next] = items[next].edge;
      f.parent[next] = stack.empty() ? -1 : stack.back();
      stack.push_back(id);
      ++next;
    }
  }
}

std::uint32_t CrossingIndex::count(VertexId x, VertexId y) const {
  if (g_->side(x) == Side::Right) std::swap(x, y);
  const std::uint32_t i = g_->rank(x);
  const std::uint32_t j = g_->rank(y);
  std::uint32_t total = left_.depth[i] + right_.depth[j];
  if (a_lt_[i] > b_le_[j]) total += a_lt_[i] - b_le_[j];
  if (b_lt_[j] > a_le_[i]) total += b_lt_[j] - a_le_[i];
  return total;
}

void CrossingIndex::append_chain(const Forest& f, std::uint32_t rank, bool reversed,
                                 std::vector<Edge>& out) const {
  const std::size_t first = out.size();
  for (std::int32_t c = f.innermost[rank]; c >= 0; c = f.parent[c]) out.push_back(f.chord[c]);
  if (reversed) std::reverse(out.begin() + static_cast<std::ptrdiff_t>(first), out.end());
}

void CrossingIndex::append_crossed(VertexId x, VertexId y, std::vector<Edge>& out) const {
  const bool from_left = g_->side(x) == Side::Left;
  const std::uint32_t i = g_->rank(from_left ? x : y);
  const std::uint32_t j = g_->rank(from_left ? y : x);
  // Chords below the left vertex and above the right one: [b_le(j), a_lt(i)).
  // Chords above the left vertex and below the right one: [a_le(i), b_lt(j)).
  const std::uint32_t lo1 = b_le_[j], hi1 = a_lt_[i];
  const std::uint32_t lo2 = a_le_[i], hi2 = b_lt_[j];
  if (from_left) {
    append_chain(left_, i, false, out);
    for (std::uint32_t p = hi1; p > lo1; --p) out.push_back(two_sided_[p - 1]);
    for (std::uint32_t p = lo2; p < hi2; ++p) out.push_back(two_sided_[p]);
    append_chain(right_, j, true, out);
  } else {
    append_chain(right_, j, false, out);
    for (std::uint32_t p = lo1; p < hi1; ++p) out.push_back(two_sided_[p]);
    for (std::uint32_t p = hi2; p > lo2; --p) out.push_back(two_sided_[p - 1]);
    append_chain(left_, i, true, out);
  }
}

std::vector<Edge> edge_crossings(const OuterplanarStDigraph& g, CompletionEdge ce) {
  check_completion_edge(g, ce);
  return crossed_by_scan(g, ce.from, ce.to);
}

std::vector<Edge> edge_crossings(const OuterplanarStDigraph& g, const CrossingIndex& index,
                                 CompletionEdge ce) {
  check_completion_edge(g, ce);
  if (!is_two_sided_pair(g, ce.from, ce.to)) return crossed_by_scan(g, ce.from, ce.to);
  std::vector<Edge> out;
  index.append_crossed(ce.from, ce.to, out);
  return out;
}

std::uint32_t crossing_count(const OuterplanarStDigraph& g, const CrossingIndex& index,
                             CompletionEdge ce) {
  check_completion_edge(g, ce);
  if (!is_two_sided_pair(g, ce.from, ce.to)) {
    return static_cast<std::uint32_t>(crossed_by_scan(g, ce.from, ce.to).size());
  }
  return index.count(ce.from, ce.to);
}

SolutionCrossings solution_crossings(const OuterplanarStDigraph& g,
                                     std::span<const VertexId> order) {
  CrossingIndex index(g);
  return solution_crossings(g, index, order);
}

SolutionCrossings solution_crossings(const OuterplanarStDigraph& g, const CrossingIndex& index,
                                     std::span<const VertexId> order) {
  if (!is_linear_extension(g, order)) {
    throw Error(ErrorCode::NotLinearExtension, "order violates an edge of the graph");
  }
  SolutionCrossings result;
  std::vector<Edge> crossed;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    const VertexId u = order[i];
    const VertexId v = order[i + 1];
    if (g.has_edge(u, v)) continue;
    const CompletionEdge ce{u, v};
    result.completion_edges.push_back(ce);
    crossed.clear();
    if (is_two_sided_pair(g, u, v)) {
      index.append_crossed(u, v, crossed);
    } else {
      crossed = crossed_by_scan(g, u, v);
    }
    for (std::uint32_t r = 0; r < crossed.size(); ++r) {
      result.records.push_back({ce, crossed[r], r});
    }
  }
  result.total = result.records.size();
  return result;
}

HpExtendedGraph build_hp_extended(const OuterplanarStDigraph& g,
                                  std::span<const VertexId> order) {
  const SolutionCrossings sc = solution_crossings(g, order);
  const auto n = static_cast<std::uint32_t>(g.vertex_count());
  HpExtendedGraph h;
  h.original_vertex_count = n;
  h.vertex_count = n + sc.records.size();
  h.records = sc.records;

  // Crossing vertices on each crossed edge, ordered from the edge's tail.
  std::map<Edge, std::vector<std::pair<std::uint32_t, VertexId>>> on_edge;
  for (std::uint32_t r = 0; r < sc.records.size(); ++r) {
    const CrossingRecord& rec = sc.records[r];
    const std::uint32_t key =
        arc_size_containing(n, g.cyclic_position(rec.completion_edge.from),
                            g.cyclic_position(rec.completion_edge.to),
                            g.cyclic_position(rec.crossed_edge.from));
    on_edge[rec.crossed_edge].emplace_back(key, n + r);
  }
  for (const Edge& e : g.edges()) {
    auto it = on_edge.find(e);
    if (it == on_edge.end()) {
      h.edges.push_back(e);
      continue;
    }
    auto& pts = it->second;
    std::sort(pts.begin(), pts.end());
    VertexId prev = e.from;
    for (const auto& p : pts) {
      h.edges.push_back({prev, p.second});
      prev = p.second;
    }
    h.edges.push_back({prev, e.to});
  }

  std::size_t r = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    h.hamiltonian_order.push_back(order[i]);
    if (i + 1 == order.size() || g.has_edge(order[i], order[i + 1])) continue;
    const CompletionEdge ce{order[i], order[i + 1]};
    VertexId prev = ce.from;
    while (r < sc.records.size() && sc.records[r].completion_edge == ce) {
      const auto x = static_cast<VertexId>(n + r);
      h.edges.push_back({prev, x});
      h.hamiltonian_order.push_back(x);
      prev = x;
      ++r;
    }
    h.edges.push_back({prev, ce.to});
  }
  return h;
}

std::optional<std::string> hp_extended_defect(const HpExtendedGraph& h) {
  const std::size_t n = h.vertex_count;
  std::vector<std::vector<VertexId>> out(n);
  std::vector<std::uint32_t> indeg(n, 0), outdeg(n, 0);
  for (const Edge& e : h.edges) {
    if (e.from >= n || e.to >= n) return "edge endpoint out of range";
    out[e.from].push_back(e.to);
    ++indeg[e.to];
    ++outdeg[e.from];
  }
  for (std::size_t v = h.original_vertex_count; v < n; ++v) {
    if (indeg[v] != 2 || outdeg[v] != 2) {
      return "crossing vertex " + std::to_string(v) + " does not have in/out degree 2";
    }
  }
  std::vector<std::uint32_t> remaining = indeg;
  std::deque<VertexId> queue;
  for (VertexId v = 0; v < n; ++v) {
    if (remaining[v] == 0) queue.push_back(v);
  }
  std::size_t seen = 0;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    ++seen;
    for (VertexId w : out[v]) {
      if (--remaining[w] == 0) queue.push_back(w);
    }
  }
  if (seen != n) return std::string("HP-extended graph has a cycle");
  if (h.hamiltonian_order.size() != n) return std::string("hamiltonian order has wrong length");
  std::vector<bool> used(n, false);
  for (VertexId v : h.hamiltonian_order) {
    if (v >= n || used[v]) return std::string("hamiltonian order is not a permutation");
    used[v] = true;
  }
  for (auto& adj : out) std::sort(adj.begin(), adj.end());
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const auto& adj = out[h.hamiltonian_order[i]];
    if (!std::binary_search(adj.begin(), adj.end(), h.hamiltonian_order[i + 1])) {
      return "hamiltonian order step " + std::to_string(i) + " is not an edge";
    }
  }
  return std::nullopt;
}

}  // namespace hpcc
