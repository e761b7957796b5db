#include "hpcc/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace hpcc {

namespace {

std::string edge_text(const std::vector<std::string>& names, Edge e) {
  return "(" + names[e.from] + "," + names[e.to] + ")";
}

std::vector<std::string> default_names(std::uint32_t k, std::uint32_t m) {
  std::vector<std::string> names(k + m + 2);
  names[0] = "s";
  names[k + 1] = "t";
  for (std::uint32_t i = 1; i <= k; ++i) names[i] = "l" + std::to_string(i);
  for (std::uint32_t j = 1; j <= m; ++j) names[k + 1 + j] = "r" + std::to_string(j);
  return names;
}

}  // namespace

std::string_view to_string(EdgeClass c) {
  switch (c) {
    case EdgeClass::OneSidedLeft: return "OneSidedLeft";
    case EdgeClass::OneSidedRight: return "OneSidedRight";
    case EdgeClass::TwoSided: return "TwoSided";
  }
  return "Unknown";
}

std::vector<VertexId> OuterplanarStDigraph::left_seq() const {
  std::vector<VertexId> seq(k_);
  for (std::uint32_t i = 1; i <= k_; ++i) seq[i - 1] = left(i);
  return seq;
}

std::vector<VertexId> OuterplanarStDigraph::right_seq() const {
  std::vector<VertexId> seq(m_);
  for (std::uint32_t j = 1; j <= m_; ++j) seq[j - 1] = right(j);
  return seq;
}

bool OuterplanarStDigraph::has_edge(VertexId from, VertexId to) const {
  if (from >= vertex_count() || to >= vertex_count()) return false;
  auto adj = out(from);
  return std::binary_search(adj.begin(), adj.end(), to);
}

bool OuterplanarStDigraph::is_boundary_edge(Edge e) const {
  const auto n = static_cast<std::uint32_t>(vertex_count());
  std::uint32_t a = cyclic_position(e.from);
  std::uint32_t b = cyclic_position(e.to);
  if (a > b) std::swap(a, b);
  return b - a == 1 || (a == 0 && b == n - 1);
}

std::optional<VertexId> OuterplanarStDigraph::find(const std::string& name) const {
  auto it = ids_.find(name);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

GraphInput OuterplanarStDigraph::to_input() const {
  GraphInput input;
  input.s = names_[source()];
  input.t = names_[sink()];
  for (VertexId v : left_seq()) input.left.push_back(names_[v]);
  for (VertexId v : right_seq()) input.right.push_back(names_[v]);
  for (const Edge& e : edges_) input.edges.emplace_back(names_[e.from], names_[e.to]);
  return input;
}

std::vector<Edge> boundary_edges(std::uint32_t k, std::uint32_t m) {
  std::vector<Edge> result;
  const VertexId t = k + 1;
  if (k == 0 || m == 0) result.push_back({0, t});
  VertexId prev = 0;
  for (std::uint32_t i = 1; i <= k; ++i) {
    result.push_back({prev, i});
    prev = i;
  }
  if (k > 0) result.push_back({prev, t});
  prev = 0;
  for (std::uint32_t j = 1; j <= m; ++j) {
    result.push_back({prev, k + 1 + j});
    prev = k + 1 + j;
  }
  if (m > 0) result.push_back({prev, t});
  return result;
}

OuterplanarStDigraph build_graph(std::uint32_t k, std::uint32_t m, std::vector<Edge> edges,
                                 std::vector<std::string> names) {
  const std::size_t n = std::size_t{k} + m + 2;
  if (names.empty()) names = default_names(k, m);
  if (names.size() != n) throw std::invalid_argument("build_graph: name count mismatch");

  for (const Edge& e : edges) {
    if (e.from >= n || e.to >= n) {
      throw Error(ErrorCode::UnknownVertex, "edge endpoint id out of range");
    }
    if (e.from == e.to) {
      throw Error(ErrorCode::CycleDetected, "self-loop at " + names[e.from]);
    }
  }
  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i] == edges[i - 1]) {
      throw Error(ErrorCode::DuplicateEdge, edge_text(names, edges[i]));
    }
  }

  OuterplanarStDigraph g;
  g.k_ = k;
  g.m_ = m;
  g.names_ = std::move(names);
  g.out_off_.assign(n + 1, 0);
  g.in_off_.assign(n + 1, 0);
  for (const Edge& e : edges) {
    ++g.out_off_[e.from + 1];
    ++g.in_off_[e.to + 1];
  }
  for (std::size_t v = 0; v < n; ++v) {
    g.out_off_[v + 1] += g.out_off_[v];
    g.in_off_[v + 1] += g.in_off_[v];
  }
  g.out_.resize(edges.size());
  g.in_.resize(edges.size());
  {
    std::vector<std::uint32_t> out_fill(g.out_off_.begin(), g.out_off_.end() - 1);
    std::vector<std::uint32_t> in_fill(g.in_off_.begin(), g.in_off_.end() - 1);
    // Edges are sorted by (from, to), so both adjacency lists come out sorted.
    for (const Edge& e : edges) g.out_[out_fill[e.from]++] = e.to;
    for (const Edge& e : edges) g.in_[in_fill[e.to]++] = e.from;
    for (std::size_t v = 0; v < n; ++v) {
      std::sort(g.in_.begin() + g.in_off_[v], g.in_.begin() + g.in_off_[v + 1]);
    }
  }
  g.edges_ = std::move(edges);

  const VertexId s = g.source();
  const VertexId t = g.sink();
  for (VertexId v = 0; v < n; ++v) {
    if (v != s && g.in(v).empty()) {
      throw Error(ErrorCode::MultipleSources, g.names_[v] + " has no incoming edge");
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (v != t && g.out(v).empty()) {
      throw Error(ErrorCode::MultipleSinks, g.names_[v] + " has no outgoing edge");
    }
  }

  {
    std::vector<std::uint32_t> indeg(n);
    std::deque<VertexId> queue;
    for (VertexId v = 0; v < n; ++v) {
      indeg[v] = static_cast<std::uint32_t>(g.in(v).size());
      if (indeg[v] == 0) queue.push_back(v);
    }
    std::size_t seen = 0;
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      ++seen;
      for (VertexId w : g.out(v)) {
        if (--indeg[w] == 0) queue.push_back(w);
      }
    }
    if (seen != n) {
      for (VertexId v = 0; v < n; ++v) {
        if (indeg[v] > 0) {
          throw Error(ErrorCode::CycleDetected, "cycle through " + g.names_[v]);
        }
      }
    }
  }

  for (const Edge& e : boundary_edges(k, m)) {
    if (!g.has_edge(e)) {
      throw Error(ErrorCode::SideNotAPath, "missing boundary edge " + edge_text(g.names_, e));
    }
  }

  struct Chord {
    std::uint32_t lo, hi;
    Edge edge;
  };
  std::vector<Chord> chords;
  for (const Edge& e : g.edges_) {
    if (g.is_boundary_edge(e)) continue;
    std::uint32_t a = g.cyclic_position(e.from);
    std::uint32_t b = g.cyclic_position(e.to);
    chords.push_back({std::min(a, b), std::max(a, b), e});
  }
  std::sort(chords.begin(), chords.end(), [](const Chord& x, const Chord& y) {
    return x.lo != y.lo ? x.lo < y.lo : x.hi > y.hi;
  });
  std::vector<const Chord*> stack;
  for (const Chord& c : chords) {
    while (!stack.empty() && stack.back()->hi <= c.lo) stack.pop_back();
    if (!stack.empty() && c.hi > stack.back()->hi) {
      throw Error(ErrorCode::EmbeddingNotPlane, edge_text(g.names_, stack.back()->edge) +
                                                    " crosses " + edge_text(g.names_, c.edge));
    }
    stack.push_back(&c);
  }

  for (VertexId v = 0; v < n; ++v) g.ids_.emplace(g.names_[v], v);
  return g;
}

OuterplanarStDigraph build_graph(const GraphInput& input) {
  const auto k = static_cast<std::uint32_t>(input.left.size());
  const auto m = static_cast<std::uint32_t>(input.right.size());
  std::vector<std::string> names;
  names.reserve(std::size_t{k} + m + 2);
  names.push_back(input.s);
  names.insert(names.end(), input.left.begin(), input.left.end());
  names.push_back(input.t);
  names.insert(names.end(), input.right.begin(), input.right.end());

  std::unordered_map<std::string, VertexId> ids;
  for (VertexId v = 0; v < names.size(); ++v) {
    if (!ids.emplace(names[v], v).second) {
      throw Error(ErrorCode::DuplicateVertex, "vertex " + names[v] + " declared twice");
    }
  }
  std::vector<Edge> edges;
  edges.reserve(input.edges.size());
  for (const auto& [from, to] : input.edges) {
    auto a = ids.find(from);
    auto b = ids.find(to);
    if (a == ids.end()) throw Error(ErrorCode::UnknownVertex, from);
    if (b == ids.end()) throw Error(ErrorCode::UnknownVertex, to);
    edges.push_back({a->second, b->second});
  }
  return build_graph(k, m, std::move(edges), std::move(names));
}

OuterplanarStDigraph build_graph(const std::vector<std::string>& left,
                                 const std::vector<std::string>& right,
                                 const std::vector<std::pair<std::string, std::string>>& edges,
                                 const std::string& s, const std::string& t) {
  return build_graph(GraphInput{left, right, s, t, edges});
}

EdgeClass classify_edge(const OuterplanarStDigraph& g, Edge e) {
  if (!g.has_edge(e)) throw Error(ErrorCode::EdgeNotInGraph, "edge is not in the graph");
  const Side a = g.side(e.from);
  const Side b = g.side(e.to);
  const bool a_inner = a == Side::Left || a == Side::Right;
  const bool b_inner = b == Side::Left || b == Side::Right;
  if (!a_inner && !b_inner) return EdgeClass::OneSidedLeft;
  if (a_inner && b_inner && a != b) return EdgeClass::TwoSided;
  const Side s = a_inner ? a : b;
  return s == Side::Left ? EdgeClass::OneSidedLeft : EdgeClass::OneSidedRight;
}

std::vector<VertexId> topological_order(const OuterplanarStDigraph& g) {
  const std::size_t n = g.vertex_count();
  const std::uint32_t k = g.left_count();
  const std::uint32_t m = g.right_count();
  std::vector<std::uint32_t> indeg(n);
  for (VertexId v = 0; v < n; ++v) indeg[v] = static_cast<std::uint32_t>(g.in(v).size());

  std::vector<VertexId> order;
  order.reserve(n);
  auto place = [&](VertexId v) {
    order.push_back(v);
    for (VertexId w : g.out(v)) --indeg[w];
  };
  place(g.source());
  std::uint32_t li = 1;
  std::uint32_t rj = 1;
  while (li <= k || rj <= m) {
    const bool can_left = li <= k && indeg[g.left(li)] == 0;
    const bool can_right = rj <= m && indeg[g.right(rj)] == 0;
    if (can_left && (!can_right || li <= rj)) {
      place(g.left(li++));
    } else if (can_right) {
      place(g.right(rj++));
    } else {
      throw std::logic_error("topological_order: graph is not a valid st-digraph");
    }
  }
  order.push_back(g.sink());
  return order;
}

void require_permutation(const OuterplanarStDigraph& g, std::span<const VertexId> order) {
  const std::size_t n = g.vertex_count();
  if (order.size() != n) {
    throw Error(ErrorCode::NotAPermutation, "expected " + std::to_string(n) + " vertices, got " +
                                                std::to_string(order.size()));
  }
  std::vector<bool> seen(n, false);
  for (VertexId v : order) {
    if (v >= n) throw Error(ErrorCode::NotAPermutation, "vertex id out of range");
    if (seen[v]) throw Error(ErrorCode::NotAPermutation, "repeated vertex " + g.name(v));
    seen[v] = true;
  }
}

bool is_linear_extension(const OuterplanarStDigraph& g, std::span<const VertexId> order) {
  require_permutation(g, order);
  std::vector<std::uint32_t> at(g.vertex_count());
  for (std::uint32_t i = 0; i < order.size(); ++i) at[order[i]] = i;
  for (const Edge& e : g.edges()) {
    if (at[e.from] > at[e.to]) return false;
  }
  return true;
}

}  // namespace hpcc
