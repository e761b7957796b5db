#include "hpcc/hamiltonicity.hpp"

#include <algorithm>
#include <stdexcept>

#include "counting_sort.hpp"

namespace hpcc {

namespace {

void describe_face(const OuterplanarStDigraph& g, Face& f) {
  const auto& cyc = f.boundary;
  const std::size_t r = cyc.size();
  // forward[i]: the edge between cyc[i] and cyc[i+1] points forward.
  std::vector<bool> forward(r);
  for (std::size_t i = 0; i < r; ++i) forward[i] = g.has_edge(cyc[i], cyc[(i + 1) % r]);
  std::size_t src = r, snk = r;
  for (std::size_t i = 0; i < r; ++i) {
    const bool out_next = forward[i];
    const bool out_prev = !forward[(i + r - 1) % r];
    if (out_next && out_prev) src = i;
    if (!out_next && !out_prev) snk = i;
  }
  if (src == r || snk == r) throw std::logic_error("inner face without source or sink");
  f.source = cyc[src];
  f.sink = cyc[snk];
  for (std::size_t i = (src + 1) % r; i != snk; i = (i + 1) % r) f.left_side.push_back(cyc[i]);
  for (std::size_t i = (src + r - 1) % r; i != snk; i = (i + r - 1) % r) {
    f.right_side.push_back(cyc[i]);
  }
}

std::vector<std::uint32_t> topo_numbers(const OuterplanarStDigraph& g) {
  std::vector<std::uint32_t> num(g.vertex_count());
  const auto order = topological_order(g);
  for (std::uint32_t i = 0; i < order.size(); ++i) num[order[i]] = i;
  return num;
}

std::optional<Rhombus> lowest(const OuterplanarStDigraph& g, const std::vector<Rhombus>& all) {
  if (all.empty()) return std::nullopt;
  const auto num = topo_numbers(g);
  return *std::min_element(all.begin(), all.end(), [&](const Rhombus& a, const Rhombus& b) {
    if (num[a.source] != num[b.source]) return num[a.source] < num[b.source];
    return num[a.sink] < num[b.sink];
  });
}

}  // namespace

FaceStructure inner_faces(const OuterplanarStDigraph& g) {
  const auto n = static_cast<std::uint32_t>(g.vertex_count());
  const auto& edges = g.edges();
  FaceStructure fs;
  fs.edge_faces.assign(edges.size(), {-1, -1});
  if (n < 3) return fs;

  struct Chord {
    std::uint32_t lo, hi;
    std::int32_t id;
  };
  std::vector<std::int32_t> step_edge(n, -1);
  std::int32_t closing = -1;
  std::vector<Chord> chords;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::uint32_t a = g.cyclic_position(edges[i].from);
    std::uint32_t b = g.cyclic_position(edges[i].to);
    if (a > b) std::swap(a, b);
    const auto id = static_cast<std::int32_t>(i);
    if (b - a == 1) {
      step_edge[b] = id;
    } else if (a == 0 && b == n - 1) {
      closing = id;
    } else {
      chords.push_back({a, b, id});
    }
  }
  // By upper end, and for a shared upper end the innermost (largest lower end) first.
  detail::counting_sort(chords, n, [&](const Chord& c) { return n - 1 - c.lo; });
  detail::counting_sort(chords, n, [](const Chord& c) { return c.hi; });

  std::vector<std::uint32_t> stack_pos;
  std::vector<std::int32_t> stack_link;  // edge joining the previous stack entry
  std::vector<std::uint32_t> where(n, 0);
  auto push = [&](std::uint32_t p, std::int32_t link) {
    where[p] = static_cast<std::uint32_t>(stack_pos.size());
    stack_pos.push_back(p);
    stack_link.push_back(link);
  };
  auto emit = [&](std::size_t from_index, std::int32_t closing_edge) {
    const auto f = static_cast<std::int32_t>(fs.faces.size());
    Face face;
    for (std::size_t i = from_index; i < stack_pos.size(); ++i) {
      face.boundary.push_back(g.vertex_at(stack_pos[i]));
      if (i > from_index) fs.edge_faces[stack_link[i]][1] = f;
    }
    fs.edge_faces[closing_edge][0] = f;
    describe_face(g, face);
    fs.faces.push_back(std::move(face));
  };

  push(0, -1);
  std::size_t next = 0;
  for (std::uint32_t p = 1; p < n; ++p) {
    push(p, step_edge[p]);
    while (next < chords.size() && chords[next].hi == p) {
      const Chord& c = chords[next++];
      const std::size_t iq = where[c.lo];
      emit(iq, c.id);
      stack_pos.resize(iq + 1);
      stack_link.resize(iq + 1);
      push(p, c.id);
    }
  }
  emit(0, closing);
  return fs;
}

std::vector<Median> medians(const OuterplanarStDigraph& g, const FaceStructure& faces) {
  std::vector<Median> result;
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [f0, f1] = faces.edge_faces[i];
    if (f0 < 0 || f1 < 0) continue;
    const Edge e = edges[i];
    const Face& a = faces.faces[f0];
    const Face& b = faces.faces[f1];
    if (a.source != e.from || a.sink != e.to || b.source != e.from || b.sink != e.to) continue;
    const bool upward = g.cyclic_position(e.from) < g.cyclic_position(e.to);
    const Face& left = upward ? a : b;
    const Face& right = upward ? b : a;
    if (left.left_side.empty() || right.right_side.empty()) {
      throw std::logic_error("median face without an interior vertex");
    }
    result.push_back({i, Rhombus{RhombusKind::Strong, e.from, e.to, left.left_side.front(),
                                 right.right_side.front()}});
  }
  return result;
}

std::vector<Rhombus> weak_rhombus_faces(const OuterplanarStDigraph& /*g*/,
                                        const FaceStructure& faces,
                                        std::vector<std::size_t>* face_ids) {
  std::vector<Rhombus> result;
  for (std::size_t i = 0; i < faces.faces.size(); ++i) {
    const Face& f = faces.faces[i];
    if (f.left_side.empty() || f.right_side.empty()) continue;
    result.push_back(
        {RhombusKind::Weak, f.source, f.sink, f.left_side.front(), f.right_side.front()});
    if (face_ids) face_ids->push_back(i);
  }
  return result;
}

std::optional<Rhombus> find_strong_rhombus(const OuterplanarStDigraph& g) {
  std::vector<Rhombus> all;
  for (const Median& m : medians(g, inner_faces(g))) all.push_back(m.rhombus);
  return lowest(g, all);
}

std::optional<Rhombus> find_weak_rhombus(const OuterplanarStDigraph& g) {
  return lowest(g, weak_rhombus_faces(g, inner_faces(g)));
}

bool is_hamiltonian(const OuterplanarStDigraph& g) {
  const FaceStructure faces = inner_faces(g);
  return medians(g, faces).empty() && weak_rhombus_faces(g, faces).empty();
}

std::optional<std::vector<VertexId>> extract_hamiltonian_path(const OuterplanarStDigraph& g) {
  auto order = topological_order(g);
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    if (!g.has_edge(order[i], order[i + 1])) return std::nullopt;
  }
  return order;
}

}  // namespace hpcc
