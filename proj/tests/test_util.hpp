#pragma once

#include <string>
#include <vector>

#include "hpcc/crossing.hpp"
#include "hpcc/graph.hpp"

namespace hpcc::testing {

inline VertexId id(const OuterplanarStDigraph& g, const std::string& name) {
  auto v = g.find(name);
  if (!v) throw std::invalid_argument("no vertex named " + name);
  return *v;
}

inline Edge edge(const OuterplanarStDigraph& g, const std::string& a, const std::string& b) {
  return {id(g, a), id(g, b)};
}

inline std::vector<VertexId> ids(const OuterplanarStDigraph& g,
                                 const std::vector<std::string>& names) {
  std::vector<VertexId> out;
  for (const auto& n : names) out.push_back(id(g, n));
  return out;
}

inline std::vector<std::string> names(const OuterplanarStDigraph& g,
                                      const std::vector<VertexId>& vs) {
  std::vector<std::string> out;
  for (VertexId v : vs) out.push_back(g.name(v));
  return out;
}

inline std::vector<std::string> edge_names(const OuterplanarStDigraph& g,
                                           const std::vector<Edge>& es) {
  std::vector<std::string> out;
  for (const Edge& e : es) out.push_back("(" + g.name(e.from) + "," + g.name(e.to) + ")");
  return out;
}

inline bool reaches(const OuterplanarStDigraph& g, VertexId from, VertexId to) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<VertexId> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    if (v == to) return true;
    for (VertexId w : g.out(v)) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return false;
}

}  // namespace hpcc::testing
