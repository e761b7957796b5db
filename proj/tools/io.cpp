#include "io.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

namespace hpcc::io {

namespace {

[[noreturn]] void parse_fail(const std::string& msg) { throw Error(ErrorCode::ParseError, msg); }

json edge_json(const OuterplanarStDigraph& g, VertexId a, VertexId b) {
  return json::array({g.name(a), g.name(b)});
}

json names_json(const OuterplanarStDigraph& g, const std::vector<VertexId>& vs) {
  json out = json::array();
  for (VertexId v : vs) out.push_back(g.name(v));
  return out;
}

VertexId vertex(const OuterplanarStDigraph& g, const json& name) {
  if (!name.is_string()) parse_fail("vertex names must be strings");
  auto v = g.find(name.get<std::string>());
  if (!v) parse_fail("unknown vertex " + name.get<std::string>());
  return *v;
}

Edge edge_of(const OuterplanarStDigraph& g, const json& pair) {
  if (!pair.is_array() || pair.size() != 2) parse_fail("an edge is a [from, to] pair");
  return {vertex(g, pair[0]), vertex(g, pair[1])};
}

std::uint32_t index_of(const json& x, const char* what) {
  if (!x.is_number_unsigned()) parse_fail(std::string(what) + " must be a non-negative integer");
  return x.get<std::uint32_t>();
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

GraphInput parse_graph(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_fail(e.what());
  }
  if (!doc.is_object()) parse_fail("graph document must be an object");
  GraphInput in;
  auto strings = [&](const char* key, std::vector<std::string>& out) {
    if (!doc.contains(key)) return;
    if (!doc[key].is_array()) parse_fail(std::string(key) + " must be an array");
    for (const auto& x : doc[key]) {
      if (!x.is_string()) parse_fail(std::string(key) + " entries must be strings");
      out.push_back(x.get<std::string>());
    }
  };
  strings("left", in.left);
  strings("right", in.right);
  for (const char* key : {"s", "t"}) {
    if (!doc.contains(key)) continue;
    if (!doc[key].is_string()) parse_fail(std::string(key) + " must be a string");
    (std::string(key) == "s" ? in.s : in.t) = doc[key].get<std::string>();
  }
  if (!doc.contains("edges") || !doc["edges"].is_array()) parse_fail("edges array missing");
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
      parse_fail("an edge is a [from, to] pair of names");
    }
    in.edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return in;
}

json graph_to_json(const OuterplanarStDigraph& g) {
  json doc;
  doc["left"] = names_json(g, g.left_seq());
  doc["right"] = names_json(g, g.right_seq());
  doc["s"] = g.name(g.source());
  doc["t"] = g.name(g.sink());
  doc["edges"] = json::array();
  for (const Edge& e : g.edges()) doc["edges"].push_back(edge_json(g, e.from, e.to));
  return doc;
}

json decomposition_to_json(const OuterplanarStDigraph& g, const StPolygonDecomposition& d) {
  json elements = json::array();
  for (const auto& e : d.elements) {
    json x;
    x["representative"] = g.name(e.representative);
    if (e.is_polygon()) {
      const StPolygon& p = e.polygon;
      x["kind"] = "polygon";
      x["source"] = g.name(p.source);
      x["sink"] = g.name(p.sink);
      x["left"] = names_json(g, p.left_vertices);
      x["right"] = names_json(g, p.right_vertices);
      x["median"] = p.median_present;
      x["lower_limit"] = p.lower_limit ? edge_json(g, p.lower_limit->from, p.lower_limit->to)
                                       : json(nullptr);
      x["upper_limit"] = p.upper_limit ? edge_json(g, p.upper_limit->from, p.upper_limit->to)
                                       : json(nullptr);
    } else {
      x["kind"] = "free";
      x["vertex"] = g.name(e.vertex);
    }
    elements.push_back(std::move(x));
  }
  return {{"lambda", d.lambda()}, {"elements", std::move(elements)}};
}

json solution_to_json(const OuterplanarStDigraph& g, const CompletionSolution& sol) {
  json doc;
  doc["crossings"] = sol.total_crossings;
  doc["order"] = names_json(g, sol.hamiltonian_order);
  doc["completion_edges"] = json::array();
  for (const auto& ce : sol.completion_edges) {
    doc["completion_edges"].push_back(edge_json(g, ce.from, ce.to));
  }
  doc["records"] = json::array();
  for (const auto& r : sol.records) {
    doc["records"].push_back({{"completion_edge", edge_json(g, r.completion_edge.from,
                                                            r.completion_edge.to)},
                              {"crossed_edge", edge_json(g, r.crossed_edge.from,
                                                         r.crossed_edge.to)},
                              {"ordinal", r.ordinal}});
  }
  return doc;
}

json oracle_to_json(const OuterplanarStDigraph& g, const OracleResult& r) {
  return {{"crossings", r.crossings}, {"order", names_json(g, r.order)}};
}

json compare_to_json(const std::vector<CompareResult>& results) {
  json list = json::array();
  std::size_t mismatches = 0;
  for (const auto& r : results) {
    mismatches += !r.agrees();
    list.push_back({{"index", r.index},
                    {"seed", r.params.seed},
                    {"n", r.vertices},
                    {"density", r.params.chord_density},
                    {"solve", r.solved},
                    {"reference", r.reference},
                    {"oracle", r.oracle ? json(*r.oracle) : json(nullptr)},
                    {"verified", r.verified},
                    {"agree", r.agrees()}});
  }
  return {{"instances", std::move(list)},
          {"count", results.size()},
          {"mismatches", mismatches}};
}

json embedding_to_json(const OuterplanarStDigraph& g, const BookEmbedding& be) {
  std::map<Edge, std::vector<std::uint32_t>> intervals;
  for (const auto& c : be.spine_crossings) intervals[c.edge].push_back(c.interval);
  json edges = json::array();
  for (const auto& layout : be.edges) {
    json segs = json::array();
    for (const auto& s : layout.segments) {
      segs.push_back({{"page", std::string(to_string(s.page))}, {"from", s.from}, {"to", s.to}});
    }
    auto& iv = intervals[layout.edge];
    std::sort(iv.begin(), iv.end());
    edges.push_back({{"edge", edge_json(g, layout.edge.from, layout.edge.to)},
                     {"segments", std::move(segs)},
                     {"spine_crossings", iv}});
  }
  return {{"spine", names_json(g, be.spine)},
          {"edges", std::move(edges)},
          {"spine_crossing_count", be.spine_crossings.size()}};
}

BookEmbedding parse_embedding(const OuterplanarStDigraph& g, const json& doc) {
  if (!doc.is_object() || !doc.contains("spine") || !doc["spine"].is_array() ||
      !doc.contains("edges") || !doc["edges"].is_array()) {
    parse_fail("embedding document needs spine and edges arrays");
  }
  BookEmbedding be;
  for (const auto& v : doc["spine"]) be.spine.push_back(vertex(g, v));
  struct Pending {
    Edge edge;
    std::vector<std::uint32_t> intervals;
    std::vector<std::uint32_t> points;
  };
  std::vector<Pending> pending;
  for (const auto& x : doc["edges"]) {
    if (!x.is_object() || !x.contains("edge") || !x.contains("segments")) {
      parse_fail("each edge entry needs edge and segments");
    }
    EdgeLayout layout{edge_of(g, x["edge"]), {}};
    Pending p{layout.edge, {}, {}};
    for (const auto& s : x["segments"]) {
      if (!s.is_object() || !s.contains("page") || !s["page"].is_string()) {
        parse_fail("segment needs a page");
      }
      const std::string page = s["page"].get<std::string>();
      if (page != "L" && page != "R") parse_fail("page must be L or R");
      layout.segments.push_back({page == "L" ? Page::Left : Page::Right,
                                 index_of(s.value("from", json()), "from"),
                                 index_of(s.value("to", json()), "to")});
    }
    for (std::size_t i = 1; i < layout.segments.size(); ++i) {
      p.points.push_back(layout.segments[i].from);
    }
    if (x.contains("spine_crossings")) {
      for (const auto& i : x["spine_crossings"]) p.intervals.push_back(index_of(i, "interval"));
    }
    if (p.intervals.size() != p.points.size()) {
      parse_fail("spine_crossings must list one interval per segment break");
    }
    std::sort(p.intervals.begin(), p.intervals.end());
    be.edges.push_back(std::move(layout));
    pending.push_back(std::move(p));
  }
  for (const auto& p : pending) {
    for (std::uint32_t i : p.intervals) be.spine_crossings.push_back({p.edge, i, 0});
  }
  const auto coord = be.vertex_coordinates();
  std::size_t at = 0;
  for (const auto& p : pending) {
    for (std::size_t i = 0; i < p.intervals.size(); ++i, ++at) {
      const std::uint32_t iv = p.intervals[i];
      if (iv >= coord.size()) parse_fail("spine crossing interval out of range");
      const std::uint32_t x = p.points[i];
      if (x <= coord[iv]) parse_fail("crossing point below its interval");
      be.spine_crossings[at].rank = x - coord[iv] - 1;
    }
  }
  return be;
}

std::string render_svg(const OuterplanarStDigraph& g, const BookEmbedding& be) {
  const auto coord = be.vertex_coordinates();
  std::uint32_t top = 0;
  for (std::uint32_t c : coord) top = std::max(top, c);
  constexpr double kStep = 40.0, kMargin = 40.0;
  std::uint32_t widest = 1;
  for (const auto& l : be.edges) {
    for (const auto& s : l.segments) widest = std::max(widest, s.to - s.from);
  }
  const double half = widest * kStep / 2 + kMargin;
  const double width = 2 * half + 80;
  const double height = top * kStep + 2 * kMargin;
  const double x0 = width / 2;
  auto y = [&](std::uint32_t c) { return height - kMargin - c * kStep; };

  std::ostringstream svg;
  svg << std::fixed << std::setprecision(1);
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  svg << "<line x1=\"" << x0 << "\" y1=\"" << y(0) << "\" x2=\"" << x0 << "\" y2=\"" << y(top)
      << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
  for (const auto& l : be.edges) {
    for (const auto& s : l.segments) {
      const double r = (s.to - s.from) * kStep / 2;
      // Upward along the spine, sweep flag 1 bulges left and 0 bulges right.
      const int sweep = s.page == Page::Left ? 1 : 0;
      svg << "<path d=\"M " << x0 << ' ' << y(s.from) << " A " << r << ' ' << r << " 0 0 "
          << sweep << ' ' << x0 << ' ' << y(s.to) << "\" fill=\"none\" stroke=\""
          << (s.page == Page::Left ? "#1f77b4" : "#d62728") << "\" stroke-width=\"1.5\"/>\n";
    }
  }
  for (const auto& c : be.spine_crossings) {
    const double cy = y(coord[c.interval] + 1 + c.rank);
    svg << "<line x1=\"" << x0 - 6 << "\" y1=\"" << cy << "\" x2=\"" << x0 + 6 << "\" y2=\""
        << cy << "\" stroke=\"#000\" stroke-width=\"2\"/>\n";
  }
  for (std::size_t i = 0; i < be.spine.size(); ++i) {
    svg << "<circle cx=\"" << x0 << "\" cy=\"" << y(coord[i]) << "\" r=\"4\" fill=\"#000\"/>\n";
    svg << "<text x=\"" << x0 + 8 << "\" y=\"" << y(coord[i]) - 6
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << xml_escape(g.name(be.spine[i]))
        << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace hpcc::io
