#include "hpcc/dp_solver.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hpcc {

namespace {

bool shares_edge(const DecompositionElement* prev, const DecompositionElement& cur) {
  return prev && prev->is_polygon() && cur.is_polygon() && prev->polygon.upper_limit &&
         prev->polygon.upper_limit == cur.polygon.lower_limit;
}

struct Term {
  Cost base;
  Side previous;
  Channel channel;
  bool plus_one;
};

void pick(const std::vector<Term>& terms, const PolygonCosts& pc, Cost& out, DpBack& back) {
  bool first = true;
  for (const Term& t : terms) {
    const Cost c = add_cost(add_cost(t.base, pc.cost(t.channel)), t.plus_one ? 1 : 0);
    if (first || c < out) {
      out = c;
      back = {t.previous, t.channel, pc.split(t.channel), t.plus_one};
      first = false;
    }
  }
}

// Splices the channel path q of the current polygon onto the prefix.
void append_polygon(std::vector<VertexId>& path, const StPolygon& p, const std::vector<VertexId>& q,
                    bool shared_edge) {
  if (!shared_edge) {
    path.insert(path.end(), q.begin() + (path.back() == q.front() ? 1 : 0), q.end());
    return;
  }
  // The prefix ends u, A, t_i and the channel is u, B, t_i, rest: the
  // spliced path visits B before A.
  const VertexId u = p.source;
  const VertexId ti = path.back();
  auto iu = std::find(path.rbegin(), path.rend(), u);
  if (iu == path.rend()) throw std::logic_error("shared-edge source missing from prefix");
  const std::size_t at = static_cast<std::size_t>(path.rend() - iu) - 1;
  std::vector<VertexId> a(path.begin() + static_cast<std::ptrdiff_t>(at) + 1, path.end() - 1);
  const auto it = std::find(q.begin(), q.end(), ti);
  if (it == q.end()) throw std::logic_error("shared-edge sink missing from channel");
  path.resize(at + 1);
  path.insert(path.end(), q.begin() + 1, it);
  path.insert(path.end(), a.begin(), a.end());
  path.insert(path.end(), it, q.end());
}

}  // namespace

std::vector<DpCell> dp_table(const OuterplanarStDigraph& g, const StPolygonDecomposition& d,
                             const CrossingIndex& index) {
  std::vector<DpCell> cells(d.elements.size());
  const DecompositionElement* prev = nullptr;
  for (std::size_t i = 0; i < d.elements.size(); ++i) {
    const DecompositionElement& e = d.elements[i];
    DpCell& cell = cells[i];
    const DpCell* before = i > 0 ? &cells[i - 1] : nullptr;
    // Ties between the two prefix sides go to the left.
    const Side best_prev =
        before && before->cR < before->cL ? Side::Right : Side::Left;
    const Cost base = before ? std::min(before->cL, before->cR) : 0;
    std::optional<Side> from;
    if (before) from = best_prev;

    if (!e.is_polygon()) {
      cell.cL = cell.cR = base;
      cell.backL.previous = cell.backR.previous = from;
    } else {
      const PolygonCosts pc = polygon_costs(g, index, e.polygon);
      if (shares_edge(prev, e)) {
        cell.shares_edge = true;
        const bool ti_left = g.side(prev->polygon.sink) == Side::Left;
        const Cost gl = before->cL, gr = before->cR;
        pick({{gl, Side::Left, Channel::OneLeft, ti_left},
              {gr, Side::Right, Channel::OneLeft, false},
              {gl, Side::Left, Channel::TwoLeft, false},
              {gr, Side::Right, Channel::TwoLeft, !ti_left}},
             pc, cell.cL, cell.backL);
        pick({{gl, Side::Left, Channel::OneRight, false},
              {gr, Side::Right, Channel::OneRight, !ti_left},
              {gl, Side::Left, Channel::TwoRight, ti_left},
              {gr, Side::Right, Channel::TwoRight, false}},
             pc, cell.cR, cell.backR);
      } else {
        const Channel ml = pc.best_on(Side::Left);
        const Channel mr = pc.best_on(Side::Right);
        cell.cL = add_cost(base, pc.cost(ml));
        cell.cR = add_cost(base, pc.cost(mr));
        cell.backL = {from, ml, pc.split(ml), false};
        cell.backR = {from, mr, pc.split(mr), false};
      }
    }
    prev = &e;
  }
  return cells;
}

CompletionSolution solve(const OuterplanarStDigraph& g) {
  const StPolygonDecomposition d = decompose(g);
  const CrossingIndex index(g);
  const std::vector<DpCell> cells = dp_table(g, d, index);

  Cost expected = 0;
  std::vector<Side> sides(cells.size(), Side::Left);
  if (!cells.empty()) {
    // The final tie goes to the right.
    Side side = cells.back().cR <= cells.back().cL ? Side::Right : Side::Left;
    expected = std::min(cells.back().cL, cells.back().cR);
    for (std::size_t i = cells.size(); i-- > 0;) {
      sides[i] = side;
      const DpBack& back = side == Side::Left ? cells[i].backL : cells[i].backR;
      if (back.previous) side = *back.previous;
    }
  }

  std::vector<VertexId> path{g.source()};
  path.reserve(g.vertex_count());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const DecompositionElement& e = d.elements[i];
    if (!e.is_polygon()) {
      path.push_back(e.vertex);
      continue;
    }
    const DpBack& back = sides[i] == Side::Left ? cells[i].backL : cells[i].backR;
    append_polygon(path, e.polygon, channel_path(e.polygon, back.channel, back.split),
                   cells[i].shares_edge);
  }
  if (path.back() != g.sink()) path.push_back(g.sink());

  CompletionSolution sol;
  sol.hamiltonian_order = std::move(path);
  SolutionCrossings sc;
  try {
    sc = solution_crossings(g, index, sol.hamiltonian_order);
  } catch (const Error& err) {
    throw std::logic_error(std::string("reconstructed order is invalid: ") + err.what());
  }
  if (sc.total != expected) {
    throw std::logic_error("reconstructed order has " + std::to_string(sc.total) +
                           " crossings, the program predicted " + std::to_string(expected));
  }
  sol.completion_edges = std::move(sc.completion_edges);
  sol.records = std::move(sc.records);
  sol.total_crossings = sc.total;
  return sol;
}

VerifyReport check_solution_consistency(const OuterplanarStDigraph& g, const CompletionSolution& sol) {
  VerifyReport report;
  auto fail = [&](std::string msg) {
    report.valid = false;
    report.problems.push_back(std::move(msg));
  };

  SolutionCrossings sc;
  try {
    sc = solution_crossings(g, sol.hamiltonian_order);
  } catch (const Error& err) {
    fail(err.what());
    return report;
  }
  if (sc.completion_edges != sol.completion_edges) {
    fail("completion edges differ from the gaps of the order");
  }
  if (sol.total_crossings != sol.records.size()) {
    fail("total_crossings " + std::to_string(sol.total_crossings) + " but " +
         std::to_string(sol.records.size()) + " records");
  }
  if (sc.records != sol.records) fail("crossing records differ from a recomputation");
  if (sc.total != sol.total_crossings) {
    fail("recomputed total " + std::to_string(sc.total) + " differs from " +
         std::to_string(sol.total_crossings));
  }
  return report;
}


VerifyReport verify_solution(const OuterplanarStDigraph& g, const CompletionSolution& sol) {
  VerifyReport report = check_solution_consistency(g, sol);
  if (!report.valid) return report;
  auto fail = [&](std::string msg) {
    report.valid = false;
    report.problems.push_back(std::move(msg));
  };
  auto edge_name = [&](VertexId a, VertexId b) {
    return "(" + g.name(a) + "," + g.name(b) + ")";
  };

  std::map<Edge, std::vector<CompletionEdge>> hits;
  for (const CrossingRecord& r : sol.records) hits[r.crossed_edge].push_back(r.completion_edge);
  for (const auto& [e, by] : hits) {
    if (by.size() > 2) {
      fail("edge " + edge_name(e.from, e.to) + " crossed " + std::to_string(by.size()) +
           " times");
    }
  }
  for (const DecompositionElement& el : decompose(g).elements) {
    if (!el.is_polygon() || !el.polygon.upper_limit) continue;
    const Edge lim = *el.polygon.upper_limit;
    const auto it = hits.find(lim);
    if (it == hits.end()) continue;
    if (it->second.size() > 1) {
      fail("upper limiting edge " + edge_name(lim.from, lim.to) + " crossed " +
           std::to_string(it->second.size()) + " times");
    }
    std::uint32_t lo = g.cyclic_position(lim.from), hi = g.cyclic_position(lim.to);
    if (lo > hi) std::swap(lo, hi);
    for (const CompletionEdge& ce : it->second) {
      const std::uint32_t p = g.cyclic_position(ce.to);
      // The arc strictly between the ends of a two-sided chord holds t.
      if (lo < p && p < hi) {
        fail("completion edge " + edge_name(ce.from, ce.to) + " leaves across " +
             edge_name(lim.from, lim.to));
      }
    }
  }

  try {
    const HpExtendedGraph h = build_hp_extended(g, sol.hamiltonian_order);
    if (auto defect = hp_extended_defect(h)) fail("HP-extended graph: " + *defect);
  } catch (const Error& err) {
    fail(err.what());
  }
  return report;
}

}  // namespace hpcc
