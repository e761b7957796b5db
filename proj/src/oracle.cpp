#include "hpcc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "hpcc/crossing.hpp"

namespace hpcc {

namespace {

constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();

VertexId vertex_at(std::uint32_t k, std::uint32_t n, std::uint32_t pos) {
  return pos <= k + 1 ? pos : k + 1 + (n - pos);
}

// Non-crossing chord sampling over outer-cycle positions 0..n-1. allow(q, p)
// filters chords between positions q < p.
template <class Allow>
std::vector<std::pair<std::uint32_t, std::uint32_t>> sample_chords(std::uint32_t n,
                                                                   double density,
                                                                   std::mt19937_64& rng,
                                                                   Allow allow) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> chords;
  std::vector<std::uint32_t> stack{0};
  for (std::uint32_t p = 1; p < n; ++p) {
    std::size_t i = stack.size() - 1;
    std::size_t deepest = stack.size();
    while (true) {
      const std::uint32_t q = stack[i];
      const bool adjacent = p - q == 1 || (q == 0 && p == n - 1);
      if (!adjacent && allow(q, p) && coin(rng) < density) {
        chords.emplace_back(q, p);
        deepest = i;
      }
      if (i == 0 || coin(rng) >= density) break;
      --i;
    }
    if (deepest < stack.size()) stack.resize(deepest + 1);
    stack.push_back(p);
  }
  return chords;
}

void check_unit(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw Error(ErrorCode::InfeasibleParams, std::string(what) + " must lie in [0,1]");
  }
}

struct Precedence {
  std::vector<std::uint32_t> need_right;  // per left rank: highest right rank that must precede
  std::vector<std::uint32_t> need_left;   // per right rank
};

Precedence precedence(const OuterplanarStDigraph& g) {
  const std::uint32_t k = g.left_count();
  const std::uint32_t m = g.right_count();
  Precedence p{std::vector<std::uint32_t>(k + 2, 0), std::vector<std::uint32_t>(m + 2, 0)};
  for (std::uint32_t i = 1; i <= k; ++i) {
    for (VertexId u : g.in(g.left(i))) {
      if (g.side(u) == Side::Right) p.need_right[i] = std::max(p.need_right[i], g.rank(u));
    }
  }
  for (std::uint32_t j = 1; j <= m; ++j) {
    for (VertexId u : g.in(g.right(j))) {
      if (g.side(u) == Side::Left) p.need_left[j] = std::max(p.need_left[j], g.rank(u));
    }
  }
  return p;
}

std::uint64_t order_cost(const OuterplanarStDigraph& g, const CrossingIndex& index,
                         std::span<const VertexId> order) {
  std::uint64_t cost = 0;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    if (!g.has_edge(order[i], order[i + 1])) cost += index.count(order[i], order[i + 1]);
  }
  return cost;
}

void check_size(const OuterplanarStDigraph& g, std::size_t max_vertices) {
  if (g.vertex_count() > max_vertices) {
    throw Error(ErrorCode::InstanceTooLarge, std::to_string(g.vertex_count()) +
                                                 " vertices exceed the oracle bound of " +
                                                 std::to_string(max_vertices));
  }
}

}  // namespace

OuterplanarStDigraph generate(const GeneratorParams& params) {
  if (params.n < 2) throw Error(ErrorCode::InfeasibleParams, "n must be at least 2");
  check_unit(params.left_fraction, "left_fraction");
  check_unit(params.chord_density, "chord_density");
  const std::uint32_t n = params.n;
  const auto k = static_cast<std::uint32_t>(std::lround(params.left_fraction * (n - 2)));
  const std::uint32_t m = n - 2 - k;
  std::mt19937_64 rng(params.seed);

  auto chords = sample_chords(n, params.chord_density, rng,
                              [](std::uint32_t, std::uint32_t) { return true; });

  // Height of each vertex in a uniformly random interleaving of the sides.
  std::vector<std::uint32_t> height(n);
  height[0] = 0;
  height[k + 1] = n - 1;
  std::uint32_t li = 1, rj = 1, h = 1;
  while (li <= k || rj <= m) {
    const std::uint32_t left_rest = k - li + 1;
    const std::uint32_t right_rest = m - rj + 1;
    std::uniform_int_distribution<std::uint32_t> pick(0, left_rest + right_rest - 1);
    if (pick(rng) < left_rest) {
      height[li++] = h++;
    } else {
      height[k + 1 + rj++] = h++;
    }
  }

  std::vector<Edge> edges = boundary_edges(k, m);
  edges.reserve(edges.size() + chords.size());
  for (const auto& [q, p] : chords) {
    VertexId a = vertex_at(k, n, q);
    VertexId b = vertex_at(k, n, p);
    if (height[a] > height[b]) std::swap(a, b);
    edges.push_back({a, b});
  }
  return build_graph(k, m, std::move(edges));
}

OuterplanarStDigraph generate_st_polygon(std::uint32_t n, double left_fraction,
                                         double chord_density, bool strong,
                                         std::uint64_t seed) {
  if (n < 4) throw Error(ErrorCode::InfeasibleParams, "an st-polygon needs 4 vertices");
  check_unit(left_fraction, "left_fraction");
  check_unit(chord_density, "chord_density");
  auto k = static_cast<std::uint32_t>(std::lround(left_fraction * (n - 2)));
  k = std::clamp<std::uint32_t>(k, 1, n - 3);
  const std::uint32_t m = n - 2 - k;
  std::mt19937_64 rng(seed);
  const std::uint32_t t_pos = k + 1;
  // Positions 0..k+1 are s, left, t; positions k+1..n-1 and 0 are t, right, s.
  auto allow = [&](std::uint32_t q, std::uint32_t p) {
    if (q == 0 && p == t_pos) return false;
    const bool left_chord = p <= t_pos;
    const bool right_chord = q >= t_pos || q == 0;
    return left_chord || right_chord;
  };
  auto chords = sample_chords(n, chord_density, rng, allow);
  std::vector<Edge> edges = boundary_edges(k, m);
  for (const auto& [q, p] : chords) {
    VertexId a = vertex_at(k, n, q);
    VertexId b = vertex_at(k, n, p);
    // Positions grow upward on the left and downward on the right.
    if (p > t_pos && q != 0) std::swap(a, b);
    edges.push_back({a, b});
  }
  if (strong) edges.push_back({0, k + 1});
  return build_graph(k, m, std::move(edges));
}

void enumerate_hamiltonian_orders(const OuterplanarStDigraph& g,
                                  const std::function<bool(std::span<const VertexId>)>& visit) {
  const std::uint32_t k = g.left_count();
  const std::uint32_t m = g.right_count();
  const Precedence prec = precedence(g);
  std::vector<VertexId> order;
  order.reserve(g.vertex_count());
  order.push_back(g.source());
  bool stop = false;
  std::function<void(std::uint32_t, std::uint32_t)> dfs = [&](std::uint32_t i, std::uint32_t j) {
    if (stop) return;
    if (i == k && j == m) {
      order.push_back(g.sink());
      if (!visit(order)) stop = true;
      order.pop_back();
      return;
    }
    if (i < k && prec.need_right[i + 1] <= j) {
      order.push_back(g.left(i + 1));
      dfs(i + 1, j);
      order.pop_back();
    }
    if (j < m && prec.need_left[j + 1] <= i) {
      order.push_back(g.right(j + 1));
      dfs(i, j + 1);
      order.pop_back();
    }
  };
  dfs(0, 0);
}

std::uint64_t count_hamiltonian_orders(const OuterplanarStDigraph& g) {
  std::uint64_t count = 0;
  enumerate_hamiltonian_orders(g, [&](std::span<const VertexId>) {
    ++count;
    return true;
  });
  return count;
}

OracleResult brute_force_optimal(const OuterplanarStDigraph& g, std::size_t max_vertices) {
  check_size(g, max_vertices);
  const CrossingIndex index(g);
  OracleResult best{kInf, {}};
  enumerate_hamiltonian_orders(g, [&](std::span<const VertexId> order) {
    const std::uint64_t cost = order_cost(g, index, order);
    if (cost < best.crossings) best = {cost, {order.begin(), order.end()}};
    return true;
  });
  return best;
}

std::optional<OracleResult> brute_force_restricted(const OuterplanarStDigraph& g,
                                                   std::uint32_t max_per_edge,
                                                   std::size_t max_vertices) {
  check_size(g, max_vertices);
  const CrossingIndex index(g);
  const auto& edges = g.edges();
  std::optional<OracleResult> best;
  std::vector<std::uint32_t> hits(edges.size());
  std::vector<Edge> crossed;
  enumerate_hamiltonian_orders(g, [&](std::span<const VertexId> order) {
    std::fill(hits.begin(), hits.end(), 0);
    std::uint64_t cost = 0;
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
      if (g.has_edge(order[i], order[i + 1])) continue;
      crossed.clear();
      index.append_crossed(order[i], order[i + 1], crossed);
      for (const Edge& e : crossed) {
        const auto at = std::lower_bound(edges.begin(), edges.end(), e) - edges.begin();
        if (++hits[at] > max_per_edge) return true;
      }
      cost += crossed.size();
    }
    if (!best || cost < best->crossings) best = OracleResult{cost, {order.begin(), order.end()}};
    return true;
  });
  return best;
}

std::uint64_t reference_optimal(const OuterplanarStDigraph& g) {
  const std::uint32_t k = g.left_count();
  const std::uint32_t m = g.right_count();
  const CrossingIndex index(g);
  const Precedence prec = precedence(g);
  auto pair_cost = [&](VertexId u, VertexId v) -> std::uint64_t {
    return g.has_edge(u, v) ? 0 : index.count(u, v);
  };
  auto at = [&](std::uint32_t i, std::uint32_t j, int side) {
    return (std::size_t{i} * (m + 1) + j) * 2 + static_cast<std::size_t>(side);
  };
  std::vector<std::uint64_t> cost((std::size_t{k} + 1) * (m + 1) * 2, kInf);
  cost[at(0, 0, 0)] = 0;
  cost[at(0, 0, 1)] = 0;
  for (std::uint32_t i = 0; i <= k; ++i) {
    for (std::uint32_t j = 0; j <= m; ++j) {
      for (int side = 0; side < 2; ++side) {
        const std::uint64_t c = cost[at(i, j, side)];
        if (c == kInf) continue;
        VertexId last = g.source();
        if (side == 0 && i > 0) last = g.left(i);
        if (side == 1 && j > 0) last = g.right(j);
        if (i < k && prec.need_right[i + 1] <= j) {
          auto& next = cost[at(i + 1, j, 0)];
          next = std::min(next, c + pair_cost(last, g.left(i + 1)));
        }
        if (j < m && prec.need_left[j + 1] <= i) {
          auto& next = cost[at(i, j + 1, 1)];
          next = std::min(next, c + pair_cost(last, g.right(j + 1)));
        }
      }
    }
  }
  return std::min(cost[at(k, m, 0)], cost[at(k, m, 1)]);
}

}  // namespace hpcc
