#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "hpcc/decomposition.hpp"
#include "hpcc/fixtures.hpp"
#include "hpcc/oracle.hpp"
#include "test_util.hpp"

using namespace hpcc;
using hpcc::testing::edge;
using hpcc::testing::id;
using hpcc::testing::ids;
using hpcc::testing::names;
using hpcc::testing::reaches;

namespace {

std::vector<VertexId> vertex_set(const StPolygon& p) {
  std::vector<VertexId> vs{p.source, p.sink};
  vs.insert(vs.end(), p.left_vertices.begin(), p.left_vertices.end());
  vs.insert(vs.end(), p.right_vertices.begin(), p.right_vertices.end());
  std::sort(vs.begin(), vs.end());
  return vs;
}

std::vector<std::uint32_t> topo_numbers(const OuterplanarStDigraph& g) {
  std::vector<std::uint32_t> num(g.vertex_count());
  const auto order = topological_order(g);
  for (std::uint32_t i = 0; i < order.size(); ++i) num[order[i]] = i;
  return num;
}

OuterplanarStDigraph corpus_graph(std::uint64_t seed) {
  return generate({static_cast<std::uint32_t>(4 + seed % 14), (seed % 7) / 6.0,
                   0.3 + (seed % 3) * 0.3, seed});
}

}  // namespace

TEST(MedianCandidates, Examples) {
  auto sr = fixtures::strong_rhombus();
  auto c = median_candidates(sr);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].median, edge(sr, "s", "t"));
  EXPECT_EQ(c[0].rhombus.left_witness, id(sr, "a"));
  EXPECT_EQ(c[0].rhombus.right_witness, id(sr, "b"));
  EXPECT_FALSE(c[0].lower_limit.has_value());
  EXPECT_FALSE(c[0].upper_limit.has_value());

  auto two = fixtures::two_strong_rhombi();
  c = median_candidates(two);
  ASSERT_EQ(c.size(), 2u);
  std::sort(c.begin(), c.end(),
            [](const MedianCandidate& x, const MedianCandidate& y) { return x.median < y.median; });
  EXPECT_EQ(c[0].median, edge(two, "s", "m"));
  EXPECT_EQ(c[0].rhombus.left_witness, id(two, "a"));
  EXPECT_EQ(c[0].rhombus.right_witness, id(two, "b"));
  EXPECT_EQ(c[0].upper_limit, edge(two, "b", "m"));
  EXPECT_EQ(c[1].median, edge(two, "m", "t"));
  EXPECT_EQ(c[1].rhombus.left_witness, id(two, "c"));
  EXPECT_EQ(c[1].rhombus.right_witness, id(two, "d"));
  EXPECT_EQ(c[1].lower_limit, edge(two, "m", "d"));

  EXPECT_TRUE(median_candidates(fixtures::weak_rhombus()).empty());
}

TEST(WeakPolygonSeeds, Examples) {
  auto wr = fixtures::weak_rhombus();
  auto seeds = weak_polygon_seeds(wr);
  ASSERT_EQ(seeds.size(), 1u);
  EXPECT_EQ(names(wr, seeds[0].face.boundary), (std::vector<std::string>{"s", "a", "t", "b"}));
  EXPECT_FALSE(seeds[0].lower_limit.has_value());
  EXPECT_FALSE(seeds[0].upper_limit.has_value());
  EXPECT_TRUE(weak_polygon_seeds(fixtures::strong_rhombus()).empty());
}

TEST(WeakPolygonSeeds, LimitsAreFirstOutAndLastIn) {
  // Rhombus u=l1 -> v=r3 with u reaching r1 and r2, and l3, l2 entering v.
  auto g = build_graph({"l1", "l2", "l3"}, {"r1", "r2", "r3", "r4"},
                       {{"s", "l1"}, {"l1", "l2"}, {"l2", "l3"}, {"l3", "t"},
                        {"s", "r1"}, {"r1", "r2"}, {"r2", "r3"}, {"r3", "r4"}, {"r4", "t"},
                        {"l1", "r1"}, {"l1", "r2"}, {"l2", "r3"}, {"l3", "r3"}});
  auto seeds = weak_polygon_seeds(g);
  ASSERT_EQ(seeds.size(), 1u);
  EXPECT_EQ(seeds[0].rhombus.source, id(g, "l1"));
  EXPECT_EQ(seeds[0].rhombus.sink, id(g, "r3"));
  EXPECT_EQ(seeds[0].lower_limit, edge(g, "l1", "r1"));
  EXPECT_EQ(seeds[0].upper_limit, edge(g, "l3", "r3"));
  auto p = grow_polygon(g, id(g, "l1"), id(g, "r3"), false);
  EXPECT_EQ(names(g, p.left_vertices), (std::vector<std::string>{"l2", "l3"}));
  EXPECT_EQ(names(g, p.right_vertices), (std::vector<std::string>{"r1", "r2"}));
}

TEST(Decompose, Examples) {
  auto sr = fixtures::strong_rhombus();
  auto d = decompose(sr);
  ASSERT_EQ(d.lambda(), 1u);
  ASSERT_TRUE(d.elements[0].is_polygon());
  const StPolygon& p = d.elements[0].polygon;
  EXPECT_EQ(p.source, sr.source());
  EXPECT_EQ(p.sink, sr.sink());
  EXPECT_EQ(p.left_vertices, ids(sr, {"a"}));
  EXPECT_EQ(p.right_vertices, ids(sr, {"b"}));
  EXPECT_TRUE(p.median_present);
  EXPECT_EQ(d.elements[0].representative, sr.source());

  auto path = fixtures::single_path();
  d = decompose(path);
  ASSERT_EQ(d.lambda(), 1u);
  EXPECT_FALSE(d.elements[0].is_polygon());
  EXPECT_EQ(d.elements[0].vertex, id(path, "a"));

  auto two = fixtures::two_strong_rhombi();
  d = decompose(two);
  ASSERT_EQ(d.lambda(), 2u);
  ASSERT_TRUE(d.elements[0].is_polygon() && d.elements[1].is_polygon());
  const auto& a = d.elements[0].polygon;
  const auto& b = d.elements[1].polygon;
  EXPECT_EQ(a.source, two.source());
  EXPECT_EQ(a.sink, id(two, "m"));
  EXPECT_EQ(b.source, id(two, "m"));
  EXPECT_EQ(b.sink, two.sink());
  std::vector<VertexId> common;
  auto va = vertex_set(a), vb = vertex_set(b);
  std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(common));
  EXPECT_EQ(common, ids(two, {"m"}));

  auto wr = fixtures::weak_rhombus();
  d = decompose(wr);
  ASSERT_EQ(d.lambda(), 1u);
  EXPECT_FALSE(d.elements[0].polygon.median_present);
}

TEST(Decompose, EachPolygonHoldsExactlyOneRhombus) {
  for (std::uint64_t seed = 0; seed < 1500; ++seed) {
    auto g = corpus_graph(seed);
    for (const auto& e : decompose(g).elements) {
      if (!e.is_polygon()) continue;
      const StPolygon& p = e.polygon;
      ASSERT_GE(p.size(), 4u);
      auto pg = polygon_graph(g, p);
      auto fs = inner_faces(pg);
      const auto strong = medians(pg, fs).size();
      const auto weak = weak_rhombus_faces(pg, fs).size();
      EXPECT_EQ(strong + weak, 1u) << "seed " << seed;
      EXPECT_EQ(strong == 1, p.median_present) << "seed " << seed;
      // The only two-sided edge inside is the median.
      std::size_t two_sided = 0;
      for (const Edge& x : pg.edges()) {
        if (classify_edge(pg, x) == EdgeClass::TwoSided) ++two_sided;
      }
      EXPECT_EQ(two_sided, 0u) << "seed " << seed;
    }
  }
}

TEST(Decompose, StructuralInvariants) {
  std::size_t free_seen = 0, shared_edges = 0;
  for (std::uint64_t seed = 0; seed < 3000; ++seed) {
    auto g = corpus_graph(seed);
    const auto d = decompose(g);
    const auto num = topo_numbers(g);

    // Sorted strictly by representative.
    for (std::size_t i = 0; i + 1 < d.lambda(); ++i) {
      ASSERT_LT(num[d.elements[i].representative], num[d.elements[i + 1].representative])
          << "seed " << seed;
    }

    // Coverage: every interior vertex is in a polygon or is free, never both;
    // s and t are never free.
    std::vector<std::size_t> in_polygons(g.vertex_count(), 0), free(g.vertex_count(), 0);
    std::vector<std::vector<VertexId>> sets;
    for (const auto& e : d.elements) {
      if (e.is_polygon()) {
        EXPECT_EQ(e.representative, e.polygon.source);
        sets.push_back(vertex_set(e.polygon));
        for (VertexId v : sets.back()) ++in_polygons[v];
      } else {
        EXPECT_EQ(e.representative, e.vertex);
        ASSERT_TRUE(g.is_interior(e.vertex));
        ++free[e.vertex];
        ++free_seen;
      }
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (!g.is_interior(v)) continue;
      EXPECT_EQ((in_polygons[v] > 0) + free[v], 1u) << "seed " << seed << " v " << v;
    }

    // Area-disjointness: two polygons meet in at most one vertex, or in the
    // edge (next source, previous sink) when they are consecutive.
    for (std::size_t i = 0; i < sets.size(); ++i) {
      for (std::size_t j = i + 1; j < sets.size(); ++j) {
        std::vector<VertexId> common;
        std::set_intersection(sets[i].begin(), sets[i].end(), sets[j].begin(), sets[j].end(),
                              std::back_inserter(common));
        ASSERT_LE(common.size(), 2u) << "seed " << seed;
      }
    }
    const StPolygon* prev = nullptr;
    for (const auto& e : d.elements) {
      if (!e.is_polygon()) continue;
      const StPolygon& cur = e.polygon;
      if (prev) {
        auto a = vertex_set(*prev), b = vertex_set(cur);
        std::vector<VertexId> common;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                              std::back_inserter(common));
        if (common.size() == 2) {
          ++shared_edges;
          EXPECT_TRUE(g.has_edge(cur.source, prev->sink)) << "seed " << seed;
          EXPECT_EQ(prev->upper_limit, cur.lower_limit) << "seed " << seed;
        } else if (common.size() == 1) {
          EXPECT_EQ(common[0], prev->sink) << "seed " << seed;
          EXPECT_EQ(common[0], cur.source) << "seed " << seed;
        }
      }
      prev = &cur;
    }
  }
  EXPECT_GT(free_seen, 100u);
  EXPECT_GT(shared_edges, 10u);
}

TEST(Decompose, FreeVertexPathsAndGapGraphs) {
  std::size_t gaps = 0, nonempty = 0;
  for (std::uint64_t seed = 0; seed < 3000; ++seed) {
    auto g = corpus_graph(seed);
    const auto d = decompose(g);
    // Between consecutive polygons that share no edge (and before the first
    // and after the last), the free vertices together with the limiting
    // edges facing the gap induce a hamiltonian st-digraph.
    const StPolygon* prev = nullptr;
    std::vector<VertexId> run;
    auto close = [&](const StPolygon* next) {
      if (prev && next && prev->upper_limit && prev->upper_limit == next->lower_limit) {
        EXPECT_TRUE(run.empty()) << "seed " << seed;
        return;
      }
      VertexId source = g.source(), sink = g.sink();
      std::vector<VertexId> vs = run;
      if (prev) {
        vs.push_back(prev->sink);
        if (prev->upper_limit) source = prev->upper_limit->from;
      }
      if (next) {
        vs.push_back(next->source);
        if (next->lower_limit) sink = next->lower_limit->to;
      }
      if (prev && !prev->upper_limit) {  // prev ends at t
        EXPECT_TRUE(run.empty() && !next) << "seed " << seed;
        return;
      }
      if (next && !next->lower_limit) {  // next starts at s
        EXPECT_TRUE(run.empty() && !prev) << "seed " << seed;
        return;
      }
      const VertexId from = prev ? prev->sink : g.source();
      const VertexId to = next ? next->source : g.sink();
      for (VertexId v : run) {
        EXPECT_TRUE(reaches(g, from, v)) << "seed " << seed;
        EXPECT_TRUE(reaches(g, v, to)) << "seed " << seed;
      }
      vs.push_back(source);
      vs.push_back(sink);
      ++gaps;
      if (!run.empty()) ++nonempty;
      auto gap = induced_st_subgraph(g, vs, source, sink);
      EXPECT_TRUE(is_hamiltonian(gap)) << "seed " << seed;
    };
    for (const auto& e : d.elements) {
      if (e.is_polygon()) {
        close(&e.polygon);
        run.clear();
        prev = &e.polygon;
      } else {
        run.push_back(e.vertex);
      }
    }
    close(nullptr);
  }
  EXPECT_GT(gaps, 1000u);
  EXPECT_GT(nonempty, 100u);
}

TEST(Decompose, StrongSeedsTakePrecedence) {
  // The strong rhombus minus its median is a weak face; with the median
  // present only the strong polygon is emitted.
  auto d = decompose(fixtures::strong_rhombus());
  ASSERT_EQ(d.lambda(), 1u);
  EXPECT_TRUE(d.elements[0].polygon.median_present);
}

TEST(InducedStSubgraph, RejectsNonStSets) {
  auto wr = fixtures::weak_rhombus();
  const std::vector<VertexId> vs = ids(wr, {"s", "a", "b"});
  EXPECT_THROW(induced_st_subgraph(wr, vs, id(wr, "s"), id(wr, "a")), Error);
}
