#include <gtest/gtest.h>

#include "hpcc/fixtures.hpp"
#include "hpcc/graph.hpp"
#include "test_util.hpp"

using namespace hpcc;
using hpcc::testing::edge;
using hpcc::testing::id;
using hpcc::testing::ids;
using hpcc::testing::names;

namespace {

ErrorCode build_error(const GraphInput& input) {
  try {
    build_graph(input);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorCode::ParseError;
}

GraphInput wr_input() {
  return {{"a"}, {"b"}, "s", "t", {{"s", "a"}, {"a", "t"}, {"s", "b"}, {"b", "t"}}};
}

}  // namespace

TEST(BuildGraph, WeakRhombusIsValid) {
  auto g = fixtures::weak_rhombus();
  EXPECT_EQ(g.vertex_count(), 4u);
  EXPECT_EQ(g.edge_count(), 4u);
  EXPECT_EQ(g.source(), id(g, "s"));
  EXPECT_EQ(g.sink(), id(g, "t"));
  EXPECT_EQ(g.position(id(g, "a")).side, Side::Left);
  EXPECT_EQ(g.position(id(g, "b")).side, Side::Right);
  EXPECT_EQ(g.position(id(g, "t")).rank, kSinkRank);
}

TEST(BuildGraph, StrongRhombusIsValid) {
  auto g = fixtures::strong_rhombus();
  EXPECT_EQ(g.edge_count(), 5u);
  EXPECT_TRUE(g.has_edge(edge(g, "s", "t")));
}

TEST(BuildGraph, TwoCycleIsRejected) {
  auto in = wr_input();
  in.edges.push_back({"a", "b"});
  in.edges.push_back({"b", "a"});
  EXPECT_EQ(build_error(in), ErrorCode::CycleDetected);
}

TEST(BuildGraph, ReportsEachValidationError) {
  auto dup = wr_input();
  dup.edges.push_back({"s", "a"});
  EXPECT_EQ(build_error(dup), ErrorCode::DuplicateEdge);

  auto unknown = wr_input();
  unknown.edges.push_back({"s", "zz"});
  EXPECT_EQ(build_error(unknown), ErrorCode::UnknownVertex);

  GraphInput extra_source{{"a"}, {"b"}, "s", "t", {{"s", "a"}, {"a", "t"}, {"b", "t"}}};
  EXPECT_EQ(build_error(extra_source), ErrorCode::MultipleSources);

  GraphInput extra_sink{{"a"}, {"b"}, "s", "t", {{"s", "a"}, {"a", "t"}, {"s", "b"}}};
  EXPECT_EQ(build_error(extra_sink), ErrorCode::MultipleSinks);

  GraphInput gap{{"a", "c"}, {"b"}, "s", "t",
                 {{"s", "a"}, {"s", "c"}, {"a", "t"}, {"c", "t"}, {"s", "b"}, {"b", "t"}}};
  EXPECT_EQ(build_error(gap), ErrorCode::SideNotAPath);

  GraphInput no_st{{"a"}, {}, "s", "t", {{"s", "a"}, {"a", "t"}}};
  EXPECT_EQ(build_error(no_st), ErrorCode::SideNotAPath);

  GraphInput crossing{{"a", "c"}, {"b", "d"}, "s", "t",
                      {{"s", "a"}, {"a", "c"}, {"c", "t"}, {"s", "b"}, {"b", "d"},
                       {"d", "t"}, {"a", "d"}, {"b", "c"}}};
  EXPECT_EQ(build_error(crossing), ErrorCode::EmbeddingNotPlane);

  GraphInput twice{{"a"}, {"a"}, "s", "t", {}};
  EXPECT_EQ(build_error(twice), ErrorCode::DuplicateVertex);
}

TEST(BuildGraph, TwoVertexGraph) {
  auto g = build_graph({}, {}, {{"s", "t"}});
  EXPECT_EQ(g.vertex_count(), 2u);
  EXPECT_EQ(names(g, topological_order(g)), (std::vector<std::string>{"s", "t"}));
}

TEST(BuildGraph, RoundTripThroughInput) {
  for (const auto& g : {fixtures::weak_rhombus(), fixtures::strong_rhombus(),
                        fixtures::two_strong_rhombi(), fixtures::sp1(),
                        fixtures::single_path()}) {
    auto again = build_graph(g.to_input());
    EXPECT_EQ(again.edges(), g.edges());
    EXPECT_EQ(again.names(), g.names());
    EXPECT_EQ(again.left_seq(), g.left_seq());
    EXPECT_EQ(again.right_seq(), g.right_seq());
  }
}

TEST(ClassifyEdge, Conventions) {
  auto sr = fixtures::strong_rhombus();
  EXPECT_EQ(classify_edge(sr, edge(sr, "s", "t")), EdgeClass::OneSidedLeft);
  EXPECT_EQ(classify_edge(sr, edge(sr, "s", "b")), EdgeClass::OneSidedRight);
  auto g = build_graph({"a"}, {"b"}, {{"s", "a"}, {"a", "t"}, {"s", "b"}, {"b", "t"}, {"a", "b"}});
  EXPECT_EQ(classify_edge(g, edge(g, "a", "b")), EdgeClass::TwoSided);
  auto wr = fixtures::weak_rhombus();
  EXPECT_EQ(classify_edge(wr, edge(wr, "s", "a")), EdgeClass::OneSidedLeft);
  EXPECT_THROW(classify_edge(wr, edge(wr, "s", "t")), Error);
}

TEST(TopologicalOrder, Examples) {
  auto wr = fixtures::weak_rhombus();
  EXPECT_EQ(names(wr, topological_order(wr)), (std::vector<std::string>{"s", "a", "b", "t"}));
  auto sr = fixtures::strong_rhombus();
  EXPECT_EQ(names(sr, topological_order(sr)), (std::vector<std::string>{"s", "a", "b", "t"}));
  auto p = fixtures::single_path();
  EXPECT_EQ(names(p, topological_order(p)), (std::vector<std::string>{"s", "a", "t"}));
  auto two = fixtures::two_strong_rhombi();
  EXPECT_TRUE(is_linear_extension(two, topological_order(two)));
}

TEST(IsLinearExtension, Examples) {
  auto wr = fixtures::weak_rhombus();
  EXPECT_TRUE(is_linear_extension(wr, ids(wr, {"s", "a", "b", "t"})));
  EXPECT_TRUE(is_linear_extension(wr, ids(wr, {"s", "b", "a", "t"})));
  EXPECT_FALSE(is_linear_extension(wr, ids(wr, {"a", "s", "b", "t"})));
  EXPECT_THROW(is_linear_extension(wr, ids(wr, {"s", "a", "t"})), Error);
  EXPECT_THROW(is_linear_extension(wr, ids(wr, {"s", "a", "a", "t"})), Error);
}
