#include <gtest/gtest.h>

#include <random>

#include "achroma/coloring.hpp"
#include "achroma/generators.hpp"
#include "achroma/girth.hpp"
#include "achroma/graph.hpp"
#include "oracles.hpp"

using namespace achroma;

namespace {

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::ParseError;
}

std::vector<VertexLabel> xs(int n) {
  std::vector<VertexLabel> out;
  for (int i = 1; i <= n; ++i) out.push_back(lab(Family::x, i));
  return out;
}

}  // namespace

TEST(BuildGraph, CompleteGraphOnFourLabels) {
  auto l = xs(4);
  std::vector<std::pair<VertexLabel, VertexLabel>> es;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) es.emplace_back(l[a], l[b]);
  auto g = build_graph(l, es);
  EXPECT_EQ(g.n(), 4u);
  EXPECT_EQ(g.m(), 6u);
  for (VertexId v = 0; v < 4; ++v) EXPECT_EQ(g.degree(v), 3u);
}

TEST(BuildGraph, SingleVertex) {
  auto g = build_graph({lab(Family::x, 1)}, {});
  EXPECT_EQ(g.n(), 1u);
  EXPECT_EQ(g.m(), 0u);
}

TEST(BuildGraph, Errors) {
  auto l = xs(4);
  EXPECT_EQ(code_of([&] { build_graph(l, {{l[0], l[1]}, {l[0], l[1]}}); }), ErrorCode::DuplicateEdge);
  EXPECT_EQ(code_of([&] { build_graph(l, {{l[0], l[1]}, {l[1], l[0]}}); }), ErrorCode::DuplicateEdge);
  EXPECT_EQ(code_of([&] { build_graph({l[0], l[0]}, {}); }), ErrorCode::DuplicateLabel);
  EXPECT_EQ(code_of([&] { build_graph(l, {{l[0], lab(Family::u, 9)}}); }), ErrorCode::UnknownEndpoint);
  EXPECT_EQ(code_of([&] { build_graph(l, {{l[2], l[2]}}); }), ErrorCode::LoopEdge);
}

TEST(Graph, LookupAndLabels) {
  auto g = build_graph({lab(Family::u, 3), lab(Family::v, 1)}, {{lab(Family::v, 1), lab(Family::u, 3)}});
  EXPECT_EQ(g.id(lab(Family::v, 1)), 1);
  EXPECT_FALSE(g.find(lab(Family::w, 1)).has_value());
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_EQ(g.label(0).name(), "u3");
  EXPECT_EQ(plain(7).name(), "7");
  EXPECT_EQ(parse_family("z"), Family::z);
  EXPECT_EQ(parse_family(""), Family::plain);
  EXPECT_FALSE(parse_family("q").has_value());
}

TEST(Graph, Components) {
  auto g = Graph::from_ids(plain_labels(5), {{0, 1}, {3, 4}});
  std::vector<int> comp;
  EXPECT_EQ(components(g, comp), 3u);
  EXPECT_EQ(comp[0], comp[1]);
  EXPECT_NE(comp[1], comp[2]);
  EXPECT_FALSE(is_connected(g));
  EXPECT_TRUE(is_connected(complete_graph(3)));
  auto h = edge_filter(complete_graph(4), [](const Edge& e) { return e.first == 0; });
  EXPECT_EQ(h.m(), 3u);
}

TEST(Coloring, ProperExamples) {
  EXPECT_TRUE(is_proper(complete_graph(4), Coloring({0, 1, 2, 3})));
  EXPECT_FALSE(is_proper(complete_graph(2), Coloring({0, 0})));
  EXPECT_TRUE(is_proper(cycle_graph(4), Coloring({0, 1, 0, 1})));
}

TEST(Coloring, CompleteExamples) {
  EXPECT_TRUE(is_complete(complete_graph(4), Coloring({0, 1, 2, 3})));
  EXPECT_TRUE(is_complete(cycle_graph(4), Coloring({0, 1, 0, 1})));
  EXPECT_FALSE(is_complete(path_graph(3), Coloring({0, 1, 2})));
}

TEST(Coloring, Errors) {
  EXPECT_EQ(code_of([] { Coloring({0, 2}); }), ErrorCode::NotSurjective);
  EXPECT_EQ(code_of([] { Coloring({0, -1}); }), ErrorCode::InvalidParameter);
  EXPECT_EQ(code_of([] { is_proper(complete_graph(3), Coloring({0, 1})); }), ErrorCode::DomainMismatch);
  EXPECT_EQ(code_of([] { is_complete(complete_graph(3), Coloring({0, 1})); }), ErrorCode::DomainMismatch);
}

TEST(Coloring, PairCensusCountsMultiplicity) {
  auto census = pair_census(cycle_graph(4), Coloring({0, 1, 0, 1}));
  EXPECT_EQ(census[0][1], 4u);
  EXPECT_EQ(census[1][0], 4u);
  EXPECT_FALSE(pairs_realized_once(cycle_graph(4), Coloring({0, 1, 0, 1})));
  EXPECT_TRUE(pairs_realized_once(complete_graph(5), Coloring({0, 1, 2, 3, 4})));
}

TEST(Coloring, AgreesWithOracleOnRandomColorings) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + trial % 8;
    auto g = oracle::random_graph(n, 0.5, rng);
    int k = 1 + static_cast<int>(rng() % n);
    std::vector<int> c(n);
    for (int v = 0; v < n; ++v) c[v] = v < k ? v : static_cast<int>(rng() % k);
    std::shuffle(c.begin(), c.end(), rng);
    Coloring col(c);
    EXPECT_EQ(is_proper(g, col), oracle::proper(g, c));
    EXPECT_EQ(is_complete(g, col), oracle::complete(g, c, k));
  }
}

TEST(Girth, Examples) {
  EXPECT_EQ(girth(complete_graph(4)), 3u);
  EXPECT_EQ(girth(cycle_graph(5)), 5u);
  EXPECT_EQ(girth(complete_bipartite(2, 4)), 4u);
  EXPECT_EQ(girth(path_graph(6)), kInfiniteGirth);
  EXPECT_TRUE(has_triangle(complete_graph(3)));
  EXPECT_FALSE(has_triangle(complete_bipartite(3, 3)));
}

TEST(Girth, AgreesWithEdgeDeletionOracle) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 400; ++trial) {
    auto g = oracle::random_graph(3 + trial % 10, 0.15 + 0.05 * (trial % 6), rng);
    EXPECT_EQ(girth(g), oracle::girth(g));
    EXPECT_EQ(has_triangle(g), oracle::girth(g) == 3);
  }
}
