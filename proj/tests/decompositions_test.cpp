#include <gtest/gtest.h>

#include "achroma/decompositions.hpp"
#include "achroma/girth.hpp"
#include "achroma/planarity.hpp"
#include "oracles.hpp"

using namespace achroma;

namespace {

long long binom2(long long n) { return n * (n - 1) / 2; }

// Union of the parts equals E(host) as a multiset: disjoint and covering.
void expect_partition(const Decomposition& d) {
  std::multiset<std::pair<VertexLabel, VertexLabel>> all;
  for (const auto& p : d.parts) {
    auto es = oracle::label_edges(p.graph);
    all.insert(es.begin(), es.end());
  }
  EXPECT_EQ(all, oracle::label_edges(d.host));
}

void expect_genus_zero(const DecompositionPart& p) {
  ASSERT_TRUE(p.rotation.has_value());
  for (long chi : component_euler_characteristics(p.graph, *p.rotation)) EXPECT_EQ(chi, 2);
}

}  // namespace

TEST(PlanarDecompose, SixVertices) {
  auto d = planar_decompose(1, false);
  ASSERT_EQ(d.parts.size(), 2u);
  EXPECT_EQ(d.host.n(), 6u);
  EXPECT_EQ(d.parts[0].graph.n(), 6u);
  EXPECT_EQ(d.parts[0].graph.m(), 12u);
  EXPECT_EQ(d.parts[1].graph.m(), 3u);
  for (VertexId v = 0; v < static_cast<VertexId>(d.parts[1].graph.n()); ++v) EXPECT_EQ(d.parts[1].graph.degree(v), 1u);
  expect_partition(d);
}

TEST(PlanarDecompose, WithJoinVertex) {
  auto d = planar_decompose(1, true);
  EXPECT_EQ(d.host.n(), 7u);
  EXPECT_EQ(d.host.m(), 21u);
  ASSERT_EQ(d.parts.size(), 2u);
  EXPECT_EQ(d.parts[1].graph.m(), 9u);
  auto z = d.parts[1].graph.id({Family::z, 0});
  EXPECT_EQ(d.parts[1].graph.degree(z), 6u);
  expect_partition(d);
}

TEST(PlanarDecompose, PartsArePlanarByTwoMethods) {
  for (int t = 1; t <= 4; ++t)
    for (bool z : {false, true}) {
      SCOPED_TRACE(t);
      auto d = planar_decompose(t, z);
      EXPECT_EQ(static_cast<long long>(d.parts.size()), (binom2(6 * t) + 3 * (6 * t - 2) - 1) / (3 * (6 * t - 2)));
      expect_partition(d);
      for (const auto& p : d.parts) {
        expect_genus_zero(p);
        EXPECT_TRUE(is_planar(p.graph).planar);
      }
      for (std::size_t i = 0; i + 1 < d.parts.size(); ++i) EXPECT_EQ(d.parts[i].graph.m(), 3 * (6u * t) - 6);
    }
}

TEST(OuterplanarDecompose, FourVertices) {
  auto d = outerplanar_decompose(1);
  ASSERT_EQ(d.parts.size(), 2u);
  EXPECT_EQ(d.parts[0].graph.n(), 4u);
  EXPECT_EQ(d.parts[0].graph.m(), 5u);
  EXPECT_TRUE(is_outerplanar(d.parts[0].graph));
  auto m = oracle::label_edges(d.parts[1].graph);
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(*m.begin(), std::make_pair(VertexLabel{Family::u, 1}, VertexLabel{Family::u, 3}));
  expect_partition(d);
}

TEST(OuterplanarDecompose, EightVertices) {
  auto d = outerplanar_decompose(2);
  ASSERT_EQ(d.parts.size(), 3u);
  EXPECT_EQ(d.parts[0].graph.m(), 13u);
  EXPECT_EQ(d.parts[1].graph.m(), 13u);
  EXPECT_EQ(d.parts[2].graph.m(), 2u);
}

TEST(OuterplanarDecompose, PartsAreOuterplanarByTwoMethods) {
  for (int t = 1; t <= 4; ++t) {
    SCOPED_TRACE(t);
    auto d = outerplanar_decompose(t);
    EXPECT_EQ(static_cast<long long>(d.parts.size()), (binom2(4 * t) + (8 * t - 3) - 1) / (8 * t - 3));
    expect_partition(d);
    for (const auto& p : d.parts) {
      ASSERT_TRUE(p.rotation.has_value());
      EXPECT_TRUE(certifies_outerplanar(p.graph, *p.rotation));
      EXPECT_TRUE(is_outerplanar(p.graph));
    }
    for (std::size_t i = 0; i + 1 < d.parts.size(); ++i) EXPECT_EQ(d.parts[i].graph.m(), 2 * (4u * t) - 3);
  }
}

TEST(Girth4Decompose, FourVertices) {
  auto d = girth4_decompose(1);
  ASSERT_EQ(d.parts.size(), 2u);
  EXPECT_EQ(d.parts[0].graph.m(), 4u);
  EXPECT_EQ(girth(d.parts[0].graph), 4u);
  EXPECT_EQ(d.parts[1].graph.m(), 2u);
  auto m = oracle::label_edges(d.parts[1].graph);
  EXPECT_TRUE(m.count({VertexLabel{Family::u, 1}, VertexLabel{Family::v, 1}}));
  EXPECT_TRUE(m.count({VertexLabel{Family::u, 2}, VertexLabel{Family::v, 2}}));
  expect_partition(d);
}

TEST(Girth4Decompose, PartsHaveGirthFourByTwoMethods) {
  for (int t = 1; t <= 4; ++t) {
    SCOPED_TRACE(t);
    auto d = girth4_decompose(t);
    EXPECT_EQ(static_cast<long long>(d.parts.size()), (binom2(4 * t) + 2 * (4 * t - 2) - 1) / (2 * (4 * t - 2)));
    expect_partition(d);
    for (const auto& p : d.parts) {
      expect_genus_zero(p);
      EXPECT_TRUE(is_planar(p.graph).planar);
      EXPECT_GE(girth(p.graph), 4u);
      EXPECT_GE(oracle::girth(p.graph), 4u);
    }
    for (std::size_t i = 0; i + 1 < d.parts.size(); ++i) EXPECT_EQ(d.parts[i].graph.m(), 2 * (4u * t - 2));
  }
  EXPECT_EQ(girth4_decompose(2).parts[2].graph.m(), 4u);
}

TEST(Decompose, RejectsNonPositive) {
  EXPECT_THROW(planar_decompose(0, false), Error);
  EXPECT_THROW(outerplanar_decompose(0), Error);
  EXPECT_THROW(girth4_decompose(-2), Error);
}
