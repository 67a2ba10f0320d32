#include <gtest/gtest.h>

#include <random>

#include "achroma/embedding.hpp"
#include "achroma/generators.hpp"
#include "achroma/planarity.hpp"
#include "achroma/platonic.hpp"
#include "oracles.hpp"

using namespace achroma;

namespace {

// Tetrahedron drawn as a triangle 1,2,3 around center 0.
RotationSystem k4_rotation() { return {{{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}}; }

RotationSystem octahedron_rotation() {
  // Faces of K_{2,2,2} with antipodal pairs {0,1}, {2,3}, {4,5}.
  std::vector<FaceWalk> faces;
  for (int a : {0, 1})
    for (int b : {2, 3})
      for (int c : {4, 5}) faces.push_back({a, b, c});
  return rotation_from_faces(6, faces);
}

}  // namespace

TEST(TraceFaces, Tetrahedron) {
  auto tr = trace_faces(complete_graph(4), k4_rotation());
  EXPECT_EQ(tr.f, 4u);
  EXPECT_EQ(tr.euler_characteristic, 2);
}

TEST(TraceFaces, Square) {
  RotationSystem rs{{{1, 3}, {0, 2}, {1, 3}, {0, 2}}};
  auto tr = trace_faces(cycle_graph(4), rs);
  EXPECT_EQ(tr.f, 2u);
  EXPECT_EQ(tr.euler_characteristic, 2);
}

TEST(TraceFaces, Octahedron) {
  auto g = octahedral_graph();
  auto tr = trace_faces(g, octahedron_rotation());
  EXPECT_EQ(tr.f, 8u);
  EXPECT_EQ(tr.euler_characteristic, 2);
}

TEST(TraceFaces, NonPlanarRotationOfK4HasLowerCharacteristic) {
  RotationSystem rs{{{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}};
  auto tr = trace_faces(complete_graph(4), rs);
  EXPECT_EQ(tr.euler_characteristic, 0);
}

TEST(TraceFaces, Errors) {
  RotationSystem bad{{{1, 2}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}};
  try {
    trace_faces(complete_graph(4), bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidRotation);
  }
  auto g = Graph::from_ids(plain_labels(4), {{0, 1}, {2, 3}});
  try {
    trace_faces(g, RotationSystem{{{1}, {0}, {3}, {2}}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DisconnectedGraph);
  }
  auto chis = component_euler_characteristics(g, RotationSystem{{{1}, {0}, {3}, {2}}});
  EXPECT_EQ(chis, (std::vector<long>{2, 2}));
}

TEST(TraceFaces, EdgelessVertex) {
  auto tr = trace_faces(Graph::from_ids(plain_labels(1), {}), RotationSystem{{{}}});
  EXPECT_EQ(tr.f, 1u);
  EXPECT_EQ(tr.euler_characteristic, 2);
}

TEST(Rotation, MirrorKeepsCharacteristic) {
  auto g = octahedral_graph();
  auto rs = mirror(octahedron_rotation());
  EXPECT_EQ(trace_faces(g, rs).euler_characteristic, 2);
  auto h = graph_of_rotation(g.labels(), rs);
  EXPECT_EQ(h.edges(), g.edges());
}

TEST(Planarity, Examples) {
  EXPECT_TRUE(is_planar(complete_graph(4)).planar);
  EXPECT_FALSE(is_planar(complete_graph(5)).planar);
  EXPECT_FALSE(is_planar(complete_bipartite(3, 3)).planar);
  EXPECT_TRUE(is_planar(octahedral_graph()).planar);
  EXPECT_TRUE(is_planar(icosahedral_graph()).planar);
  EXPECT_FALSE(is_outerplanar(complete_graph(4)));
  EXPECT_TRUE(is_outerplanar(edge_filter(complete_graph(4), [](const Edge& e) { return e != Edge{2, 3}; })));
  EXPECT_FALSE(is_outerplanar(complete_bipartite(2, 3)));
  EXPECT_TRUE(is_outerplanar(cycle_graph(7)));
}

TEST(Planarity, WitnessIsGenusZero) {
  for (const auto& e : platonic_table()) {
    auto r = is_planar(e.graph);
    ASSERT_TRUE(r.planar) << e.name;
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_EQ(trace_faces(e.graph, *r.witness).euler_characteristic, 2) << e.name;
    EXPECT_TRUE(certifies_planar(e.graph, *r.witness));
  }
}

TEST(Planarity, AgreesWithExhaustiveRotationSearch) {
  std::mt19937 rng(3);
  int checked = 0;
  for (int trial = 0; trial < 2000 && checked < 150; ++trial) {
    auto g = oracle::random_graph(5 + trial % 3, 0.5, rng);
    if (!is_connected(g)) continue;
    double space = 1;
    for (VertexId v = 0; v < static_cast<VertexId>(g.n()); ++v)
      for (std::size_t f = 2; f < g.degree(v); ++f) space *= static_cast<double>(f);
    if (space > 20000) continue;
    ++checked;
    bool planar = oracle::embeds_in_plane(g);
    EXPECT_EQ(is_planar(g).planar, planar);
    EXPECT_EQ(is_outerplanar(g), oracle::embeds_in_plane(g, true));
  }
  EXPECT_GT(checked, 50);
}

TEST(Planarity, OuterplanarCertificate) {
  RotationSystem cyc{{{1, 3}, {0, 2}, {1, 3}, {0, 2}}};
  EXPECT_TRUE(certifies_outerplanar(cycle_graph(4), cyc));
  EXPECT_FALSE(certifies_outerplanar(complete_graph(4), k4_rotation()));
  EXPECT_TRUE(certifies_planar(complete_graph(4), k4_rotation()));
}

TEST(EmbeddingBuilder, IdentifyTwoTrianglesKeepsSphere) {
  EmbeddingBuilder b;
  RotationSystem tri{{{1, 2}, {2, 0}, {0, 1}}};
  auto a0 = b.append(tri, {0, 1, 2});
  auto b0 = b.append(tri, {0, 3, 4});
  auto fa = b.faces();
  ASSERT_FALSE(fa.empty());
  auto cx = EmbeddingBuilder::corner_on(fa[0], a0);
  FaceWalk guest;
  for (const auto& f : fa)
    if (std::find(f.begin(), f.end(), b0) != f.end()) guest = f;
  auto cy = EmbeddingBuilder::corner_on(guest, b0);
  b.identify(cx, cy);
  auto res = b.finish();
  EXPECT_EQ(res.graph.n(), 5u);
  EXPECT_EQ(res.graph.m(), 6u);
  EXPECT_EQ(trace_faces(res.graph, res.rotation).euler_characteristic, 2);
}

TEST(EmbeddingBuilder, InsertEdgeAcrossFace) {
  EmbeddingBuilder b;
  b.append(RotationSystem{{{1, 3}, {0, 2}, {1, 3}, {0, 2}}}, {0, 1, 2, 3});
  auto f = b.faces()[0];
  b.insert_edge(EmbeddingBuilder::corner_on(f, 0), EmbeddingBuilder::corner_on(f, 2));
  auto res = b.finish();
  EXPECT_EQ(res.graph.m(), 5u);
  EXPECT_EQ(trace_faces(res.graph, res.rotation).f, 3u);
}
