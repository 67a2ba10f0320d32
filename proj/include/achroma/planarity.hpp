#pragma once

#include <optional>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>
#include <boost/property_map/property_map.hpp>

#include "achroma/embedding.hpp"
#include "achroma/graph.hpp"

namespace achroma {

namespace detail {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;

inline BoostGraph to_boost(const Graph& g, bool apex) {
  BoostGraph bg(g.n() + (apex ? 1 : 0));
  for (auto [a, b] : g.edges()) boost::add_edge(a, b, bg);
  if (apex)
    for (VertexId v = 0; v < static_cast<VertexId>(g.n()); ++v)
      boost::add_edge(v, static_cast<int>(g.n()), bg);
  int k = 0;
  auto eidx = boost::get(boost::edge_index, bg);
  for (auto [it, end] = boost::edges(bg); it != end; ++it) boost::put(eidx, *it, k++);
  return bg;
}

}  // namespace detail

struct PlanarityResult {
  bool planar = false;
  std::optional<RotationSystem> witness;

  explicit operator bool() const { return planar; }
};

// Edge-addition planarity test; on success the witness is the combinatorial embedding.
inline PlanarityResult is_planar(const Graph& g) {
  using namespace boost;
  auto bg = detail::to_boost(g, false);
  using EdgeDesc = graph_traits<detail::BoostGraph>::edge_descriptor;
  std::vector<std::vector<EdgeDesc>> emb(num_vertices(bg));
  bool ok = boyer_myrvold_planarity_test(
      boyer_myrvold_params::graph = bg,
      boyer_myrvold_params::embedding = make_iterator_property_map(emb.begin(), get(vertex_index, bg)));
  PlanarityResult r;
  r.planar = ok;
  if (!ok) return r;
  RotationSystem rs;
  rs.rotation.resize(g.n());
  for (std::size_t v = 0; v < g.n(); ++v)
    for (const auto& e : emb[v]) {
      auto s = static_cast<VertexId>(source(e, bg)), t = static_cast<VertexId>(target(e, bg));
      rs.rotation[v].push_back(s == static_cast<VertexId>(v) ? t : s);
    }
  r.witness = std::move(rs);
  return r;
}

// Apex reduction: outerplanar iff adding a universal vertex keeps the graph planar.
inline bool is_outerplanar(const Graph& g) {
  auto bg = detail::to_boost(g, true);
  return boost::boyer_myrvold_planarity_test(bg);
}

// Certificate side: every component of the rotation traces to Euler characteristic 2.
inline bool certifies_planar(const Graph& g, const RotationSystem& rs) {
  try {
    for (long chi : component_euler_characteristics(g, rs))
      if (chi != 2) return false;
    return true;
  } catch (const Error&) {
    return false;
  }
}

// Planar certificate plus, per component, one face whose walk visits every vertex of it.
inline bool certifies_outerplanar(const Graph& g, const RotationSystem& rs) {
  if (!certifies_planar(g, rs)) return false;
  std::vector<int> comp;
  auto count = components(g, comp);
  std::vector<std::size_t> size(count, 0);
  for (VertexId v = 0; v < static_cast<VertexId>(g.n()); ++v) ++size[comp[v]];
  std::vector<char> covered(count, 0);
  for (std::size_t c = 0; c < count; ++c)
    if (size[c] == 1) covered[c] = 1;
  for (const auto& walk : face_walks(g, rs)) {
    std::vector<VertexId> vs(walk);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    if (vs.size() == size[comp[walk.front()]]) covered[comp[walk.front()]] = 1;
  }
  for (char c : covered)
    if (!c) return false;
  return true;
}

}  // namespace achroma
