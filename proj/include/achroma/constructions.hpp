#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string_view>
#include <utility>
#include <vector>

#include "achroma/coloring.hpp"
#include "achroma/decompositions.hpp"
#include "achroma/embedding.hpp"
#include "achroma/error.hpp"
#include "achroma/graph.hpp"

namespace achroma {

enum class ConstructionKind { planar_optimal, outerplanar_optimal, girth4_optimal, padded, k2_bipartite, surface };

inline std::string_view to_string(ConstructionKind k) {
  switch (k) {
    case ConstructionKind::planar_optimal: return "planar-optimal";
    case ConstructionKind::outerplanar_optimal: return "outerplanar-optimal";
    case ConstructionKind::girth4_optimal: return "girth4-optimal";
    case ConstructionKind::padded: return "padded";
    case ConstructionKind::k2_bipartite: return "k2-bipartite";
    case ConstructionKind::surface: return "surface";
  }
  return "";
}

struct SurfaceSpec {
  bool orientable = true;
  int handles = 0;
  int crosscaps = 0;

  static SurfaceSpec with_handles(int h) { return {true, h, 0}; }
  static SurfaceSpec with_crosscaps(int c) { return {false, 0, c}; }

  int euler_genus() const { return orientable ? 2 * handles : crosscaps; }
  int phi() const { return (!orientable && crosscaps % 2 == 1) ? 1 : 0; }
  // Number of u_i, v_i pairs merged: one per handle or per crosshandle.
  int identifications() const { return orientable ? handles : crosscaps / 2; }
};

struct ColoredConstruction {
  ConstructionKind kind = ConstructionKind::planar_optimal;
  ConstructionKind base_kind = ConstructionKind::planar_optimal;  // differs from kind only when padded
  int t = 0;
  Graph graph;
  Coloring coloring;
  std::vector<VertexLabel> color_labels;  // paper label of each color-id
  int claimed_psi = 0;
  std::optional<int> claimed_psi_s;
  std::optional<SurfaceSpec> surface;
  std::optional<RotationSystem> rotation;
};

namespace detail {

inline std::vector<int> part_colors(const Graph& part, const Graph& host) {
  std::vector<int> c;
  for (const auto& l : part.labels()) c.push_back(host.id(l));
  return c;
}

inline VertexId id_in_part(const Graph& part, VertexId off, const VertexLabel& l) { return off + part.id(l); }

inline std::vector<FaceWalk> piece_faces(const DecompositionPart& p, bool mirrored, VertexId off) {
  auto rs = mirrored ? mirror(*p.rotation) : *p.rotation;
  auto walks = face_walks(p.graph, rs);
  for (auto& w : walks)
    for (auto& v : w) v += off;
  return walks;
}

inline const FaceWalk& face_with_vertices(const std::vector<FaceWalk>& walks, std::set<VertexId> want) {
  for (const auto& w : walks) {
    std::set<VertexId> vs(w.begin(), w.end());
    if (vs == want) return w;
  }
  throw Error(ErrorCode::InvalidRotation, "expected face not found");
}

// Glues `piece` into `host`, identifying host vertex pairs.first with piece vertex pairs.second
// (piece-local ids) across host face `host_face` and the piece face with vertex set `piece_face`.
// Tries both orientations of the piece and keeps the one that stays planar.
inline std::map<VertexId, VertexId> glue(EmbeddingBuilder& host, const FaceWalk& host_face,
                                         const DecompositionPart& piece, const std::set<VertexId>& piece_face,
                                         const std::vector<int>& colors,
                                         const std::vector<std::pair<VertexId, VertexId>>& pairs) {
  for (bool mirrored : {false, true}) {
    EmbeddingBuilder trial = host;
    VertexId off = trial.append(*piece.rotation, colors, mirrored);
    std::set<VertexId> want;
    for (VertexId y : piece_face) want.insert(y + off);
    const auto gface = face_with_vertices(piece_faces(piece, mirrored, off), want);
    std::map<VertexId, VertexId> renamed;
    for (auto [x, y] : pairs) {
      auto cx = EmbeddingBuilder::corner_on(host_face, x);
      auto cy = EmbeddingBuilder::corner_on(gface, y + off);
      if (renamed.count(cy.from)) cy.from = renamed[cy.from];
      trial.identify(cx, cy);
      renamed[y + off] = x;
    }
    if (trial.euler_characteristic() == 2) {
      host = std::move(trial);
      std::map<VertexId, VertexId> where;
      for (VertexId v = 0; v < static_cast<VertexId>(piece.graph.n()); ++v)
        where[v] = renamed.count(v + off) ? renamed[v + off] : v + off;
      return where;
    }
  }
  throw Error(ErrorCode::InvalidRotation, "gluing does not stay planar");
}

struct PlanarAssembly {
  EmbeddingBuilder builder;
  Graph host;                                       // K_{6t+1}, colors = ordinals
  std::map<VertexLabel, VertexId> star;             // G*_{t+1} vertices
  std::vector<std::map<VertexLabel, VertexId>> parts;  // G_i vertices after gluing
};

inline PlanarAssembly assemble_planar(int t) {
  auto d = planar_decompose(t, true);
  PlanarAssembly a;
  a.host = d.host;
  const auto& star = d.parts.back();
  VertexId off = a.builder.append(*star.rotation, part_colors(star.graph, d.host));
  for (VertexId v = 0; v < static_cast<VertexId>(star.graph.n()); ++v) a.star[star.graph.label(v)] = v + off;

  FaceWalk big;
  for (const auto& w : a.builder.faces())
    if (w.size() > big.size()) big = w;

  for (int i = 1; i <= t; ++i) {
    const auto& piece = d.parts[i - 1];
    std::vector<std::pair<VertexId, VertexId>> pairs;
    std::set<VertexId> face;
    for (Family f : {Family::u, Family::v, Family::w}) {
      VertexLabel l{f, i + t};
      pairs.emplace_back(a.star.at(l), piece.graph.id(l));
      face.insert(piece.graph.id(l));
    }
    auto where = glue(a.builder, big, piece, face, part_colors(piece.graph, d.host), pairs);
    std::map<VertexLabel, VertexId> ids;
    for (VertexId v = 0; v < static_cast<VertexId>(piece.graph.n()); ++v) ids[piece.graph.label(v)] = where[v];
    a.parts.push_back(std::move(ids));
  }
  return a;
}

inline ColoredConstruction finish_construction(const EmbeddingBuilder& b, const Graph& host, ConstructionKind kind,
                                               int t, bool keep_rotation) {
  auto res = b.finish();
  ColoredConstruction c;
  c.kind = c.base_kind = kind;
  c.t = t;
  c.graph = std::move(res.graph);
  c.coloring = Coloring(res.colors);
  c.color_labels = host.labels();
  c.claimed_psi = static_cast<int>(c.coloring.k());
  if (keep_rotation) c.rotation = std::move(res.rotation);
  return c;
}

}  // namespace detail

// Optimal colored planar graph on 6t^2+3t+1 vertices with 6t+1 colors.
inline ColoredConstruction build_planar_optimal(int t) {
  if (t < 1) throw Error(ErrorCode::InvalidParameter, "build_planar_optimal needs t >= 1");
  auto a = detail::assemble_planar(t);
  return detail::finish_construction(a.builder, a.host, ConstructionKind::planar_optimal, t, true);
}

// Optimal colored outerplanar graph on 4t^2+1 vertices with 4t colors.
inline ColoredConstruction build_outerplanar_optimal(int t) {
  if (t < 1) throw Error(ErrorCode::InvalidParameter, "build_outerplanar_optimal needs t >= 1");
  auto d = outerplanar_decompose(t);
  EmbeddingBuilder b;
  std::vector<VertexId> offs;
  std::vector<FaceWalk> outer;
  const auto all = static_cast<std::size_t>(4 * t);
  for (int i = 1; i <= t; ++i) {
    const auto& piece = d.parts[i - 1];
    VertexId off = b.append(*piece.rotation, detail::part_colors(piece.graph, d.host));
    offs.push_back(off);
    for (const auto& w : detail::piece_faces(piece, false, off))
      if (std::set<VertexId>(w.begin(), w.end()).size() == all) outer.push_back(w);
  }
  auto vid = [&](int i, int label) { return detail::id_in_part(d.parts[i - 1].graph, offs[i - 1], {Family::u, label}); };
  for (int i = 1; i < t; ++i) {
    VertexId a = vid(i, i), c = vid(i + 1, i + 2 * t);
    b.insert_edge(EmbeddingBuilder::corner_on(outer[i - 1], a), EmbeddingBuilder::corner_on(outer[i], c));
  }
  VertexId pendant = b.add_vertex(d.host.id({Family::u, 3 * t}));
  b.attach(EmbeddingBuilder::corner_on(outer[t - 1], vid(t, t)), pendant);
  return detail::finish_construction(b, d.host, ConstructionKind::outerplanar_optimal, t, true);
}

// Optimal colored planar graph of girth 4 on 4t^2+2 vertices with 4t colors.
inline ColoredConstruction build_girth4_optimal(int t) {
  if (t < 1) throw Error(ErrorCode::InvalidParameter, "build_girth4_optimal needs t >= 1");
  auto d = girth4_decompose(t);
  EmbeddingBuilder b;
  const auto& first = d.parts[0];
  VertexId off = b.append(*first.rotation, detail::part_colors(first.graph, d.host));
  std::map<VertexLabel, VertexId> prev;
  for (VertexId v = 0; v < static_cast<VertexId>(first.graph.n()); ++v) prev[first.graph.label(v)] = v + off;
  std::map<VertexLabel, VertexId> first_ids = prev;

  for (int i = 1; i < t; ++i) {
    // Face of G_i next to its exterior: u_{z0}, u_{z1}, u_{z2}, v_{z1}.
    const auto z = factorize(t, Family::u).paths[i - 1];
    std::set<VertexId> want{prev.at({Family::u, z[0]}), prev.at({Family::u, z[1]}), prev.at({Family::u, z[2]}),
                            prev.at({Family::v, z[1]})};
    auto host_face = detail::face_with_vertices(b.faces(), want);
    const auto& piece = d.parts[i];
    // Exterior face of G_{i+1}: u_{i+1}, u_{i+2}, v_{i+1}, v_{i+2}.
    std::vector<std::pair<VertexId, VertexId>> pairs;
    std::set<VertexId> face;
    for (Family f : {Family::u, Family::v}) {
      pairs.emplace_back(prev.at({f, i + 1}), piece.graph.id({f, i + 1}));
      face.insert(piece.graph.id({f, i + 1}));
      face.insert(piece.graph.id({f, wrap(i + 2, 2 * t)}));
    }
    auto where = detail::glue(b, host_face, piece, face, detail::part_colors(piece.graph, d.host), pairs);
    prev.clear();
    for (VertexId v = 0; v < static_cast<VertexId>(piece.graph.n()); ++v) prev[piece.graph.label(v)] = where[v];
  }
  for (int j = 1; j <= 2 * t; ++j) {
    VertexId p = b.add_vertex(d.host.id({Family::v, j}));
    b.append_neighbor(first_ids.at({Family::u, j}), p);
  }
  return detail::finish_construction(b, d.host, ConstructionKind::girth4_optimal, t, true);
}

// Adds isolated vertices colored 0 up to order n.
inline ColoredConstruction pad(const ColoredConstruction& c, std::size_t n) {
  if (n < c.graph.n()) throw Error(ErrorCode::ShrinkNotAllowed, "pad cannot shrink a graph");
  if (n == c.graph.n()) return c;
  ColoredConstruction out = c;
  out.kind = ConstructionKind::padded;
  auto labels = c.graph.labels();
  int next = 0;
  for (const auto& l : labels)
    if (l.family == Family::plain) next = std::max(next, l.index + 1);
  while (labels.size() < n) labels.push_back(plain(next++));
  out.graph = Graph::from_ids(labels, c.graph.edges());
  auto colors = c.coloring.colors();
  colors.resize(n, 0);
  out.coloring = Coloring(colors);
  if (out.rotation) out.rotation->rotation.resize(n);
  return out;
}

// K_{2,n-2} with its bipartition coloring.
inline ColoredConstruction build_k2_bipartite(int n) {
  if (n < 4) throw Error(ErrorCode::InvalidParameter, "build_k2_bipartite needs n >= 4");
  std::vector<VertexLabel> labels;
  for (int i = 0; i < n; ++i) labels.push_back(plain(i));
  RotationSystem rs;
  rs.rotation.resize(n);
  for (int j = 2; j < n; ++j) {
    rs.rotation[0].push_back(j);
    rs.rotation[1].insert(rs.rotation[1].begin(), j);
    rs.rotation[j] = {0, 1};
  }
  ColoredConstruction c;
  c.kind = c.base_kind = ConstructionKind::k2_bipartite;
  c.t = 0;
  c.graph = graph_of_rotation(labels, rs);
  std::vector<int> colors(n, 1);
  colors[0] = colors[1] = 0;
  c.coloring = Coloring(colors);
  c.color_labels = {plain(0), plain(1)};
  c.claimed_psi = 2;
  c.claimed_psi_s = 3;
  c.rotation = std::move(rs);
  return c;
}

// Planar-optimal graph with u_i, v_i of G*_{t+1} merged into u_i, v_i of G_i, one pair per
// handle (orientable) or crosshandle (non-orientable). Graph-level only.
inline ColoredConstruction build_surface_graph(int t, const SurfaceSpec& s) {
  if (t < 1) throw Error(ErrorCode::InvalidParameter, "build_surface_graph needs t >= 1");
  if (s.orientable && s.handles < 0) throw Error(ErrorCode::InvalidParameter, "negative handle count");
  if (!s.orientable && s.crosscaps < 1) throw Error(ErrorCode::InvalidParameter, "crosscap count must be >= 1");
  if (s.identifications() > t)
    throw Error(ErrorCode::GenusTooLarge, "surface needs more than t identifications");
  auto a = detail::assemble_planar(t);
  for (int i = 1; i <= s.identifications(); ++i)
    for (Family f : {Family::u, Family::v}) a.builder.merge_plain(a.star.at({f, i}), a.parts[i - 1].at({f, i}));
  auto c = detail::finish_construction(a.builder, a.host, ConstructionKind::surface, t, false);
  c.surface = s;
  return c;
}

}  // namespace achroma
