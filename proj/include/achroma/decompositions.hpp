#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "achroma/embedding.hpp"
#include "achroma/error.hpp"
#include "achroma/factorization.hpp"
#include "achroma/graph.hpp"

namespace achroma {

enum class DecompositionKind { planar, outerplanar, girth4 };

inline std::string_view to_string(DecompositionKind k) {
  switch (k) {
    case DecompositionKind::planar: return "planar";
    case DecompositionKind::outerplanar: return "outerplanar";
    case DecompositionKind::girth4: return "girth4";
  }
  return "";
}

struct DecompositionPart {
  Graph graph;
  std::optional<RotationSystem> rotation;
};

struct Decomposition {
  DecompositionKind kind = DecompositionKind::planar;
  int t = 0;
  bool with_z = false;
  Graph host;
  std::vector<DecompositionPart> parts;
};

inline Graph complete_graph_on(std::vector<VertexLabel> labels) {
  std::sort(labels.begin(), labels.end());
  std::vector<Edge> es;
  for (VertexId a = 0; a < static_cast<VertexId>(labels.size()); ++a)
    for (VertexId b = a + 1; b < static_cast<VertexId>(labels.size()); ++b) es.emplace_back(a, b);
  return Graph::from_ids(std::move(labels), es);
}

namespace detail {

inline std::vector<VertexLabel> family_labels(std::initializer_list<Family> fams, int count) {
  std::vector<VertexLabel> out;
  for (Family f : fams)
    for (int j = 1; j <= count; ++j) out.push_back({f, j});
  return out;
}

// Part on the given (sorted) label set, from a closed face list over those labels.
inline DecompositionPart part_from_faces(const std::vector<VertexLabel>& labels,
                                         const std::vector<std::vector<VertexLabel>>& faces) {
  std::map<VertexLabel, VertexId> id;
  for (std::size_t i = 0; i < labels.size(); ++i) id[labels[i]] = static_cast<VertexId>(i);
  std::vector<FaceWalk> walks;
  for (const auto& f : faces) {
    FaceWalk w;
    for (const auto& l : f) w.push_back(id.at(l));
    walks.push_back(std::move(w));
  }
  auto rs = rotation_from_faces(labels.size(), walks);
  return {graph_of_rotation(labels, rs), rs};
}

// Part given directly by a rotation over labels.
inline DecompositionPart part_from_rotation(const std::vector<VertexLabel>& labels,
                                            const std::map<VertexLabel, std::vector<VertexLabel>>& rot) {
  std::map<VertexLabel, VertexId> id;
  for (std::size_t i = 0; i < labels.size(); ++i) id[labels[i]] = static_cast<VertexId>(i);
  RotationSystem rs;
  rs.rotation.resize(labels.size());
  for (const auto& [v, nbrs] : rot)
    for (const auto& w : nbrs) rs.rotation[id.at(v)].push_back(id.at(w));
  return {graph_of_rotation(labels, rs), rs};
}

}  // namespace detail

// Octahedron part G_i: half-paths of the serpentine factorization inserted into six faces.
// Faces are indexed by bits (u, v, w); bit 0 selects index i, bit 1 selects i+t.
inline DecompositionPart planar_part(int t, int i) {
  auto labels = detail::family_labels({Family::u, Family::v, Family::w}, 2 * t);
  const std::array<Family, 3> fam{Family::u, Family::v, Family::w};
  auto at = [&](int f, int bit) { return VertexLabel{fam[f], wrap(i + bit * t, 2 * t)}; };

  // Leaf family f at bit b goes into the face with bit b on f and 1-b elsewhere, so
  // u_i -> (0,1,1), v_i -> (1,0,1), w_i -> (1,1,0); faces (0,0,0) and (1,1,1) stay empty.
  std::map<std::array<int, 3>, std::pair<int, int>> filled;
  for (int f = 0; f < 3; ++f)
    for (int b = 0; b < 2; ++b) {
      std::array<int, 3> bits{};
      for (int g = 0; g < 3; ++g) bits[g] = (g == f) ? b : 1 - b;
      filled[bits] = {f, b};
    }

  std::vector<std::vector<VertexLabel>> faces;
  for (int bu = 0; bu < 2; ++bu)
    for (int bv = 0; bv < 2; ++bv)
      for (int bw = 0; bw < 2; ++bw) {
        std::array<int, 3> bits{bu, bv, bw};
        auto it = filled.find(bits);
        if (it == filled.end()) {
          faces.push_back({at(0, bu), at(1, bv), at(2, bw)});
          continue;
        }
        auto [f, b] = it->second;
        auto fac = factorize_boustrophedon(t, fam[f]);
        const auto& hp = fac.half_paths.at(wrap(i + b * t, 2 * t));
        std::vector<VertexLabel> others;
        for (int g = 0; g < 3; ++g)
          if (g != f) others.push_back(at(g, bits[g]));
        std::vector<VertexLabel> p;
        for (int idx : hp) p.push_back({fam[f], idx});
        for (std::size_t k = 1; k < p.size(); ++k) {
          faces.push_back({p[k - 1], p[k], others[0]});
          faces.push_back({p[k - 1], p[k], others[1]});
        }
        faces.push_back({p.back(), others[0], others[1]});
      }
  return detail::part_from_faces(labels, faces);
}

inline Decomposition planar_decompose(int t, bool with_z) {
  if (t < 1) throw Error(ErrorCode::InvalidParameter, "planar_decompose needs t >= 1");
  Decomposition d;
  d.kind = DecompositionKind::planar;
  d.t = t;
  d.with_z = with_z;
  auto labels = detail::family_labels({Family::u, Family::v, Family::w}, 2 * t);
  auto host_labels = labels;
  if (with_z) host_labels.push_back({Family::z, 0});
  d.host = complete_graph_on(host_labels);
  for (int i = 1; i <= t; ++i) d.parts.push_back(planar_part(t, i));

  std::map<VertexLabel, std::vector<VertexLabel>> rot;
  const VertexLabel z{Family::z, 0};
  for (int j = 1; j <= t; ++j)
    for (Family f : {Family::u, Family::v, Family::w}) {
      VertexLabel a{f, j}, b{f, j + t};
      if (with_z) {
        rot[z].push_back(a);
        rot[z].push_back(b);
        rot[a] = {z, b};
        rot[b] = {z, a};
      } else {
        rot[a] = {b};
        rot[b] = {a};
      }
    }
  d.parts.push_back(detail::part_from_rotation(with_z ? d.host.labels() : labels, rot));
  return d;
}

// Fan part G_i of K_4t: four fans over serpentine half-paths plus the chord u_{i+t}u_{i+3t}.
inline DecompositionPart outerplanar_part(int t, int i) {
  auto labels = detail::family_labels({Family::u}, 4 * t);
  auto u = [&](long idx) { return VertexLabel{Family::u, wrap(idx, 4 * t)}; };
  auto offs = boustrophedon_offsets(t);
  std::vector<std::vector<VertexLabel>> faces;
  std::vector<VertexLabel> outer;
  std::array<VertexLabel, 4> apex;
  for (int c = 0; c < 4; ++c) {
    apex[c] = u(i + c * t);
    std::vector<VertexLabel> p;
    for (int o : offs) p.push_back(u(i + t + c * t + o));
    for (std::size_t k = 0; k + 1 < p.size(); ++k) faces.push_back({apex[c], p[k], p[k + 1]});
    outer.insert(outer.end(), p.rbegin(), p.rend());
  }
  faces.push_back({apex[0], apex[1], apex[3]});
  faces.push_back({apex[1], apex[2], apex[3]});
  faces.push_back(outer);
  return detail::part_from_faces(labels, faces);
}

inline Decomposition outerplanar_decompose(int t) {
  if (t < 1) throw Error(ErrorCode::InvalidParameter, "outerplanar_decompose needs t >= 1");
  Decomposition d;
  d.kind = DecompositionKind::outerplanar;
  d.t = t;
  d.host = complete_graph_on(detail::family_labels({Family::u}, 4 * t));
  for (int i = 1; i <= t; ++i) d.parts.push_back(outerplanar_part(t, i));
  std::vector<VertexLabel> labels;
  std::map<VertexLabel, std::vector<VertexLabel>> rot;
  for (int i = 1; i <= t; ++i) {
    VertexLabel a{Family::u, i}, b{Family::u, i + 2 * t};
    labels.push_back(a);
    labels.push_back(b);
    rot[a] = {b};
    rot[b] = {a};
  }
  std::sort(labels.begin(), labels.end());
  d.parts.push_back(detail::part_from_rotation(labels, rot));
  return d;
}

// Ladder part G_i of K_4t: zigzag paths on u and v plus crossed rungs between levels.
inline DecompositionPart girth4_part(int t, int i) {
  auto labels = detail::family_labels({Family::u, Family::v}, 2 * t);
  const auto z = factorize(t, Family::u).paths[i - 1];
  const auto L = z.size();
  auto u = [&](std::size_t k) { return VertexLabel{Family::u, z[k]}; };
  auto v = [&](std::size_t k) { return VertexLabel{Family::v, z[k]}; };
  std::vector<std::vector<VertexLabel>> faces;
  faces.push_back({u(0), u(1), v(0), v(1)});
  faces.push_back({u(L - 1), u(L - 2), v(L - 1), v(L - 2)});
  for (std::size_t k = 0; k + 2 < L; ++k) {
    faces.push_back({u(k), u(k + 1), u(k + 2), v(k + 1)});
    faces.push_back({v(k), v(k + 1), v(k + 2), u(k + 1)});
  }
  return detail::part_from_faces(labels, faces);
}

inline Decomposition girth4_decompose(int t) {
  if (t < 1) throw Error(ErrorCode::InvalidParameter, "girth4_decompose needs t >= 1");
  Decomposition d;
  d.kind = DecompositionKind::girth4;
  d.t = t;
  auto labels = detail::family_labels({Family::u, Family::v}, 2 * t);
  d.host = complete_graph_on(labels);
  for (int i = 1; i <= t; ++i) d.parts.push_back(girth4_part(t, i));
  std::map<VertexLabel, std::vector<VertexLabel>> rot;
  for (int j = 1; j <= 2 * t; ++j) {
    rot[{Family::u, j}] = {{Family::v, j}};
    rot[{Family::v, j}] = {{Family::u, j}};
  }
  d.parts.push_back(detail::part_from_rotation(labels, rot));
  return d;
}

}  // namespace achroma
