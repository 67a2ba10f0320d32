#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "achroma/error.hpp"
#include "achroma/graph.hpp"

namespace achroma {

// Cyclic neighbour order per vertex ordinal.
struct RotationSystem {
  std::vector<std::vector<VertexId>> rotation;

  std::size_t size() const { return rotation.size(); }
  const std::vector<VertexId>& operator[](VertexId v) const { return rotation[v]; }
};

using FaceWalk = std::vector<VertexId>;  // vertices in dart order, closing back to front()

inline void validate_rotation(const Graph& g, const RotationSystem& rs) {
  if (rs.size() != g.n())
    throw Error(ErrorCode::InvalidRotation, "rotation covers " + std::to_string(rs.size()) +
                                                " vertices, graph has " + std::to_string(g.n()));
  for (VertexId v = 0; v < static_cast<VertexId>(g.n()); ++v) {
    auto sorted = rs[v];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != g.neighbors(v))
      throw Error(ErrorCode::InvalidRotation, "rotation at " + g.label(v).name() +
                                                  " is not its neighbour set");
  }
}

namespace detail {

// position[v][w] = index of w in rotation of v
inline std::vector<std::map<VertexId, std::size_t>> rotation_positions(const RotationSystem& rs) {
  std::vector<std::map<VertexId, std::size_t>> pos(rs.size());
  for (std::size_t v = 0; v < rs.size(); ++v)
    for (std::size_t i = 0; i < rs.rotation[v].size(); ++i) pos[v][rs.rotation[v][i]] = i;
  return pos;
}

}  // namespace detail

// All face walks under the rule: arriving at v from a, leave towards succ_v(a).
// Does not require connectivity; isolated vertices contribute no walk.
inline std::vector<FaceWalk> face_walks(const Graph& g, const RotationSystem& rs) {
  validate_rotation(g, rs);
  auto pos = detail::rotation_positions(rs);
  std::set<std::pair<VertexId, VertexId>> used;
  std::vector<FaceWalk> faces;
  for (auto [a0, b0] : g.edges()) {
    for (auto [s, t] : {std::pair{a0, b0}, std::pair{b0, a0}}) {
      if (used.count({s, t})) continue;
      FaceWalk walk;
      VertexId a = s, b = t;
      while (!used.count({a, b})) {
        used.insert({a, b});
        walk.push_back(a);
        const auto& rot = rs[b];
        VertexId next = rot[(pos[b][a] + 1) % rot.size()];
        a = b;
        b = next;
      }
      faces.push_back(std::move(walk));
    }
  }
  return faces;
}

struct FaceTrace {
  std::vector<FaceWalk> faces;
  std::size_t f = 0;
  long euler_characteristic = 0;  // n - m + f
};

inline FaceTrace trace_faces(const Graph& g, const RotationSystem& rs) {
  validate_rotation(g, rs);
  if (!is_connected(g)) throw Error(ErrorCode::DisconnectedGraph, "face tracing needs a connected graph");
  FaceTrace out;
  out.faces = face_walks(g, rs);
  out.f = g.m() == 0 ? 1 : out.faces.size();
  out.euler_characteristic =
      static_cast<long>(g.n()) - static_cast<long>(g.m()) + static_cast<long>(out.f);
  return out;
}

// n_c - m_c + f_c for each connected component (isolated vertex counts one face).
inline std::vector<long> component_euler_characteristics(const Graph& g, const RotationSystem& rs) {
  std::vector<int> comp;
  auto count = components(g, comp);
  std::vector<long> chi(count, 0);
  for (VertexId v = 0; v < static_cast<VertexId>(g.n()); ++v) ++chi[comp[v]];
  for (auto [a, b] : g.edges()) --chi[comp[a]];
  std::vector<char> has_face(count, 0);
  for (const auto& walk : face_walks(g, rs)) {
    ++chi[comp[walk.front()]];
    has_face[comp[walk.front()]] = 1;
  }
  for (std::size_t c = 0; c < count; ++c)
    if (!has_face[c]) ++chi[c];
  return chi;
}

// Orients an unoriented closed face list (each edge on exactly two face sides) and
// derives the rotation: for an oriented corner a -> v -> b, succ_v(a) = b.
inline RotationSystem rotation_from_faces(std::size_t n, std::vector<FaceWalk> faces) {
  auto key = [](VertexId a, VertexId b) { return std::pair{std::min(a, b), std::max(a, b)}; };
  std::map<std::pair<VertexId, VertexId>, std::vector<std::pair<std::size_t, bool>>> sides;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto& w = faces[f];
    for (std::size_t i = 0; i < w.size(); ++i) {
      VertexId a = w[i], b = w[(i + 1) % w.size()];
      sides[key(a, b)].push_back({f, a < b});
    }
  }
  for (const auto& [e, s] : sides)
    if (s.size() != 2)
      throw Error(ErrorCode::InvalidRotation, "face list edge not on exactly two sides");

  std::vector<int> flip(faces.size(), -1);
  for (std::size_t root = 0; root < faces.size(); ++root) {
    if (flip[root] >= 0) continue;
    flip[root] = 0;
    std::queue<std::size_t> q;
    q.push(root);
    while (!q.empty()) {
      auto f = q.front();
      q.pop();
      const auto& w = faces[f];
      for (std::size_t i = 0; i < w.size(); ++i) {
        VertexId a = w[i], b = w[(i + 1) % w.size()];
        for (auto [g2, fwd] : sides[key(a, b)]) {
          if (g2 == f) continue;
          // The two sides of an edge must traverse it in opposite directions.
          bool mine = (a < b) != static_cast<bool>(flip[f]);
          int want = (fwd == mine) ? 1 : 0;
          if (flip[g2] < 0) {
            flip[g2] = want;
            q.push(g2);
          } else if (flip[g2] != want) {
            throw Error(ErrorCode::InvalidRotation, "face list is not orientable");
          }
        }
      }
    }
  }

  std::vector<std::map<VertexId, VertexId>> succ(n);
  for (std::size_t f = 0; f < faces.size(); ++f) {
    auto w = faces[f];
    if (flip[f]) std::reverse(w.begin(), w.end());
    for (std::size_t i = 0; i < w.size(); ++i) {
      VertexId a = w[(i + w.size() - 1) % w.size()], v = w[i], b = w[(i + 1) % w.size()];
      if (!succ[v].emplace(a, b).second)
        throw Error(ErrorCode::InvalidRotation, "corner repeated in face list");
    }
  }
  RotationSystem rs;
  rs.rotation.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (succ[v].empty()) continue;
    VertexId start = succ[v].begin()->first, cur = start;
    do {
      rs.rotation[v].push_back(cur);
      cur = succ[v].at(cur);
    } while (cur != start && rs.rotation[v].size() <= succ[v].size());
    if (rs.rotation[v].size() != succ[v].size())
      throw Error(ErrorCode::InvalidRotation, "corners at a vertex do not form one cycle");
  }
  return rs;
}

inline RotationSystem mirror(RotationSystem rs) {
  for (auto& r : rs.rotation) std::reverse(r.begin(), r.end());
  return rs;
}

inline Graph graph_of_rotation(std::vector<VertexLabel> labels, const RotationSystem& rs) {
  std::vector<Edge> es;
  for (VertexId v = 0; v < static_cast<VertexId>(rs.size()); ++v)
    for (VertexId w : rs[v])
      if (v < w) es.emplace_back(v, w);
  return Graph::from_ids(std::move(labels), es);
}

// Mutable rotation-system surgery used to assemble the identified constructions.
// Vertices removed by identification are dropped by finish().
class EmbeddingBuilder {
 public:
  // Insertion point at `vertex`: between `from` and its successor.
  struct Corner {
    VertexId vertex;
    VertexId from;
  };

  VertexId add_vertex(int color) {
    rot_.emplace_back();
    color_.push_back(color);
    alive_.push_back(1);
    return static_cast<VertexId>(rot_.size() - 1);
  }

  std::size_t size() const { return rot_.size(); }
  int color(VertexId v) const { return color_[v]; }
  const std::vector<VertexId>& rotation(VertexId v) const { return rot_[v]; }
  bool alive(VertexId v) const { return alive_[v] != 0; }

  // Appends a whole embedded piece; returns the id offset of its vertex 0.
  VertexId append(const RotationSystem& rs, const std::vector<int>& colors, bool mirrored = false) {
    auto off = static_cast<VertexId>(rot_.size());
    for (std::size_t v = 0; v < rs.size(); ++v) {
      std::vector<VertexId> r;
      for (VertexId w : rs.rotation[v]) r.push_back(w + off);
      if (mirrored) std::reverse(r.begin(), r.end());
      rot_.push_back(std::move(r));
      color_.push_back(colors[v]);
      alive_.push_back(1);
    }
    return off;
  }

  VertexId succ(VertexId v, VertexId from) const {
    const auto& r = rot_[v];
    auto it = std::find(r.begin(), r.end(), from);
    if (it == r.end()) throw Error(ErrorCode::InvalidRotation, "corner neighbour missing");
    return r[(static_cast<std::size_t>(it - r.begin()) + 1) % r.size()];
  }

  // Corner of `v` on a face walk (walk lists vertices in dart order).
  static Corner corner_on(const FaceWalk& walk, VertexId v) {
    for (std::size_t i = 0; i < walk.size(); ++i)
      if (walk[i] == v) return {v, walk[(i + walk.size() - 1) % walk.size()]};
    throw Error(ErrorCode::InvalidRotation, "vertex not on face");
  }

  // Inserts edge a-b: b goes right after ca.from at a, a right after cb.from at b.
  void insert_edge(Corner ca, Corner cb) {
    insert_after(ca.vertex, ca.from, cb.vertex);
    insert_after(cb.vertex, cb.from, ca.vertex);
  }

  // Pendant/isolated-target insertion when b has no neighbours yet.
  void attach(Corner ca, VertexId b) {
    if (!rot_[b].empty()) throw Error(ErrorCode::InvalidRotation, "attach target not isolated");
    insert_after(ca.vertex, ca.from, b);
    rot_[b].push_back(ca.vertex);
  }

  void append_neighbor(VertexId a, VertexId b) {
    if (rot_[a].empty()) rot_[a].push_back(b);
    else insert_after(a, rot_[a].back(), b);
    if (rot_[b].empty()) rot_[b].push_back(a);
    else insert_after(b, rot_[b].back(), a);
  }

  // Merges y into x: y's cyclic order is spliced into the corner cx of x, entered at cy.
  void identify(Corner cx, Corner cy) {
    VertexId x = cx.vertex, y = cy.vertex;
    if (x == y || !alive_[x] || !alive_[y]) throw Error(ErrorCode::InvalidRotation, "bad identification");
    if (color_[x] != color_[y]) throw Error(ErrorCode::InvalidParameter, "identifying different colors");
    for (VertexId w : rot_[y])
      if (w == x || std::find(rot_[x].begin(), rot_[x].end(), w) != rot_[x].end())
        throw Error(ErrorCode::DuplicateEdge, "identification creates a multi-edge or loop");
    std::vector<VertexId> seq;
    if (!rot_[y].empty()) {
      VertexId start = succ(y, cy.from), cur = start;
      do {
        seq.push_back(cur);
        cur = succ(y, cur);
      } while (cur != start);
    }
    auto& rx = rot_[x];
    if (rx.empty()) {
      rx = seq;
    } else {
      auto it = std::find(rx.begin(), rx.end(), cx.from);
      rx.insert(it + 1, seq.begin(), seq.end());
    }
    for (VertexId w : rot_[y])
      for (auto& z : rot_[w])
        if (z == y) z = x;
    rot_[y].clear();
    alive_[y] = 0;
  }

  // Graph-level merge with no embedding bookkeeping (surface constructions).
  void merge_plain(VertexId x, VertexId y) {
    if (x == y || !alive_[x] || !alive_[y]) throw Error(ErrorCode::InvalidParameter, "bad identification");
    if (color_[x] != color_[y]) throw Error(ErrorCode::InvalidParameter, "identifying different colors");
    for (VertexId w : rot_[y]) {
      if (w == x || std::find(rot_[x].begin(), rot_[x].end(), w) != rot_[x].end())
        throw Error(ErrorCode::DuplicateEdge, "identification creates a multi-edge or loop");
      rot_[x].push_back(w);
      for (auto& z : rot_[w])
        if (z == y) z = x;
    }
    rot_[y].clear();
    alive_[y] = 0;
  }

  RotationSystem rotation_system() const {
    RotationSystem rs;
    rs.rotation = rot_;
    return rs;
  }

  // Face walks over the current (possibly partially dead) vertex set.
  std::vector<FaceWalk> faces() const {
    std::vector<VertexLabel> labels;
    for (std::size_t i = 0; i < rot_.size(); ++i) labels.push_back(plain(static_cast<int>(i)));
    auto g = graph_of_rotation(labels, rotation_system());
    return face_walks(g, rotation_system());
  }

  // Euler characteristic of the live part, assumed connected.
  long euler_characteristic() const {
    long n = 0, m2 = 0;
    for (std::size_t v = 0; v < rot_.size(); ++v) {
      if (!alive_[v]) continue;
      ++n;
      m2 += static_cast<long>(rot_[v].size());
    }
    return n - m2 / 2 + static_cast<long>(faces().size());
  }

  struct Result {
    Graph graph;
    RotationSystem rotation;
    std::vector<int> colors;
  };

  // Compacts live vertices in id order and labels them plain 0..n-1.
  Result finish() const {
    std::vector<VertexId> remap(rot_.size(), -1);
    std::vector<VertexLabel> labels;
    std::vector<int> colors;
    for (std::size_t v = 0; v < rot_.size(); ++v) {
      if (!alive_[v]) continue;
      remap[v] = static_cast<VertexId>(labels.size());
      labels.push_back(plain(static_cast<int>(labels.size())));
      colors.push_back(color_[v]);
    }
    RotationSystem rs;
    rs.rotation.resize(labels.size());
    for (std::size_t v = 0; v < rot_.size(); ++v) {
      if (!alive_[v]) continue;
      for (VertexId w : rot_[v]) rs.rotation[remap[v]].push_back(remap[w]);
    }
    auto g = graph_of_rotation(labels, rs);
    return {std::move(g), std::move(rs), std::move(colors)};
  }

 private:
  void insert_after(VertexId v, VertexId from, VertexId w) {
    auto& r = rot_[v];
    if (r.empty()) {
      r.push_back(w);
      return;
    }
    auto it = std::find(r.begin(), r.end(), from);
    if (it == r.end()) throw Error(ErrorCode::InvalidRotation, "corner neighbour missing");
    r.insert(it + 1, w);
  }

  std::vector<std::vector<VertexId>> rot_;
  std::vector<int> color_;
  std::vector<char> alive_;
};

}  // namespace achroma
