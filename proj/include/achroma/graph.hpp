#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "achroma/error.hpp"

namespace achroma {

// Declaration order is the lexicographic order of the family tags ("" < "u" < ... < "z").
enum class Family : std::uint8_t { plain, u, v, w, x, z };

inline std::string_view family_tag(Family f) {
  switch (f) {
    case Family::plain: return "";
    case Family::u: return "u";
    case Family::v: return "v";
    case Family::w: return "w";
    case Family::x: return "x";
    case Family::z: return "z";
  }
  return "";
}

inline std::optional<Family> parse_family(std::string_view s) {
  if (s.empty() || s == "plain") return Family::plain;
  if (s == "u") return Family::u;
  if (s == "v") return Family::v;
  if (s == "w") return Family::w;
  if (s == "x") return Family::x;
  if (s == "z") return Family::z;
  return std::nullopt;
}

struct VertexLabel {
  Family family = Family::plain;
  int index = 0;

  auto operator<=>(const VertexLabel&) const = default;

  std::string name() const { return std::string(family_tag(family)) + std::to_string(index); }
};

inline VertexLabel plain(int i) { return {Family::plain, i}; }
inline VertexLabel lab(Family f, int i) { return {f, i}; }

using VertexId = int;
using Edge = std::pair<VertexId, VertexId>;  // always first < second

// Simple undirected graph with stable labels; vertex ids are positions in the label list.
class Graph {
 public:
  Graph() = default;

  std::size_t n() const { return labels_.size(); }
  std::size_t m() const { return edges_.size(); }

  const std::vector<VertexLabel>& labels() const { return labels_; }
  const VertexLabel& label(VertexId v) const { return labels_[v]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[v]; }
  std::size_t degree(VertexId v) const { return adj_[v].size(); }

  bool has_edge(VertexId a, VertexId b) const {
    const auto& nb = adj_[a];
    return std::binary_search(nb.begin(), nb.end(), b);
  }

  std::optional<VertexId> find(const VertexLabel& l) const {
    auto it = index_.find(l);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  VertexId id(const VertexLabel& l) const {
    auto v = find(l);
    if (!v) throw Error(ErrorCode::UnknownEndpoint, "no vertex " + l.name());
    return *v;
  }

  std::size_t max_degree() const {
    std::size_t d = 0;
    for (const auto& nb : adj_) d = std::max(d, nb.size());
    return d;
  }

  // Edge-validated construction from ordinal pairs.
  static Graph from_ids(std::vector<VertexLabel> labels, const std::vector<Edge>& edges) {
    Graph g;
    g.labels_ = std::move(labels);
    for (std::size_t i = 0; i < g.labels_.size(); ++i) {
      if (!g.index_.emplace(g.labels_[i], static_cast<VertexId>(i)).second)
        throw Error(ErrorCode::DuplicateLabel, g.labels_[i].name());
    }
    const auto n = static_cast<VertexId>(g.labels_.size());
    g.adj_.assign(g.labels_.size(), {});
    g.edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
      if (a < 0 || b < 0 || a >= n || b >= n)
        throw Error(ErrorCode::UnknownEndpoint,
                    "edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
      if (a == b) throw Error(ErrorCode::LoopEdge, g.labels_[a].name());
      g.edges_.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
    if (dup != g.edges_.end())
      throw Error(ErrorCode::DuplicateEdge,
                  g.labels_[dup->first].name() + g.labels_[dup->second].name());
    for (auto [a, b] : g.edges_) {
      g.adj_[a].push_back(b);
      g.adj_[b].push_back(a);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    return g;
  }

 private:
  std::vector<VertexLabel> labels_;
  std::map<VertexLabel, VertexId> index_;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<Edge> edges_;
};

inline Graph build_graph(const std::vector<VertexLabel>& vertices,
                         const std::vector<std::pair<VertexLabel, VertexLabel>>& edges) {
  std::map<VertexLabel, VertexId> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!index.emplace(vertices[i], static_cast<VertexId>(i)).second)
      throw Error(ErrorCode::DuplicateLabel, vertices[i].name());
  }
  std::vector<Edge> ids;
  ids.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a), ib = index.find(b);
    if (ia == index.end()) throw Error(ErrorCode::UnknownEndpoint, a.name());
    if (ib == index.end()) throw Error(ErrorCode::UnknownEndpoint, b.name());
    ids.emplace_back(ia->second, ib->second);
  }
  return Graph::from_ids(vertices, ids);
}

// Connected components as a vertex -> component index map; returns the count.
inline std::size_t components(const Graph& g, std::vector<int>& comp) {
  comp.assign(g.n(), -1);
  std::size_t count = 0;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < static_cast<VertexId>(g.n()); ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = static_cast<int>(count);
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (VertexId w : g.neighbors(v)) {
        if (comp[w] < 0) {
          comp[w] = static_cast<int>(count);
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  return count;
}

inline bool is_connected(const Graph& g) {
  std::vector<int> comp;
  return components(g, comp) <= 1;
}

// Same vertices, edges filtered by predicate.
template <typename Pred>
Graph edge_filter(const Graph& g, Pred keep) {
  std::vector<Edge> es;
  for (const auto& e : g.edges())
    if (keep(e)) es.push_back(e);
  return Graph::from_ids(g.labels(), es);
}

}  // namespace achroma
