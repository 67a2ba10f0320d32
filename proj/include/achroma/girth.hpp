#pragma once

#include <bitset>
#include <cstddef>
#include <limits>
#include <queue>
#include <vector>

#include "achroma/graph.hpp"

namespace achroma {

inline constexpr std::size_t kInfiniteGirth = std::numeric_limits<std::size_t>::max();

// Shortest cycle length over all components; kInfiniteGirth for forests.
inline std::size_t girth(const Graph& g) {
  const auto n = g.n();
  std::size_t best = kInfiniteGirth;
  std::vector<std::size_t> dist(n);
  std::vector<VertexId> parent(n);
  for (VertexId s = 0; s < static_cast<VertexId>(n); ++s) {
    std::fill(dist.begin(), dist.end(), kInfiniteGirth);
    dist[s] = 0;
    parent[s] = -1;
    std::queue<VertexId> q;
    q.push(s);
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      if (2 * dist[v] + 1 >= best) break;
      for (VertexId w : g.neighbors(v)) {
        if (dist[w] == kInfiniteGirth) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          q.push(w);
        } else if (parent[v] != w) {
          best = std::min(best, dist[v] + dist[w] + 1);
        }
      }
    }
  }
  return best;
}

// Triangle test by neighbourhood intersection, independent of the BFS above.
inline bool has_triangle(const Graph& g) {
  for (auto [a, b] : g.edges()) {
    const auto& na = g.neighbors(a);
    const auto& nb = g.neighbors(b);
    std::size_t i = 0, j = 0;
    while (i < na.size() && j < nb.size()) {
      if (na[i] == nb[j]) return true;
      if (na[i] < nb[j]) ++i; else ++j;
    }
  }
  return false;
}

}  // namespace achroma
