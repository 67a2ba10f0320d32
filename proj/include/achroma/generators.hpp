#pragma once

#include <vector>

#include "achroma/error.hpp"
#include "achroma/graph.hpp"

namespace achroma {

inline std::vector<VertexLabel> plain_labels(int n) {
  std::vector<VertexLabel> out;
  for (int i = 0; i < n; ++i) out.push_back(plain(i));
  return out;
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw Error(ErrorCode::InvalidParameter, "cycle needs n >= 3");
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return Graph::from_ids(plain_labels(n), es);
}

inline Graph path_graph(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidParameter, "path needs n >= 1");
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph::from_ids(plain_labels(n), es);
}

inline Graph complete_graph(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidParameter, "complete graph needs n >= 1");
  std::vector<Edge> es;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) es.emplace_back(a, b);
  return Graph::from_ids(plain_labels(n), es);
}

// K_{a,b}: vertices 0..a-1 on one side.
inline Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw Error(ErrorCode::InvalidParameter, "complete bipartite needs both sides >= 1");
  std::vector<Edge> es;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) es.emplace_back(i, a + j);
  return Graph::from_ids(plain_labels(a + b), es);
}

}  // namespace achroma
