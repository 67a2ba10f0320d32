#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "achroma/coloring.hpp"
#include "achroma/generators.hpp"
#include "achroma/graph.hpp"

namespace achroma {

struct PlatonicEntry {
  std::string name;
  Graph graph;
  int n = 0;
  int r = 0;
  int expected_psi = 0;
  int expected_psi_s = 0;
  std::string upper_bound_argument;
  Coloring psi_witness;    // proper and complete
  Coloring psi_s_witness;  // complete
};

inline Graph tetrahedral_graph() { return complete_graph(4); }

inline Graph cubical_graph() {
  std::vector<Edge> es;
  for (int a = 0; a < 8; ++a)
    for (int bit = 1; bit < 8; bit <<= 1)
      if (a < (a ^ bit)) es.emplace_back(a, a ^ bit);
  return Graph::from_ids(plain_labels(8), es);
}

// K_{2,2,2}: antipodal pairs {0,1}, {2,3}, {4,5}.
inline Graph octahedral_graph() {
  std::vector<Edge> es;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      if (a / 2 != b / 2) es.emplace_back(a, b);
  return Graph::from_ids(plain_labels(6), es);
}

// Generalized Petersen graph GP(10, 2): outer 10-cycle 0..9, spokes, inner pentagrams 10..19.
inline Graph dodecahedral_graph() {
  std::vector<Edge> es;
  for (int i = 0; i < 10; ++i) {
    es.emplace_back(i, (i + 1) % 10);
    es.emplace_back(i, 10 + i);
    es.emplace_back(std::min(10 + i, 10 + (i + 2) % 10), std::max(10 + i, 10 + (i + 2) % 10));
  }
  return Graph::from_ids(plain_labels(20), es);
}

// Apex 0, upper ring 1..5, lower ring 6..10, apex 11.
inline Graph icosahedral_graph() {
  std::vector<Edge> es;
  for (int i = 0; i < 5; ++i) {
    int up = 1 + i, up_next = 1 + (i + 1) % 5, lo = 6 + i, lo_next = 6 + (i + 1) % 5;
    es.emplace_back(0, up);
    es.emplace_back(std::min(up, up_next), std::max(up, up_next));
    es.emplace_back(up, lo);
    es.emplace_back(up, lo_next);
    es.emplace_back(std::min(lo, lo_next), std::max(lo, lo_next));
    es.emplace_back(lo, 11);
  }
  return Graph::from_ids(plain_labels(12), es);
}

namespace detail {

// Stored witness colorings (vertex ordinal order of the graphs above).
struct PlatonicWitness {
  std::string_view name;
  std::vector<int> psi;
  std::vector<int> psi_s;
};

inline const std::array<PlatonicWitness, 5>& platonic_witnesses() {
  static const std::array<PlatonicWitness, 5> data{{
      {"tetrahedral", {0, 1, 2, 3}, {0, 1, 2, 3}},
      {"cubical", {0, 1, 1, 2, 2, 3, 3, 0}, {0, 0, 0, 0, 1, 1, 2, 3}},
      {"octahedral", {0, 0, 1, 1, 2, 2}, {0, 1, 0, 2, 0, 3}},
      {"dodecahedral", {0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 2, 2, 3, 4, 4, 6, 5, 3, 6, 5}, {0, 0, 0, 0, 0, 0, 1, 1, 2, 3, 4, 1, 2, 1, 5, 6, 3, 5, 6, 4}},
      {"icosahedral", {0, 1, 2, 1, 2, 3, 0, 4, 0, 5, 4, 3}, {0, 0, 0, 0, 1, 2, 0, 1, 2, 3, 4, 5}},
  }};
  return data;
}

}  // namespace detail

inline std::vector<PlatonicEntry> platonic_table() {
  struct Row {
    const char* name;
    Graph (*make)();
    int n, r, psi, psi_s;
    const char* argument;
  };
  static const Row rows[] = {
      {"tetrahedral", tetrahedral_graph, 4, 3, 4, 4, "complete graph K4"},
      {"cubical", cubical_graph, 8, 3, 4, 4, "class-size: k0 = r+1 = 4, otherwise k0 = n/2 = 4"},
      {"octahedral", octahedral_graph, 6, 4, 3, 4, "line graph of K4; eq2 with m = 12"},
      {"dodecahedral", dodecahedral_graph, 20, 3, 7, 7, "class-size: a class of size 2 forces k0 = 1+2r = 7"},
      {"icosahedral", icosahedral_graph, 12, 5, 6, 6, "class-size: k0 = n/2 = 6"},
  };
  std::vector<PlatonicEntry> out;
  for (std::size_t i = 0; i < 5; ++i) {
    const auto& row = rows[i];
    const auto& w = detail::platonic_witnesses()[i];
    PlatonicEntry e;
    e.name = row.name;
    e.graph = row.make();
    e.n = row.n;
    e.r = row.r;
    e.expected_psi = row.psi;
    e.expected_psi_s = row.psi_s;
    e.upper_bound_argument = row.argument;
    e.psi_witness = Coloring(w.psi);
    e.psi_s_witness = Coloring(w.psi_s);
    out.push_back(std::move(e));
  }
  return out;
}

inline std::optional<PlatonicEntry> platonic_entry(std::string_view name) {
  for (auto& e : platonic_table())
    if (e.name == name) return e;
  return std::nullopt;
}

}  // namespace achroma
