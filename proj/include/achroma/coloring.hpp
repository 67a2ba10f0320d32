#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "achroma/error.hpp"
#include "achroma/graph.hpp"

namespace achroma {

// Surjective map vertex ordinal -> color-id in 0..k-1.
class Coloring {
 public:
  Coloring() = default;

  explicit Coloring(std::vector<int> colors) : colors_(std::move(colors)) {
    int hi = -1;
    for (int c : colors_) {
      if (c < 0) throw Error(ErrorCode::InvalidParameter, "negative color-id");
      hi = std::max(hi, c);
    }
    k_ = static_cast<std::size_t>(hi + 1);
    std::vector<char> seen(k_, 0);
    for (int c : colors_) seen[c] = 1;
    for (std::size_t c = 0; c < k_; ++c)
      if (!seen[c]) throw Error(ErrorCode::NotSurjective, "color " + std::to_string(c) + " unused");
  }

  std::size_t k() const { return k_; }
  std::size_t size() const { return colors_.size(); }
  int operator[](VertexId v) const { return colors_[v]; }
  const std::vector<int>& colors() const { return colors_; }

  bool operator==(const Coloring&) const = default;

 private:
  std::vector<int> colors_;
  std::size_t k_ = 0;
};

namespace detail {
inline void check_domain(const Graph& g, const Coloring& c) {
  if (c.size() != g.n())
    throw Error(ErrorCode::DomainMismatch, "coloring covers " + std::to_string(c.size()) +
                                               " vertices, graph has " + std::to_string(g.n()));
}
}  // namespace detail

inline bool is_proper(const Graph& g, const Coloring& c) {
  detail::check_domain(g, c);
  for (auto [a, b] : g.edges())
    if (c[a] == c[b]) return false;
  return true;
}

// mult[i][j] = number of edges joining color i and color j (i != j); diagonal counts monochromatic edges.
inline std::vector<std::vector<std::size_t>> pair_census(const Graph& g, const Coloring& c) {
  detail::check_domain(g, c);
  std::vector<std::vector<std::size_t>> mult(c.k(), std::vector<std::size_t>(c.k(), 0));
  for (auto [a, b] : g.edges()) {
    ++mult[c[a]][c[b]];
    if (c[a] != c[b]) ++mult[c[b]][c[a]];
  }
  return mult;
}

inline bool is_complete(const Graph& g, const Coloring& c) {
  auto mult = pair_census(g, c);
  for (std::size_t i = 0; i < c.k(); ++i)
    for (std::size_t j = i + 1; j < c.k(); ++j)
      if (mult[i][j] == 0) return false;
  return true;
}

// True iff every unordered color pair is realized by exactly one edge and no edge is monochromatic.
inline bool pairs_realized_once(const Graph& g, const Coloring& c) {
  auto mult = pair_census(g, c);
  for (std::size_t i = 0; i < c.k(); ++i) {
    if (mult[i][i] != 0) return false;
    for (std::size_t j = i + 1; j < c.k(); ++j)
      if (mult[i][j] != 1) return false;
  }
  return true;
}

}  // namespace achroma
