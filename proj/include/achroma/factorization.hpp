#pragma once

#include <map>
#include <utility>
#include <vector>

#include "achroma/error.hpp"
#include "achroma/graph.hpp"

namespace achroma {

// t Hamiltonian paths of K_2t on labels family_1..family_2t.
struct HamiltonianPathFactorization {
  int t = 0;
  Family family = Family::x;
  std::vector<std::vector<int>> paths;                 // vertex indices along F_i, 1..2t
  std::vector<std::pair<int, int>> center_edges;       // per path
  std::map<int, std::vector<int>> half_paths;          // leaf index -> t vertices, leaf first

  std::vector<std::pair<int, int>> path_edges(int i) const {
    std::vector<std::pair<int, int>> es;
    const auto& p = paths[i];
    for (std::size_t k = 0; k + 1 < p.size(); ++k) es.emplace_back(p[k], p[k + 1]);
    return es;
  }
};

// Representative of a in 1..m (0 maps to m).
inline int wrap(long a, long m) {
  long r = ((a - 1) % m + m) % m + 1;
  return static_cast<int>(r);
}

namespace detail {

inline HamiltonianPathFactorization factorize_offsets(int t, Family family, const std::vector<int>& offsets) {
  HamiltonianPathFactorization f;
  f.t = t;
  f.family = family;
  for (int i = 1; i <= t; ++i) {
    std::vector<int> p;
    for (int o : offsets) p.push_back(wrap(i + o, 2 * t));
    f.center_edges.emplace_back(p[t - 1], p[t]);
    std::vector<int> lo(p.begin(), p.begin() + t);
    std::vector<int> hi(p.rbegin(), p.rbegin() + t);
    f.half_paths[p.front()] = lo;
    f.half_paths[p.back()] = hi;
    f.paths.push_back(std::move(p));
  }
  return f;
}

}  // namespace detail

// Zigzag x_i, x_{i+1}, x_{i-1}, x_{i+2}, x_{i-2}, ..., x_{i+t}: 2t vertices.
inline HamiltonianPathFactorization factorize(int t, Family family = Family::x) {
  if (t < 1) throw Error(ErrorCode::InvalidParameter, "factorize needs t >= 1");
  std::vector<int> offsets{0};
  for (int s = 1; static_cast<int>(offsets.size()) < 2 * t; ++s) {
    offsets.push_back(s);
    if (static_cast<int>(offsets.size()) < 2 * t) offsets.push_back(-s);
  }
  return detail::factorize_offsets(t, family, offsets);
}

// Mirror-symmetric serpentine order: first half 0, t-1, 1, t-2, ...; second half is
// the first half shifted by t and reversed.
inline std::vector<int> boustrophedon_offsets(int t) {
  std::vector<int> half;
  for (int lo = 0, hi = t - 1; lo <= hi; ++lo, --hi) {
    half.push_back(lo);
    if (lo != hi) half.push_back(hi);
  }
  return half;
}

inline HamiltonianPathFactorization factorize_boustrophedon(int t, Family family = Family::x) {
  if (t < 1) throw Error(ErrorCode::InvalidParameter, "factorize needs t >= 1");
  auto offsets = boustrophedon_offsets(t);
  for (int k = t - 1; k >= 0; --k) offsets.push_back(offsets[k] + t);
  return detail::factorize_offsets(t, family, offsets);
}

}  // namespace achroma
