#pragma once

#include <cmath>
#include <cstdint>
#include <optional>

#include "achroma/error.hpp"

namespace achroma {

inline std::uint64_t isqrt(std::uint64_t x) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

namespace detail {
// Largest k >= 1 with (2k-1)^2 <= x, i.e. floor(sqrt(x/4) + 1/2) for x >= 1.
inline long half_odd_floor(long long x) {
  if (x < 1) throw Error(ErrorCode::InvalidParameter, "bound argument below range");
  return static_cast<long>((isqrt(static_cast<std::uint64_t>(x)) + 1) / 2);
}
}  // namespace detail

// floor(sqrt(2m + 1/4) + 1/2): largest k with k(k-1)/2 <= m.
inline long eq2_bound(long long m) { return detail::half_odd_floor(8 * m + 1); }

// floor(sqrt(6n - 47/4) + 1/2): planar graphs.
inline long eq3_bound(long long n) { return detail::half_odd_floor(24 * n - 47); }

// floor(sqrt(4n - 23/4) + 1/2): outerplanar graphs.
inline long eq4_bound(long long n) { return detail::half_odd_floor(16 * n - 23); }

// floor(sqrt(4n - 31/4) + 1/2): planar graphs of girth at least 4.
inline long eq5_bound(long long n) { return detail::half_odd_floor(16 * n - 31); }

// Padded-family guarantees: floor(sqrt(6n - 47/4) - 9/2) and floor(sqrt(4n - c) - 5/2).
inline long planar_padding_lower(long long n) { return eq3_bound(n) - 5; }
inline long outerplanar_padding_lower(long long n) { return eq4_bound(n) - 3; }
inline long girth4_padding_lower(long long n) { return eq5_bound(n) - 3; }

// Surface bound floor(sqrt(6(n + eps) - 47/4) + 1/2).
inline long surface_bound(long long n, long long eps) { return eq3_bound(n + eps); }

inline long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

}  // namespace achroma
