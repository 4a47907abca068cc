#pragma once

// Test-only oracles. They deliberately avoid the library's algorithms: Phi by
// plain subset enumeration, disjointness by interval overlap on corners.

#include "vitali/geometry.hpp"

#include <boost/math/tools/minima.hpp>

#include <cstdint>
#include <functional>
#include <limits>
#include <utility>

namespace vitali::testing {

inline bool overlap_by_corners(const Cube& a, const Cube& b) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Scalar a_lo = a.center()[i] - a.radius(), a_hi = a.center()[i] + a.radius();
    Scalar b_lo = b.center()[i] - b.radius(), b_hi = b.center()[i] + b.radius();
    if (a_hi < b_lo || b_hi < a_lo) return false;
  }
  return true;
}

/// max over disjoint subsets of the summed volume, by enumerating all 2^n
/// subsets. Returns the best weight and its mask.
inline std::pair<Scalar, std::uint32_t> brute_force_best_weight(const Collection& c) {
  const std::size_t n = c.size();
  Scalar best = 0;
  std::uint32_t best_mask = 0;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    bool ok = true;
    Scalar weight = 0;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (!(mask >> i & 1U)) continue;
      Scalar side = c[i].radius() * 2, vol = 1;
      for (std::size_t k = 0; k < c.dim(); ++k) vol *= side;
      weight += vol;
      for (std::size_t j = i + 1; j < n && ok; ++j)
        if ((mask >> j & 1U) && overlap_by_corners(c[i], c[j])) ok = false;
    }
    if (ok && weight > best) {
      best = weight;
      best_mask = mask;
    }
  }
  return {best, best_mask};
}

/// Minimum of f on [lo, hi] by Brent's method at the precision of T.
template <typename T, typename F>
std::pair<T, T> brent_minimum(F f, T lo, T hi) {
  auto r = boost::math::tools::brent_find_minima(f, lo, hi, std::numeric_limits<T>::digits / 2);
  return {r.first, r.second};
}

}  // namespace vitali::testing
