#pragma once

#include <algorithm>
#include <cstddef>
#include <unordered_set>
#include <vector>

#include "sensornoise/rng.hpp"

namespace sensornoise::detail {

// k distinct indices from [0, n), ascending (Floyd's algorithm). Sorting
// makes the result independent of hash-set iteration order.
inline std::vector<std::size_t> choose_indices(std::size_t n, std::size_t k, RngStream rng) {
  k = std::min(k, n);
  if (k == n) {
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    return all;
  }
  std::unordered_set<std::size_t> chosen;
  chosen.reserve(k * 2);
  for (std::size_t j = n - k; j < n; ++j) {
    const std::size_t t = rng.next_below(j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<std::size_t> idx(chosen.begin(), chosen.end());
  std::sort(idx.begin(), idx.end());
  return idx;
}

}  // namespace sensornoise::detail
