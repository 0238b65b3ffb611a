#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <vector>

namespace jrep {

/// C(n, r), saturating at UINT64_MAX.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    // result * factor is divisible by i; cancel the common part first so the
    // only possible overflow is in the final value.
    const std::uint64_t factor = n - r + i;
    const std::uint64_t g = std::gcd(result, i);
    const std::uint64_t scaled = factor / (i / g);
    result /= g;
    if (scaled != 0 && result > std::numeric_limits<std::uint64_t>::max() / scaled) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    result *= scaled;
  }
  return result;
}

/// Calls `visit` with every size-`r` subset of {1..n} in lexicographic order,
/// as a strictly increasing index list. Stops early when `visit` returns false.
/// Returns false iff it stopped early.
template <typename Visit>
bool for_each_combination(int n, int r, Visit&& visit) {
  if (r < 0 || r > n) return true;
  std::vector<int> current(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) current[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    if (!visit(std::span<const int>(current))) return false;
    int pos = r - 1;
    while (pos >= 0 && current[static_cast<std::size_t>(pos)] == n - r + pos + 1) --pos;
    if (pos < 0) return true;
    ++current[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < r; ++i) {
      current[static_cast<std::size_t>(i)] = current[static_cast<std::size_t>(i - 1)] + 1;
    }
  }
}

}  // namespace jrep
