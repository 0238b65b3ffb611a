#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "jrep/generate.hpp"
#include "jrep/profile.hpp"

namespace suite {

struct Instance {
  std::uint64_t seed;
  jrep::BallotProfile profile;
  int k;
};

/// Seeded instances with 2 <= k <= max_k, k | n, n <= max_n and
/// k <= m <= max_m. Instance i uses seed first_seed + i.
inline std::vector<Instance> divisible(int count, std::uint64_t first_seed, int max_n = 16,
                                       int max_m = 8, int max_k = 4) {
  std::vector<Instance> out;
  for (int i = 0; i < count; ++i) {
    const std::uint64_t seed = first_seed + static_cast<std::uint64_t>(i);
    std::mt19937_64 rng(seed);
    const int k = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_k - 1));
    const int groups = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n / k));
    const int m = k + static_cast<int>(rng() % static_cast<std::uint64_t>(max_m - k + 1));
    const double p = 0.2 + 0.1 * static_cast<double>(rng() % 5);
    jrep::RandomProfileParams params;
    params.seed = seed;
    params.num_voters = k * groups;
    params.num_candidates = m;
    params.approval_probability = p;
    out.push_back({seed, jrep::random_profile(params), k});
  }
  return out;
}

/// Seeded instances without the divisibility requirement.
inline std::vector<Instance> general(int count, std::uint64_t first_seed, int max_n, int max_m,
                                     int max_k) {
  std::vector<Instance> out;
  for (int i = 0; i < count; ++i) {
    const std::uint64_t seed = first_seed + static_cast<std::uint64_t>(i);
    std::mt19937_64 rng(seed);
    const int m = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_m));
    const int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::min(m, max_k)));
    const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n));
    const double p = 0.2 + 0.1 * static_cast<double>(rng() % 5);
    jrep::RandomProfileParams params;
    params.seed = seed;
    params.num_voters = n;
    params.num_candidates = m;
    params.approval_probability = p;
    out.push_back({seed, jrep::random_profile(params), k});
  }
  return out;
}

}  // namespace suite
