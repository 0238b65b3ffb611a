#pragma once

#include <cstdint>

#include "jrep/profile.hpp"

namespace jrep {

struct RandomProfileParams {
  std::uint64_t seed = 1;
  VoterCount num_voters = 8;
  int num_candidates = 6;
  /// Probability that a voter approves a given candidate, 0 < p < 1.
  double approval_probability = 0.4;
  /// Redraws allowed per voter before an empty ballot is reported.
  int max_redraws = 10'000;
};

/// Seeded random profile: every voter approves every candidate independently
/// with the given probability, and empty ballots are redrawn. One ballot line
/// per voter. The same parameters always give the same profile on every
/// platform (mt19937_64 plus an integer threshold, no library distributions).
BallotProfile random_profile(const RandomProfileParams& params);

}  // namespace jrep
