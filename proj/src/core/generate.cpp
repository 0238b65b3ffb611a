#include "jrep/generate.hpp"

#include <cmath>
#include <random>

#include "jrep/error.hpp"

namespace jrep {

BallotProfile random_profile(const RandomProfileParams& params) {
  if (params.num_voters < 1 || params.num_voters > 1'000'000) {
    throw InvalidArgument("n must be in 1..1000000");
  }
  if (params.num_candidates < 1 || params.num_candidates > CandidateSet::kMaxCandidates) {
    throw InvalidArgument("m must be in 1..64");
  }
  if (!(params.approval_probability > 0.0 && params.approval_probability < 1.0)) {
    throw InvalidArgument("approval probability must satisfy 0 < p < 1");
  }
  // Approve iff the next 53-bit draw falls below p * 2^53.
  const auto threshold =
      static_cast<std::uint64_t>(std::ldexp(params.approval_probability, 53));
  std::mt19937_64 rng(params.seed);

  std::vector<CandidateSet> voters;
  voters.reserve(static_cast<std::size_t>(params.num_voters));
  for (VoterCount i = 0; i < params.num_voters; ++i) {
    CandidateSet ballot;
    for (int attempt = 0; ballot.empty(); ++attempt) {
      if (attempt == params.max_redraws) {
        throw InvalidArgument("voter " + std::to_string(i + 1) + " drew an empty ballot " +
                              std::to_string(params.max_redraws) + " times");
      }
      for (int c = 1; c <= params.num_candidates; ++c) {
        if ((rng() >> 11) < threshold) ballot.insert(c);
      }
    }
    voters.push_back(ballot);
  }
  return profile_from_voters(params.num_candidates, voters);
}

}  // namespace jrep
