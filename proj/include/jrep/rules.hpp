#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "jrep/profile.hpp"

namespace jrep {

// Every argmax in this module breaks ties towards the lowest candidate index
// (for committees: the lexicographically smallest member list). Results
// record whether a tie was resolved that way.

struct SearchLimits {
  /// Cap on C(m, k) for exhaustive committee searches.
  std::uint64_t max_committees = 10'000'000;
};

struct CommitteeSearchResult {
  Committee committee;
  Rational score;
  /// Number of committees attaining the optimum.
  std::uint64_t optimal_count = 0;

  bool tie() const { return optimal_count > 1; }
};

/// Σ_i r_w(|W ∩ A_i|). With the harmonic vector this is the PAV score.
/// Throws InvalidArgument when the vector is shorter than |W|.
Rational wpav_score(const BallotProfile& profile, const Committee& committee,
                    const WeightVector& weights);

/// Exhaustive w-PAV over all C(m, k) committees.
CommitteeSearchResult wpav_search(const BallotProfile& profile, int k,
                                  const WeightVector& weights, const SearchLimits& limits = {});
Committee wpav_winners(const BallotProfile& profile, int k, const WeightVector& weights,
                       const SearchLimits& limits = {});
/// wpav_winners with (1, 1/2, ..., 1/k).
Committee pav_winners(const BallotProfile& profile, int k, const SearchLimits& limits = {});

struct RavRound {
  int candidate;
  Rational weight;
  /// Best weight among the other unselected candidates; empty when none is left.
  std::optional<Rational> runner_up;
  bool tie;
};

struct RavTrace {
  std::vector<RavRound> rounds;
  Committee committee;

  bool any_tie() const;
};

/// Sequential w-RAV: in each round a candidate c scores
/// Σ_{i : c ∈ A_i} w_{|W ∩ A_i| + 1}; the best one joins W.
RavTrace wrav_run(const BallotProfile& profile, int k, const WeightVector& weights);
/// wrav_run with harmonic weights, i.e. 1 / (1 + |W ∩ A_i|) per approver.
RavTrace rav_run(const BallotProfile& profile, int k);

/// A valid Monroe mapping: loads are ⌊n/k⌋ or ⌈n/k⌉, with exactly n mod k
/// members at the ceiling.
struct MonroeAssignment {
  /// representative[i] is the committee member assigned to voter i + 1.
  std::vector<int> representative;
  /// Voters assigned to a member they approve.
  std::int64_t score = 0;
};

/// Exact Monroe score of W and an optimal valid mapping.
///
/// With s = ⌊n/k⌋ and r = n mod k, the satisfied part of a valid mapping
/// gives each member at most s + e_c approving voters, where e_c ∈ {0, 1}
/// and Σ e_c ≤ r. Conversely, any such partial assignment extends to a valid
/// mapping: raise Σ e_c to exactly r, then fill every member up to s + e_c
/// with unassigned voters (the targets sum to n). So the score is the max
/// flow of source -> voter (1) -> approved member -> sink (s), with a shared
/// overflow node member -> overflow (1) -> sink (r). A plain matching with
/// capacity ⌈n/k⌉ per member overcounts when more than r members would sit
/// at the ceiling.
MonroeAssignment monroe_score(const BallotProfile& profile, const Committee& committee);

/// Exhaustive Monroe over all C(m, k) committees.
CommitteeSearchResult monroe_search(const BallotProfile& profile, int k,
                                    const SearchLimits& limits = {});
Committee monroe_winners(const BallotProfile& profile, int k, const SearchLimits& limits = {});

struct GreedyMonroeRound {
  int round;
  int candidate;
  std::vector<VoterCount> voters;
  /// Voters in the group approving the candidate.
  VoterCount covered;
};

struct GreedyMonroeTrace {
  std::vector<GreedyMonroeRound> rounds;
  Committee committee;
};

/// Greedy Monroe. Round t takes ⌈n/k⌉ voters for t ≤ n mod k and ⌊n/k⌋
/// otherwise. The chosen candidate maximizes min(group size, unassigned
/// approvers); its group is the lowest-indexed unassigned approvers, padded
/// with the lowest-indexed unassigned non-approvers.
GreedyMonroeTrace greedy_monroe(const BallotProfile& profile, int k);

struct HybridResult {
  Committee committee;
  /// True when the committee came from the perfect-representation search.
  bool perfect_representation;
};

/// If k divides n and some committee provides perfect representation, the
/// lexicographically first such committee; otherwise the PAV winner.
HybridResult hybrid_pr_pav(const BallotProfile& profile, int k, const SearchLimits& limits = {});

}  // namespace jrep
