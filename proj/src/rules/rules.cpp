#include "jrep/rules.hpp"

#include <algorithm>
#include <string>

#include "jrep/axioms.hpp"
#include "jrep/combinations.hpp"
#include "jrep/error.hpp"
#include "jrep/flow.hpp"

namespace jrep {

namespace {

void require_k(const BallotProfile& profile, int k) {
  if (k < 1 || k > profile.num_candidates()) {
    throw InvalidArgument("k=" + std::to_string(k) + " outside 1..m (m=" +
                          std::to_string(profile.num_candidates()) + ")");
  }
}

void require_search_budget(const BallotProfile& profile, int k, const SearchLimits& limits) {
  const auto count = binomial(static_cast<std::uint64_t>(profile.num_candidates()),
                              static_cast<std::uint64_t>(k));
  if (count > limits.max_committees) {
    throw GuardExceeded("C(" + std::to_string(profile.num_candidates()) + ", " +
                        std::to_string(k) + ") = " + std::to_string(count) +
                        " committees exceeds the limit of " +
                        std::to_string(limits.max_committees));
  }
}

/// Visits committees in lexicographic order and keeps the first best one.
template <typename Score>
CommitteeSearchResult exhaustive_search(const BallotProfile& profile, int k,
                                        const SearchLimits& limits, Score&& score_of) {
  require_k(profile, k);
  require_search_budget(profile, k, limits);
  std::optional<CommitteeSearchResult> best;
  for_each_combination(profile.num_candidates(), k, [&](std::span<const int> members) {
    Committee committee(std::vector<int>(members.begin(), members.end()));
    Rational score = score_of(committee);
    if (!best || score > best->score) {
      best = CommitteeSearchResult{std::move(committee), std::move(score), 1};
    } else if (score == best->score) {
      ++best->optimal_count;
    }
    return true;
  });
  return std::move(*best);
}

}  // namespace

Rational wpav_score(const BallotProfile& profile, const Committee& committee,
                    const WeightVector& weights) {
  require_committee(profile, committee);
  weights.require_length(committee.size());
  std::vector<VoterCount> by_overlap(static_cast<std::size_t>(committee.size()) + 1, 0);
  for (const Ballot& ballot : profile.ballots()) {
    by_overlap[static_cast<std::size_t>((ballot.approvals & committee.as_set()).size())] +=
        ballot.multiplicity;
  }
  Rational score = 0;
  for (int p = 1; p <= committee.size(); ++p) {
    if (by_overlap[static_cast<std::size_t>(p)] != 0) {
      score += weights.cumulative(p) * by_overlap[static_cast<std::size_t>(p)];
    }
  }
  return score;
}

CommitteeSearchResult wpav_search(const BallotProfile& profile, int k,
                                  const WeightVector& weights, const SearchLimits& limits) {
  weights.require_length(k);
  return exhaustive_search(profile, k, limits, [&](const Committee& committee) {
    return wpav_score(profile, committee, weights);
  });
}

Committee wpav_winners(const BallotProfile& profile, int k, const WeightVector& weights,
                       const SearchLimits& limits) {
  return wpav_search(profile, k, weights, limits).committee;
}

Committee pav_winners(const BallotProfile& profile, int k, const SearchLimits& limits) {
  require_k(profile, k);
  return wpav_winners(profile, k, WeightVector::harmonic(k), limits);
}

bool RavTrace::any_tie() const {
  return std::any_of(rounds.begin(), rounds.end(), [](const RavRound& r) { return r.tie; });
}

RavTrace wrav_run(const BallotProfile& profile, int k, const WeightVector& weights) {
  require_k(profile, k);
  weights.require_length(k);
  RavTrace trace;
  CandidateSet elected;
  for (int round = 1; round <= k; ++round) {
    std::vector<std::pair<int, Rational>> scores;
    for (int c = 1; c <= profile.num_candidates(); ++c) {
      if (elected.contains(c)) continue;
      Rational weight = 0;
      for (const Ballot& ballot : profile.ballots()) {
        if (ballot.approvals.contains(c)) {
          weight += weights.at((ballot.approvals & elected).size() + 1) * ballot.multiplicity;
        }
      }
      scores.emplace_back(c, std::move(weight));
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < scores.size(); ++i) {
      if (scores[i].second > scores[best].second) best = i;
    }
    std::optional<Rational> runner_up;
    for (std::size_t i = 0; i < scores.size(); ++i) {
      if (i != best && (!runner_up || scores[i].second > *runner_up)) runner_up = scores[i].second;
    }
    const bool tie = runner_up && *runner_up == scores[best].second;
    elected.insert(scores[best].first);
    trace.rounds.push_back({scores[best].first, scores[best].second, runner_up, tie});
  }
  trace.committee = Committee(elected);
  return trace;
}

RavTrace rav_run(const BallotProfile& profile, int k) {
  require_k(profile, k);
  return wrav_run(profile, k, WeightVector::harmonic(k));
}

MonroeAssignment monroe_score(const BallotProfile& profile, const Committee& committee) {
  require_committee(profile, committee);
  const VoterCount n = profile.num_voters();
  const int k = committee.size();
  const VoterCount floor_load = n / k;
  const VoterCount extra_slots = n % k;
  const auto ballots = profile.ballots();
  const auto& members = committee.members();

  // 0 source, 1 sink, 2 overflow, then ballots, then members.
  FlowNetwork network(3 + static_cast<int>(ballots.size()) + k);
  const auto ballot_node = [](std::size_t b) { return 3 + static_cast<int>(b); };
  const auto member_node = [&](int pos) { return 3 + static_cast<int>(ballots.size()) + pos; };
  std::vector<std::vector<int>> arcs(ballots.size(),
                                     std::vector<int>(static_cast<std::size_t>(k), -1));
  for (std::size_t b = 0; b < ballots.size(); ++b) {
    network.add_edge(0, ballot_node(b), ballots[b].multiplicity);
    for (int pos = 0; pos < k; ++pos) {
      if (ballots[b].approvals.contains(members[static_cast<std::size_t>(pos)])) {
        arcs[b][static_cast<std::size_t>(pos)] =
            network.add_edge(ballot_node(b), member_node(pos), ballots[b].multiplicity);
      }
    }
  }
  std::vector<int> overflow_arcs;
  for (int pos = 0; pos < k; ++pos) {
    if (floor_load > 0) network.add_edge(member_node(pos), 1, floor_load);
    if (extra_slots > 0) overflow_arcs.push_back(network.add_edge(member_node(pos), 2, 1));
  }
  if (extra_slots > 0) network.add_edge(2, 1, extra_slots);

  MonroeAssignment result;
  result.score = network.max_flow(0, 1);
  result.representative.assign(static_cast<std::size_t>(n), 0);

  std::vector<VoterCount> load(static_cast<std::size_t>(k), 0);
  std::vector<VoterCount> unassigned;
  for (std::size_t b = 0; b < ballots.size(); ++b) {
    VoterCount next = profile.first_voter(b);
    for (int pos = 0; pos < k; ++pos) {
      const int arc = arcs[b][static_cast<std::size_t>(pos)];
      if (arc < 0) continue;
      for (VoterCount u = 0; u < network.flow(arc); ++u) {
        result.representative[static_cast<std::size_t>(next++ - 1)] =
            members[static_cast<std::size_t>(pos)];
        ++load[static_cast<std::size_t>(pos)];
      }
    }
    for (; next < profile.first_voter(b) + ballots[b].multiplicity; ++next) unassigned.push_back(next);
  }

  // Ceiling slots already used by the flow, then top up to exactly n mod k.
  std::vector<VoterCount> target(static_cast<std::size_t>(k), floor_load);
  VoterCount ceiling_used = 0;
  for (int pos = 0; pos < k && extra_slots > 0; ++pos) {
    if (network.flow(overflow_arcs[static_cast<std::size_t>(pos)]) > 0) {
      ++target[static_cast<std::size_t>(pos)];
      ++ceiling_used;
    }
  }
  for (int pos = 0; pos < k && ceiling_used < extra_slots; ++pos) {
    if (target[static_cast<std::size_t>(pos)] == floor_load) {
      ++target[static_cast<std::size_t>(pos)];
      ++ceiling_used;
    }
  }
  std::size_t cursor = 0;
  for (int pos = 0; pos < k; ++pos) {
    while (load[static_cast<std::size_t>(pos)] < target[static_cast<std::size_t>(pos)]) {
      result.representative[static_cast<std::size_t>(unassigned[cursor++] - 1)] =
          members[static_cast<std::size_t>(pos)];
      ++load[static_cast<std::size_t>(pos)];
    }
  }
  return result;
}

CommitteeSearchResult monroe_search(const BallotProfile& profile, int k,
                                    const SearchLimits& limits) {
  return exhaustive_search(profile, k, limits, [&](const Committee& committee) {
    return Rational(monroe_score(profile, committee).score);
  });
}

Committee monroe_winners(const BallotProfile& profile, int k, const SearchLimits& limits) {
  return monroe_search(profile, k, limits).committee;
}

GreedyMonroeTrace greedy_monroe(const BallotProfile& profile, int k) {
  require_k(profile, k);
  const VoterCount n = profile.num_voters();
  const VoterCount floor_load = n / k;
  const VoterCount ceiling_rounds = n - k * floor_load;
  const auto ballots = profile.ballots();
  // Voters of each ballot are assigned from the front, so the unassigned
  // voters of ballot b are first_voter(b) + consumed[b] onwards.
  std::vector<VoterCount> consumed(ballots.size(), 0);

  GreedyMonroeTrace trace;
  CandidateSet chosen;
  for (int round = 1; round <= k; ++round) {
    const VoterCount group_size = round <= ceiling_rounds ? floor_load + 1 : floor_load;
    int best = 0;
    VoterCount best_value = -1;
    for (int c = 1; c <= profile.num_candidates(); ++c) {
      if (chosen.contains(c)) continue;
      VoterCount approvers = 0;
      for (std::size_t b = 0; b < ballots.size(); ++b) {
        if (ballots[b].approvals.contains(c)) approvers += ballots[b].multiplicity - consumed[b];
      }
      const VoterCount value = std::min(group_size, approvers);
      if (value > best_value) {
        best = c;
        best_value = value;
      }
    }

    GreedyMonroeRound record{round, best, {}, best_value};
    VoterCount needed = group_size;
    const auto take = [&](bool approvers) {
      for (std::size_t b = 0; b < ballots.size() && needed > 0; ++b) {
        if (ballots[b].approvals.contains(best) != approvers) continue;
        const VoterCount available = ballots[b].multiplicity - consumed[b];
        const VoterCount taken = std::min(available, needed);
        for (VoterCount u = 0; u < taken; ++u) {
          record.voters.push_back(profile.first_voter(b) + consumed[b] + u);
        }
        consumed[b] += taken;
        needed -= taken;
      }
    };
    take(true);
    take(false);
    std::sort(record.voters.begin(), record.voters.end());
    chosen.insert(best);
    trace.rounds.push_back(std::move(record));
  }
  trace.committee = Committee(chosen);
  return trace;
}

HybridResult hybrid_pr_pav(const BallotProfile& profile, int k, const SearchLimits& limits) {
  require_k(profile, k);
  if (profile.num_voters() % k == 0) {
    if (auto committee = exists_pr_committee(profile, k, {limits.max_committees})) {
      return {std::move(*committee), true};
    }
  }
  return {pav_winners(profile, k, limits), false};
}

}  // namespace jrep
