#include "jrep/axioms.hpp"

#include <algorithm>
#include <string>

#include "jrep/combinations.hpp"
#include "jrep/error.hpp"
#include "jrep/flow.hpp"

namespace jrep {

namespace {

/// Voters of the listed ballots, expanded to 1-based voter indices.
VoterGroup voters_of(const BallotProfile& profile, const std::vector<std::size_t>& ballots) {
  std::vector<VoterCount> voters;
  for (std::size_t b : ballots) {
    const VoterCount first = profile.first_voter(b);
    for (VoterCount v = 0; v < profile.ballots()[b].multiplicity; ++v) voters.push_back(first + v);
  }
  return VoterGroup(std::move(voters));
}

void check_budget(std::uint64_t needed, const EnumerationLimits& limits, const char* what) {
  if (needed > limits.max_combinations) {
    throw GuardExceeded(std::string(what) + " would enumerate " + std::to_string(needed) +
                        " combinations (limit " + std::to_string(limits.max_combinations) + ")");
  }
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > UINT64_MAX - b ? UINT64_MAX : a + b;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

CandidateSet to_set(std::span<const int> members) {
  CandidateSet set;
  for (int c : members) set.insert(c);
  return set;
}

}  // namespace

AxiomVerdict check_jr(const BallotProfile& profile, const Committee& committee) {
  require_committee(profile, committee);
  const int k = committee.size();
  const Rational threshold = quota(profile, k, 1);
  const CandidateSet winners = committee.as_set();

  for (int c = 1; c <= profile.num_candidates(); ++c) {
    if (winners.contains(c)) continue;
    std::vector<std::size_t> group;
    VoterCount count = 0;
    for (std::size_t b = 0; b < profile.num_ballots(); ++b) {
      const Ballot& ballot = profile.ballots()[b];
      if (ballot.approvals.contains(c) && (ballot.approvals & winners).empty()) {
        group.push_back(b);
        count += ballot.multiplicity;
      }
    }
    if (count > 0 && Rational(count) >= threshold) {
      return {false, AxiomWitness{1, CandidateSet{c}, voters_of(profile, group), threshold}};
    }
  }
  return {true, std::nullopt};
}

AxiomVerdict check_ejr(const BallotProfile& profile, const Committee& committee,
                       const EnumerationLimits& limits) {
  require_committee(profile, committee);
  const int k = committee.size();
  const int m = profile.num_candidates();
  std::uint64_t budget = 0;
  for (int level = 1; level <= k; ++level) budget = saturating_add(budget, binomial(m, level));
  check_budget(budget, limits, "EJR check");

  const CandidateSet winners = committee.as_set();
  std::vector<int> satisfaction;
  for (const Ballot& ballot : profile.ballots()) {
    satisfaction.push_back((ballot.approvals & winners).size());
  }

  for (int level = 1; level <= k; ++level) {
    const Rational threshold = quota(profile, k, level);
    std::optional<AxiomVerdict> found;
    for_each_combination(m, level, [&](std::span<const int> members) {
      const CandidateSet cohesive = to_set(members);
      std::vector<std::size_t> group;
      VoterCount count = 0;
      for (std::size_t b = 0; b < profile.num_ballots(); ++b) {
        const Ballot& ballot = profile.ballots()[b];
        if (satisfaction[b] < level && cohesive.is_subset_of(ballot.approvals)) {
          group.push_back(b);
          count += ballot.multiplicity;
        }
      }
      if (count > 0 && Rational(count) >= threshold) {
        found = AxiomVerdict{false,
                             AxiomWitness{level, cohesive, voters_of(profile, group), threshold}};
        return false;
      }
      return true;
    });
    if (found) return *found;
  }
  return {true, std::nullopt};
}

AxiomVerdict check_pjr(const BallotProfile& profile, const Committee& committee,
                       const EnumerationLimits& limits) {
  require_committee(profile, committee);
  const int k = committee.size();
  const int m = profile.num_candidates();
  std::uint64_t budget = 0;
  for (int level = 1; level <= k; ++level) {
    budget = saturating_add(budget, saturating_mul(binomial(m, level), binomial(k, level - 1)));
  }
  check_budget(budget, limits, "PJR check");

  const CandidateSet winners = committee.as_set();
  const std::vector<int>& members_of_w = committee.members();

  for (int level = 1; level <= k; ++level) {
    const Rational threshold = quota(profile, k, level);
    std::optional<AxiomVerdict> found;
    for_each_combination(m, level, [&](std::span<const int> members) {
      const CandidateSet cohesive = to_set(members);
      std::vector<std::size_t> supporters;
      VoterCount supporter_count = 0;
      for (std::size_t b = 0; b < profile.num_ballots(); ++b) {
        if (cohesive.is_subset_of(profile.ballots()[b].approvals)) {
          supporters.push_back(b);
          supporter_count += profile.ballots()[b].multiplicity;
        }
      }
      // Restricting by U only removes voters.
      if (supporter_count == 0 || Rational(supporter_count) < threshold) return true;

      return for_each_combination(k, level - 1, [&](std::span<const int> positions) {
        CandidateSet represented;
        for (int p : positions) represented.insert(members_of_w[static_cast<std::size_t>(p - 1)]);
        std::vector<std::size_t> group;
        VoterCount count = 0;
        for (std::size_t b : supporters) {
          const Ballot& ballot = profile.ballots()[b];
          if ((ballot.approvals & winners).is_subset_of(represented)) {
            group.push_back(b);
            count += ballot.multiplicity;
          }
        }
        if (count > 0 && Rational(count) >= threshold) {
          found = AxiomVerdict{false,
                               AxiomWitness{level, cohesive, voters_of(profile, group), threshold}};
          return false;
        }
        return true;
      });
    });
    if (found) return *found;
  }
  return {true, std::nullopt};
}

AxiomVerdict check_axiom(Axiom axiom, const BallotProfile& profile, const Committee& committee,
                         const EnumerationLimits& limits) {
  switch (axiom) {
    case Axiom::JR:
      return check_jr(profile, committee);
    case Axiom::PJR:
      return check_pjr(profile, committee, limits);
    case Axiom::EJR:
      return check_ejr(profile, committee, limits);
  }
  throw InvalidArgument("unknown axiom");
}

AxiomVerdict pjr_oracle(const BallotProfile& profile, const Committee& committee) {
  require_committee(profile, committee);
  const VoterCount n = profile.num_voters();
  if (n > 14) throw InvalidArgument("PJR oracle supports at most 14 voters");
  const int k = committee.size();
  const std::vector<CandidateSet> voters = profile.expand();
  const CandidateSet winners = committee.as_set();
  const std::uint64_t subsets = std::uint64_t{1} << n;

  for (int level = 1; level <= k; ++level) {
    for (std::uint64_t mask = 1; mask < subsets; ++mask) {
      const int size = std::popcount(mask);
      if (static_cast<VoterCount>(size) * k < level * n) continue;
      CandidateSet common = CandidateSet::prefix(profile.num_candidates());
      CandidateSet covered;
      std::vector<VoterCount> members;
      for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
        const int i = std::countr_zero(rest);
        common = common & voters[static_cast<std::size_t>(i)];
        covered = covered | (voters[static_cast<std::size_t>(i)] & winners);
        members.push_back(i + 1);
      }
      if (common.size() >= level && covered.size() < level) {
        const std::vector<int> shared = common.members();
        const CandidateSet cohesive = CandidateSet::from_members(
            std::vector<int>(shared.begin(), shared.begin() + level));
        return {false, AxiomWitness{level, cohesive, VoterGroup(std::move(members)),
                                    quota(profile, k, level)}};
      }
    }
  }
  return {true, std::nullopt};
}

PrVerdict provides_pr(const BallotProfile& profile, const Committee& committee) {
  require_committee(profile, committee);
  const VoterCount n = profile.num_voters();
  const int k = committee.size();
  if (n % k != 0) {
    throw NotApplicable("perfect representation needs k | n (k=" + std::to_string(k) +
                        ", n=" + std::to_string(n) + ")");
  }
  const VoterCount share = n / k;

  // 0 source, 1 sink, then one node per ballot, then one per member.
  const auto ballots = profile.ballots();
  FlowNetwork network(2 + static_cast<int>(ballots.size()) + k);
  const auto ballot_node = [](std::size_t b) { return 2 + static_cast<int>(b); };
  const auto member_node = [&](int pos) { return 2 + static_cast<int>(ballots.size()) + pos; };
  std::vector<std::vector<int>> arcs(ballots.size(), std::vector<int>(static_cast<std::size_t>(k), -1));
  for (std::size_t b = 0; b < ballots.size(); ++b) {
    network.add_edge(0, ballot_node(b), ballots[b].multiplicity);
    for (int pos = 0; pos < k; ++pos) {
      if (ballots[b].approvals.contains(committee.members()[static_cast<std::size_t>(pos)])) {
        arcs[b][static_cast<std::size_t>(pos)] =
            network.add_edge(ballot_node(b), member_node(pos), ballots[b].multiplicity);
      }
    }
  }
  for (int pos = 0; pos < k; ++pos) network.add_edge(member_node(pos), 1, share);

  if (network.max_flow(0, 1) != n) return {false, std::nullopt};

  std::vector<std::vector<VoterCount>> groups(static_cast<std::size_t>(k));
  for (std::size_t b = 0; b < ballots.size(); ++b) {
    VoterCount next = profile.first_voter(b);
    for (int pos = 0; pos < k; ++pos) {
      const int arc = arcs[b][static_cast<std::size_t>(pos)];
      if (arc < 0) continue;
      for (VoterCount u = 0; u < network.flow(arc); ++u) {
        groups[static_cast<std::size_t>(pos)].push_back(next++);
      }
    }
  }
  PrCertificate certificate;
  for (int pos = 0; pos < k; ++pos) {
    certificate.groups.push_back({committee.members()[static_cast<std::size_t>(pos)],
                                  VoterGroup(std::move(groups[static_cast<std::size_t>(pos)]))});
  }
  return {true, std::move(certificate)};
}

std::optional<Committee> exists_pr_committee(const BallotProfile& profile, int k,
                                             const EnumerationLimits& limits) {
  if (k < 1 || k > profile.num_candidates()) {
    throw InvalidArgument("k=" + std::to_string(k) + " outside 1..m");
  }
  const VoterCount n = profile.num_voters();
  if (n % k != 0) {
    throw NotApplicable("perfect representation needs k | n (k=" + std::to_string(k) +
                        ", n=" + std::to_string(n) + ")");
  }
  // A member of a PR committee is approved by at least n/k voters.
  std::vector<int> eligible;
  for (int c = 1; c <= profile.num_candidates(); ++c) {
    if (profile.approval_count(c) * k >= n) eligible.push_back(c);
  }
  const int pool = static_cast<int>(eligible.size());
  check_budget(binomial(static_cast<std::uint64_t>(pool), static_cast<std::uint64_t>(k)), limits,
               "PR committee search");

  std::optional<Committee> found;
  for_each_combination(pool, k, [&](std::span<const int> positions) {
    std::vector<int> members;
    for (int p : positions) members.push_back(eligible[static_cast<std::size_t>(p - 1)]);
    Committee candidate(std::move(members));
    if (provides_pr(profile, candidate).provided) {
      found = std::move(candidate);
      return false;
    }
    return true;
  });
  return found;
}

Rational avg_satisfaction(const BallotProfile& profile, const VoterGroup& group,
                          const Committee& committee) {
  const CandidateSet winners = committee.as_set();
  VoterCount total = 0;
  for (VoterCount voter : group.voters()) {
    total += (profile.approvals_of_voter(voter) & winners).size();
  }
  return make_rational(total, static_cast<std::int64_t>(group.size()));
}

Rational satisfaction_bound(int level, VoterCount num_voters, SatisfactionAxiom axiom) {
  if (level < 1 || num_voters < 1) throw InvalidArgument("level and n must be positive");
  switch (axiom) {
    case SatisfactionAxiom::JR:
      return Rational(1) - make_rational(1, level) + make_rational(1, level * num_voters);
    case SatisfactionAxiom::EJR:
      return make_rational(level - 1, 2);
  }
  throw InvalidArgument("unknown axiom");
}

}  // namespace jrep
