#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jrep/candidate_set.hpp"
#include "jrep/rational.hpp"

namespace jrep {

using VoterCount = std::int64_t;

/// One line of a profile: an approval set shared by `multiplicity` voters.
struct Ballot {
  CandidateSet approvals;
  VoterCount multiplicity = 1;

  friend bool operator==(const Ballot&, const Ballot&) = default;
};

/// A multiset of approval ballots over candidates c_1..c_m.
///
/// Storage is grouped: each entry is an approval set with a multiplicity.
/// Voters are numbered 1..n by expanding the ballot list in order, so the
/// voters of ballot b are the contiguous range
/// [first_voter(b), first_voter(b) + multiplicity - 1].
class BallotProfile {
 public:
  /// Throws InvalidArgument unless 1 <= m <= 64, there is at least one ballot,
  /// every multiplicity is positive and every approval set is non-empty and
  /// inside {c_1..c_m}.
  BallotProfile(int num_candidates, std::vector<Ballot> ballots);

  int num_candidates() const { return num_candidates_; }
  VoterCount num_voters() const { return num_voters_; }
  std::span<const Ballot> ballots() const { return ballots_; }
  std::size_t num_ballots() const { return ballots_.size(); }

  /// 1-based index of the first voter holding ballot `ballot_index`.
  VoterCount first_voter(std::size_t ballot_index) const {
    return first_voter_[ballot_index];
  }
  /// Index into ballots() of the ballot held by 1-based `voter`.
  std::size_t ballot_of_voter(VoterCount voter) const;
  CandidateSet approvals_of_voter(VoterCount voter) const {
    return ballots_[ballot_of_voter(voter)].approvals;
  }

  /// Per-voter approval sets; element i belongs to voter i + 1.
  std::vector<CandidateSet> expand() const;

  /// Number of voters approving `candidate`.
  VoterCount approval_count(int candidate) const;

  /// Identical approval sets merged into their first occurrence.
  BallotProfile merged() const;

  friend bool operator==(const BallotProfile&, const BallotProfile&) = default;

 private:
  int num_candidates_;
  std::vector<Ballot> ballots_;
  std::vector<VoterCount> first_voter_;
  VoterCount num_voters_ = 0;
};

/// Builds a profile with one ballot per voter.
BallotProfile profile_from_voters(int num_candidates,
                                  const std::vector<CandidateSet>& voters);

/// Parses the text profile format:
///
///     election n=<int> m=<int>
///     <multiplicity>: <idx> <idx> ...
///
/// Candidate indices are 1-based, strictly increasing, single-space separated.
/// Lines starting with '#' and blank lines are ignored. Throws ParseError.
BallotProfile parse_profile(std::string_view text);

/// Inverse of parse_profile: header line then one body line per ballot.
std::string serialize_profile(const BallotProfile& profile);

/// A committee: a strictly increasing list of distinct 1-based candidates.
class Committee {
 public:
  Committee() = default;
  /// Throws InvalidArgument on duplicates, unsorted input or indices
  /// outside 1..64.
  explicit Committee(std::vector<int> members);
  explicit Committee(CandidateSet members);

  const std::vector<int>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  CandidateSet as_set() const { return set_; }
  bool contains(int candidate) const { return set_.contains(candidate); }
  std::string to_string() const { return set_.to_string(); }

  friend bool operator==(const Committee& a, const Committee& b) {
    return a.members_ == b.members_;
  }
  friend auto operator<=>(const Committee& a, const Committee& b) {
    return a.members_ <=> b.members_;
  }

 private:
  std::vector<int> members_;
  CandidateSet set_;
};

/// Throws InvalidArgument if the committee is empty or names a candidate
/// outside the profile.
void require_committee(const BallotProfile& profile, const Committee& committee);

/// A non-empty set of 1-based voter indices, kept sorted and unique.
class VoterGroup {
 public:
  explicit VoterGroup(std::vector<VoterCount> voters);

  const std::vector<VoterCount>& voters() const { return voters_; }
  std::size_t size() const { return voters_.size(); }

  friend bool operator==(const VoterGroup&, const VoterGroup&) = default;

 private:
  std::vector<VoterCount> voters_;
};

/// A finite non-increasing score vector (w_1, ..., w_L) with w_1 = 1 and
/// every entry non-negative.
class WeightVector {
 public:
  explicit WeightVector(std::vector<Rational> entries);

  /// (1, 1/2, ..., 1/length)
  static WeightVector harmonic(int length);
  /// (1, 0, ..., 0)
  static WeightVector approval_then_zero(int length);

  int length() const { return static_cast<int>(entries_.size()); }
  /// w_j for 1 <= j <= length().
  const Rational& at(int j) const { return entries_[static_cast<std::size_t>(j - 1)]; }
  /// r_w(p) = w_1 + ... + w_p, with r_w(0) = 0.
  const Rational& cumulative(int p) const { return prefix_[static_cast<std::size_t>(p)]; }
  const std::vector<Rational>& entries() const { return entries_; }

  /// Throws InvalidArgument when the vector is shorter than k.
  void require_length(int k) const;

 private:
  std::vector<Rational> entries_;
  std::vector<Rational> prefix_;
};

/// The exact cohesion threshold level * n / k.
/// Throws InvalidArgument unless 1 <= level <= k <= m.
Rational quota(const BallotProfile& profile, int k, int level);

}  // namespace jrep
