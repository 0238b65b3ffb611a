#include "jrep/profile.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "jrep/error.hpp"

namespace jrep {

BallotProfile::BallotProfile(int num_candidates, std::vector<Ballot> ballots)
    : num_candidates_(num_candidates), ballots_(std::move(ballots)) {
  if (num_candidates_ < 1 || num_candidates_ > CandidateSet::kMaxCandidates) {
    throw InvalidArgument("number of candidates must be in 1..64");
  }
  if (ballots_.empty()) throw InvalidArgument("profile has no ballots");
  const CandidateSet universe = CandidateSet::prefix(num_candidates_);
  first_voter_.reserve(ballots_.size());
  for (const Ballot& ballot : ballots_) {
    if (ballot.multiplicity < 1) throw InvalidArgument("ballot multiplicity must be positive");
    if (ballot.approvals.empty()) throw InvalidArgument("empty approval set");
    if (!ballot.approvals.is_subset_of(universe)) {
      throw InvalidArgument("candidate index " +
                            std::to_string(ballot.approvals.max_member()) +
                            " out of range 1.." + std::to_string(num_candidates_));
    }
    first_voter_.push_back(num_voters_ + 1);
    num_voters_ += ballot.multiplicity;
  }
}

std::size_t BallotProfile::ballot_of_voter(VoterCount voter) const {
  if (voter < 1 || voter > num_voters_) {
    throw InvalidArgument("voter index " + std::to_string(voter) + " out of range");
  }
  const auto it = std::upper_bound(first_voter_.begin(), first_voter_.end(), voter);
  return static_cast<std::size_t>(it - first_voter_.begin()) - 1;
}

std::vector<CandidateSet> BallotProfile::expand() const {
  std::vector<CandidateSet> voters;
  voters.reserve(static_cast<std::size_t>(num_voters_));
  for (const Ballot& ballot : ballots_) {
    voters.insert(voters.end(), static_cast<std::size_t>(ballot.multiplicity),
                  ballot.approvals);
  }
  return voters;
}

VoterCount BallotProfile::approval_count(int candidate) const {
  VoterCount count = 0;
  for (const Ballot& ballot : ballots_) {
    if (ballot.approvals.contains(candidate)) count += ballot.multiplicity;
  }
  return count;
}

BallotProfile BallotProfile::merged() const {
  std::vector<Ballot> out;
  std::map<std::uint64_t, std::size_t> position;
  for (const Ballot& ballot : ballots_) {
    const auto [it, fresh] = position.emplace(ballot.approvals.mask(), out.size());
    if (fresh) {
      out.push_back(ballot);
    } else {
      out[it->second].multiplicity += ballot.multiplicity;
    }
  }
  return BallotProfile(num_candidates_, std::move(out));
}

BallotProfile profile_from_voters(int num_candidates,
                                  const std::vector<CandidateSet>& voters) {
  std::vector<Ballot> ballots;
  ballots.reserve(voters.size());
  for (CandidateSet approvals : voters) ballots.push_back({approvals, 1});
  return BallotProfile(num_candidates, std::move(ballots));
}

namespace {

bool parse_int(std::string_view text, std::int64_t& out) {
  if (text.empty() || (text.size() > 1 && text.front() == '0')) return false;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

bool parse_key_value(std::string_view token, std::string_view key, std::int64_t& out) {
  if (token.substr(0, key.size()) != key) return false;
  return parse_int(token.substr(key.size()), out);
}

std::vector<std::string_view> split_spaces(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto space = text.find(' ', start);
    parts.push_back(text.substr(start, space - start));
    if (space == std::string_view::npos) break;
    start = space + 1;
  }
  return parts;
}

}  // namespace

BallotProfile parse_profile(std::string_view text) {
  bool have_header = false;
  std::int64_t declared_n = 0;
  std::int64_t declared_m = 0;
  std::vector<Ballot> ballots;
  VoterCount total = 0;
  std::size_t line_no = 0;
  std::size_t header_line = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    std::string_view line = text.substr(pos, end == std::string_view::npos ? text.npos : end - pos);
    pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    if (!have_header) {
      const auto parts = split_spaces(line);
      if (parts.size() != 3 || parts[0] != "election" ||
          !parse_key_value(parts[1], "n=", declared_n) ||
          !parse_key_value(parts[2], "m=", declared_m)) {
        throw ParseError(line_no, "expected header 'election n=<int> m=<int>'");
      }
      if (declared_n < 1) throw ParseError(line_no, "n must be positive");
      if (declared_m < 1 || declared_m > CandidateSet::kMaxCandidates) {
        throw ParseError(line_no, "m must be in 1..64");
      }
      have_header = true;
      header_line = line_no;
      continue;
    }

    const auto colon = line.find(':');
    std::int64_t multiplicity = 0;
    if (colon == std::string_view::npos || !parse_int(line.substr(0, colon), multiplicity)) {
      throw ParseError(line_no, "expected '<multiplicity>: <idx> ...'");
    }
    if (multiplicity < 1) throw ParseError(line_no, "multiplicity must be positive");
    std::string_view rest = line.substr(colon + 1);
    if (rest.empty()) throw ParseError(line_no, "empty approval set");
    if (rest.front() != ' ' || rest.size() == 1) {
      throw ParseError(line_no, "expected a single space after ':'");
    }
    rest.remove_prefix(1);

    CandidateSet approvals;
    std::int64_t previous = 0;
    for (std::string_view token : split_spaces(rest)) {
      std::int64_t index = 0;
      if (!parse_int(token, index)) {
        throw ParseError(line_no, "malformed candidate index '" + std::string(token) + "'");
      }
      if (index < 1 || index > declared_m) {
        throw ParseError(line_no, "candidate index " + std::to_string(index) +
                                      " out of range 1.." + std::to_string(declared_m));
      }
      if (index <= previous) {
        throw ParseError(line_no, "candidate indices must be strictly increasing");
      }
      previous = index;
      approvals.insert(static_cast<int>(index));
    }
    ballots.push_back({approvals, multiplicity});
    total += multiplicity;
  }

  if (!have_header) throw ParseError(line_no, "missing 'election' header");
  if (ballots.empty()) throw ParseError(header_line, "profile has no ballots");
  if (total != declared_n) {
    throw ParseError(header_line, "declared n=" + std::to_string(declared_n) +
                                      " but multiplicities sum to " + std::to_string(total));
  }
  return BallotProfile(static_cast<int>(declared_m), std::move(ballots));
}

std::string serialize_profile(const BallotProfile& profile) {
  std::ostringstream out;
  out << "election n=" << profile.num_voters() << " m=" << profile.num_candidates() << '\n';
  for (const Ballot& ballot : profile.ballots()) {
    out << ballot.multiplicity << ':';
    for (int c : ballot.approvals.members()) out << ' ' << c;
    out << '\n';
  }
  return out.str();
}

Committee::Committee(std::vector<int> members) : members_(std::move(members)) {
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i > 0 && members_[i] <= members_[i - 1]) {
      throw InvalidArgument("committee members must be strictly increasing");
    }
    set_.insert(members_[i]);
  }
}

Committee::Committee(CandidateSet members) : members_(members.members()), set_(members) {}

void require_committee(const BallotProfile& profile, const Committee& committee) {
  if (committee.size() == 0) throw InvalidArgument("committee is empty");
  if (committee.members().back() > profile.num_candidates()) {
    throw InvalidArgument("committee member " + std::to_string(committee.members().back()) +
                          " out of range 1.." + std::to_string(profile.num_candidates()));
  }
}

VoterGroup::VoterGroup(std::vector<VoterCount> voters) : voters_(std::move(voters)) {
  std::sort(voters_.begin(), voters_.end());
  voters_.erase(std::unique(voters_.begin(), voters_.end()), voters_.end());
  if (voters_.empty()) throw InvalidArgument("voter group is empty");
  if (voters_.front() < 1) throw InvalidArgument("voter indices are 1-based");
}

WeightVector::WeightVector(std::vector<Rational> entries) : entries_(std::move(entries)) {
  if (entries_.empty() || entries_.front() != 1) {
    throw InvalidArgument("weight vector must start with 1");
  }
  prefix_.reserve(entries_.size() + 1);
  prefix_.emplace_back(0);
  for (std::size_t j = 0; j < entries_.size(); ++j) {
    if (entries_[j] < 0) throw InvalidArgument("weights must be non-negative");
    if (j > 0 && entries_[j] > entries_[j - 1]) {
      throw InvalidArgument("weights must be non-increasing");
    }
    prefix_.push_back(prefix_.back() + entries_[j]);
  }
}

WeightVector WeightVector::harmonic(int length) {
  std::vector<Rational> entries;
  for (int j = 1; j <= length; ++j) entries.push_back(make_rational(1, j));
  return WeightVector(std::move(entries));
}

WeightVector WeightVector::approval_then_zero(int length) {
  std::vector<Rational> entries(static_cast<std::size_t>(std::max(length, 1)), Rational(0));
  entries.front() = 1;
  return WeightVector(std::move(entries));
}

void WeightVector::require_length(int k) const {
  if (length() < k) {
    throw InvalidArgument("weight vector has " + std::to_string(length()) +
                          " entries but k=" + std::to_string(k));
  }
}

Rational quota(const BallotProfile& profile, int k, int level) {
  if (k < 1 || k > profile.num_candidates()) {
    throw InvalidArgument("k=" + std::to_string(k) + " outside 1..m");
  }
  if (level < 1 || level > k) {
    throw InvalidArgument("level " + std::to_string(level) + " outside 1..k");
  }
  return make_rational(level * profile.num_voters(), k);
}

}  // namespace jrep
