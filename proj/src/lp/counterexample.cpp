#include "jrep/counterexample.hpp"

#include <stdexcept>
#include <string>

#include "jrep/axioms.hpp"
#include "jrep/error.hpp"
#include "jrep/fixtures.hpp"
#include "jrep/lp.hpp"
#include "jrep/rules.hpp"

namespace jrep {

namespace {

constexpr int kBaseSize = 6;
constexpr int kFreshCandidate = 7;

/// Appends k - 6 candidates c_8, c_9, ..., each approved alone by `block` voters.
BallotProfile pad(const BallotProfile& base, int k, VoterCount block) {
  std::vector<Ballot> ballots(base.ballots().begin(), base.ballots().end());
  for (int extra = 1; extra <= k - kBaseSize; ++extra) {
    ballots.push_back({CandidateSet{kFreshCandidate + extra}, block});
  }
  return BallotProfile(base.num_candidates() + (k - kBaseSize), std::move(ballots));
}

BallotProfile from_linear_program() {
  const RavWeightProgram lp = build_lp_k(kBaseSize);
  const SimplexResult solved = simplex_solve(lp.program);
  if (solved.status != SimplexStatus::Optimal) {
    throw std::logic_error("LP_6 did not solve to optimality");
  }
  BigInt voters = 1;
  for (const Rational& share : solved.solution) {
    voters = boost::multiprecision::lcm(voters, boost::multiprecision::denominator(share));
  }
  voters *= 5 / boost::multiprecision::gcd(voters, BigInt(5));
  if (voters > BigInt(1'000'000'000)) throw std::logic_error("LP_6 optimum scales too far");
  const auto n = voters.convert_to<VoterCount>();

  std::vector<Ballot> ballots;
  for (std::size_t v = 0; v < lp.ballots.size(); ++v) {
    const Rational count = solved.solution[v] * n;
    if (count == 0) continue;
    ballots.push_back({lp.ballots[v], boost::multiprecision::numerator(count).convert_to<VoterCount>()});
  }
  ballots.push_back({CandidateSet{kFreshCandidate}, n / 5});
  return BallotProfile(kFreshCandidate, std::move(ballots));
}

void verify(const BallotProfile& profile, int k) {
  const RavTrace trace = rav_run(profile, k);
  bool fresh_left_out = false;
  for (int c = kFreshCandidate; c <= profile.num_candidates(); ++c) {
    if (!trace.committee.contains(c)) fresh_left_out = true;
  }
  if (!fresh_left_out || check_jr(profile, trace.committee).satisfied) {
    throw std::logic_error("generated profile is not an RAV counterexample for k=" +
                           std::to_string(k));
  }
}

}  // namespace

BallotProfile rav_counterexample(int k, CounterexampleSource source) {
  if (k < kBaseSize) {
    throw InvalidArgument("RAV provides JR for k <= 5; counterexamples start at k=6");
  }
  if (k > CandidateSet::kMaxCandidates - 1) throw InvalidArgument("k must be at most 63");

  BallotProfile base = source == CounterexampleSource::PublishedFixture
                           ? fixture_profile("table1")
                           : from_linear_program();
  // The fresh candidate's block sets the padding size: 1000 in the fixture.
  const VoterCount block = base.ballots().back().multiplicity;
  BallotProfile profile = k == kBaseSize ? std::move(base) : pad(base, k, block);
  verify(profile, k);
  return profile;
}

}  // namespace jrep
