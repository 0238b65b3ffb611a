#include "jrep/lp.hpp"

#include "jrep/error.hpp"

namespace jrep {

namespace {

/// Round-`round` weight of `candidate` contributed by one ballot share,
/// after c_1..c_{round-1} have been elected.
Rational round_weight(CandidateSet ballot, int candidate, int round) {
  if (!ballot.contains(candidate)) return 0;
  return make_rational(1, 1 + (ballot & CandidateSet::prefix(round - 1)).size());
}

std::string variable_label(CandidateSet ballot) {
  std::string label = "x";
  for (int c : ballot.members()) label += "_" + std::to_string(c);
  return label;
}

}  // namespace

RavWeightProgram build_lp_k(int k) {
  if (k < 2 || k > 8) throw InvalidArgument("LP_k is built for 2 <= k <= 8");
  RavWeightProgram out;
  out.k = k;
  LinearProgram& lp = out.program;
  const std::uint64_t subsets = std::uint64_t{1} << k;
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    const CandidateSet ballot(mask);
    out.ballots.push_back(ballot);
    lp.variable_labels.push_back(variable_label(ballot));
    lp.objective.push_back(round_weight(ballot, k, k));
  }
  const std::size_t num_vars = out.ballots.size();

  lp.constraints.push_back({std::vector<Rational>(num_vars, Rational(1)), Relation::Equal,
                            Rational(1), "shares"});
  for (int round = 1; round < k; ++round) {
    for (int rival = round + 1; rival <= k; ++rival) {
      LinearConstraint row{{}, Relation::GreaterEqual, Rational(0),
                           "round" + std::to_string(round) + ":c" + std::to_string(round) +
                               ">=c" + std::to_string(rival)};
      row.coefficients.reserve(num_vars);
      for (CandidateSet ballot : out.ballots) {
        row.coefficients.push_back(round_weight(ballot, round, round) -
                                   round_weight(ballot, rival, round));
      }
      lp.constraints.push_back(std::move(row));
    }
  }
  return out;
}

}  // namespace jrep
