#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "jrep/candidate_set.hpp"
#include "jrep/rational.hpp"

namespace jrep {

enum class Relation { LessEqual, GreaterEqual, Equal };

struct LinearConstraint {
  std::vector<Rational> coefficients;
  Relation relation;
  Rational rhs;
  std::string label;
};

/// maximize objective·x subject to the constraints and x >= 0.
struct LinearProgram {
  std::vector<std::string> variable_labels;
  std::vector<Rational> objective;
  std::vector<LinearConstraint> constraints;

  std::size_t num_variables() const { return objective.size(); }
  /// Throws InvalidArgument when coefficient rows and labels disagree in size.
  void validate() const;
  /// Debug dump: objective, then one line per constraint, rationals as p/q.
  std::string serialize() const;
};

enum class SimplexStatus { Optimal, Infeasible, Unbounded };

struct SimplexResult {
  SimplexStatus status = SimplexStatus::Infeasible;
  Rational value;
  std::vector<Rational> solution;
  /// Basic structural variables at the optimum.
  std::vector<std::size_t> basis;
  /// One multiplier per constraint; dual feasible with duals·rhs == value.
  std::vector<Rational> duals;
  std::size_t pivots = 0;
};

/// Two-phase primal simplex over exact rationals with Bland's rule.
///
/// Before returning an optimum the solver re-derives the duals from the final
/// basis by Gaussian elimination and checks primal feasibility, dual
/// feasibility and equal objective values; a failed check throws
/// std::logic_error.
SimplexResult simplex_solve(const LinearProgram& lp);

/// Relative approval weight program for k RAV rounds.
///
/// One variable per non-empty ballot A ⊆ {c_1..c_k} (the share of voters
/// casting A), with Σ x_A = 1. For rounds i < k and every later candidate j,
/// c_i's round-i weight Σ_{A ∋ c_i} x_A / (1 + |C_{i-1} ∩ A|) must be at
/// least c_j's. The objective is c_k's weight in round k.
struct RavWeightProgram {
  int k = 0;
  /// ballots[v] is the approval set of variable v (mask v + 1).
  std::vector<CandidateSet> ballots;
  LinearProgram program;
};

/// Throws InvalidArgument unless 2 <= k <= 8.
RavWeightProgram build_lp_k(int k);

}  // namespace jrep
