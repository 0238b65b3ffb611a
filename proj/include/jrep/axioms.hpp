#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "jrep/profile.hpp"

namespace jrep {

/// A certificate that a committee violates a representation axiom.
///
/// The voters form an ℓ-cohesive group: every one of them approves all of
/// `cohesive` (|cohesive| = ℓ) and there are at least quota = ℓ·n/k of them.
/// For JR and EJR each voter approves fewer than ℓ committee members; for PJR
/// the voters jointly approve fewer than ℓ committee members. A group whose
/// common approval set has at least ℓ candidates contains such a size-ℓ
/// subset, so quantifying over size-ℓ sets T is the same as the usual
/// |∩ A_i| ≥ ℓ condition.
struct AxiomWitness {
  int level;
  CandidateSet cohesive;
  VoterGroup voters;
  Rational quota;
};

struct AxiomVerdict {
  bool satisfied = true;
  std::optional<AxiomWitness> witness;
};

enum class Axiom { JR, PJR, EJR };

struct EnumerationLimits {
  /// Cap on the number of (T) or (T, U) combinations a checker may visit.
  std::uint64_t max_combinations = 10'000'000;
};

/// Justified representation, in polynomial time: for every candidate c
/// outside W, count the voters that approve c and no member of W. The first
/// such c with at least n/k voters is the witness.
AxiomVerdict check_jr(const BallotProfile& profile, const Committee& committee);

/// Extended justified representation.
///
/// For each ℓ in 1..k and each candidate set T with |T| = ℓ (lexicographic
/// order), the maximal candidate group is {i : T ⊆ A_i and |A_i ∩ W| < ℓ}.
/// If any group with common superset T violates ℓ-EJR then so does this
/// maximal one, since adding voters only helps reach the quota. So EJR fails
/// iff some maximal group reaches ℓ·n/k. Throws GuardExceeded when
/// Σ_ℓ C(m, ℓ) exceeds the limit.
AxiomVerdict check_ejr(const BallotProfile& profile, const Committee& committee,
                       const EnumerationLimits& limits = {});

/// Proportional justified representation.
///
/// A group N* jointly approving fewer than ℓ members of W has all its
/// approved members inside some U ⊆ W with |U| = ℓ - 1. Conversely every
/// voter in {i : T ⊆ A_i and A_i ∩ W ⊆ U} keeps the union inside U. So PJR
/// fails at level ℓ iff for some T (|T| = ℓ) and U ⊆ W (|U| = ℓ - 1) that set
/// reaches ℓ·n/k. Enumerates (ℓ, T, U) lexicographically; the first hit is
/// reported. Throws GuardExceeded when Σ_ℓ C(m, ℓ)·C(k, ℓ-1) exceeds the
/// limit.
AxiomVerdict check_pjr(const BallotProfile& profile, const Committee& committee,
                       const EnumerationLimits& limits = {});

AxiomVerdict check_axiom(Axiom axiom, const BallotProfile& profile, const Committee& committee,
                         const EnumerationLimits& limits = {});

/// PJR straight from its definition: every voter subset, every ℓ.
/// Exponential in n; throws InvalidArgument for n > 14.
AxiomVerdict pjr_oracle(const BallotProfile& profile, const Committee& committee);

struct PrGroup {
  int candidate;
  VoterGroup voters;
};

/// k groups of n/k voters, each paired with a distinct committee member that
/// all of its voters approve.
struct PrCertificate {
  std::vector<PrGroup> groups;
};

struct PrVerdict {
  bool provided = false;
  std::optional<PrCertificate> certificate;
};

/// Perfect representation via b-matching: voters (capacity 1) against
/// committee members (capacity n/k), edges for approvals. PR holds iff the
/// maximum b-matching covers all n voters. Throws NotApplicable when k does
/// not divide n.
PrVerdict provides_pr(const BallotProfile& profile, const Committee& committee);

/// First committee of size k in lexicographic order that provides PR, if
/// any. Throws NotApplicable when k does not divide n and GuardExceeded when
/// C(m, k) exceeds the limit.
std::optional<Committee> exists_pr_committee(const BallotProfile& profile, int k,
                                             const EnumerationLimits& limits = {});

/// (1 / |group|) Σ_{i ∈ group} |A_i ∩ W|
Rational avg_satisfaction(const BallotProfile& profile, const VoterGroup& group,
                          const Committee& committee);

enum class SatisfactionAxiom { JR, EJR };

/// Worst-case average satisfaction of an ℓ-cohesive group under a committee
/// providing the axiom (k dividing n): JR gives 1 - 1/ℓ + 1/(ℓn),
/// EJR gives (ℓ - 1)/2.
Rational satisfaction_bound(int level, VoterCount num_voters, SatisfactionAxiom axiom);

}  // namespace jrep
