#include "jrep/reproduce.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <sstream>

#include "jrep/axioms.hpp"
#include "jrep/combinations.hpp"
#include "jrep/error.hpp"
#include "jrep/fixtures.hpp"
#include "jrep/lp.hpp"
#include "jrep/rules.hpp"

namespace jrep {

bool ReproductionReport::passed() const {
  return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.holds; });
}

namespace {

class Claims {
 public:
  void add(std::string description, bool holds, std::string observed) {
    claims_.push_back({std::move(description), holds, std::move(observed)});
  }
  std::vector<Claim> take() { return std::move(claims_); }

 private:
  std::vector<Claim> claims_;
};

std::string witness_text(const AxiomVerdict& verdict) {
  if (!verdict.witness) return "satisfied";
  const AxiomWitness& w = *verdict.witness;
  std::ostringstream out;
  out << "level " << w.level << ", T = " << w.cohesive.to_string() << ", |N*| = "
      << w.voters.size() << ", quota " << to_fraction_string(w.quota);
  return out.str();
}

std::string decimals_text(const RavTrace& trace) {
  std::string out;
  for (const RavRound& r : trace.rounds) {
    if (!out.empty()) out += ", ";
    out += to_decimal_string(r.weight, 2);
  }
  return out;
}

// Shared scenario for the published RAV counterexamples: RAV with committee
// size k elects c_1..c_k without ties and misses c_{k+1}, and JR fails.
void rav_table(Claims& claims, std::string_view fixture, int k, VoterCount voters,
               const std::vector<std::string>& expected_decimals) {
  const BallotProfile profile = fixture_profile(fixture);
  claims.add("profile has " + std::to_string(voters) + " voters",
             profile.num_voters() == voters, std::to_string(profile.num_voters()));

  const RavTrace trace = rav_run(profile, k);
  std::vector<int> expected(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) expected[static_cast<std::size_t>(i)] = i + 1;
  std::vector<int> order;
  for (const RavRound& r : trace.rounds) order.push_back(r.candidate);
  claims.add("RAV elects c1..c" + std::to_string(k) + " in order", order == expected,
             trace.committee.to_string());
  claims.add("no ties in any round", !trace.any_tie(), trace.any_tie() ? "tie" : "none");
  claims.add("c" + std::to_string(k + 1) + " is not elected", !trace.committee.contains(k + 1),
             trace.committee.to_string());

  if (!expected_decimals.empty()) {
    std::vector<std::string> got;
    for (const RavRound& r : trace.rounds) got.push_back(to_decimal_string(r.weight, 2));
    claims.add("round weights round to the published values", got == expected_decimals,
               decimals_text(trace));
  }

  const AxiomVerdict jr = check_jr(profile, trace.committee);
  claims.add("JR fails", !jr.satisfied, witness_text(jr));
  if (jr.witness) {
    claims.add("JR witness is c" + std::to_string(k + 1),
               jr.witness->cohesive == CandidateSet{k + 1}, jr.witness->cohesive.to_string());
  }
}

std::vector<Claim> table1() {
  Claims claims;
  rav_table(claims, "table1", 6, 5992,
            {"2000.00", "1499.00", "1220.50", "1060.33", "1017.67", "1017.17"});
  const AxiomVerdict jr = check_jr(fixture_profile("table1"), Committee(std::vector<int>{1, 2, 3, 4, 5, 6}));
  const std::size_t size = jr.witness ? jr.witness->voters.size() : 0;
  claims.add("JR witness has 1000 voters", size == 1000, std::to_string(size));
  return claims.take();
}

std::vector<Claim> table2() {
  Claims claims;
  rav_table(claims, "table2", 6, 108, {});
  return claims.take();
}

std::vector<Claim> table3() {
  Claims claims;
  rav_table(claims, "table3", 7, 35, {});
  return claims.take();
}

std::vector<Claim> thm3() {
  Claims claims;
  const BallotProfile profile = fixture_profile("thm3");
  const int k = 4;
  std::vector<Committee> pr_committees;
  for_each_combination(profile.num_candidates(), k, [&](std::span<const int> members) {
    Committee committee(std::vector<int>(members.begin(), members.end()));
    if (provides_pr(profile, committee).provided) pr_committees.push_back(committee);
    return true;
  });
  std::string found;
  for (const Committee& c : pr_committees) found += (found.empty() ? "" : " ") + c.to_string();
  const Committee expected(std::vector<int>{1, 2, 3, 4});
  claims.add("exactly one of the 15 committees provides PR, namely {1, 2, 3, 4}",
             pr_committees.size() == 1 && pr_committees.front() == expected,
             found.empty() ? "none" : found);

  const auto first = exists_pr_committee(profile, k);
  claims.add("PR existence search returns {1, 2, 3, 4}", first && *first == expected,
             first ? first->to_string() : "none");

  const AxiomVerdict ejr = check_ejr(profile, expected);
  const bool witness_ok = ejr.witness && ejr.witness->level == 2 &&
                          ejr.witness->cohesive == CandidateSet{5, 6} &&
                          ejr.witness->voters == VoterGroup({5, 6, 7, 8});
  claims.add("EJR fails with level 2, T = {5, 6}, voters 5-8", !ejr.satisfied && witness_ok,
             witness_text(ejr));

  const AxiomVerdict pjr = check_pjr(profile, expected);
  claims.add("PJR holds", pjr.satisfied, witness_text(pjr));
  return claims.take();
}

std::vector<Claim> example1() {
  Claims claims;
  const BallotProfile profile = fixture_profile("example1");
  const int k = 7;
  const CandidateSet block{5, 6, 7, 8};
  const Rational expected_quota = make_rational(40, 7);

  auto check = [&](const std::string& rule, const Committee& committee) {
    const int from_block = (committee.as_set() & block).size();
    claims.add(rule + " elects at most 3 of c5..c8", from_block <= 3, committee.to_string());
    const AxiomVerdict pjr = check_pjr(profile, committee);
    const bool witness_ok =
        pjr.witness && pjr.witness->level == 4 && pjr.witness->quota == expected_quota;
    claims.add(rule + " fails PJR at level 4 with quota 40/7", !pjr.satisfied && witness_ok,
               witness_text(pjr));
  };
  check("Monroe", monroe_winners(profile, k));
  check("Greedy Monroe", greedy_monroe(profile, k).committee);
  return claims.take();
}

std::vector<Claim> wrav_pjr() {
  Claims claims;
  const BallotProfile profile = fixture_profile("wrav_pjr");
  const RavTrace trace = wrav_run(profile, 3, WeightVector::approval_then_zero(3));
  claims.add("(1,0,0)-RAV elects c3 and c4",
             trace.committee.contains(3) && trace.committee.contains(4),
             trace.committee.to_string());
  const AxiomVerdict pjr = check_pjr(profile, trace.committee);
  const bool witness_ok = pjr.witness && pjr.witness->level == 2 &&
                          pjr.witness->cohesive == CandidateSet{1, 2} &&
                          pjr.witness->quota == Rational(4);
  claims.add("PJR fails at level 2 on {1, 2} with quota 4", !pjr.satisfied && witness_ok,
             witness_text(pjr));
  return claims.take();
}

std::vector<Claim> lp(int k) {
  Claims claims;
  const RavWeightProgram program = build_lp_k(k);
  const SimplexResult result = simplex_solve(program.program);
  const bool optimal = result.status == SimplexStatus::Optimal;
  claims.add("program is solved to optimality", optimal,
             std::to_string(result.pivots) + " pivots");
  if (!optimal) return claims.take();
  const std::string value =
      to_fraction_string(result.value) + " (" + to_decimal_string(result.value, 4) + ")";
  if (k < 6) {
    const Rational bound = make_rational(1, k - 1);
    claims.add("value is below 1/" + std::to_string(k - 1), result.value < bound, value);
  } else {
    claims.add("value exceeds 1/5", result.value > make_rational(1, 5), value);
    claims.add("value prints as 0.204", to_decimal_string(result.value, 3) == "0.204", value);
  }
  return claims.take();
}

std::vector<Claim> avg_sat() {
  Claims claims;
  const BallotProfile profile = fixture_profile("avgsat3");
  const int k = 3;
  const Committee committee(std::vector<int>{1, 2, 3});
  claims.add("{1, 2, 3} provides PJR", check_pjr(profile, committee).satisfied, "");
  claims.add("{1, 2, 3} provides PR", provides_pr(profile, committee).provided, "");

  const VoterGroup everyone({1, 2, 3});
  const Rational avg = avg_satisfaction(profile, everyone, committee);
  claims.add("average satisfaction of the 3-cohesive electorate is 1", avg == 1,
             to_fraction_string(avg));
  const Rational jr_bound = satisfaction_bound(3, profile.num_voters(), SatisfactionAxiom::JR);
  claims.add("the JR bound 7/9 is respected", jr_bound == make_rational(7, 9) && avg >= jr_bound,
             to_fraction_string(jr_bound));
  const AxiomVerdict ejr = check_ejr(profile, committee);
  claims.add("{1, 2, 3} fails EJR", !ejr.satisfied, witness_text(ejr));

  const Committee pav = pav_winners(profile, k);
  const Rational pav_avg = avg_satisfaction(profile, everyone, pav);
  claims.add("PAV elects {4, 5, 6} with average satisfaction 3", pav == Committee(std::vector<int>{4, 5, 6}) &&
             pav_avg == 3, pav.to_string());
  return claims.take();
}

using Runner = std::function<std::vector<Claim>()>;

const std::array<std::pair<std::string_view, Runner>, 11>& targets() {
  static const std::array<std::pair<std::string_view, Runner>, 11> table{{
      {"table1", table1},
      {"table2", table2},
      {"table3", table3},
      {"thm3", thm3},
      {"example1", example1},
      {"wrav-pjr", wrav_pjr},
      {"lp3", [] { return lp(3); }},
      {"lp4", [] { return lp(4); }},
      {"lp5", [] { return lp(5); }},
      {"lp6", [] { return lp(6); }},
      {"avg-sat", avg_sat},
  }};
  return table;
}

}  // namespace

std::vector<std::string_view> reproduce_targets() {
  std::vector<std::string_view> names;
  for (const auto& [name, run] : targets()) names.push_back(name);
  return names;
}

ReproductionReport reproduce(std::string_view target) {
  for (const auto& [name, run] : targets()) {
    if (name == target) return {std::string(name), run()};
  }
  throw InvalidArgument("unknown reproduce target '" + std::string(target) + "'");
}

}  // namespace jrep
