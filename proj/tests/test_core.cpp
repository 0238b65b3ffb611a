#include <doctest.h>

#include <random>

#include "jrep/candidate_set.hpp"
#include "jrep/combinations.hpp"
#include "jrep/error.hpp"
#include "jrep/fixtures.hpp"
#include "jrep/generate.hpp"
#include "jrep/profile.hpp"
#include "jrep/rational.hpp"

using namespace jrep;

namespace {

std::size_t parse_error_line(std::string_view text) {
  try {
    parse_profile(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("rational rendering") {
  CHECK(to_fraction_string(make_rational(2441, 2)) == "2441/2");
  CHECK(to_fraction_string(make_rational(4, 2)) == "2");
  CHECK(to_fraction_string(make_rational(-3, 9)) == "-1/3");
  CHECK(to_decimal_string(make_rational(2441, 2), 2) == "1220.50");
  CHECK(to_decimal_string(make_rational(3181, 3), 2) == "1060.33");
  CHECK(to_decimal_string(make_rational(3053, 3), 2) == "1017.67");
  CHECK(to_decimal_string(make_rational(6103, 6), 2) == "1017.17");
  CHECK(to_decimal_string(make_rational(661, 3240), 3) == "0.204");
  // half away from zero
  CHECK(to_decimal_string(make_rational(1, 8), 2) == "0.13");
  CHECK(to_decimal_string(make_rational(-1, 8), 2) == "-0.13");
  CHECK(to_decimal_string(make_rational(5, 2), 0) == "3");
  CHECK(to_decimal_string(make_rational(-1, 1000), 2) == "0.00");
  CHECK(to_decimal_string(make_rational(7), 1) == "7.0");
  CHECK_THROWS_AS(to_decimal_string(make_rational(1), -1), InvalidArgument);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/4") == make_rational(3, 4));
  CHECK(parse_rational("-6/8") == make_rational(-3, 4));
  CHECK(parse_rational("12") == 12);
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("a/2"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational(""), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("1/-2"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("0.5"), InvalidArgument);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const auto num = static_cast<std::int64_t>(rng() % 2'000'001) - 1'000'000;
    const auto den = static_cast<std::int64_t>(rng() % 1'000'000) + 1;
    const Rational r = make_rational(num, den);
    CHECK(parse_rational(to_fraction_string(r)) == r);
  }
}

TEST_CASE("candidate sets") {
  const CandidateSet a{1, 5, 6};
  CHECK(a.size() == 3);
  CHECK(a.to_string() == "{1, 5, 6}");
  CHECK(CandidateSet().to_string() == "{}");
  CHECK(a.contains(5));
  CHECK_FALSE(a.contains(2));
  CHECK_FALSE(a.contains(0));
  CHECK(a.max_member() == 6);
  CHECK((a & CandidateSet{5, 7}) == CandidateSet{5});
  CHECK((a | CandidateSet{2}) == CandidateSet{1, 2, 5, 6});
  CHECK((a - CandidateSet{1}) == CandidateSet{5, 6});
  CHECK(CandidateSet{5}.is_subset_of(a));
  CHECK(CandidateSet::prefix(3) == CandidateSet{1, 2, 3});
  CHECK(CandidateSet::prefix(64).size() == 64);
  CHECK(CandidateSet{64}.contains(64));
  CHECK_THROWS_AS(CandidateSet({65}), InvalidArgument);
  CHECK_THROWS_AS(CandidateSet({0}), InvalidArgument);
  CHECK(CandidateSet::from_members({3, 1}).members() == std::vector<int>{1, 3});
}

TEST_CASE("combinations") {
  CHECK(binomial(6, 4) == 15);
  CHECK(binomial(4, 6) == 0);
  CHECK(binomial(64, 32) == 1832624140942590534ULL);
  CHECK(binomial(200, 100) == UINT64_MAX);

  for (int n = 0; n <= 8; ++n) {
    for (int r = 0; r <= n; ++r) {
      std::uint64_t count = 0;
      std::vector<int> previous;
      for_each_combination(n, r, [&](std::span<const int> c) {
        std::vector<int> now(c.begin(), c.end());
        if (count > 0) CHECK(previous < now);
        CHECK(std::is_sorted(now.begin(), now.end()));
        previous = now;
        ++count;
        return true;
      });
      CHECK(count == binomial(n, r));
    }
  }
  int seen = 0;
  CHECK_FALSE(for_each_combination(5, 2, [&](std::span<const int>) { return ++seen < 3; }));
  CHECK(seen == 3);
}

TEST_CASE("profile parsing") {
  const BallotProfile p = parse_profile(
      "# comment\n"
      "\n"
      "election n=5 m=4\n"
      "2: 1 2\n"
      "# another\n"
      "3: 4\n");
  CHECK(p.num_voters() == 5);
  CHECK(p.num_candidates() == 4);
  CHECK(p.num_ballots() == 2);
  CHECK(p.first_voter(1) == 3);
  CHECK(p.ballot_of_voter(2) == 0);
  CHECK(p.ballot_of_voter(3) == 1);
  CHECK(p.approvals_of_voter(5) == CandidateSet{4});
  CHECK(p.approval_count(1) == 2);
  CHECK(p.approval_count(3) == 0);
  CHECK_THROWS_AS(p.ballot_of_voter(6), InvalidArgument);

  CHECK(parse_error_line("") == 1);
  CHECK(parse_error_line("2: 1\n") == 1);
  CHECK(parse_error_line("election n=2 m=3\n2: 1 4\n") == 2);
  CHECK(parse_error_line("election n=2 m=3\n1: 2 1\n1: 1\n") == 2);
  CHECK(parse_error_line("election n=2 m=3\n1: 1\n1: 2 2\n") == 3);
  CHECK(parse_error_line("election n=2 m=3\n0: 1\n") == 2);
  CHECK(parse_error_line("election n=1 m=3\n1:\n") == 2);
  CHECK(parse_error_line("election n=1 m=3\n1:  1\n") == 2);
  CHECK(parse_error_line("election n=1 m=3\n1: x\n") == 2);
  CHECK(parse_error_line("election n=3 m=3\n1: 1\n") == 1);
  CHECK(parse_error_line("election n=1 m=65\n1: 1\n") == 1);
  CHECK(parse_error_line("election n=1 m=3\n") == 1);
  CHECK(parse_error_line("election n=1 m=3\n1: 1 \n") == 2);
}

TEST_CASE("profile round trip on random profiles") {
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    RandomProfileParams params;
    params.seed = seed;
    params.num_voters = 1 + static_cast<VoterCount>(seed % 17);
    params.num_candidates = 1 + static_cast<int>(seed % 11);
    params.approval_probability = 0.3;
    const BallotProfile p = random_profile(params);
    const BallotProfile q = parse_profile(serialize_profile(p));
    CHECK(p == q);
    CHECK(serialize_profile(q) == serialize_profile(p));
  }
}

TEST_CASE("merged keeps voter counts") {
  const BallotProfile p = parse_profile("election n=4 m=2\n1: 1\n1: 2\n2: 1\n");
  const BallotProfile merged = p.merged();
  CHECK(merged.num_ballots() == 2);
  CHECK(merged.num_voters() == 4);
  CHECK(merged.ballots()[0].multiplicity == 3);
}

TEST_CASE("profile validation") {
  CHECK_THROWS_AS(BallotProfile(0, {{CandidateSet{1}, 1}}), InvalidArgument);
  CHECK_THROWS_AS(BallotProfile(2, {}), InvalidArgument);
  CHECK_THROWS_AS(BallotProfile(2, {{CandidateSet{3}, 1}}), InvalidArgument);
  CHECK_THROWS_AS(BallotProfile(2, {{CandidateSet{}, 1}}), InvalidArgument);
  CHECK_THROWS_AS(BallotProfile(2, {{CandidateSet{1}, 0}}), InvalidArgument);
}

TEST_CASE("committees, groups and weights") {
  CHECK(Committee(std::vector<int>{1, 3}).to_string() == "{1, 3}");
  CHECK_THROWS_AS(Committee(std::vector<int>{3, 1}), InvalidArgument);
  CHECK_THROWS_AS(Committee(std::vector<int>{1, 1}), InvalidArgument);
  CHECK(Committee(CandidateSet{2, 4}).members() == std::vector<int>{2, 4});
  CHECK(Committee(std::vector<int>{1, 2}) < Committee(std::vector<int>{1, 3}));

  const BallotProfile p = fixture_profile("thm3");
  CHECK_THROWS_AS(require_committee(p, Committee(std::vector<int>{1, 7})), InvalidArgument);
  CHECK_THROWS_AS(require_committee(p, Committee()), InvalidArgument);

  CHECK(VoterGroup({3, 1, 3}).voters() == std::vector<VoterCount>{1, 3});
  CHECK_THROWS_AS(VoterGroup({}), InvalidArgument);
  CHECK_THROWS_AS(VoterGroup({0}), InvalidArgument);

  const WeightVector h = WeightVector::harmonic(4);
  CHECK(h.at(3) == make_rational(1, 3));
  CHECK(h.cumulative(0) == 0);
  CHECK(h.cumulative(3) == make_rational(11, 6));
  const WeightVector z = WeightVector::approval_then_zero(3);
  CHECK(z.cumulative(3) == 1);
  CHECK_THROWS_AS(z.require_length(4), InvalidArgument);
  CHECK_THROWS_AS(WeightVector({make_rational(1, 2)}), InvalidArgument);
  CHECK_THROWS_AS(WeightVector({make_rational(1), make_rational(2)}), InvalidArgument);
  CHECK_THROWS_AS(WeightVector({make_rational(1), make_rational(-1)}), InvalidArgument);
}

TEST_CASE("quota") {
  CHECK(quota(fixture_profile("table1"), 6, 1) == make_rational(2996, 3));
  CHECK(quota(fixture_profile("example1"), 7, 4) == make_rational(40, 7));
  CHECK(quota(fixture_profile("wrav_pjr"), 3, 2) == 4);
  CHECK_THROWS_AS(quota(fixture_profile("thm3"), 4, 5), InvalidArgument);
  CHECK_THROWS_AS(quota(fixture_profile("thm3"), 7, 1), InvalidArgument);
}

TEST_CASE("fixtures") {
  const auto names = fixture_names();
  CHECK(names.size() == 7);
  for (std::string_view name : names) CHECK_NOTHROW(fixture_profile(name));
  CHECK(fixture_profile("table1").num_voters() == 5992);
  CHECK(fixture_profile("table2").num_voters() == 108);
  CHECK(fixture_profile("table3").num_voters() == 35);
  CHECK(fixture_profile("thm3").num_voters() == 8);
  CHECK(fixture_profile("example1").num_voters() == 10);
  CHECK_FALSE(fixture_text("nope").has_value());
  CHECK_THROWS_AS(fixture_profile("nope"), InvalidArgument);
}

TEST_CASE("random profiles are seeded and guarded") {
  RandomProfileParams params;
  params.seed = 1;
  params.num_voters = 8;
  params.num_candidates = 6;
  params.approval_probability = 0.4;
  CHECK(serialize_profile(random_profile(params)) == serialize_profile(random_profile(params)));
  RandomProfileParams other = params;
  other.seed = 2;
  CHECK_FALSE(random_profile(params) == random_profile(other));

  // Every ballot is non-empty and the approval rate is plausible.
  params.num_voters = 2000;
  const BallotProfile big = random_profile(params);
  VoterCount approvals = 0;
  for (int c = 1; c <= 6; ++c) approvals += big.approval_count(c);
  const double rate = static_cast<double>(approvals) / (2000.0 * 6.0);
  CHECK(rate > 0.38);
  CHECK(rate < 0.48);

  RandomProfileParams hopeless = params;
  hopeless.num_candidates = 1;
  hopeless.approval_probability = 1e-9;
  CHECK_THROWS_AS(random_profile(hopeless), InvalidArgument);
  hopeless.approval_probability = 1.0;
  CHECK_THROWS_AS(random_profile(hopeless), InvalidArgument);
}
