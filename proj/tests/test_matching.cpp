#include <doctest.h>

#include <algorithm>
#include <array>
#include <random>
#include <set>

#include "jrep/axioms.hpp"
#include "jrep/error.hpp"
#include "jrep/flow.hpp"
#include "jrep/matching.hpp"
#include "jrep/x3c.hpp"
#include "support/oracles.hpp"

using namespace jrep;

namespace {

BipartiteCapGraph random_graph(std::mt19937_64& rng) {
  BipartiteCapGraph g;
  g.left_count = 1 + static_cast<int>(rng() % 4);
  g.right_count = 1 + static_cast<int>(rng() % 4);
  for (int i = 0; i < g.left_count; ++i) g.left_caps.push_back(1 + static_cast<int>(rng() % 3));
  for (int i = 0; i < g.right_count; ++i) g.right_caps.push_back(1 + static_cast<int>(rng() % 3));
  std::set<std::pair<int, int>> edges;
  const int wanted = static_cast<int>(rng() % 13);
  for (int tries = 0; tries < 50 && static_cast<int>(edges.size()) < wanted; ++tries) {
    edges.emplace(1 + static_cast<int>(rng() % static_cast<unsigned>(g.left_count)),
                  1 + static_cast<int>(rng() % static_cast<unsigned>(g.right_count)));
  }
  g.edges.assign(edges.begin(), edges.end());
  return g;
}

X3CInstance random_x3c(std::mt19937_64& rng) {
  X3CInstance x;
  x.universe_size = 3 * (1 + static_cast<int>(rng() % 3));
  const int count = 1 + static_cast<int>(rng() % 6);
  for (int j = 0; j < count; ++j) {
    std::vector<int> pool(static_cast<std::size_t>(x.universe_size));
    for (int e = 1; e <= x.universe_size; ++e) pool[static_cast<std::size_t>(e - 1)] = e;
    std::shuffle(pool.begin(), pool.end(), rng);
    std::array<int, 3> s{pool[0], pool[1], pool[2]};
    std::sort(s.begin(), s.end());
    x.sets.push_back(s);
  }
  return x;
}

bool covers_universe(const X3CInstance& x) {
  std::set<int> seen;
  for (const auto& s : x.sets) seen.insert(s.begin(), s.end());
  return static_cast<int>(seen.size()) == x.universe_size;
}

}  // namespace

TEST_CASE("max flow") {
  FlowNetwork net(4);
  const int a = net.add_edge(0, 1, 3);
  const int b = net.add_edge(0, 2, 2);
  net.add_edge(1, 2, 5);
  const int c = net.add_edge(1, 3, 2);
  const int d = net.add_edge(2, 3, 3);
  CHECK(net.max_flow(0, 3) == 5);
  CHECK(net.flow(a) + net.flow(b) == 5);
  CHECK(net.flow(c) + net.flow(d) == 5);
  CHECK(net.capacity(a) == 3);
  CHECK_THROWS_AS(net.add_edge(0, 9, 1), InvalidArgument);
  CHECK_THROWS_AS(net.add_edge(0, 1, -1), InvalidArgument);
}

TEST_CASE("b-matching examples") {
  BipartiteCapGraph g;
  g.left_count = 2;
  g.right_count = 1;
  g.edges = {{1, 1}, {2, 1}};
  g.left_caps = {1, 1};
  g.right_caps = {2};
  const BMatching m = max_bmatching(g);
  CHECK(m.size == 2);
  CHECK(m.edges == std::vector<MatchedEdge>{{1, 1, 1}, {2, 1, 1}});

  // An edge may carry several units.
  g.left_caps = {3, 1};
  g.right_caps = {3};
  CHECK(max_bmatching(g).size == 3);

  BipartiteCapGraph bad = g;
  bad.edges.push_back({1, 1});
  CHECK_THROWS_AS(validate(bad), InvalidArgument);
  bad = g;
  bad.edges.push_back({3, 1});
  CHECK_THROWS_AS(validate(bad), InvalidArgument);
  bad = g;
  bad.left_caps = {0, 1};
  CHECK_THROWS_AS(validate(bad), InvalidArgument);
  bad = g;
  bad.right_caps = {};
  CHECK_THROWS_AS(validate(bad), InvalidArgument);
}

TEST_CASE("b-matching agrees with exhaustive search") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 200; ++i) {
    const BipartiteCapGraph g = random_graph(rng);
    const BMatching m = max_bmatching(g);
    CHECK(m.size == oracle::bmatching_size(g));
    // The reported edges respect the capacities and add up to the size.
    std::vector<std::int64_t> left(static_cast<std::size_t>(g.left_count), 0);
    std::vector<std::int64_t> right(static_cast<std::size_t>(g.right_count), 0);
    std::int64_t total = 0;
    for (const MatchedEdge& e : m.edges) {
      CHECK(e.count > 0);
      CHECK(std::find(g.edges.begin(), g.edges.end(), std::make_pair(e.left, e.right)) !=
            g.edges.end());
      left[static_cast<std::size_t>(e.left - 1)] += e.count;
      right[static_cast<std::size_t>(e.right - 1)] += e.count;
      total += e.count;
    }
    CHECK(total == m.size);
    for (int l = 0; l < g.left_count; ++l) CHECK(left[l] <= g.left_caps[l]);
    for (int r = 0; r < g.right_count; ++r) CHECK(right[r] <= g.right_caps[r]);
  }
}

TEST_CASE("X3C text format") {
  const X3CInstance x = parse_x3c("# sample\nx3c nu=6\n1 2 3\n\n4 5 6\n2 3 4\n");
  CHECK(x.universe_size == 6);
  CHECK(x.sets.size() == 3);
  CHECK(parse_x3c(serialize_x3c(x)).sets == x.sets);
  CHECK_THROWS_AS(parse_x3c("1 2 3\n"), ParseError);
  CHECK_THROWS_AS(parse_x3c("x3c nu=5\n1 2 3\n"), ParseError);
  CHECK_THROWS_AS(parse_x3c("x3c nu=3\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_x3c("x3c nu=3\n1 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_x3c("x3c nu=3\n1 2 4\n"), ParseError);
  try {
    parse_x3c("x3c nu=3\n1 2 3\n1 2 x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("X3C reduction") {
  const X3CInstance x = parse_x3c("x3c nu=6\n1 2 3\n4 5 6\n2 3 4\n");
  const PrInstance pr = x3c_to_pr(x);
  CHECK(pr.k == 2);
  CHECK(pr.profile.num_voters() == 6);
  CHECK(pr.profile.num_candidates() == 3);
  CHECK(pr.profile.approvals_of_voter(2) == CandidateSet{1, 3});
  CHECK(pr.profile.approvals_of_voter(5) == CandidateSet{2});
  CHECK(exists_pr_committee(pr.profile, pr.k) == Committee(std::vector<int>{1, 2}));

  const X3CInstance uncovered = parse_x3c("x3c nu=6\n1 2 3\n2 3 4\n");
  CHECK_THROWS_AS(x3c_to_pr(uncovered), InvalidArgument);
}

TEST_CASE("PR on reduced instances matches exact cover") {
  std::mt19937_64 rng(77);
  int checked = 0;
  for (int i = 0; i < 600; ++i) {
    const X3CInstance x = random_x3c(rng);
    if (!covers_universe(x)) {
      CHECK_THROWS_AS(x3c_to_pr(x), InvalidArgument);
      continue;
    }
    const PrInstance pr = x3c_to_pr(x);
    const auto found = exists_pr_committee(pr.profile, pr.k);
    CHECK(found.has_value() == oracle::has_exact_cover(x));
    if (found) {
      std::uint64_t pick = 0;
      for (int c : found->members()) pick |= std::uint64_t{1} << (c - 1);
      const auto covers = oracle::exact_covers(x);
      CHECK(std::find(covers.begin(), covers.end(), pick) != covers.end());
    }
    ++checked;
  }
  CHECK(checked > 50);
}
