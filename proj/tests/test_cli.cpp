#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "jrep/cli.hpp"
#include "jrep/profile.hpp"
#include "jrep/rational.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = jrep::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args, int expected_code = 0) {
  args.insert(args.begin(), "--json");
  const Run r = run(args);
  CHECK(r.code == expected_code);
  return nlohmann::json::parse(r.out);
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("jrep_test_" + name);
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cli: RAV trace on the published profile") {
  const Run r = run({"rule", "rav", "--k", "6", "fixtures/table1_padded"});
  CHECK(r.code == 0);
  for (const char* w : {"2000.00", "1499.00", "1220.50", "1060.33", "1017.67", "1017.17"}) {
    CHECK(contains(r.out, w));
  }
  CHECK(contains(r.out, "committee: {1, 2, 3, 4, 5, 6}"));
  CHECK_FALSE(contains(r.out, "TIE"));

  const auto j = run_json({"rule", "rav", "--k", "6", "table1", "--decimals", "3"});
  CHECK(j["command"] == "rule");
  CHECK(j["seed"].is_null());
  CHECK(j["arguments"].size() == 8);
  const auto& rounds = j["result"]["rounds"];
  REQUIRE(rounds.size() == 6);
  CHECK(rounds[2]["weight"]["exact"] == "2441/2");
  CHECK(rounds[2]["weight"]["decimal"] == "1220.500");
  CHECK(rounds[3]["weight"]["decimal"] == "1060.333");
  for (const auto& round : rounds) {
    const jrep::Rational w = jrep::parse_rational(round["weight"]["exact"].get<std::string>());
    CHECK(jrep::to_decimal_string(w, 3) == round["weight"]["decimal"].get<std::string>());
  }
}

TEST_CASE("cli: other rules") {
  const Run g = run({"rule", "greedy-monroe", "--k", "7", "fixtures/example1"});
  CHECK(g.code == 0);
  CHECK(contains(g.out, "committee: {1, 2, 3, 4, 5, 6, 7}"));

  const Run bad = run({"rule", "wrav", "--k", "3", "--weights", "1,0", "fixtures/wrav_pjr"});
  CHECK(bad.code == jrep::cli::kUsageError);
  CHECK(contains(bad.err, ",..."));

  for (const char* spec : {"1,0,...", "constant-1-0", "1,0,0"}) {
    const auto j = run_json({"rule", "wrav", "--k", "3", "--weights", spec, "wrav_pjr"});
    CHECK(j["result"]["committee"] == nlohmann::json::array({1, 3, 4}));
    CHECK(j["result"]["any_tie"] == true);
  }
  const auto pav = run_json({"rule", "pav", "--k", "3", "avgsat3"});
  CHECK(pav["result"]["committee"] == nlohmann::json::array({4, 5, 6}));
  CHECK(pav["result"]["score"]["exact"] == "11/2");
  const auto wpav = run_json({"rule", "wpav", "--k", "3", "--weights", "1,1/2,1/4", "avgsat3"});
  CHECK(wpav["result"]["committee"] == nlohmann::json::array({4, 5, 6}));
  CHECK(wpav["result"]["score"]["exact"] == "21/4");
  const auto monroe = run_json({"rule", "monroe", "--k", "7", "example1"});
  CHECK(monroe["result"]["score"]["exact"] == "10");
  const auto hybrid = run_json({"rule", "hybrid", "--k", "4", "thm3"});
  CHECK(hybrid["result"]["perfect_representation"] == true);

  CHECK(run({"rule", "rav", "--k", "3", "--weights", "harmonic", "thm3"}).code == 2);
  CHECK(run({"rule", "wrav", "--k", "3", "--weights", "1,2", "thm3"}).code == 2);
  CHECK(run({"rule", "stv", "--k", "3", "thm3"}).code == 2);
  CHECK(run({"rule", "pav", "--k", "9", "thm3"}).code == 2);
  CHECK(run({"rule", "pav", "--k", "3", "no_such_profile"}).code == 2);
  CHECK(run({"rule", "pav", "--k", "3", "--max-committees", "2", "thm3"}).code == 2);
}

TEST_CASE("cli: axioms") {
  const Run ejr = run({"axiom", "ejr", "fixtures/thm3", "--committee", "1,2,3,4"});
  CHECK(ejr.code == jrep::cli::kAxiomFailed);
  CHECK(contains(ejr.out, "FAIL"));
  CHECK(contains(ejr.out, "level: 2"));
  CHECK(contains(ejr.out, "{5, 6}"));
  CHECK(contains(ejr.out, "{5-8}"));

  const Run pr = run({"axiom", "pr", "fixtures/thm3", "--committee", "1,2,3,4"});
  CHECK(pr.code == 0);
  CHECK(contains(pr.out, "PASS"));
  CHECK(contains(pr.out, "c1 <- {1, 5}"));

  const auto na = run_json({"axiom", "pr", "fixtures/example1", "--committee", "1,2,3,5,6,7,8"});
  CHECK(na["result"]["verdict"] == "not-applicable");

  const auto pjr = run_json({"axiom", "pjr", "wrav_pjr", "--committee", "1,3,4"}, 1);
  CHECK(pjr["result"]["verdict"] == "fail");
  CHECK(pjr["result"]["witness"]["level"] == 2);
  CHECK(pjr["result"]["witness"]["cohesive_candidates"] == nlohmann::json::array({1, 2}));
  CHECK(pjr["result"]["witness"]["quota"]["exact"] == "4");

  const auto jr = run_json({"axiom", "jr", "thm3", "--committee", "4,3,2,1"});
  CHECK(jr["result"]["verdict"] == "pass");

  const auto exists = run_json({"axiom", "pr-exists", "thm3", "--k", "4"});
  CHECK(exists["result"]["committee"] == nlohmann::json::array({1, 2, 3, 4}));
  CHECK(run({"axiom", "pr-exists", "wrav_pjr", "--k", "3"}).code == 1);

  CHECK(run({"axiom", "ejr", "thm3"}).code == 2);
  CHECK(run({"axiom", "ejr", "thm3", "--committee", "1,x"}).code == 2);
  CHECK(run({"axiom", "ejr", "thm3", "--committee", "1,9"}).code == 2);
  CHECK(run({"axiom", "ejr", "thm3", "--committee", "1,2", "--k", "3"}).code == 2);
  CHECK(run({"axiom", "ejr", "thm3", "--committee", "1,1"}).code == 2);
}

TEST_CASE("cli: profile files") {
  const auto path = temp_path("profile.txt");
  {
    std::ofstream out(path);
    out << "election n=4 m=3\n2: 1 2\n2: 3\n";
  }
  const auto j = run_json({"rule", "pav", "--k", "2", path.string()});
  CHECK(j["result"]["committee"] == nlohmann::json::array({1, 3}));
  {
    std::ofstream out(path);
    out << "election n=4 m=3\n2: 1 2\n2: 4\n";
  }
  const Run bad = run({"rule", "pav", "--k", "2", path.string()});
  CHECK(bad.code == 2);
  CHECK(contains(bad.err, "line 3"));
  std::filesystem::remove(path);
}

TEST_CASE("cli: linear programs") {
  const auto j = run_json({"lp", "solve", "--k", "6"});
  CHECK(j["command"] == "lp solve");
  CHECK(j["result"]["status"] == "optimal");
  CHECK(j["result"]["value"]["exact"] == "661/3240");
  CHECK(j["result"]["value"]["decimal"] == "0.20");
  const auto k3 = run_json({"--decimals", "4", "lp", "solve", "--k", "3"});
  CHECK(k3["result"]["value"]["decimal"] == "0.3750");

  const Run dump = run({"lp", "solve", "--k", "2", "--dump"});
  CHECK(dump.code == 0);
  CHECK(contains(dump.out, "round1:c1>=c2"));
  CHECK(run({"lp", "solve", "--k", "9"}).code == 2);
  CHECK(run({"lp"}).code == 2);

  const auto path = temp_path("counter.profile");
  const Run c = run({"lp", "counterexample", "--k", "7", "--source", "lp", "--out", path.string()});
  CHECK(c.code == 0);
  const jrep::BallotProfile p = jrep::parse_profile(slurp(path));
  CHECK(p.num_voters() == 1134);
  std::filesystem::remove(path);

  const Run f = run({"lp", "counterexample", "--k", "6"});
  CHECK(f.code == 0);
  CHECK(jrep::parse_profile(f.out).num_voters() == 5992);
  CHECK(run({"lp", "counterexample", "--k", "5"}).code == 2);
}

TEST_CASE("cli: reproduce") {
  const Run all = run({"reproduce", "all"});
  CHECK(all.code == 0);
  CHECK_FALSE(contains(all.out, "MISMATCH"));
  const auto j = run_json({"reproduce", "table3"});
  CHECK(j["result"]["targets"][0]["passed"] == true);
  CHECK(run({"reproduce", "table9"}).code == 2);
}

TEST_CASE("cli: X3C reduction") {
  const auto in = temp_path("x3c.txt");
  {
    std::ofstream out(in);
    out << "x3c nu=6\n1 2 3\n4 5 6\n2 3 4\n";
  }
  const Run r = run({"reduce-x3c", in.string(), "--solve"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "# k=2"));
  CHECK(contains(r.out, "exact cover: sets {1, 2}"));
  const std::string profile_text = r.out.substr(0, r.out.find("exact cover"));
  CHECK(jrep::parse_profile(profile_text).num_voters() == 6);
  std::filesystem::remove(in);
  CHECK(run({"reduce-x3c", in.string()}).code == 2);
}

TEST_CASE("cli: generator") {
  const auto a = temp_path("gen_a.profile");
  const auto b = temp_path("gen_b.profile");
  const std::vector<std::string> base{"gen", "--seed", "1", "--n", "8", "--m", "6", "--k", "4",
                                      "--p", "0.4", "--out"};
  auto args = base;
  args.push_back(a.string());
  CHECK(run(args).code == 0);
  args = base;
  args.push_back(b.string());
  CHECK(run(args).code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(jrep::parse_profile(slurp(a)).num_voters() == 8);
  std::filesystem::remove(a);
  std::filesystem::remove(b);

  const auto j = run_json({"gen", "--seed", "5", "--k", "2"});
  CHECK(j["seed"] == 5);
  CHECK(run({"gen", "--k", "1", "--m", "1", "--p", "0.000000001"}).code == 2);
  CHECK(run({"gen", "--k", "1", "--p", "1"}).code == 2);
  CHECK(run({"gen", "--k", "7", "--m", "6"}).code == 2);
}

TEST_CASE("cli: usage") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  const Run help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(contains(help.out, "reproduce"));
}
