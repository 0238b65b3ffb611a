#include "jrep/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "jrep/axioms.hpp"
#include "jrep/counterexample.hpp"
#include "jrep/error.hpp"
#include "jrep/fixtures.hpp"
#include "jrep/generate.hpp"
#include "jrep/lp.hpp"
#include "jrep/reproduce.hpp"
#include "jrep/rules.hpp"
#include "jrep/x3c.hpp"
#include "report.hpp"

namespace jrep::cli {

namespace {

struct Options {
  bool json = false;
  int decimals = 2;

  std::string rule;
  std::string axiom;
  std::string profile;
  int k = 0;
  std::string weights;
  std::string committee;
  std::uint64_t max_committees = SearchLimits{}.max_committees;
  std::uint64_t max_combinations = EnumerationLimits{}.max_combinations;

  bool dump = false;
  std::string source = "fixture";
  std::string out_path;

  std::string target;
  std::string x3c_path;
  bool solve = false;

  std::uint64_t seed = 1;
  VoterCount n = 8;
  int m = 6;
  double p = 0.4;
};

/// Outcome of one subcommand: the JSON payload, the text rendering and the
/// exit code.
struct Outcome {
  Json result;
  std::string text;
  int code = kSuccess;
};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << text;
}

// A profile argument is a file path if such a file exists, otherwise the
// name of an embedded fixture ("fixtures/" prefix and ".profile" suffix are
// optional).
BallotProfile load_profile(std::string_view arg) {
  if (std::filesystem::is_regular_file(arg)) return parse_profile(read_file(std::string(arg)));
  std::string_view name = arg;
  if (name.starts_with("fixtures/")) name.remove_prefix(9);
  if (name.ends_with(".profile")) name.remove_suffix(8);
  if (name == "table1_padded") name = "table1";
  if (!fixture_text(name)) {
    std::string known;
    for (std::string_view f : fixture_names()) known += " " + std::string(f);
    throw InvalidArgument("no file or fixture named '" + std::string(arg) +
                          "' (fixtures:" + known + ")");
  }
  return fixture_profile(name);
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

// harmonic | constant-1-0 | 1-0 | w1,w2,...[,...]
WeightVector parse_weights(const std::string& spec, int k) {
  if (spec.empty() || spec == "harmonic") return WeightVector::harmonic(k);
  if (spec == "constant-1-0" || spec == "1-0") return WeightVector::approval_then_zero(k);
  std::vector<std::string> parts = split(spec, ',');
  bool repeat = false;
  if (parts.size() > 1 && parts.back() == "...") {
    repeat = true;
    parts.pop_back();
  }
  std::vector<Rational> entries;
  for (const std::string& part : parts) entries.push_back(parse_rational(part));
  if (repeat) {
    while (static_cast<int>(entries.size()) < k) entries.push_back(entries.back());
  }
  if (static_cast<int>(entries.size()) < k) {
    throw InvalidArgument("weight vector '" + spec + "' has " + std::to_string(entries.size()) +
                          " entries but k=" + std::to_string(k) +
                          "; end the list with ',...' to repeat the last entry");
  }
  return WeightVector(std::move(entries));
}

Committee parse_committee(const std::string& spec) {
  std::vector<int> members;
  for (const std::string& part : split(spec, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != part.size()) {
      throw InvalidArgument("bad committee member '" + part + "' in '" + spec + "'");
    }
    members.push_back(value);
  }
  std::sort(members.begin(), members.end());
  return Committee(std::move(members));
}

std::string profile_summary(const BallotProfile& profile) {
  return "n=" + std::to_string(profile.num_voters()) +
         " m=" + std::to_string(profile.num_candidates());
}

Json search_json(const CommitteeSearchResult& r, const Format& format) {
  return Json{{"committee", r.committee.members()},
              {"score", rational_json(r.score, format)},
              {"optimal_count", r.optimal_count},
              {"tie", r.tie()}};
}

std::string search_text(const CommitteeSearchResult& r, const Format& format) {
  std::ostringstream out;
  out << "committee: " << r.committee.to_string() << '\n'
      << "score: " << rational_text(r.score, format) << '\n';
  if (r.tie()) out << "tie: " << r.optimal_count << " optimal committees, lowest taken\n";
  return out.str();
}

Outcome cmd_rule(const Options& o, const Format& format) {
  const BallotProfile profile = load_profile(o.profile);
  const SearchLimits limits{o.max_committees};
  const bool weighted = o.rule == "wpav" || o.rule == "wrav";
  if (!weighted && !o.weights.empty()) {
    throw InvalidArgument("--weights only applies to wpav and wrav");
  }
  Outcome outcome;
  std::ostringstream text;
  text << "rule " << o.rule << ", k=" << o.k << ", " << profile_summary(profile) << '\n';
  Json result{{"rule", o.rule}, {"k", o.k}, {"num_voters", profile.num_voters()}};

  if (o.rule == "pav" || o.rule == "wpav") {
    const WeightVector w = parse_weights(o.weights, o.k);
    const CommitteeSearchResult r = wpav_search(profile, o.k, w, limits);
    result.update(search_json(r, format));
    text << search_text(r, format);
  } else if (o.rule == "rav" || o.rule == "wrav") {
    const WeightVector w = parse_weights(o.weights, o.k);
    const RavTrace trace = wrav_run(profile, o.k, w);
    result.update(rav_trace_json(trace, format));
    text << rav_trace_text(trace, format);
  } else if (o.rule == "monroe") {
    const CommitteeSearchResult r = monroe_search(profile, o.k, limits);
    result.update(search_json(r, format));
    text << search_text(r, format);
  } else if (o.rule == "greedy-monroe") {
    const GreedyMonroeTrace trace = greedy_monroe(profile, o.k);
    result.update(greedy_monroe_json(trace));
    text << greedy_monroe_text(trace);
  } else if (o.rule == "hybrid") {
    const HybridResult r = hybrid_pr_pav(profile, o.k, limits);
    result["committee"] = r.committee.members();
    result["perfect_representation"] = r.perfect_representation;
    text << "committee: " << r.committee.to_string() << '\n'
         << "source: " << (r.perfect_representation ? "perfect representation" : "PAV") << '\n';
  }
  outcome.result = std::move(result);
  outcome.text = text.str();
  return outcome;
}

Outcome cmd_axiom(const Options& o, const Format& format) {
  const BallotProfile profile = load_profile(o.profile);
  const EnumerationLimits limits{o.max_combinations};
  Outcome outcome;
  std::ostringstream text;
  Json result{{"axiom", o.axiom}, {"num_voters", profile.num_voters()}};

  if (o.axiom == "pr-exists") {
    if (o.k <= 0) throw InvalidArgument("pr-exists needs --k");
    result["k"] = o.k;
    std::optional<Committee> found;
    try {
      found = exists_pr_committee(profile, o.k, limits);
    } catch (const NotApplicable& e) {
      result["verdict"] = "not-applicable";
      result["reason"] = e.what();
      outcome.result = std::move(result);
      outcome.text = std::string("pr-exists: not-applicable (") + e.what() + ")\n";
      return outcome;
    }
    result["verdict"] = found ? "found" : "none";
    result["committee"] = found ? Json(found->members()) : Json();
    text << "pr-exists: " << (found ? "found " + found->to_string() : std::string("none"))
         << '\n';
    outcome.code = found ? kSuccess : kAxiomFailed;
    outcome.result = std::move(result);
    outcome.text = text.str();
    return outcome;
  }

  if (o.committee.empty()) throw InvalidArgument(o.axiom + " needs --committee");
  const Committee committee = parse_committee(o.committee);
  require_committee(profile, committee);
  if (o.k > 0 && o.k != committee.size()) {
    throw InvalidArgument("--k " + std::to_string(o.k) + " differs from the committee size " +
                          std::to_string(committee.size()));
  }
  result["committee"] = committee.members();

  if (o.axiom == "pr") {
    PrVerdict verdict;
    try {
      verdict = provides_pr(profile, committee);
    } catch (const NotApplicable& e) {
      result["verdict"] = "not-applicable";
      result["reason"] = e.what();
      outcome.result = std::move(result);
      outcome.text = std::string("pr: not-applicable (") + e.what() + ")\n";
      return outcome;
    }
    result["verdict"] = verdict.provided ? "pass" : "fail";
    text << "pr: " << (verdict.provided ? "PASS" : "FAIL") << '\n';
    if (verdict.certificate) {
      result["partition"] = pr_certificate_json(*verdict.certificate);
      text << pr_certificate_text(*verdict.certificate);
    }
    outcome.code = verdict.provided ? kSuccess : kAxiomFailed;
  } else {
    const Axiom axiom = o.axiom == "jr" ? Axiom::JR : o.axiom == "pjr" ? Axiom::PJR : Axiom::EJR;
    const AxiomVerdict verdict = check_axiom(axiom, profile, committee, limits);
    result.update(verdict_json(verdict, format));
    text << verdict_text(o.axiom, verdict, format);
    outcome.code = verdict.satisfied ? kSuccess : kAxiomFailed;
  }
  outcome.result = std::move(result);
  outcome.text = text.str();
  return outcome;
}

Outcome cmd_lp_solve(const Options& o, const Format& format) {
  const RavWeightProgram program = build_lp_k(o.k);
  const SimplexResult result = simplex_solve(program.program);
  Outcome outcome;
  outcome.result = simplex_json(program.program, result, format);
  outcome.result["k"] = o.k;
  outcome.result["num_constraints"] = program.program.constraints.size();
  std::ostringstream text;
  text << "LP_" << o.k << ": " << program.program.num_variables() << " variables, "
       << program.program.constraints.size() << " constraints\n";
  if (o.dump) {
    text << program.program.serialize();
    outcome.result["program"] = program.program.serialize();
  }
  text << simplex_text(program.program, result, format);
  outcome.text = text.str();
  return outcome;
}

Outcome cmd_lp_counterexample(const Options& o) {
  CounterexampleSource source;
  if (o.source == "fixture") {
    source = CounterexampleSource::PublishedFixture;
  } else if (o.source == "lp") {
    source = CounterexampleSource::LinearProgram;
  } else {
    throw InvalidArgument("--source must be fixture or lp");
  }
  const BallotProfile profile = rav_counterexample(o.k, source);
  const std::string body = "# RAV with k=" + std::to_string(o.k) +
                           " fails JR on this profile\n" + serialize_profile(profile);
  Outcome outcome;
  outcome.result = Json{{"k", o.k},
                        {"source", o.source},
                        {"num_voters", profile.num_voters()},
                        {"num_candidates", profile.num_candidates()},
                        {"num_ballots", profile.num_ballots()}};
  if (!o.out_path.empty()) {
    write_file(o.out_path, body);
    outcome.result["written"] = o.out_path;
    outcome.text = "wrote " + o.out_path + " (" + profile_summary(profile) + ")\n";
  } else {
    outcome.result["profile"] = body;
    outcome.text = body;
  }
  return outcome;
}

Outcome cmd_reproduce(const Options& o) {
  std::vector<std::string> targets;
  if (o.target == "all") {
    for (std::string_view t : reproduce_targets()) targets.emplace_back(t);
  } else {
    targets.push_back(o.target);
  }
  Outcome outcome;
  Json reports = Json::array();
  std::ostringstream text;
  for (const std::string& target : targets) {
    const ReproductionReport report = reproduce(target);
    Json claims = Json::array();
    text << target << ": " << (report.passed() ? "PASS" : "MISMATCH") << '\n';
    for (const Claim& claim : report.claims) {
      claims.push_back(
          {{"claim", claim.description}, {"holds", claim.holds}, {"observed", claim.observed}});
      text << "  [" << (claim.holds ? "ok" : "FAIL") << "] " << claim.description;
      if (!claim.observed.empty()) text << "  (" << claim.observed << ")";
      text << '\n';
    }
    reports.push_back({{"target", target}, {"passed", report.passed()}, {"claims", claims}});
    if (!report.passed()) outcome.code = kReproductionMismatch;
  }
  outcome.result = Json{{"targets", reports}};
  outcome.text = text.str();
  return outcome;
}

Outcome cmd_reduce_x3c(const Options& o) {
  const X3CInstance instance = parse_x3c(read_file(o.x3c_path));
  const PrInstance reduced = x3c_to_pr(instance);
  const std::string body =
      "# k=" + std::to_string(reduced.k) + "\n" + serialize_profile(reduced.profile);
  Outcome outcome;
  outcome.result = Json{{"k", reduced.k},
                        {"num_voters", reduced.profile.num_voters()},
                        {"num_candidates", reduced.profile.num_candidates()}};
  std::ostringstream text;
  if (!o.out_path.empty()) {
    write_file(o.out_path, body);
    outcome.result["written"] = o.out_path;
    text << "wrote " << o.out_path << " (k=" << reduced.k << ", "
         << profile_summary(reduced.profile) << ")\n";
  } else {
    outcome.result["profile"] = body;
    text << body;
  }
  if (o.solve) {
    const auto found = exists_pr_committee(reduced.profile, reduced.k);
    outcome.result["exact_cover"] = found ? Json(found->members()) : Json();
    if (found) {
      text << "exact cover: sets " << found->to_string() << '\n';
    } else {
      text << "exact cover: none\n";
    }
  }
  outcome.text = text.str();
  return outcome;
}

Outcome cmd_gen(const Options& o) {
  if (o.k < 1 || o.k > o.m) throw InvalidArgument("gen needs 1 <= k <= m");
  RandomProfileParams params;
  params.seed = o.seed;
  params.num_voters = o.n;
  params.num_candidates = o.m;
  params.approval_probability = o.p;
  const BallotProfile profile = random_profile(params);
  std::ostringstream header;
  header << "# gen seed=" << o.seed << " n=" << o.n << " m=" << o.m << " k=" << o.k
         << " p=" << o.p << '\n';
  const std::string body = header.str() + serialize_profile(profile);
  Outcome outcome;
  outcome.result = Json{{"k", o.k}, {"num_voters", o.n}, {"num_candidates", o.m}, {"p", o.p}};
  if (!o.out_path.empty()) {
    write_file(o.out_path, body);
    outcome.result["written"] = o.out_path;
    outcome.text = "wrote " + o.out_path + '\n';
  } else {
    outcome.result["profile"] = body;
    outcome.text = body;
  }
  return outcome;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact approval-based committee elections", "jrep"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Print a JSON report");
  app.add_option("--decimals", o.decimals, "Decimal places for rounded output")
      ->check(CLI::Range(0, 40));

  CLI::App* rule = app.add_subcommand("rule", "Run a voting rule");
  rule->add_option("rule", o.rule)
      ->required()
      ->check(CLI::IsMember({"pav", "wpav", "rav", "wrav", "monroe", "greedy-monroe", "hybrid"}));
  rule->add_option("profile", o.profile, "Profile file or fixture name")->required();
  rule->add_option("--k", o.k, "Committee size")->required()->check(CLI::PositiveNumber);
  rule->add_option("--weights", o.weights, "harmonic, constant-1-0 or w1,w2,...[,...]");
  rule->add_option("--max-committees", o.max_committees, "Cap on exhaustive searches");

  CLI::App* axiom = app.add_subcommand("axiom", "Check a representation axiom");
  axiom->add_option("axiom", o.axiom)
      ->required()
      ->check(CLI::IsMember({"jr", "pjr", "ejr", "pr", "pr-exists"}));
  axiom->add_option("profile", o.profile, "Profile file or fixture name")->required();
  axiom->add_option("--committee", o.committee, "Comma separated candidates, e.g. 1,2,3");
  axiom->add_option("--k", o.k, "Committee size")->check(CLI::PositiveNumber);
  axiom->add_option("--max-combinations", o.max_combinations, "Cap on enumerations");

  CLI::App* lp = app.add_subcommand("lp", "Relative weight programs");
  lp->require_subcommand(1);
  CLI::App* solve = lp->add_subcommand("solve", "Solve LP_k exactly");
  solve->add_option("--k", o.k)->required()->check(CLI::Range(2, 8));
  solve->add_flag("--dump", o.dump, "Print the program");
  CLI::App* counter = lp->add_subcommand("counterexample", "Profile on which RAV fails JR");
  counter->add_option("--k", o.k)->required()->check(CLI::Range(6, 63));
  counter->add_option("--source", o.source, "fixture or lp")
      ->check(CLI::IsMember({"fixture", "lp"}));
  counter->add_option("--out", o.out_path);

  CLI::App* repro = app.add_subcommand("reproduce", "Re-run a published scenario");
  repro->add_option("target", o.target)->required();

  CLI::App* x3c = app.add_subcommand("reduce-x3c", "Reduce exact cover by 3-sets to PR");
  x3c->add_option("file", o.x3c_path)->required();
  x3c->add_option("--out", o.out_path);
  x3c->add_flag("--solve", o.solve, "Also search for a PR committee");

  CLI::App* gen = app.add_subcommand("gen", "Seeded random profile");
  gen->add_option("--seed", o.seed);
  gen->add_option("--n", o.n)->check(CLI::Range(VoterCount{1}, VoterCount{1'000'000}));
  gen->add_option("--m", o.m)->check(CLI::Range(1, 64));
  gen->add_option("--k", o.k)->required();
  gen->add_option("--p", o.p)->check(CLI::Range(0.0, 1.0));
  gen->add_option("--out", o.out_path);

  for (CLI::App* sub : {rule, axiom, lp, repro, x3c, gen}) sub->fallthrough();
  solve->fallthrough();
  counter->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  const Format format{o.decimals};
  Outcome outcome;
  std::string command;
  try {
    if (*rule) {
      command = "rule";
      outcome = cmd_rule(o, format);
    } else if (*axiom) {
      command = "axiom";
      outcome = cmd_axiom(o, format);
    } else if (*solve) {
      command = "lp solve";
      outcome = cmd_lp_solve(o, format);
    } else if (*counter) {
      command = "lp counterexample";
      outcome = cmd_lp_counterexample(o);
    } else if (*repro) {
      command = "reproduce";
      outcome = cmd_reproduce(o);
    } else if (*x3c) {
      command = "reduce-x3c";
      outcome = cmd_reduce_x3c(o);
    } else {
      command = "gen";
      if (!(o.p > 0.0 && o.p < 1.0)) throw InvalidArgument("--p must lie strictly in (0, 1)");
      outcome = cmd_gen(o);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  if (o.json) {
    Json report{{"command", command},
                {"arguments", args},
                {"seed", *gen ? Json(o.seed) : Json()},
                {"result", outcome.result}};
    out << report.dump(2) << '\n';
  } else {
    out << outcome.text;
  }
  return outcome.code;
}

}  // namespace jrep::cli
