#include "report.hpp"

#include <sstream>

namespace jrep::cli {

Json rational_json(const Rational& value, const Format& format) {
  return Json{{"exact", to_fraction_string(value)},
              {"decimal", to_decimal_string(value, format.decimals)}};
}

std::string rational_text(const Rational& value, const Format& format) {
  return to_fraction_string(value) + " (" + to_decimal_string(value, format.decimals) + ")";
}

Json voters_json(const VoterGroup& group) { return Json(group.voters()); }

std::string voters_text(const std::vector<VoterCount>& voters) {
  std::string out = "{";
  for (std::size_t i = 0; i < voters.size();) {
    std::size_t j = i;
    while (j + 1 < voters.size() && voters[j + 1] == voters[j] + 1) ++j;
    if (i > 0) out += ", ";
    out += std::to_string(voters[i]);
    if (j > i) out += "-" + std::to_string(voters[j]);
    i = j + 1;
  }
  return out + "}";
}

Json verdict_json(const AxiomVerdict& verdict, const Format& format) {
  Json out{{"verdict", verdict.satisfied ? "pass" : "fail"}};
  if (verdict.witness) {
    const AxiomWitness& w = *verdict.witness;
    out["witness"] = Json{{"level", w.level},
                          {"cohesive_candidates", w.cohesive.members()},
                          {"voters", voters_json(w.voters)},
                          {"voter_count", w.voters.size()},
                          {"quota", rational_json(w.quota, format)}};
  }
  return out;
}

std::string verdict_text(std::string_view axiom, const AxiomVerdict& verdict,
                         const Format& format) {
  std::ostringstream out;
  out << axiom << ": " << (verdict.satisfied ? "PASS" : "FAIL") << '\n';
  if (verdict.witness) {
    const AxiomWitness& w = *verdict.witness;
    out << "  level: " << w.level << '\n'
        << "  cohesive candidates: " << w.cohesive.to_string() << '\n'
        << "  voters (" << w.voters.size() << "): " << voters_text(w.voters.voters()) << '\n'
        << "  quota: " << rational_text(w.quota, format) << '\n';
  }
  return out.str();
}

Json pr_certificate_json(const PrCertificate& certificate) {
  Json groups = Json::array();
  for (const PrGroup& group : certificate.groups) {
    groups.push_back({{"candidate", group.candidate}, {"voters", voters_json(group.voters)}});
  }
  return groups;
}

std::string pr_certificate_text(const PrCertificate& certificate) {
  std::ostringstream out;
  for (const PrGroup& group : certificate.groups) {
    out << "  c" << group.candidate << " <- " << voters_text(group.voters.voters()) << '\n';
  }
  return out.str();
}

Json rav_trace_json(const RavTrace& trace, const Format& format) {
  Json rounds = Json::array();
  for (std::size_t i = 0; i < trace.rounds.size(); ++i) {
    const RavRound& r = trace.rounds[i];
    rounds.push_back({{"round", i + 1},
                      {"candidate", r.candidate},
                      {"weight", rational_json(r.weight, format)},
                      {"runner_up", r.runner_up ? rational_json(*r.runner_up, format) : Json()},
                      {"tie", r.tie}});
  }
  return Json{{"rounds", rounds},
              {"committee", trace.committee.members()},
              {"any_tie", trace.any_tie()}};
}

std::string rav_trace_text(const RavTrace& trace, const Format& format) {
  std::ostringstream out;
  for (std::size_t i = 0; i < trace.rounds.size(); ++i) {
    const RavRound& r = trace.rounds[i];
    out << "round " << i + 1 << ": c" << r.candidate << "  weight "
        << rational_text(r.weight, format);
    if (r.runner_up) out << "  runner-up " << rational_text(*r.runner_up, format);
    if (r.tie) out << "  TIE";
    out << '\n';
  }
  out << "committee: " << trace.committee.to_string() << '\n';
  return out.str();
}

Json greedy_monroe_json(const GreedyMonroeTrace& trace) {
  Json rounds = Json::array();
  for (const GreedyMonroeRound& r : trace.rounds) {
    rounds.push_back({{"round", r.round},
                      {"candidate", r.candidate},
                      {"voters", r.voters},
                      {"covered", r.covered}});
  }
  return Json{{"rounds", rounds}, {"committee", trace.committee.members()}};
}

std::string greedy_monroe_text(const GreedyMonroeTrace& trace) {
  std::ostringstream out;
  for (const GreedyMonroeRound& r : trace.rounds) {
    out << "round " << r.round << ": c" << r.candidate << "  group " << voters_text(r.voters)
        << "  covered " << r.covered << '\n';
  }
  out << "committee: " << trace.committee.to_string() << '\n';
  return out.str();
}

namespace {

const char* status_name(SimplexStatus status) {
  switch (status) {
    case SimplexStatus::Optimal: return "optimal";
    case SimplexStatus::Infeasible: return "infeasible";
    case SimplexStatus::Unbounded: return "unbounded";
  }
  return "unknown";
}

}  // namespace

Json simplex_json(const LinearProgram& lp, const SimplexResult& result, const Format& format) {
  Json out{{"status", status_name(result.status)}, {"pivots", result.pivots}};
  if (result.status != SimplexStatus::Optimal) return out;
  out["value"] = rational_json(result.value, format);
  Json solution = Json::object();
  for (std::size_t j = 0; j < result.solution.size(); ++j) {
    if (result.solution[j] != 0) {
      solution[lp.variable_labels[j]] = rational_json(result.solution[j], format);
    }
  }
  out["solution"] = solution;
  Json duals = Json::array();
  for (const Rational& y : result.duals) duals.push_back(to_fraction_string(y));
  out["duals"] = duals;
  return out;
}

std::string simplex_text(const LinearProgram& lp, const SimplexResult& result,
                         const Format& format) {
  std::ostringstream out;
  out << "status: " << status_name(result.status) << " (" << result.pivots << " pivots)\n";
  if (result.status != SimplexStatus::Optimal) return out.str();
  out << "value: " << rational_text(result.value, format) << '\n';
  for (std::size_t j = 0; j < result.solution.size(); ++j) {
    if (result.solution[j] != 0) {
      out << "  " << lp.variable_labels[j] << " = " << rational_text(result.solution[j], format)
          << '\n';
    }
  }
  return out.str();
}

}  // namespace jrep::cli
