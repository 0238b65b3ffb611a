#pragma once

#include <string>

#include <json.hpp>

#include "jrep/axioms.hpp"
#include "jrep/lp.hpp"
#include "jrep/profile.hpp"
#include "jrep/rules.hpp"

namespace jrep::cli {

using Json = nlohmann::ordered_json;

/// Rendering settings shared by every report.
struct Format {
  int decimals = 2;
};

Json rational_json(const Rational& value, const Format& format);
/// "2441/2 (1220.50)"
std::string rational_text(const Rational& value, const Format& format);

Json voters_json(const VoterGroup& group);
/// Compressed voter list such as "{1-4, 7, 9-10}".
std::string voters_text(const std::vector<VoterCount>& voters);

Json verdict_json(const AxiomVerdict& verdict, const Format& format);
std::string verdict_text(std::string_view axiom, const AxiomVerdict& verdict,
                         const Format& format);

Json pr_certificate_json(const PrCertificate& certificate);
std::string pr_certificate_text(const PrCertificate& certificate);

Json rav_trace_json(const RavTrace& trace, const Format& format);
std::string rav_trace_text(const RavTrace& trace, const Format& format);

Json greedy_monroe_json(const GreedyMonroeTrace& trace);
std::string greedy_monroe_text(const GreedyMonroeTrace& trace);

Json simplex_json(const LinearProgram& lp, const SimplexResult& result, const Format& format);
std::string simplex_text(const LinearProgram& lp, const SimplexResult& result,
                         const Format& format);

}  // namespace jrep::cli
