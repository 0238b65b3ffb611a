#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace jrep {

struct Claim {
  std::string description;
  bool holds;
  /// What was observed, for the report.
  std::string observed;
};

struct ReproductionReport {
  std::string target;
  std::vector<Claim> claims;

  bool passed() const;
};

/// table1, table2, table3, thm3, example1, wrav-pjr, lp3, lp4, lp5, lp6, avg-sat
std::vector<std::string_view> reproduce_targets();

/// Runs one published scenario end to end and checks each of its claims.
/// Throws InvalidArgument for an unknown target.
ReproductionReport reproduce(std::string_view target);

}  // namespace jrep
