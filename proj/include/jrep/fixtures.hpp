#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "jrep/profile.hpp"

namespace jrep {

/// Names of the profiles shipped under fixtures/ and compiled into the
/// library: table1, table2, table3, thm3, example1, wrav_pjr, avgsat3.
std::vector<std::string_view> fixture_names();

std::optional<std::string_view> fixture_text(std::string_view name);

/// Parsed fixture. Throws InvalidArgument for an unknown name.
BallotProfile fixture_profile(std::string_view name);

}  // namespace jrep
