#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "jrep/profile.hpp"

namespace jrep {

/// Exact cover by 3-sets: a universe {1..universe_size} and a family of
/// 3-element subsets. universe_size is divisible by 3.
struct X3CInstance {
  int universe_size = 0;
  std::vector<std::array<int, 3>> sets;
};

/// Throws InvalidArgument when the universe size is not a positive multiple
/// of 3, a set repeats an element or leaves the universe, or there are more
/// than 64 sets.
void validate(const X3CInstance& instance);

/// Text format: "x3c nu=<int>" then one "<a> <b> <c>" line per set.
/// '#' lines and blank lines are ignored. Throws ParseError.
X3CInstance parse_x3c(std::string_view text);
std::string serialize_x3c(const X3CInstance& instance);

struct PrInstance {
  BallotProfile profile;
  int k;
};

/// One voter per universe element and one candidate per set; voter i approves
/// c_j iff element i lies in set j; k = universe_size / 3, so n / k = 3.
/// A committee provides perfect representation for the result iff the chosen
/// sets form an exact cover. Throws InvalidArgument when some element lies in
/// no set (its ballot would be empty).
PrInstance x3c_to_pr(const X3CInstance& instance);

}  // namespace jrep
