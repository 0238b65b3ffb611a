#include "jrep/x3c.hpp"

#include <charconv>
#include <sstream>

#include "jrep/error.hpp"

namespace jrep {

void validate(const X3CInstance& instance) {
  if (instance.universe_size < 3 || instance.universe_size % 3 != 0) {
    throw InvalidArgument("universe size must be a positive multiple of 3");
  }
  if (instance.sets.size() > static_cast<std::size_t>(CandidateSet::kMaxCandidates)) {
    throw InvalidArgument("at most 64 sets are supported");
  }
  for (const auto& set : instance.sets) {
    for (int e : set) {
      if (e < 1 || e > instance.universe_size) {
        throw InvalidArgument("set element " + std::to_string(e) + " outside the universe");
      }
    }
    if (set[0] == set[1] || set[0] == set[2] || set[1] == set[2]) {
      throw InvalidArgument("set elements must be distinct");
    }
  }
}

namespace {

bool parse_int(std::string_view text, int& out) {
  if (text.empty()) return false;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

}  // namespace

X3CInstance parse_x3c(std::string_view text) {
  X3CInstance instance;
  bool have_header = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    if (!have_header) {
      constexpr std::string_view prefix = "x3c nu=";
      if (line.substr(0, prefix.size()) != prefix ||
          !parse_int(line.substr(prefix.size()), instance.universe_size)) {
        throw ParseError(line_no, "expected header 'x3c nu=<int>'");
      }
      have_header = true;
      continue;
    }
    std::array<int, 3> set{};
    std::size_t start = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      const auto space = line.find(' ', start);
      const bool last = i == 2;
      if (last != (space == std::string_view::npos) ||
          !parse_int(line.substr(start, space - start), set[i])) {
        throw ParseError(line_no, "expected '<a> <b> <c>'");
      }
      start = space + 1;
    }
    instance.sets.push_back(set);
  }
  if (!have_header) throw ParseError(line_no, "missing 'x3c' header");
  try {
    validate(instance);
  } catch (const InvalidArgument& e) {
    throw ParseError(line_no, e.what());
  }
  return instance;
}

std::string serialize_x3c(const X3CInstance& instance) {
  std::ostringstream out;
  out << "x3c nu=" << instance.universe_size << '\n';
  for (const auto& set : instance.sets) out << set[0] << ' ' << set[1] << ' ' << set[2] << '\n';
  return out.str();
}

PrInstance x3c_to_pr(const X3CInstance& instance) {
  validate(instance);
  if (instance.sets.empty()) throw InvalidArgument("X3C instance has no sets");
  std::vector<CandidateSet> voters(static_cast<std::size_t>(instance.universe_size));
  for (std::size_t j = 0; j < instance.sets.size(); ++j) {
    for (int e : instance.sets[j]) {
      voters[static_cast<std::size_t>(e - 1)].insert(static_cast<int>(j) + 1);
    }
  }
  for (std::size_t i = 0; i < voters.size(); ++i) {
    if (voters[i].empty()) {
      throw InvalidArgument("element " + std::to_string(i + 1) +
                            " lies in no set; no exact cover exists");
    }
  }
  return {profile_from_voters(static_cast<int>(instance.sets.size()), voters),
          instance.universe_size / 3};
}

}  // namespace jrep
