#include "jrep/fixtures.hpp"

#include <string>

#include "jrep/error.hpp"

namespace jrep {

namespace detail {
extern const std::pair<std::string_view, std::string_view> kEmbeddedFixtures[];
extern const std::size_t kEmbeddedFixtureCount;
}  // namespace detail

std::vector<std::string_view> fixture_names() {
  std::vector<std::string_view> names;
  for (std::size_t i = 0; i < detail::kEmbeddedFixtureCount; ++i) {
    names.push_back(detail::kEmbeddedFixtures[i].first);
  }
  return names;
}

std::optional<std::string_view> fixture_text(std::string_view name) {
  for (std::size_t i = 0; i < detail::kEmbeddedFixtureCount; ++i) {
    if (detail::kEmbeddedFixtures[i].first == name) return detail::kEmbeddedFixtures[i].second;
  }
  return std::nullopt;
}

BallotProfile fixture_profile(std::string_view name) {
  const auto text = fixture_text(name);
  if (!text) throw InvalidArgument("unknown fixture '" + std::string(name) + "'");
  return parse_profile(*text);
}

}  // namespace jrep
