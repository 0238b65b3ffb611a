#include "jrep/candidate_set.hpp"

#include "jrep/error.hpp"

namespace jrep {

namespace {

void check_index(int candidate) {
  if (candidate < 1 || candidate > CandidateSet::kMaxCandidates) {
    throw InvalidArgument("candidate index " + std::to_string(candidate) +
                          " outside 1..64");
  }
}

}  // namespace

CandidateSet::CandidateSet(std::initializer_list<int> members) {
  for (int c : members) insert(c);
}

CandidateSet CandidateSet::from_members(const std::vector<int>& members) {
  CandidateSet set;
  for (int c : members) set.insert(c);
  return set;
}

CandidateSet CandidateSet::prefix(int count) {
  if (count < 0 || count > kMaxCandidates) {
    throw InvalidArgument("prefix size outside 0..64");
  }
  return CandidateSet(count == kMaxCandidates ? ~std::uint64_t{0}
                                              : (std::uint64_t{1} << count) - 1);
}

void CandidateSet::insert(int candidate) {
  check_index(candidate);
  mask_ |= std::uint64_t{1} << (candidate - 1);
}

void CandidateSet::erase(int candidate) {
  check_index(candidate);
  mask_ &= ~(std::uint64_t{1} << (candidate - 1));
}

std::vector<int> CandidateSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t rest = mask_; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest) + 1);
  }
  return out;
}

std::string CandidateSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int c : members()) {
    if (!first) out += ", ";
    out += std::to_string(c);
    first = false;
  }
  return out + "}";
}

}  // namespace jrep
