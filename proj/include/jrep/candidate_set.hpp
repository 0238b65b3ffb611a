#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace jrep {

/// A set of candidates drawn from c_1..c_64, stored as a bit mask where bit
/// (c - 1) stands for candidate c. Candidate indices are 1-based.
class CandidateSet {
 public:
  static constexpr int kMaxCandidates = 64;

  constexpr CandidateSet() = default;
  constexpr explicit CandidateSet(std::uint64_t mask) : mask_(mask) {}
  CandidateSet(std::initializer_list<int> members);

  static CandidateSet from_members(const std::vector<int>& members);
  /// {c_1, ..., c_count}
  static CandidateSet prefix(int count);

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(int candidate) const {
    return candidate >= 1 && candidate <= kMaxCandidates &&
           ((mask_ >> (candidate - 1)) & 1U) != 0;
  }
  constexpr bool is_subset_of(CandidateSet other) const {
    return (mask_ & ~other.mask_) == 0;
  }
  /// Largest candidate index in the set, 0 when empty.
  constexpr int max_member() const { return 64 - std::countl_zero(mask_); }

  void insert(int candidate);
  void erase(int candidate);

  std::vector<int> members() const;
  /// "{1, 5, 6}"
  std::string to_string() const;

  friend constexpr CandidateSet operator&(CandidateSet a, CandidateSet b) {
    return CandidateSet(a.mask_ & b.mask_);
  }
  friend constexpr CandidateSet operator|(CandidateSet a, CandidateSet b) {
    return CandidateSet(a.mask_ | b.mask_);
  }
  friend constexpr CandidateSet operator-(CandidateSet a, CandidateSet b) {
    return CandidateSet(a.mask_ & ~b.mask_);
  }
  friend constexpr bool operator==(CandidateSet, CandidateSet) = default;

 private:
  std::uint64_t mask_ = 0;
};

}  // namespace jrep
