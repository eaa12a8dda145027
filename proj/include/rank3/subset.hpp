#pragma once

#include <bit>
#include <cstdint>

namespace rank3 {

// A set of coatoms as a bitmask: bit i set means coatom i is a member.
using SubsetMask = std::uint32_t;

inline constexpr int kMaxCoatoms = 16;

inline int subset_size(SubsetMask m) { return std::popcount(m); }

inline SubsetMask full_subset(int n) {
  return n >= 32 ? ~SubsetMask{0} : (SubsetMask{1} << n) - 1;
}

inline bool contains(SubsetMask m, int point) { return (m >> point) & 1U; }

}  // namespace rank3
