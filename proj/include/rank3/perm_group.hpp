#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "rank3/permutation.hpp"
#include "rank3/subset.hpp"

namespace rank3 {

// A permutation group G on {0, ..., degree-1}, stored as
//
//   G = union over t in transversal of  t * K,   K = Sym(B_1) x ... x Sym(B_k)
//
// where the blocks B_i partition the points and K is the subgroup moving
// points freely inside each block. Each transversal element maps blocks onto
// blocks. Graph automorphism groups are dominated by interchangeable
// ("twin") coatoms, so this keeps even the symmetric group of degree 11 at a
// single transversal element. Singleton blocks give a plain element list.
class PermGroup {
 public:
  PermGroup() = default;
  PermGroup(int degree, std::vector<SubsetMask> blocks, std::vector<Permutation> transversal);

  static PermGroup trivial(int degree);
  static PermGroup symmetric(int degree);
  // Explicit element list; the caller guarantees closure.
  static PermGroup from_elements(int degree, std::vector<Permutation> elements);

  int degree() const { return degree_; }
  std::uint64_t order() const;
  bool is_trivial() const { return order() == 1; }

  std::span<const SubsetMask> blocks() const { return blocks_; }
  std::span<const Permutation> transversal() const { return transversal_; }

  bool contains(const Permutation& p) const;

  // Visits all |G| elements; order is deterministic but unspecified.
  void for_each_element(const std::function<void(const Permutation&)>& visit) const;
  // All elements, sorted.
  std::vector<Permutation> elements() const;

  // Whether some element maps set `a` onto set `b`.
  bool same_orbit(SubsetMask a, SubsetMask b) const;

  // Representative of the K-orbit of a set: inside each block, the set's
  // members are replaced by the block's lowest points.
  SubsetMask block_normal_form(SubsetMask set) const;

  // The group p G p^-1, acting on relabeled points.
  PermGroup conjugated(const Permutation& p) const;

 private:
  int degree_ = 0;
  std::vector<SubsetMask> blocks_;
  std::vector<Permutation> transversal_;
};

}  // namespace rank3
