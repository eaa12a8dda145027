#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "rank3/bigraph.hpp"
#include "rank3/perm_group.hpp"

namespace rank3 {

// Isomorphism-class invariant of a bicolored graph: the coatom count and the
// sorted list of connector neighborhoods under a canonical coatom labeling.
// Equal iff the graphs are isomorphic (coatoms to coatoms, connectors to
// connectors).
class CanonicalForm {
 public:
  CanonicalForm() = default;
  CanonicalForm(int coatom_count, std::vector<SubsetMask> sorted_neighborhoods);

  int coatom_count() const { return coatoms_; }
  std::span<const SubsetMask> neighborhoods() const { return neighborhoods_; }

  // The canonical representative itself.
  BicoloredGraph graph() const { return BicoloredGraph(coatoms_, neighborhoods_); }

  // Big-endian byte string; byte order agrees with operator<=>.
  std::string bytes() const;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend std::strong_ordering operator<=>(const CanonicalForm& x, const CanonicalForm& y);

 private:
  int coatoms_ = 0;
  std::vector<SubsetMask> neighborhoods_;
};

struct CanonicalLabeling {
  CanonicalForm form;
  // Maps each coatom to its canonical position: g.relabeled(labeling) has
  // the neighborhoods of form, up to connector order.
  Permutation labeling;
  // Restriction of Aut(g) to the coatoms.
  PermGroup automorphisms;
};

// Individualization-refinement search over coatom orderings. Cells are split
// by the multiset of incident connector "types"; coatoms that can be swapped
// by a transposition (twins) are never branched on twice.
CanonicalLabeling canonical_labeling(const BicoloredGraph& g);

CanonicalForm canonical_form(const BicoloredGraph& g);

// Coatom permutations that extend to an automorphism of g.
PermGroup automorphism_group_on_coatoms(const BicoloredGraph& g);

}  // namespace rank3
