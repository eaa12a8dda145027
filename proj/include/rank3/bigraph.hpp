#pragma once

#include <span>
#include <vector>

#include "rank3/permutation.hpp"
#include "rank3/subset.hpp"

namespace rank3 {

// A connection graph: c coatoms and r connectors, where connector j is
// adjacent to the coatoms in neighborhood(j). Connector order is part of the
// value (a labeled graph); isomorphism questions go through canonical_form().
class BicoloredGraph {
 public:
  BicoloredGraph() = default;

  // Throws std::invalid_argument if c is outside [0, kMaxCoatoms] or a
  // neighborhood names a coatom >= c.
  BicoloredGraph(int coatom_count, std::vector<SubsetMask> neighborhoods);

  int coatom_count() const { return coatoms_; }
  int connector_count() const { return static_cast<int>(neighborhoods_.size()); }

  std::span<const SubsetMask> neighborhoods() const { return neighborhoods_; }
  SubsetMask neighborhood(int connector) const { return neighborhoods_[connector]; }

  bool adjacent(int coatom, int connector) const {
    return contains(neighborhoods_[connector], coatom);
  }
  int coatom_degree(int coatom) const;

  // Coatoms adjacent to no connector.
  int isolated_coatom_count() const;

  // Coatom v becomes coatom_map(v); connectors keep their order.
  BicoloredGraph relabeled(const Permutation& coatom_map) const;
  // Connector j of the result is connector order[j] of this graph.
  BicoloredGraph with_connector_order(std::span<const int> order) const;

  friend bool operator==(const BicoloredGraph&, const BicoloredGraph&) = default;

 private:
  int coatoms_ = 0;
  std::vector<SubsetMask> neighborhoods_;
};

// True iff every connector has degree >= 2, no two connectors share more than
// one coatom, and r <= c(c-1)/2.
bool validate_connection_graph(const BicoloredGraph& g);

}  // namespace rank3
