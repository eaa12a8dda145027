#include "rank3/bigraph.hpp"

#include <stdexcept>

namespace rank3 {

BicoloredGraph::BicoloredGraph(int coatom_count, std::vector<SubsetMask> neighborhoods)
    : coatoms_(coatom_count), neighborhoods_(std::move(neighborhoods)) {
  if (coatoms_ < 0 || coatoms_ > kMaxCoatoms) {
    throw std::invalid_argument("BicoloredGraph: coatom count out of range");
  }
  const SubsetMask all = full_subset(coatoms_);
  for (SubsetMask n : neighborhoods_) {
    if ((n & ~all) != 0) {
      throw std::invalid_argument("BicoloredGraph: neighborhood names a missing coatom");
    }
  }
}

int BicoloredGraph::coatom_degree(int coatom) const {
  int d = 0;
  for (SubsetMask n : neighborhoods_) d += contains(n, coatom) ? 1 : 0;
  return d;
}

int BicoloredGraph::isolated_coatom_count() const {
  SubsetMask covered = 0;
  for (SubsetMask n : neighborhoods_) covered |= n;
  return coatoms_ - subset_size(covered);
}

BicoloredGraph BicoloredGraph::relabeled(const Permutation& coatom_map) const {
  if (coatom_map.degree() != coatoms_) {
    throw std::invalid_argument("BicoloredGraph: relabeling of wrong degree");
  }
  std::vector<SubsetMask> out;
  out.reserve(neighborhoods_.size());
  for (SubsetMask n : neighborhoods_) out.push_back(coatom_map.apply(n));
  return BicoloredGraph(coatoms_, std::move(out));
}

BicoloredGraph BicoloredGraph::with_connector_order(std::span<const int> order) const {
  if (order.size() != neighborhoods_.size()) {
    throw std::invalid_argument("BicoloredGraph: connector order of wrong length");
  }
  std::vector<bool> used(order.size(), false);
  std::vector<SubsetMask> out;
  out.reserve(order.size());
  for (int j : order) {
    if (j < 0 || j >= connector_count() || used[j]) {
      throw std::invalid_argument("BicoloredGraph: connector order is not a permutation");
    }
    used[j] = true;
    out.push_back(neighborhoods_[j]);
  }
  return BicoloredGraph(coatoms_, std::move(out));
}

bool validate_connection_graph(const BicoloredGraph& g) {
  const int c = g.coatom_count();
  const auto sets = g.neighborhoods();
  if (static_cast<long>(sets.size()) > static_cast<long>(c) * (c - 1) / 2) return false;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (subset_size(sets[i]) < 2) return false;
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (subset_size(sets[i] & sets[j]) > 1) return false;
    }
  }
  return true;
}

}  // namespace rank3
