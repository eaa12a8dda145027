#include "rank3/perm_group.hpp"

#include <algorithm>
#include <stdexcept>

namespace rank3 {

namespace {

std::vector<int> points_of(SubsetMask set) {
  std::vector<int> pts;
  while (set != 0) {
    pts.push_back(std::countr_zero(set));
    set &= set - 1;
  }
  return pts;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace

PermGroup::PermGroup(int degree, std::vector<SubsetMask> blocks,
                     std::vector<Permutation> transversal)
    : degree_(degree), blocks_(std::move(blocks)), transversal_(std::move(transversal)) {
  if (degree_ < 0 || degree_ > kMaxCoatoms) {
    throw std::invalid_argument("PermGroup: unsupported degree");
  }
  SubsetMask covered = 0;
  for (SubsetMask b : blocks_) {
    if (b == 0 || (covered & b) != 0) {
      throw std::invalid_argument("PermGroup: blocks must be nonempty and disjoint");
    }
    covered |= b;
  }
  if (covered != full_subset(degree_)) {
    throw std::invalid_argument("PermGroup: blocks must cover every point");
  }
  if (transversal_.empty()) {
    throw std::invalid_argument("PermGroup: empty transversal");
  }
  for (const auto& t : transversal_) {
    if (t.degree() != degree_) {
      throw std::invalid_argument("PermGroup: transversal element of wrong degree");
    }
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](SubsetMask x, SubsetMask y) { return std::countr_zero(x) < std::countr_zero(y); });
  std::sort(transversal_.begin(), transversal_.end());
}

PermGroup PermGroup::trivial(int degree) {
  std::vector<SubsetMask> blocks;
  for (int v = 0; v < degree; ++v) blocks.push_back(SubsetMask{1} << v);
  return PermGroup(degree, std::move(blocks), {Permutation::identity(degree)});
}

PermGroup PermGroup::symmetric(int degree) {
  std::vector<SubsetMask> blocks;
  if (degree > 0) blocks.push_back(full_subset(degree));
  return PermGroup(degree, std::move(blocks), {Permutation::identity(degree)});
}

PermGroup PermGroup::from_elements(int degree, std::vector<Permutation> elements) {
  std::vector<SubsetMask> blocks;
  for (int v = 0; v < degree; ++v) blocks.push_back(SubsetMask{1} << v);
  return PermGroup(degree, std::move(blocks), std::move(elements));
}

std::uint64_t PermGroup::order() const {
  std::uint64_t n = transversal_.size();
  for (SubsetMask b : blocks_) n *= factorial(subset_size(b));
  return n;
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  for (const auto& t : transversal_) {
    const Permutation k = t.inverse() * p;
    bool in_kernel = true;
    for (SubsetMask b : blocks_) {
      if (k.apply(b) != b) {
        in_kernel = false;
        break;
      }
    }
    if (in_kernel) return true;
  }
  return false;
}

void PermGroup::for_each_element(const std::function<void(const Permutation&)>& visit) const {
  std::vector<std::vector<int>> block_points;
  for (SubsetMask b : blocks_) block_points.push_back(points_of(b));

  for (const auto& t : transversal_) {
    // Kernel elements are enumerated like an odometer, one next_permutation
    // wheel per block.
    std::vector<std::vector<int>> arrangement = block_points;
    for (;;) {
      std::vector<int> k(degree_);
      for (std::size_t i = 0; i < block_points.size(); ++i) {
        for (std::size_t j = 0; j < block_points[i].size(); ++j) {
          k[block_points[i][j]] = arrangement[i][j];
        }
      }
      visit(t * Permutation(std::move(k)));

      std::size_t i = 0;
      for (; i < arrangement.size(); ++i) {
        if (std::next_permutation(arrangement[i].begin(), arrangement[i].end())) break;
      }
      if (i == arrangement.size()) break;
    }
  }
}

std::vector<Permutation> PermGroup::elements() const {
  std::vector<Permutation> out;
  for_each_element([&](const Permutation& g) { out.push_back(g); });
  std::sort(out.begin(), out.end());
  return out;
}

SubsetMask PermGroup::block_normal_form(SubsetMask set) const {
  SubsetMask out = 0;
  for (SubsetMask b : blocks_) {
    int take = subset_size(set & b);
    SubsetMask rest = b;
    while (take-- > 0) {
      out |= rest & (~rest + 1);
      rest &= rest - 1;
    }
  }
  return out;
}

bool PermGroup::same_orbit(SubsetMask a, SubsetMask b) const {
  const SubsetMask target = block_normal_form(b);
  for (const auto& t : transversal_) {
    if (block_normal_form(t.apply(a)) == target) return true;
  }
  return false;
}

PermGroup PermGroup::conjugated(const Permutation& p) const {
  const Permutation p_inv = p.inverse();
  std::vector<SubsetMask> blocks;
  for (SubsetMask b : blocks_) blocks.push_back(p.apply(b));
  std::vector<Permutation> transversal;
  for (const auto& t : transversal_) transversal.push_back(p * t * p_inv);
  return PermGroup(degree_, std::move(blocks), std::move(transversal));
}

}  // namespace rank3
