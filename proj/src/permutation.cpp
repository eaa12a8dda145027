#include "rank3/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace rank3 {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || x >= degree() || seen[x]) {
      throw std::invalid_argument("Permutation: images do not form a bijection");
    }
    seen[x] = true;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

SubsetMask Permutation::apply(SubsetMask set) const {
  SubsetMask out = 0;
  while (set != 0) {
    const int v = std::countr_zero(set);
    set &= set - 1;
    out |= SubsetMask{1} << images_[v];
  }
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int x = 0; x < degree(); ++x) {
    inv[images_[x]] = x;
  }
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

bool Permutation::is_identity() const {
  for (int x = 0; x < degree(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> counts(images_.size(), 0);
  std::vector<bool> seen(images_.size(), false);
  for (int x = 0; x < degree(); ++x) {
    if (seen[x]) continue;
    int len = 0;
    for (int y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    ++counts[len - 1];
  }
  return counts;
}

std::string Permutation::to_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (int x = 0; x < degree(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    out += '(';
    for (int y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      if (y != x) out += ' ';
      out += std::to_string(y);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw std::invalid_argument("Permutation: degree mismatch in composition");
  }
  std::vector<int> images(q.images_.size());
  for (int x = 0; x < q.degree(); ++x) {
    images[x] = p.images_[q.images_[x]];
  }
  Permutation r;
  r.images_ = std::move(images);
  return r;
}

}  // namespace rank3
