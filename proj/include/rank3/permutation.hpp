#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "rank3/subset.hpp"

namespace rank3 {

// A bijection on {0, ..., degree-1}, stored in array form.
class Permutation {
 public:
  Permutation() = default;

  // Throws std::invalid_argument unless `images` is a bijection.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[point]; }
  std::span<const int> images() const { return images_; }

  // Image of a set of points.
  SubsetMask apply(SubsetMask set) const;

  Permutation inverse() const;
  bool is_identity() const;

  // Number of cycles of each length: entry j-1 counts the j-cycles.
  std::vector<int> cycle_type() const;

  // Disjoint cycle notation with 0-based points, e.g. "(0 3)(1 2)".
  std::string to_string() const;

  // (p * q)(x) = p(q(x))
  friend Permutation operator*(const Permutation& p, const Permutation& q);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

}  // namespace rank3
