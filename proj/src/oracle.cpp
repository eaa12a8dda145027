#include "rank3/oracle.hpp"

#include <algorithm>
#include <array>
#include <vector>

#include "rank3/errors.hpp"
#include "rank3/subset.hpp"

namespace rank3 {

namespace {

constexpr int kMaxTotal = 14;

class LatticeEnumerator {
 public:
  LatticeEnumerator(int points, int sets) : points_(points), sets_(sets) {
    for (SubsetMask m = 1; m <= full_subset(points_); ++m) masks_.push_back(m);
  }

  mpz_class count() {
    extend(0, 0);
    return found_;
  }

 private:
  void extend(std::size_t first, SubsetMask covered) {
    if (static_cast<int>(chosen_.size()) == sets_) {
      if (covered == full_subset(points_)) ++found_;
      return;
    }
    for (std::size_t i = first; i < masks_.size(); ++i) {
      const SubsetMask t = masks_[i];
      if (subset_size(t) >= 2) {
        bool ok = true;
        for (SubsetMask u : chosen_) {
          if (subset_size(t & u) > 1) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
      }
      chosen_.push_back(t);
      if (is_minimal()) extend(i, covered | t);
      chosen_.pop_back();
    }
  }

  // Whether no point permutation maps the chosen multiset to a
  // lexicographically smaller sorted sequence. Points with the same
  // membership pattern are interchangeable, so only the image set of each
  // pattern class matters; those are enumerated as ordered set partitions.
  bool is_minimal() {
    const std::size_t k = chosen_.size();
    std::array<std::uint32_t, kMaxCoatoms> pattern{};
    for (int v = 0; v < points_; ++v) {
      for (std::size_t i = 0; i < k; ++i) {
        if (contains(chosen_[i], v)) pattern[v] |= 1U << i;
      }
    }
    classes_.clear();
    for (int v = 0; v < points_; ++v) {
      if (pattern[v] == 0) continue;
      auto it = std::find_if(classes_.begin(), classes_.end(),
                             [&](const auto& cls) { return cls.first == pattern[v]; });
      if (it == classes_.end()) {
        classes_.emplace_back(pattern[v], 1);
      } else {
        ++it->second;
      }
    }
    images_.assign(k, 0);
    return !assign(0, 0);
  }

  // Returns true as soon as some assignment yields a smaller sequence.
  bool assign(std::size_t cls, SubsetMask used) {
    if (cls == classes_.size()) {
      sorted_ = images_;
      std::sort(sorted_.begin(), sorted_.end());
      return sorted_ < chosen_;
    }
    const auto [pattern, size] = classes_[cls];
    const SubsetMask free = full_subset(points_) & ~used;
    // Visit every size-`size` subset of the free points.
    for (SubsetMask s = free; ; s = (s - 1) & free) {
      if (subset_size(s) == size) {
        for (std::size_t i = 0; i < images_.size(); ++i) {
          if ((pattern >> i) & 1U) images_[i] |= s;
        }
        const bool smaller = assign(cls + 1, used | s);
        for (std::size_t i = 0; i < images_.size(); ++i) {
          if ((pattern >> i) & 1U) images_[i] &= ~s;
        }
        if (smaller) return true;
      }
      if (s == 0) break;
    }
    return false;
  }

  int points_;
  int sets_;
  std::vector<SubsetMask> masks_;
  std::vector<SubsetMask> chosen_;
  std::vector<std::pair<std::uint32_t, int>> classes_;
  std::vector<SubsetMask> images_;
  std::vector<SubsetMask> sorted_;
  mpz_class found_ = 0;
};

}  // namespace

mpz_class brute_force_count_oriented(int points, int sets) {
  if (points < 1 || sets < 1) return 0;
  if (points + sets > kMaxTotal || points > kMaxCoatoms) {
    throw ResourceLimitError("brute-force count is limited to c + a <= " +
                             std::to_string(kMaxTotal));
  }
  return LatticeEnumerator(points, sets).count();
}

mpz_class brute_force_count(int coatoms, int atoms) {
  // Few points means few candidate sets and cheap minimality tests.
  return coatoms <= atoms ? brute_force_count_oriented(coatoms, atoms)
                          : brute_force_count_oriented(atoms, coatoms);
}

}  // namespace rank3
