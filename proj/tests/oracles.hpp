#pragma once

// Slow, obviously-correct reference implementations used only by tests.

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "rank3/bigraph.hpp"
#include "rank3/permutation.hpp"
#include "rank3/subset.hpp"

namespace oracle {

using rank3::BicoloredGraph;
using rank3::Permutation;
using rank3::SubsetMask;

inline std::vector<SubsetMask> mapped_sorted(std::span<const SubsetMask> sets, const Permutation& p) {
  std::vector<SubsetMask> out;
  for (SubsetMask m : sets) out.push_back(p.apply(m));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  std::vector<Permutation> out;
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// Minimum sorted neighborhood list over all coatom relabelings.
inline std::vector<SubsetMask> min_form(const BicoloredGraph& g) {
  std::vector<SubsetMask> best;
  bool first = true;
  for (const auto& p : all_permutations(g.coatom_count())) {
    auto code = mapped_sorted(g.neighborhoods(), p);
    if (first || code < best) best = std::move(code);
    first = false;
  }
  return best;
}

inline std::vector<Permutation> automorphisms(const BicoloredGraph& g) {
  const auto base = mapped_sorted(g.neighborhoods(), Permutation::identity(g.coatom_count()));
  std::vector<Permutation> out;
  for (const auto& p : all_permutations(g.coatom_count())) {
    if (mapped_sorted(g.neighborhoods(), p) == base) out.push_back(p);
  }
  return out;
}

// Every labeled connection graph on c coatoms (connector order ignored).
inline std::vector<BicoloredGraph> labeled_families(int c) {
  std::vector<SubsetMask> candidates;
  for (SubsetMask m = 0; m <= rank3::full_subset(c); ++m) {
    if (rank3::subset_size(m) >= 2) candidates.push_back(m);
  }
  std::vector<BicoloredGraph> out;
  std::vector<SubsetMask> chosen;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == candidates.size()) {
      out.emplace_back(c, chosen);
      return;
    }
    self(self, i + 1);
    for (SubsetMask u : chosen) {
      if (rank3::subset_size(u & candidates[i]) > 1) return;
    }
    chosen.push_back(candidates[i]);
    self(self, i + 1);
    chosen.pop_back();
  };
  rec(rec, 0);
  return out;
}

// Orbits of c-tuples of nonnegative integers summing to n, under a group
// given by its elements: counts tuples that are lexicographically least in
// their orbit.
inline long orbit_count(const std::vector<Permutation>& group, int c, int n) {
  long count = 0;
  std::vector<int> tuple(c, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == c - 1) {
      tuple[pos] = left;
      bool least = true;
      std::vector<int> image(c);
      for (const auto& g : group) {
        for (int i = 0; i < c; ++i) image[g(i)] = tuple[i];
        if (image < tuple) {
          least = false;
          break;
        }
      }
      if (least) ++count;
      return;
    }
    for (int k = 0; k <= left; ++k) {
      tuple[pos] = k;
      self(self, pos + 1, left - k);
    }
  };
  if (c == 0) return n == 0 ? 1 : 0;
  rec(rec, 0, n);
  return count;
}

// Partitions of n into at most k parts, by direct enumeration.
inline long partitions_at_most(int n, int k) {
  auto rec = [&](auto&& self, int left, int parts, int largest) -> long {
    if (left == 0) return 1;
    if (parts == 0) return 0;
    long total = 0;
    for (int p = std::min(left, largest); p >= 1; --p) total += self(self, left - p, parts - 1, p);
    return total;
  };
  return rec(rec, n, k, n);
}

inline mpz_class binomial(long n, long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

}  // namespace oracle
