#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "rank3/bigraph.hpp"
#include "rank3/cycle_index.hpp"
#include "rank3/perm_group.hpp"
#include "rank3/series.hpp"

namespace rank3 {

// R(c, a) for a = 0..a_max.
class CountTable {
 public:
  CountTable() = default;
  CountTable(int coatoms, std::vector<mpz_class> values);

  int coatoms() const { return coatoms_; }
  int a_max() const { return static_cast<int>(values_.size()) - 1; }
  const mpz_class& operator[](int a) const { return values_[a]; }
  std::span<const mpz_class> values() const { return values_; }

  // Header "a,R", then one row per a in plain decimal.
  void write_csv(std::ostream& out) const;
  void write_csv(const std::filesystem::path& path) const;
  // Rows must be a = 0, 1, 2, ... in order. Throws InputError otherwise.
  static CountTable read_csv(std::istream& in, int coatoms);
  static CountTable read_csv(const std::filesystem::path& path, int coatoms);

  friend bool operator==(const CountTable&, const CountTable&) = default;

 private:
  int coatoms_ = 0;
  std::vector<mpz_class> values_;
};

struct MemoStats {
  std::uint64_t graphs_processed = 0;
  std::uint64_t distinct_cycle_indices = 0;
  std::uint64_t trivial_action = 0;

  friend bool operator==(const MemoStats&, const MemoStats&) = default;
};

// Accumulates R(c, a) = sum over graphs of B_G(a - r - s), where B_G is the
// ball-distribution series of the graph's automorphism group on the coatoms.
//
// With memoization each graph only bumps a counter keyed by (cycle index,
// r + s); every distinct cycle index gets one series, and the table is the
// weighted sum of shifted series. Without it each graph's series is
// computed and added directly.
class LatticeCounter {
 public:
  LatticeCounter(int coatoms, int a_max, bool memoize = true);

  // Throws InputError if g has the wrong coatom count or is not a valid
  // connection graph.
  void add(const BicoloredGraph& g);
  // Same, with the automorphism group already known.
  void add(const BicoloredGraph& g, const PermGroup& automorphisms);

  // Folds another counter for the same (c, a_max, memoize) into this one.
  void merge(LatticeCounter&& other);

  CountTable table() const;
  MemoStats stats() const;

 private:
  struct Entry {
    CycleIndex index;
    std::map<int, std::uint64_t> shifts;  // r + s -> number of graphs
    mutable std::optional<Series> series;
  };

  void check(const BicoloredGraph& g) const;

  int coatoms_;
  int a_max_;
  bool memoize_;
  std::map<std::string, Entry> memo_;
  std::vector<mpz_class> direct_;
  std::uint64_t graphs_ = 0;
  std::uint64_t trivial_ = 0;
};

// Counts over a complete isomorph-free graph list for c coatoms.
CountTable count_lattices(int coatoms, int a_max, std::span<const BicoloredGraph> graphs,
                          int jobs = 1, MemoStats* stats = nullptr);

// Generates the graphs on the fly. Only classes with r <= a_max can reach
// the table, so generation stops there; the stats cover generated classes.
CountTable count_lattices(int coatoms, int a_max, int jobs = 1, MemoStats* stats = nullptr);

}  // namespace rank3
