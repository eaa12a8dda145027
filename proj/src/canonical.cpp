#include "rank3/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace rank3 {

CanonicalForm::CanonicalForm(int coatom_count, std::vector<SubsetMask> sorted_neighborhoods)
    : coatoms_(coatom_count), neighborhoods_(std::move(sorted_neighborhoods)) {
  std::sort(neighborhoods_.begin(), neighborhoods_.end());
}

std::string CanonicalForm::bytes() const {
  std::string out;
  out.reserve(3 + 2 * neighborhoods_.size());
  out.push_back(static_cast<char>(coatoms_));
  out.push_back(static_cast<char>((neighborhoods_.size() >> 8) & 0xff));
  out.push_back(static_cast<char>(neighborhoods_.size() & 0xff));
  for (SubsetMask m : neighborhoods_) {
    out.push_back(static_cast<char>((m >> 8) & 0xff));
    out.push_back(static_cast<char>(m & 0xff));
  }
  return out;
}

std::strong_ordering operator<=>(const CanonicalForm& x, const CanonicalForm& y) {
  if (auto cmp = x.coatoms_ <=> y.coatoms_; cmp != 0) return cmp;
  if (auto cmp = x.neighborhoods_.size() <=> y.neighborhoods_.size(); cmp != 0) return cmp;
  return x.neighborhoods_ <=> y.neighborhoods_;
}

namespace {

// Colors are cell start positions: a vertex colored p sits in the cell that
// occupies positions p, p+1, ... of the ordered partition.
using Colors = std::array<std::uint8_t, kMaxCoatoms>;

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= h >> 31;
  h *= 0xbf58476d1ce4e5b9ULL;
  h ^= h >> 29;
  return h;
}

SubsetMask swap_points(SubsetMask m, int u, int v) {
  if (contains(m, u) != contains(m, v)) m ^= (SubsetMask{1} << u) | (SubsetMask{1} << v);
  return m;
}

class Search {
 public:
  explicit Search(const BicoloredGraph& g)
      : c_(g.coatom_count()), sets_(g.neighborhoods().begin(), g.neighborhoods().end()) {
    incident_.resize(c_);
    for (std::size_t t = 0; t < sets_.size(); ++t) {
      for (int v = 0; v < c_; ++v) {
        if (contains(sets_[t], v)) incident_[v].push_back(static_cast<int>(t));
      }
    }
    types_.resize(sets_.size());
    code_.resize(sets_.size());
    find_twins();
  }

  CanonicalLabeling run() {
    Colors root{};
    descend(root);

    const Permutation first = to_permutation(best_leaves_.front());
    const Permutation first_inv = first.inverse();
    std::vector<Permutation> transversal;
    transversal.reserve(best_leaves_.size());
    for (const Colors& leaf : best_leaves_) transversal.push_back(first_inv * to_permutation(leaf));

    return CanonicalLabeling{CanonicalForm(c_, best_code_), first,
                             PermGroup(c_, blocks_, std::move(transversal))};
  }

 private:
  // u and v are twins when the transposition (u v) preserves the family of
  // neighborhoods. Twins form an equivalence relation.
  void find_twins() {
    std::vector<SubsetMask> sorted = sets_;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> root(c_);
    std::iota(root.begin(), root.end(), 0);
    std::vector<SubsetMask> swapped(sets_.size());
    for (int v = 1; v < c_; ++v) {
      for (int u = 0; u < v; ++u) {
        if (root[u] != u) continue;
        for (std::size_t t = 0; t < sorted.size(); ++t) swapped[t] = swap_points(sorted[t], u, v);
        std::sort(swapped.begin(), swapped.end());
        if (swapped == sorted) {
          root[v] = u;
          break;
        }
      }
    }
    block_of_.fill(-1);
    for (int v = 0; v < c_; ++v) {
      const int r = root[v];
      if (block_of_[r] < 0) {
        block_of_[r] = static_cast<int>(blocks_.size());
        blocks_.push_back(0);
      }
      block_of_[v] = block_of_[r];
      blocks_[block_of_[v]] |= SubsetMask{1} << v;
    }
  }

  int count_cells(const Colors& colors) const {
    std::array<bool, kMaxCoatoms> start{};
    int cells = 0;
    for (int v = 0; v < c_; ++v) {
      if (!start[colors[v]]) {
        start[colors[v]] = true;
        ++cells;
      }
    }
    return cells;
  }

  // Splits cells until equitable w.r.t. the connector types; returns the
  // number of cells. Equal-keyed vertices keep sharing a cell, and cells are
  // ordered by (old cell, key), so the result is isomorphism invariant.
  int refine(Colors& colors) {
    int cells = count_cells(colors);
    std::array<std::uint64_t, kMaxCoatoms> signature{};
    std::array<int, kMaxCoatoms> order{};
    std::array<std::uint8_t, kMaxCoatoms> members{};
    while (cells < c_) {
      for (std::size_t t = 0; t < sets_.size(); ++t) {
        int n = 0;
        for (SubsetMask m = sets_[t]; m != 0; m &= m - 1) members[n++] = colors[std::countr_zero(m)];
        std::sort(members.begin(), members.begin() + n);
        std::uint64_t h = static_cast<std::uint64_t>(n);
        for (int i = 0; i < n; ++i) h = mix(h, members[i]);
        types_[t] = h;
      }
      for (int v = 0; v < c_; ++v) {
        scratch_.clear();
        for (int t : incident_[v]) scratch_.push_back(types_[t]);
        std::sort(scratch_.begin(), scratch_.end());
        std::uint64_t h = scratch_.size();
        for (std::uint64_t x : scratch_) h = mix(h, x);
        signature[v] = h;
      }
      std::iota(order.begin(), order.begin() + c_, 0);
      std::sort(order.begin(), order.begin() + c_, [&](int x, int y) {
        if (colors[x] != colors[y]) return colors[x] < colors[y];
        if (signature[x] != signature[y]) return signature[x] < signature[y];
        return x < y;
      });
      Colors next{};
      int next_cells = 0;
      std::uint8_t start = 0;
      for (int i = 0; i < c_; ++i) {
        const int v = order[i];
        if (i == 0 || colors[v] != colors[order[i - 1]] || signature[v] != signature[order[i - 1]]) {
          start = static_cast<std::uint8_t>(i);
          ++next_cells;
        }
        next[v] = start;
      }
      colors = next;
      if (next_cells == cells) break;
      cells = next_cells;
    }
    return cells;
  }

  void descend(Colors colors) {
    if (refine(colors) == c_) {
      leaf(colors);
      return;
    }
    std::array<int, kMaxCoatoms> size{};
    for (int v = 0; v < c_; ++v) ++size[colors[v]];
    int target = 0;
    while (size[target] < 2) ++target;

    for (int v = 0; v < c_; ++v) {
      if (colors[v] != target) continue;
      bool twin_pending = false;
      for (int u = 0; u < v; ++u) {
        if (colors[u] == target && block_of_[u] == block_of_[v]) {
          twin_pending = true;
          break;
        }
      }
      if (twin_pending) continue;

      Colors child = colors;
      for (int w = 0; w < c_; ++w) {
        if (colors[w] == target) child[w] = static_cast<std::uint8_t>(target + 1);
      }
      child[v] = static_cast<std::uint8_t>(target);
      descend(child);
    }
  }

  void leaf(const Colors& colors) {
    for (std::size_t t = 0; t < sets_.size(); ++t) {
      SubsetMask image = 0;
      for (SubsetMask m = sets_[t]; m != 0; m &= m - 1) {
        image |= SubsetMask{1} << colors[std::countr_zero(m)];
      }
      code_[t] = image;
    }
    std::sort(code_.begin(), code_.end());
    if (best_leaves_.empty() || code_ < best_code_) {
      best_code_ = code_;
      best_leaves_.assign(1, colors);
    } else if (code_ == best_code_) {
      best_leaves_.push_back(colors);
    }
  }

  Permutation to_permutation(const Colors& colors) const {
    return Permutation(std::vector<int>(colors.begin(), colors.begin() + c_));
  }

  int c_;
  std::vector<SubsetMask> sets_;
  std::vector<std::vector<int>> incident_;
  std::array<int, kMaxCoatoms> block_of_{};
  std::vector<SubsetMask> blocks_;

  std::vector<std::uint64_t> types_;
  std::vector<std::uint64_t> scratch_;
  std::vector<SubsetMask> code_;
  std::vector<SubsetMask> best_code_;
  std::vector<Colors> best_leaves_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const BicoloredGraph& g) { return Search(g).run(); }

CanonicalForm canonical_form(const BicoloredGraph& g) { return canonical_labeling(g).form; }

PermGroup automorphism_group_on_coatoms(const BicoloredGraph& g) {
  return canonical_labeling(g).automorphisms;
}

}  // namespace rank3
