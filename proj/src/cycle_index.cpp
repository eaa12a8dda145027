#include "rank3/cycle_index.hpp"

#include <algorithm>
#include <map>

namespace rank3 {

namespace {

using Exponents = std::vector<int>;
using IntegerPolynomial = std::map<Exponents, mpz_class>;

mpz_class factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

// Partitions of q as multiplicity vectors: parts[j-1] = number of parts j.
void partitions(int remaining, int largest, Exponents& parts, std::vector<Exponents>& out) {
  if (remaining == 0) {
    out.push_back(parts);
    return;
  }
  for (int j = std::min(remaining, largest); j >= 1; --j) {
    ++parts[j - 1];
    partitions(remaining - j, j, parts, out);
    --parts[j - 1];
  }
}

// Sum over Sym(q) of the cycle monomials, with j-cycles written as
// (m*j)-cycles, times (q!)^(m-1).
IntegerPolynomial stretched_symmetric(int degree, int q, int m) {
  std::vector<Exponents> parts_list;
  Exponents parts(q, 0);
  partitions(q, q, parts, parts_list);

  mpz_class weight = 1;
  for (int i = 1; i < m; ++i) weight *= factorial(q);

  IntegerPolynomial out;
  for (const auto& p : parts_list) {
    // Number of permutations of q points with this cycle type.
    mpz_class count = factorial(q);
    Exponents e(degree, 0);
    for (int j = 1; j <= q; ++j) {
      if (p[j - 1] == 0) continue;
      mpz_class jpow;
      mpz_ui_pow_ui(jpow.get_mpz_t(), static_cast<unsigned long>(j),
                    static_cast<unsigned long>(p[j - 1]));
      count /= jpow * factorial(p[j - 1]);
      e[m * j - 1] += p[j - 1];
    }
    out[e] += weight * count;
  }
  return out;
}

IntegerPolynomial multiply(const IntegerPolynomial& x, const IntegerPolynomial& y) {
  IntegerPolynomial out;
  for (const auto& [ex, cx] : x) {
    for (const auto& [ey, cy] : y) {
      Exponents e = ex;
      for (std::size_t j = 0; j < e.size(); ++j) e[j] += ey[j];
      out[e] += cx * cy;
    }
  }
  return out;
}

CycleIndex averaged(int degree, const IntegerPolynomial& sum, std::uint64_t order) {
  std::vector<CycleMonomial> terms;
  terms.reserve(sum.size());
  const mpq_class denom = mpz_class(std::to_string(order));
  for (const auto& [e, count] : sum) {
    mpq_class coef = mpq_class(count) / denom;
    coef.canonicalize();
    terms.push_back(CycleMonomial{e, coef});
  }
  return CycleIndex(degree, std::move(terms));
}

}  // namespace

CycleIndex::CycleIndex(int degree, std::vector<CycleMonomial> terms) : degree_(degree) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& x, const auto& y) { return x.exponents < y.exponents; });
  for (auto& t : terms) {
    t.exponents.resize(degree, 0);
    if (!terms_.empty() && terms_.back().exponents == t.exponents) {
      terms_.back().coefficient += t.coefficient;
    } else {
      terms_.push_back(std::move(t));
    }
  }
  std::erase_if(terms_, [](const auto& t) { return t.coefficient == 0; });
}

mpz_class CycleIndex::common_denominator() const {
  mpz_class d = 1;
  for (const auto& t : terms_) {
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), t.coefficient.get_den_mpz_t());
  }
  return d;
}

std::string CycleIndex::to_string() const {
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    out += t.coefficient.get_str();
    for (std::size_t j = 0; j < t.exponents.size(); ++j) {
      if (t.exponents[j] == 0) continue;
      out += "*t" + std::to_string(j + 1);
      if (t.exponents[j] > 1) out += "^" + std::to_string(t.exponents[j]);
    }
  }
  return out.empty() ? "0" : out;
}

CycleIndex cycle_index(const PermGroup& group) {
  const int c = group.degree();
  const auto blocks = group.blocks();

  IntegerPolynomial total;
  for (const Permutation& t : group.transversal()) {
    // Follow the block permutation induced by t.
    std::vector<bool> done(blocks.size(), false);
    IntegerPolynomial product{{Exponents(c, 0), mpz_class(1)}};
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (done[b]) continue;
      int length = 0;
      std::size_t cur = b;
      do {
        done[cur] = true;
        ++length;
        const SubsetMask image = t.apply(blocks[cur]);
        cur = static_cast<std::size_t>(
            std::find(blocks.begin(), blocks.end(), image) - blocks.begin());
      } while (cur != b);
      product = multiply(product, stretched_symmetric(c, subset_size(blocks[b]), length));
    }
    for (auto& [e, count] : product) total[e] += count;
  }
  return averaged(c, total, group.order());
}

CycleIndex cycle_index_by_elements(const PermGroup& group) {
  const int c = group.degree();
  IntegerPolynomial total;
  group.for_each_element([&](const Permutation& g) {
    Exponents e = g.cycle_type();
    e.resize(c, 0);
    total[e] += 1;
  });
  return averaged(c, total, group.order());
}

}  // namespace rank3
