#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "rank3/perm_group.hpp"

namespace rank3 {

// One term coefficient * t_1^m_1 * ... * t_c^m_c; exponents[j-1] = m_j.
struct CycleMonomial {
  std::vector<int> exponents;
  mpq_class coefficient;

  friend bool operator==(const CycleMonomial&, const CycleMonomial&) = default;
};

// Cycle index of a permutation group: the average over its elements of the
// cycle-type monomials. Terms are sorted by exponent vector with like terms
// merged, so equal polynomials compare (and print) equal.
class CycleIndex {
 public:
  CycleIndex() = default;
  // Merges like terms and drops zero coefficients.
  CycleIndex(int degree, std::vector<CycleMonomial> terms);

  int degree() const { return degree_; }
  const std::vector<CycleMonomial>& terms() const { return terms_; }

  // Lowest common denominator of the coefficients.
  mpz_class common_denominator() const;

  // e.g. "1/2*t1^4 + 1/2*t2^2"; doubles as the memo key.
  std::string to_string() const;

  friend bool operator==(const CycleIndex&, const CycleIndex&) = default;

 private:
  int degree_ = 0;
  std::vector<CycleMonomial> terms_;
};

// Sums over the twin-block structure without listing elements: a cycle of m
// blocks of size q contributes (q!)^(m-1) * sum over cycle types of Sym(q),
// with every j-cycle stretched to length m*j.
CycleIndex cycle_index(const PermGroup& group);

// Same polynomial by visiting every element. Slow; for cross-checks.
CycleIndex cycle_index_by_elements(const PermGroup& group);

}  // namespace rank3
