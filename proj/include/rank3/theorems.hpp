#pragma once

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "rank3/pipeline.hpp"
#include "rank3/quasipoly.hpp"

namespace rank3 {

// Distributions of n identical balls into: two identical boxes (p2), three
// identical boxes (p3), two identical boxes plus a distinguished one (p21).
// Zero for n < 0.
enum class PartitionKind { p2, p3, p21 };

mpz_class closed_form_p(PartitionKind kind, long n);

// floor((3/4)a^2 + (1/3)a + 1/4)
mpz_class r3_floor_formula(long a);

// 2 p3(a-3) + p3(a-1) + 2 p21(a-2): one term per connection graph of three
// coatoms, grouped by symmetry.
mpz_class r3_graph_sum(long a);

// The known closed forms of R(c, .) for c = 2..5, as quasipolynomials
// with their stated validity thresholds (0 for c <= 4, 3 for c = 5).
Quasipolynomial known_quasipolynomial(int coatoms);

// Known leading coefficients of R(c, .), highest power first, for
// c = 2..7.
std::vector<mpq_class> known_leading_coefficients(int coatoms);

struct TheoremCheck {
  std::string name;
  bool passed = false;
  std::string detail;  // range covered, or the first failure
};

// Checks every closed form whose table is present (keyed by c) over the
// table's range:
//   R(2,a) = a                                 a >= 1
//   R(3,a) floor formula and graph sum         a >= 1
//   R(4,a) quasipolynomial                     a >= 0
//   R(5,a) quasipolynomial                     a >= 3
//   R(5,a) quasipolynomial at a = 0,1,2 gives 35, 9, 6, which differ from
//   the table's 0, 1, 5
std::vector<TheoremCheck> verify_theorems(const std::map<int, CountTable>& tables);

}  // namespace rank3
