#pragma once

#include <gmpxx.h>

namespace rank3 {

// R(c, a) by direct enumeration of the atom/coatom cover graphs, independent
// of the connection-graph pipeline: bipartite graphs with no isolated
// vertex and no 4-cycle, up to relabeling within each class.
//
// One class is taken as points and the other's neighborhoods as a multiset
// of point sets that pairwise share at most one point and together cover
// every point. Multisets are built in nondecreasing order and pruned unless
// lexicographically minimal under point permutations. Both conditions are
// symmetric in the two classes, so the smaller class serves as points.
//
// Throws ResourceLimitError if c + a > 14.
mpz_class brute_force_count(int coatoms, int atoms);

// The same count with a fixed orientation: `sets` neighborhoods over
// `points` points. brute_force_count_oriented(c, a) enumerates atom
// neighborhoods over the coatoms.
mpz_class brute_force_count_oriented(int points, int sets);

}  // namespace rank3
