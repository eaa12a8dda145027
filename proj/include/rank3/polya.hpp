#pragma once

#include <vector>

#include <gmpxx.h>

#include "rank3/cycle_index.hpp"
#include "rank3/series.hpp"

namespace rank3 {

// B(x) = Z(A(x), A(x^2), ..., A(x^c)) truncated after x^max_degree, with
// A(x) = 1 + x + x^2 + ...; coefficient n counts the orbits of
// distributions of n identical balls into the c boxes. Throws
// IntegralityError if the averaged series is not integral, which would mean
// the cycle index is wrong.
Series function_counting_series(const CycleIndex& z, int max_degree);

// Coefficients 0..n of function_counting_series. `boxes` must equal the
// degree of z.
std::vector<mpz_class> group_balls(const CycleIndex& z, int boxes, int n);

}  // namespace rank3
