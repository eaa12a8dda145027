#include "rank3/polya.hpp"

#include <stdexcept>

namespace rank3 {

Series function_counting_series(const CycleIndex& z, int max_degree) {
  // Scale by the common denominator so the weighted sum stays integral,
  // then divide once at the end.
  const mpz_class denom = z.common_denominator();
  Series total(max_degree);
  for (const auto& term : z.terms()) {
    Series product = Series::one(max_degree);
    for (std::size_t j = 0; j < term.exponents.size(); ++j) {
      for (int k = 0; k < term.exponents[j]; ++k) {
        product.multiply_by_geometric(static_cast<int>(j) + 1);
      }
    }
    const mpq_class scaled = term.coefficient * denom;
    total.add_multiple(product, scaled.get_num());
  }
  return total.divide_exact(denom);
}

std::vector<mpz_class> group_balls(const CycleIndex& z, int boxes, int n) {
  if (boxes != z.degree()) {
    throw std::invalid_argument("group_balls: cycle index has degree " +
                                std::to_string(z.degree()) + ", not " + std::to_string(boxes));
  }
  return std::move(function_counting_series(z, n)).release();
}

}  // namespace rank3
