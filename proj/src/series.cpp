#include "rank3/series.hpp"

#include <stdexcept>

#include "rank3/errors.hpp"

namespace rank3 {

Series::Series(int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("series: negative truncation degree");
  coeffs_.assign(static_cast<std::size_t>(max_degree) + 1, 0);
}

Series::Series(std::vector<mpz_class> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw std::invalid_argument("series: no coefficients");
}

Series Series::one(int max_degree) {
  Series s(max_degree);
  s.coeffs_[0] = 1;
  return s;
}

Series Series::geometric(int max_degree, int step) {
  if (step < 1) throw std::invalid_argument("series: step must be positive");
  Series s(max_degree);
  for (int k = 0; k <= max_degree; k += step) s.coeffs_[k] = 1;
  return s;
}

Series& Series::operator+=(const Series& other) {
  if (other.max_degree() != max_degree()) throw std::invalid_argument("series: degree mismatch");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

Series& Series::operator*=(const mpz_class& scalar) {
  for (auto& x : coeffs_) x *= scalar;
  return *this;
}

Series& Series::add_multiple(const Series& other, const mpz_class& scalar) {
  if (other.max_degree() != max_degree()) throw std::invalid_argument("series: degree mismatch");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    mpz_addmul(coeffs_[k].get_mpz_t(), other.coeffs_[k].get_mpz_t(), scalar.get_mpz_t());
  }
  return *this;
}

Series& Series::multiply_by_geometric(int step) {
  if (step < 1) throw std::invalid_argument("series: step must be positive");
  for (std::size_t k = static_cast<std::size_t>(step); k < coeffs_.size(); ++k) {
    coeffs_[k] += coeffs_[k - step];
  }
  return *this;
}

Series& Series::divide_exact(const mpz_class& d) {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!mpz_divisible_p(coeffs_[k].get_mpz_t(), d.get_mpz_t())) {
      throw IntegralityError("series coefficient " + std::to_string(k) + " is not divisible by " +
                             d.get_str());
    }
    mpz_divexact(coeffs_[k].get_mpz_t(), coeffs_[k].get_mpz_t(), d.get_mpz_t());
  }
  return *this;
}

Series operator*(const Series& x, const Series& y) {
  if (x.max_degree() != y.max_degree()) throw std::invalid_argument("series: degree mismatch");
  const int n = x.max_degree();
  Series out(n);
  for (int i = 0; i <= n; ++i) {
    if (x.coeffs_[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) {
      mpz_addmul(out.coeffs_[i + j].get_mpz_t(), x.coeffs_[i].get_mpz_t(), y.coeffs_[j].get_mpz_t());
    }
  }
  return out;
}

}  // namespace rank3
