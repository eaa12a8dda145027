#pragma once

#include <span>
#include <vector>

#include <gmpxx.h>

namespace rank3 {

// Power series with integer coefficients, truncated after x^max_degree.
// All arithmetic truncates at the same degree.
class Series {
 public:
  Series() = default;
  // The zero series.
  explicit Series(int max_degree);
  explicit Series(std::vector<mpz_class> coefficients);

  static Series one(int max_degree);
  // 1 + x^step + x^(2 step) + ... up to max_degree: the figure-counting
  // polynomial with x replaced by x^step.
  static Series geometric(int max_degree, int step);

  int max_degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const mpz_class& operator[](int k) const { return coeffs_[k]; }
  mpz_class& operator[](int k) { return coeffs_[k]; }
  std::span<const mpz_class> coefficients() const { return coeffs_; }
  std::vector<mpz_class> release() && { return std::move(coeffs_); }

  Series& operator+=(const Series& other);
  Series& operator*=(const mpz_class& scalar);
  // this += scalar * other
  Series& add_multiple(const Series& other, const mpz_class& scalar);

  // Multiplies by 1/(1 - x^step) in place, i.e. by the truncated geometric
  // series. A running sum along each residue class of step.
  Series& multiply_by_geometric(int step);

  // Divides every coefficient by d; throws IntegralityError if any
  // coefficient is not a multiple of d.
  Series& divide_exact(const mpz_class& d);

  // Truncated schoolbook product; both operands must share max_degree.
  friend Series operator*(const Series& x, const Series& y);
  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<mpz_class> coeffs_;
};

}  // namespace rank3
