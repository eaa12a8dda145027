#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "rank3/pipeline.hpp"

namespace rank3 {

// f(a) = P_{a mod period}(a), each constituent a polynomial of degree at
// most `degree` with rational coefficients.
class Quasipolynomial {
 public:
  Quasipolynomial() = default;
  // constituents[k][i] is the coefficient of a^i in P_k.
  Quasipolynomial(int coatoms, int degree, int n0_guaranteed, int n0_observed,
                  std::vector<std::vector<mpq_class>> constituents);

  int coatoms() const { return coatoms_; }
  int period() const { return static_cast<int>(constituents_.size()); }
  int degree() const { return degree_; }
  int n0_guaranteed() const { return n0_guaranteed_; }
  // Smallest a from which evaluations matched the fitted table.
  int n0_observed() const { return n0_observed_; }
  const std::vector<std::vector<mpq_class>>& constituents() const { return constituents_; }

  mpq_class evaluate_rational(const mpz_class& a) const;
  // Throws IntegralityError if the value is not an integer. Arguments below
  // n0_observed are evaluated all the same; see in_agreement_range.
  mpz_class evaluate(const mpz_class& a) const;
  bool in_agreement_range(const mpz_class& a) const { return a >= n0_observed_; }

  // The coefficient of a^i as a function of a mod M, for the least such M
  // dividing the period.
  std::vector<mpq_class> coefficient_pattern(int power) const;

  std::string to_json() const;
  // Throws InputError on malformed documents.
  static Quasipolynomial from_json(std::string_view text);

  friend bool operator==(const Quasipolynomial&, const Quasipolynomial&) = default;

 private:
  int coatoms_ = 0;
  int degree_ = 0;
  int n0_guaranteed_ = 0;
  int n0_observed_ = 0;
  std::vector<std::vector<mpq_class>> constituents_;
};

// lcm(1, ..., c), the guaranteed quasiperiod.
int default_period(int coatoms);
// c - 1
int default_degree(int coatoms);
// c(c-1)/2
int default_threshold(int coatoms);

// Largest a the table must reach for a fit with these parameters.
int required_a_max(int period, int degree, int n0);

// Interpolates each residue class through its first degree+1 samples at
// a >= n0, then checks every other tabulated a >= n0. Throws ArityError if
// the table is too short and FitRejected at the first mismatch. The
// reported observed threshold is pushed below n0 for as long as the
// evaluations keep matching.
Quasipolynomial fit_quasipolynomial(const CountTable& values, int period, int degree, int n0);

}  // namespace rank3
