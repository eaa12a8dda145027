#include "rank3/quasipoly.hpp"

#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "rank3/errors.hpp"

namespace rank3 {

namespace {

using Json = nlohmann::ordered_json;

// Always "p/q", so the document reads uniformly.
std::string rational_text(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class parse_rational(const std::string& text) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw InputError("quasipolynomial: bad rational '" + text + "'");
  }
  q.canonicalize();
  return q;
}

// Solves the Vandermonde system sum_i c_i x_k^i = y_k exactly.
std::vector<mpq_class> interpolate(const std::vector<mpz_class>& xs,
                                   const std::vector<mpz_class>& ys) {
  const std::size_t n = xs.size();
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n + 1));
  for (std::size_t r = 0; r < n; ++r) {
    mpq_class power = 1;
    for (std::size_t i = 0; i < n; ++i) {
      m[r][i] = power;
      power *= xs[r];
    }
    m[r][n] = ys[r];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (m[pivot][col] == 0) ++pivot;  // distinct nodes: never runs off the end
    std::swap(m[pivot], m[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const mpq_class f = m[r][col] / m[col][col];
      for (std::size_t i = col; i <= n; ++i) m[r][i] -= f * m[col][i];
    }
  }
  std::vector<mpq_class> coeffs(n);
  for (std::size_t i = 0; i < n; ++i) coeffs[i] = m[i][n] / m[i][i];
  return coeffs;
}

}  // namespace

Quasipolynomial::Quasipolynomial(int coatoms, int degree, int n0_guaranteed, int n0_observed,
                                 std::vector<std::vector<mpq_class>> constituents)
    : coatoms_(coatoms),
      degree_(degree),
      n0_guaranteed_(n0_guaranteed),
      n0_observed_(n0_observed),
      constituents_(std::move(constituents)) {
  if (constituents_.empty()) throw std::invalid_argument("quasipolynomial: empty period");
  if (degree_ < 0) throw std::invalid_argument("quasipolynomial: negative degree");
  for (auto& p : constituents_) {
    if (p.size() > static_cast<std::size_t>(degree_) + 1) {
      throw std::invalid_argument("quasipolynomial: constituent exceeds the degree");
    }
    p.resize(static_cast<std::size_t>(degree_) + 1, 0);
  }
}

mpq_class Quasipolynomial::evaluate_rational(const mpz_class& a) const {
  mpz_class k;
  mpz_fdiv_r_ui(k.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(period()));
  const auto& p = constituents_[k.get_ui()];
  mpq_class value = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) value = value * a + *it;
  return value;
}

mpz_class Quasipolynomial::evaluate(const mpz_class& a) const {
  const mpq_class v = evaluate_rational(a);
  if (v.get_den() != 1) {
    throw IntegralityError("quasipolynomial value at a = " + a.get_str() + " is " + v.get_str() +
                           ", not an integer");
  }
  return v.get_num();
}

std::vector<mpq_class> Quasipolynomial::coefficient_pattern(int power) const {
  const int n = period();
  for (int m = 1; m <= n; ++m) {
    if (n % m != 0) continue;
    bool periodic = true;
    for (int k = m; k < n && periodic; ++k) {
      periodic = constituents_[k][power] == constituents_[k % m][power];
    }
    if (periodic) {
      std::vector<mpq_class> out;
      for (int k = 0; k < m; ++k) out.push_back(constituents_[k][power]);
      return out;
    }
  }
  return {};
}

std::string Quasipolynomial::to_json() const {
  Json doc;
  doc["c"] = coatoms_;
  doc["period"] = period();
  doc["degree"] = degree_;
  doc["n0_guaranteed"] = n0_guaranteed_;
  doc["n0_observed"] = n0_observed_;
  Json constituents = Json::array();
  for (const auto& p : constituents_) {
    Json row = Json::array();
    for (const auto& q : p) row.push_back(rational_text(q));
    constituents.push_back(std::move(row));
  }
  doc["constituents"] = std::move(constituents);
  // Leading terms first, each as its shortest repeating pattern over a mod M.
  Json summary = Json::array();
  for (int i = degree_; i >= 0; --i) {
    Json values = Json::array();
    for (const auto& q : coefficient_pattern(i)) values.push_back(rational_text(q));
    Json term;
    term["degree"] = i;
    term["period"] = values.size();
    term["values"] = std::move(values);
    summary.push_back(std::move(term));
  }
  doc["summary"] = std::move(summary);
  return doc.dump(2) + "\n";
}

Quasipolynomial Quasipolynomial::from_json(std::string_view text) {
  try {
    const Json doc = Json::parse(text);
    const int degree = doc.at("degree").get<int>();
    const int period = doc.at("period").get<int>();
    std::vector<std::vector<mpq_class>> constituents;
    for (const auto& row : doc.at("constituents")) {
      std::vector<mpq_class> p;
      for (const auto& q : row) p.push_back(parse_rational(q.get<std::string>()));
      constituents.push_back(std::move(p));
    }
    if (static_cast<int>(constituents.size()) != period) {
      throw InputError("quasipolynomial: period does not match the constituent count");
    }
    return Quasipolynomial(doc.at("c").get<int>(), degree, doc.at("n0_guaranteed").get<int>(),
                           doc.at("n0_observed").get<int>(), std::move(constituents));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("quasipolynomial: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

int default_period(int coatoms) {
  int n = 1;
  for (int k = 2; k <= coatoms; ++k) n = std::lcm(n, k);
  return n;
}

int default_degree(int coatoms) { return coatoms - 1; }

int default_threshold(int coatoms) { return coatoms * (coatoms - 1) / 2; }

int required_a_max(int period, int degree, int n0) { return n0 + period * (degree + 1) - 1; }

Quasipolynomial fit_quasipolynomial(const CountTable& values, int period, int degree, int n0) {
  if (period < 1 || degree < 0 || n0 < 0) {
    throw std::invalid_argument("fit: period must be positive, degree and threshold nonnegative");
  }
  const int need = required_a_max(period, degree, n0);
  if (values.a_max() < need) {
    throw ArityError(static_cast<std::size_t>(need),
                     static_cast<std::size_t>(std::max(values.a_max(), 0)));
  }

  std::vector<std::vector<mpq_class>> constituents(period);
  for (int k = 0; k < period; ++k) {
    int first = n0 + ((k - n0) % period + period) % period;
    std::vector<mpz_class> xs;
    std::vector<mpz_class> ys;
    for (int i = 0; i <= degree; ++i) {
      const int a = first + i * period;
      xs.emplace_back(a);
      ys.push_back(values[a]);
    }
    constituents[k] = interpolate(xs, ys);
  }

  Quasipolynomial q(values.coatoms(), degree, n0, n0, std::move(constituents));
  for (int a = n0; a <= values.a_max(); ++a) {
    if (q.evaluate_rational(a) != values[a]) throw FitRejected(static_cast<std::size_t>(a));
  }
  int observed = n0;
  while (observed > 0 && q.evaluate_rational(observed - 1) == values[observed - 1]) --observed;
  return Quasipolynomial(values.coatoms(), degree, n0, observed, q.constituents());
}

}  // namespace rank3
