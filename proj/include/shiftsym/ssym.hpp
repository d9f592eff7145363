#pragma once

// The ring R = Q[Q1, Q2, Q3, ...] and its extension by
// Q2^(-1/2). Elements are sparse polynomials with exact rational
// coefficients; only Q2 may carry a half-integer or negative exponent.

#include "shiftsym/partitions.hpp"
#include "shiftsym/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace shiftsym {

// Product of generators Q_k^{e_k}. Exponents are stored doubled so that the
// half-integer powers of Q2 stay exact; trailing zero slots are trimmed.
class Monomial {
 public:
  Monomial() = default;

  // Q_k^(twice_exponent / 2). k = 0 yields the unit monomial.
  static Monomial generator(int k, int twice_exponent = 2);

  int twice_exponent(int k) const;
  Rational exponent(int k) const { return ratio(twice_exponent(k), 2); }
  int max_index() const { return static_cast<int>(twice_.size()); }
  bool is_one() const { return twice_.empty(); }

  // Weight sum_k k * e_k. Always integral under the Q2-only half-exponent rule.
  int weight() const;
  bool contains_q1() const { return twice_exponent(1) != 0; }
  // True when every exponent is a non-negative integer.
  bool is_polynomial() const;

  Monomial with_twice_exponent(int k, int twice_exponent) const;
  Monomial operator*(const Monomial& other) const;

  // (k, twice exponent) pairs for every generator present, ascending k.
  std::vector<std::pair<int, int>> support() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  // Weight-major, then lexicographic on the (k, exponent) pair list.
  friend bool operator<(const Monomial& a, const Monomial& b);

 private:
  void trim();
  std::vector<int> twice_;  // twice_[k - 1] = 2 * exponent of Q_k
};

// Element of R[Q2^(-1/2)].
class SSPoly {
 public:
  using Terms = std::map<Monomial, Rational>;

  SSPoly() = default;
  SSPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  SSPoly(int constant) : SSPoly(Rational(constant)) {}  // NOLINT
  SSPoly(const Monomial& m, const Rational& coeff = 1);

  // Q_k (Q_0 = 1).
  static SSPoly q(int k);
  // Q2^(twice_exponent / 2).
  static SSPoly q2_power(int twice_exponent);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;

  // Adds coeff * m in place, dropping the term if it cancels.
  void add_term(const Monomial& m, const Rational& coeff);

  SSPoly& operator+=(const SSPoly& other);
  SSPoly& operator-=(const SSPoly& other);
  SSPoly& operator*=(const SSPoly& other);
  SSPoly& operator*=(const Rational& c);
  friend SSPoly operator+(SSPoly a, const SSPoly& b) { return a += b; }
  friend SSPoly operator-(SSPoly a, const SSPoly& b) { return a -= b; }
  friend SSPoly operator*(const SSPoly& a, const SSPoly& b);
  friend SSPoly operator*(SSPoly a, const Rational& c) { return a *= c; }
  friend SSPoly operator*(const Rational& c, SSPoly a) { return a *= c; }
  SSPoly operator-() const { return *this * Rational(-1); }
  friend bool operator==(const SSPoly&, const SSPoly&) = default;

  // Non-negative integer power.
  SSPoly pow(int e) const;

  bool contains_q1() const;
  // All exponents are non-negative integers (an element of R).
  bool is_polynomial() const;
  // Element of Lambda* = Q[Q2, Q3, ...]: polynomial and Q1-free.
  bool in_lambda_star() const { return is_polynomial() && !contains_q1(); }
  // Weight when homogeneous; throws std::invalid_argument otherwise or on 0.
  int homogeneous_weight() const;
  bool is_homogeneous() const;

  // Partial derivative with respect to Q_k (formal power rule).
  SSPoly partial(int k) const;

 private:
  Terms terms_;
};

// Homogeneous components keyed by weight; their sum is f.
std::map<int, SSPoly> weight_components(const SSPoly& f);

// Q1 -> 0.
SSPoly pr(const SSPoly& f);

// Coefficient beta_k of z^(k-1) in 1/(2 sinh(z/2)).
Rational beta(int k);

// Q_k(lambda).
Rational eval_qk(int k, const Partition& lambda);

// f(lambda) for f in R; Q1-terms vanish on partitions. Throws
// std::invalid_argument for negative or half-integer exponents.
Rational eval(const SSPoly& f, const Partition& lambda);

// Evaluates f on many partitions, sharing the generator values.
std::vector<Rational> eval_many(const SSPoly& f, const std::vector<Partition>& partitions);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position)
  {
  }
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Parses the ASCII expression grammar, e.g. "27/4*Q2^2 + 27/2*Q4" or "Q2^(3/2)".
SSPoly parse(std::string_view text);

// Deterministic textual form; parse(format(f)) == f.
std::string format(const SSPoly& f);
std::string format(const Monomial& m);

}  // namespace shiftsym
