#pragma once

#include "shiftsym/rational.hpp"
#include "shiftsym/ssym.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace shiftsym {

inline constexpr int kDefaultOrder = 30;

// c_0 + c_1 q + ... + c_N q^N + O(q^{N+1}).
class QSeries {
 public:
  QSeries() : QSeries(0) {}
  explicit QSeries(int order);
  QSeries(int order, std::vector<Rational> coeffs);  // pads or truncates to order
  static QSeries constant(const Rational& c, int order);

  int order() const { return order_; }
  const Rational& operator[](int n) const { return coeffs_[static_cast<std::size_t>(n)]; }
  Rational& operator[](int n) { return coeffs_[static_cast<std::size_t>(n)]; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  QSeries truncate(int order) const;
  bool is_zero() const;
  // Multiplicative inverse; throws std::domain_error when c_0 == 0.
  QSeries inverse() const;

  QSeries& operator+=(const QSeries& other);
  QSeries& operator-=(const QSeries& other);
  QSeries& operator*=(const Rational& c);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(QSeries a, const Rational& c) { return a *= c; }
  friend QSeries operator*(const Rational& c, QSeries a) { return a *= c; }

  // Equality up to the common truncation order.
  friend bool operator==(const QSeries& a, const QSeries& b);

  // "c0 + c1*q + c2*q^2 + ... + O(q^{N+1})"; zero coefficients are skipped.
  std::string to_string() const;
  static QSeries parse(std::string_view text);

 private:
  int order_;
  std::vector<Rational> coeffs_;
};

// sum_{n <= N} p(n) q^n.
QSeries partition_gf(int order);

// sigma_k(n) = sum of d^k over divisors d of n.
Integer divisor_sigma(int k, int n);

// Eisenstein series E_2 = P, E_4 = Q, E_6 = R.
QSeries eisenstein(int k, int order);

QSeries d_series(const QSeries& a);

// <f>_q = sum f(lambda) q^|lambda| / sum q^|lambda|, truncated at q^order.
// f must lie in R; Q1-terms are projected away first.
QSeries q_bracket(const SSPoly& f, int order = kDefaultOrder);

}  // namespace shiftsym
