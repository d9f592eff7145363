#pragma once

// Differential operators on R[Q2^(-1/2)].
//
//   d_op          Q_m d/dQ_{m+1} summed over m >= 0
//   euler_op      multiplication by the weight
//   script_d_n    sum over i in Z_{>=0}^n of multinomial(|i|; i) Q_{|i|} d_i
//   laplacian     (script_d_n(2) - d_op^2) / 2
//   delta_n       sum_i (-1)^i binom(n, i) script_d_n(n - i) d_op^i
//   delta_lambda  multinomial(|lambda|; lambda) prod_i delta_n(lambda_i)
//   kelvin        weight-n component times Q2^(3/2 - n)

#include "shiftsym/partitions.hpp"
#include "shiftsym/ssym.hpp"

#include <functional>
#include <string>

namespace shiftsym {

SSPoly d_op(const SSPoly& f);
SSPoly euler_op(const SSPoly& f);
SSPoly script_d_n(int n, const SSPoly& f);
SSPoly laplacian(const SSPoly& f);
SSPoly delta_n(int n, const SSPoly& f);
SSPoly delta_lambda(const Partition& lambda, const SSPoly& f);

// Partition-Kelvin transform; throws std::invalid_argument if f contains Q1.
SSPoly kelvin(const SSPoly& f);

// f^v applied to g: each monomial Q_mu of f acts as delta_lambda(mu).
SSPoly dualize_apply(const SSPoly& f, const SSPoly& g);

// A linear operator on SSPoly, composable by +, -, scalar multiples and *
// (composition, right factor applied first).
class Operator {
 public:
  using Fn = std::function<SSPoly(const SSPoly&)>;

  Operator(std::string name, Fn fn) : name_(std::move(name)), fn_(std::move(fn)) {}

  SSPoly operator()(const SSPoly& f) const { return fn_(f); }
  const std::string& name() const { return name_; }

  static Operator identity();
  static Operator zero();
  static Operator multiply(const SSPoly& g);
  static Operator scalar(const Rational& c);
  static Operator d();
  static Operator euler();
  static Operator laplacian();
  static Operator script_d(int n);
  static Operator delta(int n);
  static Operator delta(const Partition& lambda);
  static Operator projection();
  static Operator kelvin();

  friend Operator operator+(const Operator& a, const Operator& b);
  friend Operator operator-(const Operator& a, const Operator& b);
  friend Operator operator*(const Operator& a, const Operator& b);
  friend Operator operator*(const Rational& c, const Operator& a);

 private:
  std::string name_;
  Fn fn_;
};

// [A, B] f = A(B(f)) - B(A(f)).
SSPoly commutator(const Operator& a, const Operator& b, const SSPoly& f);
Operator commutator(const Operator& a, const Operator& b);

}  // namespace shiftsym
