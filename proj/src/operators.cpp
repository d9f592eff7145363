#include "shiftsym/operators.hpp"

#include <stdexcept>

namespace shiftsym {

SSPoly d_op(const SSPoly& f)
{
  SSPoly r;
  for (const auto& [m, c] : f.terms()) {
    for (const auto& [k, e2] : m.support()) {
      // Q_{k-1} * d/dQ_k; Q_0 is the unit.
      const Monomial lowered = m.with_twice_exponent(k, e2 - 2);
      const Monomial shifted = k == 1 ? lowered : lowered * Monomial::generator(k - 1);
      r.add_term(shifted, c * ratio(e2, 2));
    }
  }
  return r;
}

SSPoly euler_op(const SSPoly& f)
{
  SSPoly r;
  for (const auto& [m, c] : f.terms()) r.add_term(m, c * m.weight());
  return r;
}

namespace {

// One monomial of script_d_n. The ordered n-tuples of derivative slots are
// grouped by multiplicity vector (c_k) over the monomial's support: such a
// group has n!/prod c_k! members, each i-vector holds k-1 with multiplicity
// c_k, and the derivatives contribute prod (alpha_k)_{c_k}.
void script_d_monomial(int n, const Monomial& m, const Rational& coeff, SSPoly& out)
{
  const auto support = m.support();
  const std::size_t s = support.size();
  if (s == 0) return;
  std::vector<int> counts(s, 0);

  // Upper bound per slot: integer non-negative exponents cap the derivative order.
  std::vector<int> cap(s);
  for (std::size_t j = 0; j < s; ++j) {
    const int e2 = support[j].second;
    cap[j] = (e2 >= 0 && e2 % 2 == 0) ? std::min(n, e2 / 2) : n;
  }

  const Integer n_fact = factorial(n);
  std::function<void(std::size_t, int)> rec = [&](std::size_t j, int remaining) {
    if (j + 1 == s) {
      if (remaining > cap[j]) return;
      counts[j] = remaining;
      Rational c = coeff * n_fact;
      int index_sum = 0;
      Monomial result = m;
      Integer multinomial_den = 1;
      for (std::size_t t = 0; t < s; ++t) {
        const auto [k, e2] = support[t];
        const int ct = counts[t];
        if (ct == 0) continue;
        c /= factorial(ct);
        c *= falling_factorial(ratio(e2, 2), ct);
        index_sum += ct * (k - 1);
        Integer f = factorial(k - 1);
        for (int r = 0; r < ct; ++r) multinomial_den *= f;
        result = result.with_twice_exponent(k, e2 - 2 * ct);
      }
      if (c == 0) return;
      c *= ratio(factorial(index_sum), multinomial_den);
      if (index_sum > 0) result = result * Monomial::generator(index_sum);
      out.add_term(result, c);
      return;
    }
    for (int ct = 0; ct <= std::min(cap[j], remaining); ++ct) {
      counts[j] = ct;
      rec(j + 1, remaining - ct);
    }
    counts[j] = 0;
  };
  rec(0, n);
}

}  // namespace

SSPoly script_d_n(int n, const SSPoly& f)
{
  if (n < 0) throw std::invalid_argument("script_d_n needs n >= 0");
  if (n == 0) return f;
  SSPoly r;
  for (const auto& [m, c] : f.terms()) script_d_monomial(n, m, c, r);
  return r;
}

SSPoly laplacian(const SSPoly& f)
{
  return (script_d_n(2, f) - d_op(d_op(f))) * Rational(1, 2);
}

SSPoly delta_n(int n, const SSPoly& f)
{
  if (n < 0) throw std::invalid_argument("delta_n needs n >= 0");
  SSPoly r;
  SSPoly derived = f;  // d_op^i f
  for (int i = 0; i <= n; ++i) {
    if (i > 0) derived = d_op(derived);
    if (derived.is_zero()) break;
    const Integer b = binomial(n, i);
    SSPoly term = script_d_n(n - i, derived) * Rational(i % 2 == 0 ? b : Integer(-b));
    r += term;
  }
  return r;
}

SSPoly delta_lambda(const Partition& lambda, const SSPoly& f)
{
  Integer prefactor = factorial(lambda.size());
  for (int part : lambda.parts()) prefactor /= factorial(part);
  SSPoly r = f;
  for (int i = lambda.length(); i-- > 0;) {
    r = delta_n(lambda[i], r);
    if (r.is_zero()) return r;
  }
  return r * Rational(prefactor);
}

SSPoly kelvin(const SSPoly& f)
{
  if (f.contains_q1()) throw std::invalid_argument("Kelvin transform is defined on Q1-free elements");
  SSPoly r;
  for (const auto& [w, component] : weight_components(f))
    r += component * SSPoly::q2_power(3 - 2 * w);
  return r;
}

SSPoly dualize_apply(const SSPoly& f, const SSPoly& g)
{
  if (!f.is_polynomial()) throw std::invalid_argument("dualization needs non-negative integer exponents");
  SSPoly r;
  for (const auto& [m, c] : f.terms()) {
    if (m.contains_q1()) continue;  // delta_n(1) = 0
    // Q_mu goes to Delta_mu, multinomial included
    std::vector<int> parts;
    for (const auto& [k, e2] : m.support()) parts.insert(parts.begin(), static_cast<std::size_t>(e2 / 2), k);
    r += delta_lambda(Partition(std::move(parts)), g) * c;
  }
  return r;
}

// ---------------------------------------------------------------- Operator

Operator Operator::identity() { return {"1", [](const SSPoly& f) { return f; }}; }
Operator Operator::zero() { return {"0", [](const SSPoly&) { return SSPoly{}; }}; }
Operator Operator::multiply(const SSPoly& g)
{
  return {format(g), [g](const SSPoly& f) { return g * f; }};
}
Operator Operator::scalar(const Rational& c)
{
  return {to_string(c), [c](const SSPoly& f) { return f * c; }};
}
Operator Operator::d() { return {"d", d_op}; }
Operator Operator::euler() { return {"E", euler_op}; }
Operator Operator::laplacian() { return {"Delta", shiftsym::laplacian}; }
Operator Operator::script_d(int n)
{
  return {"D_" + std::to_string(n), [n](const SSPoly& f) { return script_d_n(n, f); }};
}
Operator Operator::delta(int n)
{
  return {"Delta_" + std::to_string(n), [n](const SSPoly& f) { return delta_n(n, f); }};
}
Operator Operator::delta(const Partition& lambda)
{
  return {"Delta_" + lambda.to_string(), [lambda](const SSPoly& f) { return delta_lambda(lambda, f); }};
}
Operator Operator::projection() { return {"pr", pr}; }
Operator Operator::kelvin() { return {"K", shiftsym::kelvin}; }

Operator operator+(const Operator& a, const Operator& b)
{
  return {"(" + a.name() + " + " + b.name() + ")", [a, b](const SSPoly& f) { return a(f) + b(f); }};
}

Operator operator-(const Operator& a, const Operator& b)
{
  return {"(" + a.name() + " - " + b.name() + ")", [a, b](const SSPoly& f) { return a(f) - b(f); }};
}

Operator operator*(const Operator& a, const Operator& b)
{
  return {a.name() + " " + b.name(), [a, b](const SSPoly& f) { return a(b(f)); }};
}

Operator operator*(const Rational& c, const Operator& a)
{
  return {to_string(c) + " " + a.name(), [c, a](const SSPoly& f) { return a(f) * c; }};
}

SSPoly commutator(const Operator& a, const Operator& b, const SSPoly& f)
{
  return a(b(f)) - b(a(f));
}

Operator commutator(const Operator& a, const Operator& b)
{
  return {"[" + a.name() + ", " + b.name() + "]", [a, b](const SSPoly& f) { return commutator(a, b, f); }};
}

}  // namespace shiftsym
