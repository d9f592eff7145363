#pragma once
// Independent reference computations; nothing here calls operators.cpp.

#include "shiftsym/partitions.hpp"
#include "shiftsym/rational.hpp"
#include "shiftsym/ssym.hpp"

#include <functional>
#include <vector>

namespace oracle {

using shiftsym::Integer;
using shiftsym::Partition;
using shiftsym::Rational;
using shiftsym::SSPoly;

// B_0..B_n with B_1 = -1/2, from sum_{j<=m} C(m+1, j) B_j = 0.
inline std::vector<Rational> bernoulli(int n)
{
  std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
  b[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rational s = 0;
    for (int j = 0; j < m; ++j) s += Rational(shiftsym::binomial(m + 1, j)) * b[static_cast<std::size_t>(j)];
    b[static_cast<std::size_t>(m)] = -s / (m + 1);
  }
  return b;
}

// z^k coefficient of z / (2 sinh(z/2)), i.e. (2^{1-k} - 1) B_k / k!
inline Rational beta(int k)
{
  const Rational bk = bernoulli(k)[static_cast<std::size_t>(k)];
  Rational two_pow = 1;
  for (int i = 0; i < k - 1; ++i) two_pow /= 2;
  if (k == 0) two_pow = 2;
  return (two_pow - 1) * bk / Rational(shiftsym::factorial(k));
}

// Q_k(lambda) from the generating function, summing over the rows.
inline Rational qk(int k, const Partition& lambda)
{
  if (k == 0) return 1;
  Rational s = 0;
  for (int i = 1; i <= lambda.length(); ++i) {
    const Rational a = Rational(lambda[i - 1] - i) + Rational(1, 2);
    const Rational b = Rational(-i) + Rational(1, 2);
    Rational pa = 1, pb = 1;
    for (int j = 0; j < k - 1; ++j) {
      pa *= a;
      pb *= b;
    }
    s += pa - pb;
  }
  return beta(k) + s / Rational(shiftsym::factorial(k - 1));
}

// Partitions of n by brute force over compositions, deduplicated.
inline std::vector<std::vector<int>> partitions(int n, int max_part)
{
  if (n == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int p = std::min(n, max_part); p >= 1; --p)
    for (auto rest : partitions(n - p, p)) {
      rest.insert(rest.begin(), p);
      out.push_back(rest);
    }
  return out;
}

inline int max_index(const SSPoly& f)
{
  int k = 0;
  for (const auto& [m, c] : f.terms()) k = std::max(k, m.max_index());
  return k;
}

// sum_k Q_{k-1} d/dQ_k
inline SSPoly d(const SSPoly& f)
{
  SSPoly r;
  for (int k = 1; k <= max_index(f); ++k) r += SSPoly::q(k - 1) * f.partial(k);
  return r;
}

// Script D_n straight from its sum over index vectors i in Z_{>=0}^n.
inline SSPoly script_d(int n, const SSPoly& f)
{
  const int top = max_index(f);
  if (n == 0) return f;
  SSPoly r;
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  while (true) {
    SSPoly g = f;
    int total = 0;
    Rational multinomial = 1;
    for (int i : idx) {
      g = g.partial(i + 1);
      total += i;
    }
    if (!g.is_zero()) {
      multinomial = Rational(shiftsym::factorial(total));
      for (int i : idx) multinomial /= Rational(shiftsym::factorial(i));
      r += SSPoly::q(total) * g * multinomial;
    }
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] >= top) idx[pos++] = 0;
    if (pos == idx.size()) break;
  }
  return r;
}

inline SSPoly laplacian(const SSPoly& f)
{
  return (script_d(2, f) - d(d(f))) * Rational(1, 2);
}

inline SSPoly q2_power(int n) { return SSPoly::q(2).pow(n); }

}  // namespace oracle
