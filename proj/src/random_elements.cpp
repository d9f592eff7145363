#include "shiftsym/random_elements.hpp"

#include "shiftsym/harmonic.hpp"

#include <algorithm>

namespace shiftsym {

namespace {

int uniform(Rng& rng, int lo, int hi)
{
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

Rational random_rational(Rng& rng)
{
  int num = 0;
  while (num == 0) num = uniform(rng, -9, 9);
  return ratio(num, uniform(rng, 1, 4));
}

SSPoly random_homogeneous(Rng& rng, int weight, bool allow_q1, int max_terms)
{
  if (weight < 0) return {};
  const std::vector<Partition> shapes = enumerate_min_part(weight, allow_q1 ? 1 : 2);
  if (shapes.empty()) return {};
  SSPoly f;
  const int terms = uniform(rng, 1, max_terms);
  for (int t = 0; t < terms; ++t) {
    const Partition& lambda = shapes[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(shapes.size()) - 1))];
    Monomial m;
    for (int part : lambda.parts()) m = m * Monomial::generator(part);
    f.add_term(m, random_rational(rng));
  }
  if (f.is_zero()) return random_homogeneous(rng, weight, allow_q1, max_terms);
  return f;
}

SSPoly random_element(Rng& rng, int max_weight, bool allow_q1, int max_terms)
{
  SSPoly f;
  const int pieces = uniform(rng, 1, 3);
  for (int i = 0; i < pieces; ++i) f += random_homogeneous(rng, uniform(rng, 0, max_weight), allow_q1, max_terms);
  return f;
}

SSPoly random_extended(Rng& rng, int weight, int twice_q2, int max_terms)
{
  SSPoly base = weight == 0 ? SSPoly(random_rational(rng)) : random_homogeneous(rng, weight, false, max_terms);
  return base * SSPoly::q2_power(twice_q2);
}

SSPoly random_harmonic(Rng& rng, int weight)
{
  SSPoly h;
  for (const auto& [lambda, element] : harmonic_basis(weight).elements)
    if (uniform(rng, 0, 2) > 0) h += element * random_rational(rng);
  if (h.is_zero() && dim_h(weight) > 0) return random_harmonic(rng, weight);
  return h;
}

QMForm random_qmform(Rng& rng, int weight, int max_terms)
{
  const std::vector<QMExponent> monos = monomials_of_weight(weight);
  QMForm m;
  if (monos.empty()) return m;
  const int terms = uniform(rng, 1, max_terms);
  for (int t = 0; t < terms; ++t)
    m.add_term(monos[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(monos.size()) - 1))], random_rational(rng));
  if (m.is_zero()) return random_qmform(rng, weight, max_terms);
  return m;
}

}  // namespace shiftsym
