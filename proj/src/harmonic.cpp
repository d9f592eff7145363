#include "shiftsym/harmonic.hpp"

#include "shiftsym/linalg.hpp"
#include "shiftsym/operators.hpp"

#include <algorithm>
#include <stdexcept>

namespace shiftsym {

SSPoly Decomposition::reconstruct() const
{
  SSPoly f;
  for (std::size_t i = 0; i < components.size(); ++i)
    f += SSPoly::q2_power(2 * static_cast<int>(i)) * components[i];
  return f;
}

int Decomposition::depth() const
{
  for (std::size_t r = components.size(); r-- > 0;)
    if (!components[r].is_zero()) return static_cast<int>(r);
  return 0;
}

bool is_harmonic(const SSPoly& f)
{
  if (!f.in_lambda_star()) throw std::invalid_argument("is_harmonic expects an element of Lambda*");
  return pr(laplacian(f)).is_zero();
}

std::vector<Monomial> lambda_star_basis(int n)
{
  std::vector<Monomial> basis;
  if (n < 0) return basis;
  for (const Partition& lambda : enumerate_min_part(n, 2)) {
    Monomial m;
    for (int part : lambda.parts()) m = m * Monomial::generator(part);
    basis.push_back(m);
  }
  return basis;
}

std::vector<Rational> coordinates(const SSPoly& f, const std::vector<Monomial>& basis)
{
  std::vector<Rational> x(basis.size(), 0);
  for (const auto& [m, c] : f.terms()) {
    const auto it = std::find(basis.begin(), basis.end(), m);
    if (it == basis.end()) throw std::invalid_argument("monomial " + format(m) + " is outside the basis");
    x[static_cast<std::size_t>(it - basis.begin())] = c;
  }
  return x;
}

namespace {

// Decomposition of a weight-n homogeneous element of Lambda*: solve
// T(g) = pr Delta f with T(g) = pr Delta(Q2 g), so h_0 = f - Q2 g is
// harmonic, then recurse on g.
std::vector<SSPoly> decompose_homogeneous(const SSPoly& f, int n)
{
  const std::size_t slots = static_cast<std::size_t>(n < 0 ? 0 : n / 2) + 1;
  std::vector<SSPoly> out(slots);
  if (f.is_zero()) return out;
  const SSPoly rhs = pr(laplacian(f));
  if (rhs.is_zero()) {
    out[0] = f;
    return out;
  }
  const std::vector<Monomial> basis = lambda_star_basis(n - 2);
  const std::size_t dim = basis.size();
  RationalMatrix t(dim, std::vector<Rational>(dim, 0));
  const SSPoly q2 = SSPoly::q(2);
  for (std::size_t j = 0; j < dim; ++j) {
    const std::vector<Rational> col = coordinates(pr(laplacian(q2 * SSPoly(basis[j]))), basis);
    for (std::size_t i = 0; i < dim; ++i) t[i][j] = col[i];
  }
  const auto solution = solve(t, coordinates(rhs, basis));
  if (!solution || !solution->unique)
    throw std::logic_error("decompose: singular system for pr Delta(Q2 g) (implementation bug)");
  SSPoly g;
  for (std::size_t j = 0; j < dim; ++j) g.add_term(basis[j], solution->x[j]);
  out[0] = f - q2 * g;
  const std::vector<SSPoly> rest = decompose_homogeneous(g, n - 2);
  for (std::size_t i = 0; i < rest.size() && i + 1 < slots; ++i) out[i + 1] = rest[i];
  return out;
}

}  // namespace

Decomposition decompose(const SSPoly& f)
{
  if (!f.in_lambda_star()) throw std::invalid_argument("decompose expects an element of Lambda*");
  Decomposition d;
  d.components.resize(1);
  for (const auto& [w, component] : weight_components(f)) {
    const std::vector<SSPoly> parts = decompose_homogeneous(component, w);
    if (parts.size() > d.components.size()) d.components.resize(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) d.components[i] += parts[i];
  }
  return d;
}

SSPoly harmonic_basis_element(const Partition& lambda)
{
  // K multiplies each weight component by a power of Q2, so pr K = K pr and
  // the projection can run first (K is only defined on Q1-free input).
  return kelvin(pr(delta_lambda(lambda, kelvin(SSPoly(1)))));
}

HarmonicBasis harmonic_basis(int n, int min_part)
{
  HarmonicBasis basis;
  basis.weight = n;
  for (const Partition& lambda : enumerate_min_part(n, min_part))
    basis.elements.emplace(lambda, harmonic_basis_element(lambda));
  return basis;
}

Integer dim_h(int n)
{
  if (n < 0) return 0;
  return count_partitions(n) - count_partitions(n - 1) - count_partitions(n - 2) + count_partitions(n - 3);
}

int depth_ss(const SSPoly& f)
{
  return decompose(f).depth();
}

Rational leading_coefficient(int n)
{
  return falling_factorial(Rational(3, 2), n) * factorial(n);
}

bool leading_term_check(const Partition& lambda)
{
  Monomial q_lambda;
  for (int part : lambda.parts()) q_lambda = q_lambda * Monomial::generator(part);
  const SSPoly rest = harmonic_basis_element(lambda) - SSPoly(q_lambda, leading_coefficient(lambda.size()));
  return std::all_of(rest.terms().begin(), rest.terms().end(),
                     [](const auto& t) { return t.first.twice_exponent(2) >= 2; });
}

bool unusual_identity_check(const SSPoly& h, int n)
{
  if (!is_harmonic(h)) throw std::invalid_argument("unusual identity needs a harmonic input");
  if (!h.is_zero() && h.homogeneous_weight() != n)
    throw std::invalid_argument("input is not homogeneous of the stated weight");
  const SSPoly rhs = kelvin(pr(dualize_apply(h, kelvin(SSPoly(1)))));
  return h * leading_coefficient(n) == rhs;
}

}  // namespace shiftsym
