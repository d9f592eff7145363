#pragma once

#include "shiftsym/partitions.hpp"
#include "shiftsym/ssym.hpp"

#include <map>
#include <vector>

namespace shiftsym {

// f = sum_i Q2^i components[i] with every component harmonic.
struct Decomposition {
  std::vector<SSPoly> components;

  SSPoly reconstruct() const;
  // Largest r with components[r] != 0 (0 for the zero polynomial).
  int depth() const;
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

// The harmonic basis {h_lambda} of H_n indexed by partitions with parts >= min_part.
struct HarmonicBasis {
  int weight = 0;
  std::map<Partition, SSPoly, std::greater<>> elements;  // lexicographically decreasing
};

// pr(Delta f) == 0. Throws std::invalid_argument unless f is in Lambda*.
bool is_harmonic(const SSPoly& f);

// Monomials Q_lambda for partitions of n with all parts >= 2.
std::vector<Monomial> lambda_star_basis(int n);

// Coordinates of a weight-n element of Lambda* in lambda_star_basis(n).
std::vector<Rational> coordinates(const SSPoly& f, const std::vector<Monomial>& basis);

Decomposition decompose(const SSPoly& f);

// h_lambda = pr K Delta_lambda K(1) for every lambda |- n with parts >= min_part.
HarmonicBasis harmonic_basis(int n, int min_part = 3);
SSPoly harmonic_basis_element(const Partition& lambda);

// p(n) - p(n-1) - p(n-2) + p(n-3); zero for negative n.
Integer dim_h(int n);

int depth_ss(const SSPoly& f);

Rational leading_coefficient(int n);

// h_lambda - (3/2)_n n! Q_lambda is divisible by Q2.
bool leading_term_check(const Partition& lambda);

// n! (3/2)_n h == pr K h^v K(1). Throws std::invalid_argument for non-harmonic h.
bool unusual_identity_check(const SSPoly& h, int n);

}  // namespace shiftsym
