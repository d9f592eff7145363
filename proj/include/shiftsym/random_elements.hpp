#pragma once

// Seeded random elements for property checks.

#include "shiftsym/quasimodular.hpp"
#include "shiftsym/ssym.hpp"

#include <cstdint>
#include <random>

namespace shiftsym {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20190613;

// Nonzero rational with numerator in [-9, 9] and denominator in [1, 4].
Rational random_rational(Rng& rng);

// Homogeneous weight-w element with up to max_terms terms. With
// allow_q1 the monomials range over R, otherwise over Lambda*. May be zero
// only when the weight space is empty.
SSPoly random_homogeneous(Rng& rng, int weight, bool allow_q1, int max_terms = 4);

// Sum of random homogeneous pieces of weight <= max_weight.
SSPoly random_element(Rng& rng, int max_weight, bool allow_q1, int max_terms = 4);

// Homogeneous element of Lambda* times Q2^(twice_q2/2): exercises the
// half-integer exponents of the extended ring.
SSPoly random_extended(Rng& rng, int weight, int twice_q2, int max_terms = 3);

// Random harmonic element of weight w as a combination of basis elements
// (zero when H_w = 0).
SSPoly random_harmonic(Rng& rng, int weight);

// Random weight-k quasimodular form (zero for odd k).
QMForm random_qmform(Rng& rng, int weight, int max_terms = 4);

}  // namespace shiftsym
