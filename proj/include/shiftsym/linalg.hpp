#pragma once

#include "shiftsym/rational.hpp"

#include <optional>
#include <vector>

namespace shiftsym {

// Dense row-major matrix over Q.
using RationalMatrix = std::vector<std::vector<Rational>>;

// Rank by fraction-exact Gaussian elimination.
int rank(RationalMatrix a);

struct SolveResult {
  std::vector<Rational> x;
  bool unique = true;  // false when free variables were set to zero
};

// Solves A x = b exactly. Returns nullopt when the system is inconsistent.
std::optional<SolveResult> solve(RationalMatrix a, std::vector<Rational> b);

}  // namespace shiftsym
