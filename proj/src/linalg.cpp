#include "shiftsym/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace shiftsym {

namespace {

// Reduces [a | b] to reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> eliminate(RationalMatrix& a, std::vector<Rational>* b)
{
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a.front().size() : 0;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t p = row;
    while (p < rows && a[p][col] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[row]);
    if (b) std::swap((*b)[p], (*b)[row]);
    const Rational inv = 1 / a[row][col];
    for (std::size_t j = col; j < cols; ++j) a[row][j] *= inv;
    if (b) (*b)[row] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || a[i][col] == 0) continue;
      const Rational factor = a[i][col];
      for (std::size_t j = col; j < cols; ++j) a[i][j] -= factor * a[row][j];
      if (b) (*b)[i] -= factor * (*b)[row];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank(RationalMatrix a)
{
  return static_cast<int>(eliminate(a, nullptr).size());
}

std::optional<SolveResult> solve(RationalMatrix a, std::vector<Rational> b)
{
  if (a.size() != b.size()) throw std::invalid_argument("solve: dimension mismatch");
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  const std::vector<std::size_t> pivots = eliminate(a, &b);
  for (std::size_t i = pivots.size(); i < b.size(); ++i)
    if (b[i] != 0) return std::nullopt;
  SolveResult result;
  result.x.assign(cols, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) result.x[pivots[i]] = b[i];
  result.unique = pivots.size() == cols;
  return result;
}

}  // namespace shiftsym
