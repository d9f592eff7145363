#pragma once

#include "shiftsym/harmonic.hpp"
#include "shiftsym/qseries.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace shiftsym {

// Exponent triple (a, b, c) of P^a Q^b R^c.
using QMExponent = std::array<int, 3>;

// Quasimodular form sum c_{abc} P^a Q^b R^c with exact coefficients.
class QMForm {
 public:
  using Terms = std::map<QMExponent, Rational>;

  QMForm() = default;
  QMForm(const Rational& constant);  // NOLINT(google-explicit-constructor)
  QMForm(const QMExponent& e, const Rational& coeff = 1);

  static QMForm p() { return QMForm({1, 0, 0}); }
  static QMForm q() { return QMForm({0, 1, 0}); }
  static QMForm r() { return QMForm({0, 0, 1}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const QMExponent& e) const;
  void add_term(const QMExponent& e, const Rational& coeff);

  QMForm& operator+=(const QMForm& other);
  QMForm& operator-=(const QMForm& other);
  QMForm& operator*=(const Rational& c);
  friend QMForm operator+(QMForm a, const QMForm& b) { return a += b; }
  friend QMForm operator-(QMForm a, const QMForm& b) { return a -= b; }
  friend QMForm operator*(const QMForm& a, const QMForm& b);
  friend QMForm operator*(QMForm a, const Rational& c) { return a *= c; }
  friend QMForm operator*(const Rational& c, QMForm a) { return a *= c; }
  friend bool operator==(const QMForm&, const QMForm&) = default;

  bool is_homogeneous() const;
  // Throws std::invalid_argument when not homogeneous or zero.
  int homogeneous_weight() const;

  // "c*P^a*Q^b*R^c" terms ordered by a, then b, then c.
  std::string to_string() const;
  // Inverse of to_string; also accepts any sum of products of rationals and P, Q, R powers.
  static QMForm parse(std::string_view text);

 private:
  Terms terms_;
};

inline int weight_of(const QMExponent& e) { return 2 * e[0] + 4 * e[1] + 6 * e[2]; }

// Triples with 2a + 4b + 6c = k, ordered by descending a, then descending b.
std::vector<QMExponent> monomials_of_weight(int k);

QSeries expand(const QMForm& m, int order = kDefaultOrder);

inline constexpr int kRecognitionMargin = 10;

class RecognitionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The unique weight-k form whose expansion matches s through q^order. For
// odd k the only candidate is the zero form.
QMForm recognize(const QSeries& s, int k, int order = kDefaultOrder);

// Ramanujan derivative D = q d/dq on Q[P, Q, R].
QMForm ramanujan_d(const QMForm& m);
// 12 d/dP.
QMForm frak_d(const QMForm& m);
// D - P/24.
QMForm d_hat(const QMForm& m);
// (k - 1/2) m on weight-k input; throws for non-homogeneous input.
QMForm w_hat(const QMForm& m);
// Degree in P (0 for the zero form).
int depth(const QMForm& m);

// Thrown when the bracket-side and decomposition-side modularity tests disagree.
class CrossCheckError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct ModularityReport {
  bool modular = false;
  QMForm form;
  Decomposition decomposition;
  QSeries bracket;
};

// Recognizes <f>_q and decides modularity (depth 0). Cross-checks that this
// agrees with <h_r>_q == 0 for every r >= 1 in decompose(f).
ModularityReport is_modular_bracket(const SSPoly& f, int order = kDefaultOrder);

}  // namespace shiftsym
