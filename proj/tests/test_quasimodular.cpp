#include "shiftsym/harmonic.hpp"
#include "shiftsym/quasimodular.hpp"
#include "shiftsym/random_elements.hpp"

#include <doctest.h>

using namespace shiftsym;

namespace {
const QMForm P = QMForm::p(), Q = QMForm::q(), R = QMForm::r();
}  // namespace

TEST_CASE("QMForm basics")
{
  CHECK((P * Q).to_string() == "P*Q");
  CHECK((Q * Rational(9, 320)).to_string() == "9/320*Q");
  CHECK((P * Rational(-1, 24)).to_string() == "-1/24*P");
  CHECK(QMForm().to_string() == "0");
  CHECK((P * P * Q - R + Rational(3)).to_string() == "3 - R + P^2*Q");
  CHECK((P * Q).homogeneous_weight() == 6);
  CHECK_FALSE((P + Q).is_homogeneous());
  CHECK_THROWS_AS(QMForm().homogeneous_weight(), std::invalid_argument);
  CHECK_THROWS_AS(QMForm({-1, 0, 0}), std::invalid_argument);
}

TEST_CASE("QMForm parse round trip")
{
  CHECK(QMForm::parse("9/320*Q") == Q * Rational(9, 320));
  CHECK(QMForm::parse("-2053485/4096*Q*R") == Q * R * Rational(-2053485, 4096));
  CHECK(QMForm::parse("0").is_zero());
  CHECK(QMForm::parse("1") == QMForm(1));
  CHECK(QMForm::parse("P^2 - Q") == P * P - Q);
  CHECK_THROWS(QMForm::parse("P^"));
  CHECK_THROWS(QMForm::parse("X"));
  CHECK_THROWS(QMForm::parse("P*"));
  Rng rng(4);
  for (int s = 0; s < 30; ++s) {
    const QMForm m = random_qmform(rng, 2 * (s % 7));
    CHECK(QMForm::parse(m.to_string()) == m);
  }
}

TEST_CASE("monomials_of_weight")
{
  CHECK(monomials_of_weight(0) == std::vector<QMExponent>{{0, 0, 0}});
  CHECK(monomials_of_weight(4) == std::vector<QMExponent>{{2, 0, 0}, {0, 1, 0}});
  CHECK(monomials_of_weight(12).size() == 7);
  CHECK(monomials_of_weight(5).empty());
}

TEST_CASE("expand")
{
  CHECK(expand(QMForm(1), 10) == QSeries::constant(1, 10));
  CHECK(expand(P, 10) == eisenstein(2, 10));
  CHECK(expand(Q * Rational(9, 320), 10)[0] == Rational(9, 320));
}

TEST_CASE("recognize")
{
  const SSPoly h4 = parse("27/4*(Q2^2 + 2*Q4)");
  CHECK(recognize(q_bracket(h4), 4) == Q * Rational(9, 320));
  CHECK(recognize(q_bracket(harmonic_basis_element(Partition({3, 3}))), 6) == R * Rational(115, 384));
  CHECK(recognize(q_bracket(SSPoly::q(2)), 2) == P * Rational(-1, 24));
  CHECK(recognize(QSeries(30), 7).is_zero());
  CHECK_THROWS_AS(recognize(eisenstein(2, 30), 3), RecognitionError);
  CHECK_THROWS_AS(recognize(q_bracket(h4, 5), 10, 5), RecognitionError);
  CHECK_THROWS_AS(recognize(partition_gf(30), 4), RecognitionError);
  CHECK_THROWS_AS(recognize(eisenstein(4, 10), 4, 30), RecognitionError);
  try {
    recognize(q_bracket(h4, 5), 10, 5);
  } catch (const RecognitionError& e) {
    CHECK(std::string(e.what()).find("insufficient order") != std::string::npos);
  }
}

TEST_CASE("Ramanujan derivative and friends")
{
  CHECK(ramanujan_d(P) == (P * P - Q) * Rational(1, 12));
  CHECK(ramanujan_d(QMForm(1)).is_zero());
  CHECK(ramanujan_d(Q * Q) == Q * (P * Q - R) * Rational(2, 3));
  CHECK(frak_d(P) == QMForm(12));
  CHECK(frak_d(Q).is_zero());
  CHECK(frak_d(P * P * Q) == P * Q * Rational(24));
  CHECK(d_hat(QMForm(1)) == P * Rational(-1, 24));
  CHECK(w_hat(Q) == Q * Rational(7, 2));
  CHECK(depth(d_hat(QMForm(1))) == 1);
  CHECK(depth(P * P * Q) == 2);
  CHECK(depth(Q * Rational(9, 320)) == 0);
  CHECK(depth(d_hat(d_hat(QMForm(1)))) == 2);
  CHECK(depth(QMForm()) == 0);
  // D on expansions agrees with q d/dq
  Rng rng(8);
  for (int s = 0; s < 10; ++s) {
    const QMForm m = random_qmform(rng, 2 * (s % 6));
    CHECK(expand(ramanujan_d(m), 25) == d_series(expand(m, 25)));
  }
}

TEST_CASE("is_modular_bracket")
{
  const SSPoly h4 = parse("27/4*(Q2^2 + 2*Q4)");
  const ModularityReport r4 = is_modular_bracket(h4);
  CHECK(r4.modular);
  CHECK(r4.form == Q * Rational(9, 320));
  CHECK(r4.decomposition.components.front() == h4);

  const ModularityReport r2 = is_modular_bracket(SSPoly::q(2));
  CHECK_FALSE(r2.modular);
  CHECK(r2.form == P * Rational(-1, 24));
  REQUIRE(r2.decomposition.components.size() == 2);
  CHECK(r2.decomposition.components[1] == SSPoly(1));

  const ModularityReport r3 = is_modular_bracket(SSPoly::q(3));
  CHECK(r3.modular);
  CHECK(r3.form.is_zero());

  // modular although not harmonic: Q2^2 times a kernel element of the bracket on H_6
  const SSPoly kappa = harmonic_basis_element(Partition({6})) * Rational(115) +
                       harmonic_basis_element(Partition({3, 3})) * Rational(55);
  CHECK(q_bracket(kappa).is_zero());
  const ModularityReport rk = is_modular_bracket(harmonic_basis_element(Partition({10})) + SSPoly::q(2).pow(2) * kappa);
  CHECK(rk.modular);
  CHECK(rk.decomposition.depth() == 2);
  CHECK_THROWS_AS(is_modular_bracket(SSPoly::q(1)), std::invalid_argument);
}
