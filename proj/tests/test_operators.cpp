#include "oracles.hpp"

#include "shiftsym/operators.hpp"
#include "shiftsym/random_elements.hpp"

#include <doctest.h>

using namespace shiftsym;

namespace {
SSPoly q(int k) { return SSPoly::q(k); }
const Rational half(1, 2);
}  // namespace

TEST_CASE("d_op and euler_op")
{
  CHECK(d_op(q(3)) == q(2));
  CHECK(d_op(SSPoly(1)).is_zero());
  CHECK(d_op(q(2).pow(2)) == q(1) * q(2) * Rational(2));
  CHECK(d_op(q(1)) == SSPoly(1));
  CHECK(euler_op(q(3) * q(4)) == q(3) * q(4) * Rational(7));
  CHECK(euler_op(SSPoly(1)).is_zero());
  CHECK(euler_op(SSPoly::q2_power(3)) == SSPoly::q2_power(3) * Rational(3));
}

TEST_CASE("script D_n against the index-vector oracle")
{
  CHECK(script_d_n(2, q(2).pow(2)) == q(2) * Rational(4));
  CHECK(script_d_n(3, q(4)) == oracle::script_d(3, q(4)));
  CHECK(script_d_n(0, q(5)) == q(5));
  Rng rng(3);
  for (int s = 0; s < 30; ++s) {
    SSPoly f = random_element(rng, 8, true, 3);
    if (s % 2) f += random_extended(rng, s % 5, s % 7 - 3, 2);
    const int n = s % 5;
    CHECK(script_d_n(n, f) == oracle::script_d(n, f));
    if (n == 1) CHECK(script_d_n(1, f) == d_op(f));
  }
}

TEST_CASE("laplacian")
{
  CHECK(laplacian(q(3)) == q(1) * -half);
  CHECK(laplacian(q(2)) == SSPoly(-half));
  CHECK(laplacian(q(2).pow(2)) == q(2) - q(1).pow(2));
  Rng rng(5);
  for (int s = 0; s < 20; ++s) {
    const SSPoly f = random_element(rng, 9, true, 3);
    CHECK(laplacian(f) == oracle::laplacian(f));
  }
}

TEST_CASE("delta_n")
{
  Rng rng(9);
  for (int s = 0; s < 10; ++s) {
    const SSPoly f = random_element(rng, 8, true, 3);
    CHECK(delta_n(0, f) == f);
    CHECK(delta_n(1, f).is_zero());
    CHECK(delta_n(2, f) == laplacian(f) * Rational(2));
    CHECK(delta_lambda(Partition(), f) == f);
    CHECK(delta_lambda(Partition({2}), f) == laplacian(f) * Rational(2));
  }
  const SSPoly k1 = SSPoly::q2_power(3);
  const SSPoly expected = script_d_n(3, k1) - script_d_n(2, d_op(k1)) * Rational(3) +
                          script_d_n(1, d_op(d_op(k1))) * Rational(3) - d_op(d_op(d_op(k1)));
  CHECK(delta_lambda(Partition({3}), k1) == expected);
  CHECK(delta_lambda(Partition({3, 3}), k1) == delta_n(3, delta_n(3, k1)) * Rational(20));
  CHECK_THROWS_AS(delta_n(-1, k1), std::invalid_argument);
}

TEST_CASE("kelvin")
{
  CHECK(kelvin(SSPoly(1)) == SSPoly::q2_power(3));
  CHECK(kelvin(SSPoly::q2_power(3)) == SSPoly(1));
  CHECK(kelvin(q(3)) == SSPoly::q2_power(-3) * q(3));
  CHECK(kelvin(q(4) + q(3)) == SSPoly::q2_power(-5) * q(4) + SSPoly::q2_power(-3) * q(3));
  CHECK_THROWS_AS(kelvin(q(1)), std::invalid_argument);
}

TEST_CASE("dualize_apply")
{
  const SSPoly g = SSPoly::q2_power(3) * q(5) + q(4) * q(3);
  CHECK(dualize_apply(q(3), g) == delta_n(3, g));
  CHECK(dualize_apply(SSPoly(1), g) == g);
  CHECK(dualize_apply(q(2).pow(2), g) == laplacian(laplacian(g)) * Rational(4 * 6));
  CHECK(dualize_apply(q(3) * q(2), g) == delta_lambda(Partition({3, 2}), g));
  CHECK(dualize_apply(q(1) * q(3), g).is_zero());
}

TEST_CASE("commutators of primitive operators")
{
  const SSPoly f = parse("Q2^3*Q3 - 2/3*Q1*Q5 + Q4^2");
  CHECK(commutator(Operator::d(), Operator::multiply(q(1)), f) == f);
  CHECK(commutator(Operator::euler(), Operator::d(), f) == -d_op(f));
  CHECK(commutator(Operator::laplacian(), Operator::multiply(q(2)), f) ==
        euler_op(f) - q(1) * d_op(f) - f * half);
}

TEST_CASE("operator algebra is linear")
{
  Rng rng(21);
  const Operator ops[] = {Operator::d(), Operator::euler(), Operator::laplacian(), Operator::script_d(3),
                          Operator::delta(4), Operator::delta(Partition({3, 2})), Operator::projection()};
  for (const Operator& op : ops)
    for (int s = 0; s < 5; ++s) {
      const SSPoly f = random_element(rng, 8, true, 3), g = random_element(rng, 8, true, 3);
      const Rational c = random_rational(rng);
      CHECK(op(f * c + g) == op(f) * c + op(g));
    }
  const Operator e = Operator::euler();
  CHECK((Rational(2) * e - e)(q(3)) == e(q(3)));
  CHECK((e * Operator::d())(q(3)) == q(2) * Rational(2));
}

TEST_CASE("[Delta, Q2^n] by direct differentiation")
{
  for (int n = 1; n <= 6; ++n) {
    const Rational nr(n);
    const SSPoly expected = q(2).pow(n - 1) * (nr * (nr - Rational(3, 2))) -
                            (n >= 2 ? q(1).pow(2) * q(2).pow(n - 2) * (nr * (n - 1) / 2) : SSPoly());
    CHECK(oracle::laplacian(q(2).pow(n)) == expected);
    CHECK(laplacian(q(2).pow(n)) == expected);
  }
}
