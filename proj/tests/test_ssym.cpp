#include "oracles.hpp"

#include "shiftsym/random_elements.hpp"
#include "shiftsym/ssym.hpp"

#include <doctest.h>

using namespace shiftsym;

namespace {
SSPoly q(int k) { return SSPoly::q(k); }
}  // namespace

TEST_CASE("rational helpers")
{
  CHECK(ratio(24, 8) == 3);
  CHECK(to_string(ratio(24, 8)) == "3");
  CHECK(to_string(ratio(-6, 8)) == "-3/4");
  CHECK(parse_rational("-27/4") == Rational(-27, 4));
  CHECK(parse_rational("10/4") == Rational(5, 2));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
  CHECK(factorial(5) == 120);
  CHECK(binomial(6, 2) == 15);
  CHECK(falling_factorial(Rational(3, 2), 3) == Rational(-3, 8));
  CHECK(falling_factorial(Rational(3, 2), 0) == 1);
}

TEST_CASE("arithmetic")
{
  CHECK((q(2) + q(2) * Rational(-1)).is_zero());
  CHECK(SSPoly::q2_power(1) * SSPoly::q2_power(1) == q(2));
  CHECK((q(2) + q(3)) * (q(2) - q(3)) == q(2).pow(2) - q(3).pow(2));
  CHECK(q(3).pow(0) == SSPoly(1));
  CHECK(SSPoly::q2_power(-2) * q(2) == SSPoly(1));
  CHECK_THROWS_AS(q(3).pow(-1), std::invalid_argument);
  CHECK_THROWS_AS(Monomial::generator(3, 1), std::invalid_argument);
}

TEST_CASE("monomial order is weight-major")
{
  const Monomial a = Monomial::generator(5), b = Monomial::generator(2, 4), c = Monomial::generator(6);
  CHECK(b < a);
  CHECK(a < c);
  CHECK(Monomial::generator(2, 4) < Monomial::generator(4));
  CHECK(Monomial::generator(2, 3).weight() == 3);
  CHECK(Monomial::generator(2, -3).weight() == -3);
}

TEST_CASE("weight_components")
{
  const auto w4 = weight_components(q(2).pow(2) + q(4) * Rational(2));
  REQUIRE(w4.size() == 1);
  CHECK(w4.at(4) == q(2).pow(2) + q(4) * Rational(2));
  const auto mixed = weight_components(SSPoly(1) + q(3));
  CHECK(mixed.at(0) == SSPoly(1));
  CHECK(mixed.at(3) == q(3));
  CHECK(weight_components(SSPoly::q2_power(3)).begin()->first == 3);
  CHECK((q(2) + q(3)).is_homogeneous() == false);
  CHECK_THROWS_AS(SSPoly().homogeneous_weight(), std::invalid_argument);
}

TEST_CASE("projection")
{
  CHECK(pr(q(1) * q(3) + q(4)) == q(4));
  CHECK(pr(q(2).pow(2)) == q(2).pow(2));
  CHECK(pr(q(1).pow(2)).is_zero());
}

TEST_CASE("beta against the Bernoulli oracle")
{
  CHECK(beta(0) == 1);
  CHECK(beta(1) == 0);
  CHECK(beta(2) == Rational(-1, 24));
  CHECK(beta(4) == Rational(7, 5760));
  for (int k = 0; k <= 40; ++k) CHECK(beta(k) == oracle::beta(k));
}

TEST_CASE("Q_k values")
{
  const Partition p21({2, 1});
  CHECK(eval_qk(1, p21) == 0);
  CHECK(eval_qk(2, p21) == Rational(71, 24));
  CHECK(eval(q(2), Partition()) == Rational(-1, 24));
  CHECK(eval(SSPoly(1), p21) == 1);
  CHECK(eval(q(2).pow(2), Partition({1})) == Rational(529, 576));
  for (int n = 0; n <= 10; ++n)
    for (const Partition& lambda : enumerate_partitions(n)) {
      CHECK(eval_qk(2, lambda) == Rational(n) - Rational(1, 24));
      for (int k = 0; k <= 9; ++k) CHECK(eval_qk(k, lambda) == oracle::qk(k, lambda));
    }
}

TEST_CASE("Q_k under conjugation picks up (-1)^k")
{
  const Partition lambda({5, 3, 3, 1}), conj({4, 3, 3, 1, 1});
  for (int k = 2; k <= 9; ++k) CHECK(eval_qk(k, conj) == (k % 2 ? -1 : 1) * eval_qk(k, lambda));
}

TEST_CASE("eval_many matches eval")
{
  Rng rng(7);
  const auto parts = enumerate_partitions(7);
  for (int s = 0; s < 5; ++s) {
    const SSPoly f = random_element(rng, 8, true);
    const auto values = eval_many(f, parts);
    for (std::size_t i = 0; i < parts.size(); ++i) CHECK(values[i] == eval(f, parts[i]));
  }
  CHECK_THROWS_AS(eval(SSPoly::q2_power(1), Partition()), std::invalid_argument);
}

TEST_CASE("parser accepts the grammar")
{
  const SSPoly h4 = q(2).pow(2) * Rational(27, 4) + q(4) * Rational(27, 2);
  CHECK(parse("27/4*Q2^2 + 27/2*Q4") == h4);
  CHECK(parse("27/4*(Q2^2 + 2*Q4)") == h4);
  CHECK(parse("Q2^(3/2)") == SSPoly::q2_power(3));
  CHECK(parse("Q2^-1") == SSPoly::q2_power(-2));
  CHECK(parse("Q2^(-3/2)") == SSPoly::q2_power(-3));
  CHECK(parse("  3  ") == SSPoly(3));
  CHECK(parse("-Q3") == -q(3));
  CHECK(parse("Q10*Q2") == q(10) * q(2));
  CHECK(parse("2*(Q2 - Q3)^2") == (q(2) - q(3)).pow(2) * Rational(2));
  CHECK(parse("0") == SSPoly());
}

TEST_CASE("parser rejects malformed input with a position")
{
  CHECK_THROWS_AS(parse("Q3^(1/2)"), ParseError);
  CHECK_THROWS_AS(parse("Q2 +"), ParseError);
  CHECK_THROWS_AS(parse("Q"), ParseError);
  CHECK_THROWS_AS(parse("(Q2"), ParseError);
  CHECK_THROWS_AS(parse("Q2^"), ParseError);
  CHECK_THROWS_AS(parse("1/0*Q2"), ParseError);
  CHECK_THROWS_AS(parse("x"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
  try {
    parse("Q2 + $");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("formatter")
{
  CHECK(format(parse("27/4*(Q2^2 + 2*Q4)")) == "27/4*Q2^2 + 27/2*Q4");
  CHECK(format(-q(3)) == "-Q3");
  CHECK(format(SSPoly::q2_power(3)) == "Q2^(3/2)");
  CHECK(format(SSPoly::q2_power(-2)) == "Q2^-1");
  CHECK(format(SSPoly()) == "0");
  CHECK(format(SSPoly(Rational(-1, 2))) == "-1/2");
  CHECK(format(q(2) * q(10)) == "Q2*Q10");
}

TEST_CASE("parse . format is the identity on random elements")
{
  Rng rng(11);
  for (int s = 0; s < 200; ++s) {
    SSPoly f = random_element(rng, 10, true);
    if (s % 3 == 0) f += random_extended(rng, s % 7, s % 9 - 4);
    CHECK(parse(format(f)) == f);
  }
}

TEST_CASE("partial derivatives")
{
  CHECK(q(2).pow(2).partial(2) == q(2) * Rational(2));
  CHECK(SSPoly::q2_power(3).partial(2) == SSPoly::q2_power(1) * Rational(3, 2));
  CHECK(q(3).partial(2).is_zero());
  CHECK(SSPoly(5).partial(1).is_zero());
}
