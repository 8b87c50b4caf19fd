#include <catch2/catch_amalgamated.hpp>

#include "nilhecke/series.hpp"

using namespace nilhecke;

TEST_CASE("quantum integers and Laurent arithmetic") {
  Laurent two = Laurent::quantum_int(2);  // v + v^{-1}
  REQUIRE(two.coeff(1) == Rational(1));
  REQUIRE(two.coeff(-1) == Rational(1));
  REQUIRE(two.coeff(0) == Rational(0));
  REQUIRE(two == two.bar());

  // [2][3] = [4] + [2]
  REQUIRE(Laurent::quantum_int(2) * Laurent::quantum_int(3) ==
          Laurent::quantum_int(4) + Laurent::quantum_int(2));
  REQUIRE((two - two).is_zero());
  REQUIRE(two.shifted(3).coeff(4) == Rational(1));

  REQUIRE(Laurent::quantum_int(3).str() == "v^-2 + 1 + v^2");
  REQUIRE(Laurent::quantum_int(3).str_q() == "q^-1 + 1 + q");
}

TEST_CASE("rational functions with (1-q^r) denominators") {
  // 1/(1-q) * (1-q^2)/(1-q) = (1+q)/(1-q)
  RatFunc a = RatFunc::from(one_minus_q(2)).over(1).over(1);
  RatFunc b = RatFunc::from(Laurent::one() + Laurent::qpow(1)).over(1);
  REQUIRE(a == b);
  REQUIRE(a != b.over(1));

  // geometric expansion
  Laurent g = RatFunc::one().over(1).expand(8);
  for (int k = 0; k <= 4; ++k) REQUIRE(g.coeff(2 * k) == Rational(1));
  REQUIRE(g.coeff(1) == Rational(0));

  // addition with unlike denominators: 1/(1-q) + 1/(1-q^2)
  RatFunc s = RatFunc::one().over(1) + RatFunc::one().over(2);
  RatFunc expect =
      RatFunc::from(Laurent::one() + Laurent::qpow(1) + Laurent::one()).over(2);
  REQUIRE(s == expect);

  // subtraction and zero test
  REQUIRE((s - s).is_zero());

  // negative exponents in the numerator expand from their own floor
  RatFunc neg = RatFunc::from(Laurent::qpow(-2)).over(1);
  Laurent en = neg.expand(0);
  REQUIRE(en.coeff(-4) == Rational(1));
  REQUIRE(en.coeff(-2) == Rational(1));
  REQUIRE(en.coeff(0) == Rational(1));

  REQUIRE(RatFunc::one().over(1).over(1).over(3).str() == "(1) / (1-q)^2(1-q^3)");
}
