#include <doctest.h>

#include "hankel/error.hpp"
#include "hankel/rational.hpp"
#include "oracle.hpp"

using hankel::Error;
using hankel::ErrorKind;
using hankel::Rational;

TEST_CASE("rational literals parse to lowest terms") {
  CHECK(Rational::parse("6/4") == Rational(mpz_class(3), mpz_class(2)));
  CHECK(Rational::parse("3/-6").to_string() == "-1/2");
  CHECK(Rational::parse("-7").to_string() == "-7");
  CHECK(Rational::parse("+5/1").to_string() == "5");
  CHECK(Rational::parse("0/9").is_zero());
}

TEST_CASE("malformed or zero-denominator literals are rejected") {
  for (const char* bad : {"", "1/0", "a", "1/", "/2", "1.5", " 1", "1/2/3", "--1"}) {
    CAPTURE(bad);
    try {
      (void)Rational::parse(bad);
      FAIL("accepted malformed literal");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ParseError);
    }
  }
}

TEST_CASE("division by zero raises instead of trapping") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
  CHECK_THROWS_AS(Rational(mpz_class(1), mpz_class(0)), Error);
}

TEST_CASE("arithmetic and ordering") {
  const Rational half = Rational::parse("1/2");
  const Rational third = Rational::parse("1/3");
  CHECK((half + third).to_string() == "5/6");
  CHECK((half - third).to_string() == "1/6");
  CHECK((half * third).to_string() == "1/6");
  CHECK((half / third).to_string() == "3/2");
  CHECK(third < half);
  CHECK(-half < third);
  CHECK(Rational(-12).numerator_bits() == 4);
}

TEST_CASE("binomial matches Pascal's triangle including out-of-range zeros") {
  for (long n = 0; n <= 14; ++n)
    for (long k = -2; k <= n + 2; ++k) CHECK(hankel::binomial(n, k) == oracle::pascal(n, k));
}
