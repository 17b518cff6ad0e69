#include <doctest.h>

#include "hankel/detkit.hpp"
#include "hankel/error.hpp"
#include "hankel/orthopoly.hpp"
#include "oracle.hpp"

using hankel::Error;
using hankel::ErrorKind;
using hankel::MomentSequence;
using hankel::OrthoPoly;
using hankel::Rational;

namespace {

const MomentSequence kCatalan = MomentSequence::catalan_sequence();

std::vector<Rational> ints(std::initializer_list<long> values) {
  return {values.begin(), values.end()};
}

}  // namespace

TEST_CASE("ortho_coeffs") {
  const auto seq = MomentSequence::from_list({Rational(1), Rational::parse("3/7"), Rational(2)});
  const OrthoPoly p1 = hankel::ortho_coeffs(seq, 1);
  CHECK(p1.coeffs == std::vector<Rational>{Rational::parse("3/7"), Rational(1)});

  CHECK(hankel::ortho_coeffs(kCatalan, 0).coeffs == ints({1}));
  CHECK(hankel::ortho_coeffs(kCatalan, 2).coeffs == ints({1, 3, 1}));
  CHECK(hankel::ortho_coeffs(kCatalan, 3).coeffs == ints({1, 6, 5, 1}));
  CHECK(hankel::ortho_coeffs(kCatalan, 2).signed_coeffs() == ints({1, -3, 1}));
}

TEST_CASE("singular Hankel determinant is an error") {
  // H_2 = 1*1 - 1*1 = 0.
  const auto seq = MomentSequence::from_list({Rational(1), Rational(1), Rational(1), Rational(1)});
  try {
    (void)hankel::ortho_coeffs(seq, 2);
    FAIL("expected HankelSingular");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::HankelSingular);
  }
  const auto short_seq = MomentSequence::from_list({Rational(1), Rational(2)});
  CHECK_THROWS_AS((void)hankel::ortho_coeffs(short_seq, 2), Error);
}

TEST_CASE("poly_eval") {
  CHECK(hankel::poly_eval(hankel::ortho_coeffs(kCatalan, 0), Rational(7)) == Rational(1));
  const OrthoPoly p2 = hankel::ortho_coeffs(kCatalan, 2);
  CHECK(hankel::poly_eval(p2, Rational(0)) == Rational(1));
  CHECK(hankel::poly_eval(p2, Rational(1)) == Rational(-1));
  // x^2 - 3x + 1 at 1/2.
  CHECK(hankel::poly_eval(p2, Rational::parse("1/2")) == Rational::parse("-1/4"));
}

TEST_CASE("moment_pairing") {
  const OrthoPoly p2 = hankel::ortho_coeffs(kCatalan, 2);
  CHECK(hankel::moment_pairing(kCatalan, p2, 0) == Rational(0));
  CHECK(hankel::moment_pairing(kCatalan, p2, 1) == Rational(0));
  CHECK(hankel::moment_pairing(kCatalan, p2, 2) == Rational(1));
}

TEST_CASE("orthogonality, monicity and norm on Catalan and random moments") {
  std::vector<MomentSequence> seqs{kCatalan};
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    seqs.push_back(MomentSequence::random_moments(seed, 18, 10));
  }
  for (const auto& seq : seqs) {
    for (std::size_t n = 0; n <= 8; ++n) {
      CAPTURE(seq.id());
      CAPTURE(n);
      const OrthoPoly p = hankel::ortho_coeffs(seq, n);
      REQUIRE(p.coeffs.size() == n + 1);
      CHECK(p.coeffs[n] == Rational(1));
      for (std::size_t k = 0; k < n; ++k) CHECK(hankel::moment_pairing(seq, p, k).is_zero());
      const Rational norm = hankel::d_det(seq, {.j = n + 1, .a = 0, .b = n + 1}) /
                            (n == 0 ? Rational(1) : hankel::d_det(seq, {.j = n, .a = 0, .b = n}));
      CHECK(hankel::moment_pairing(seq, p, n) == norm);
    }
  }
}

TEST_CASE("catalan closed form") {
  CHECK(hankel::catalan_coeff_closed(4, 4) == Rational(1));
  CHECK(hankel::catalan_coeff_closed(2, 1) == Rational(3));
  CHECK(hankel::catalan_coeff_closed(3, 1) == Rational(6));
  CHECK_THROWS_AS((void)hankel::catalan_coeff_closed(2, 3), Error);
  for (std::size_t n = 0; n <= 8; ++n) {
    const OrthoPoly p = hankel::ortho_coeffs(kCatalan, n);
    for (std::size_t j = 0; j <= n; ++j) {
      CHECK(p.coeffs[j] == hankel::catalan_coeff_closed(n, j));
      CHECK(p.coeffs[j] == Rational(oracle::pascal(static_cast<long>(n + j), static_cast<long>(n - j))));
    }
  }
}
