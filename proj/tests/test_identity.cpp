#include <doctest.h>

#include "hankel/detkit.hpp"
#include "hankel/error.hpp"
#include "hankel/identity.hpp"
#include "oracle.hpp"

using hankel::Engine;
using hankel::Error;
using hankel::ErrorKind;
using hankel::Form;
using hankel::Matrix;
using hankel::MomentSequence;
using hankel::Rational;

namespace {

const MomentSequence kCatalan = MomentSequence::catalan_sequence();

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::ParseError;
}

// D_j(a, b) straight from the definition, evaluated by Leibniz.
Rational oracle_d(const MomentSequence& seq, std::size_t j, std::size_t a, std::size_t b) {
  if (j < a || j > b) return Rational(0);
  if (a == b) return Rational(1);
  oracle::Grid g(b - a);
  for (std::size_t r = 0; r < b - a; ++r)
    for (std::size_t c = a; c <= b; ++c)
      if (c != j) g[r].push_back(seq(c + r).raw());
  return Rational(oracle::leibniz_det(g));
}

}  // namespace

TEST_CASE("cigler sides") {
  CHECK(hankel::cigler_lhs(kCatalan, 1, 1) == Rational(1));
  CHECK(hankel::cigler_lhs(kCatalan, 2, 2) == Rational(3));
  const auto seq = MomentSequence::random_moments(7, 6, 10);
  CHECK(hankel::cigler_lhs(seq, 1, 1) == seq(1));

  CHECK(hankel::cigler_rhs(kCatalan, 2, 2) == Rational(3));
  CHECK(hankel::cigler_rhs(seq, 1, 4) == seq(4));
  CHECK(hankel::cigler_rhs(kCatalan, 2, 3) == Rational(14));
}

TEST_CASE("coefficient matrix for Catalan (m=2, n=2)") {
  CHECK(hankel::coefficient_matrix(kCatalan, 2, 2) == Matrix{{Rational(1), Rational(3)},
                                                             {Rational(1), Rational(6)}});
}

TEST_CASE("verify_cigler") {
  auto r = hankel::verify_cigler(kCatalan, 2, 2);
  CHECK(r.equal);
  CHECK(r.lhs == Rational(3));
  CHECK(r.rhs == Rational(3));
  CHECK(r.form == Form::original);
  CHECK_FALSE(r.fallback);
  CHECK(r.sequence_id == "catalan");

  r = hankel::verify_cigler(kCatalan, 1, 1);
  CHECK(r.equal);
  CHECK(r.lhs == Rational(1));

  const auto seq = MomentSequence::random_moments(7, hankel::moments_required(3, 2), 10);
  r = hankel::verify_cigler(seq, 3, 2);
  CHECK(r.equal);
  // Independent evaluation of the right side.
  oracle::Grid g(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) g[i].push_back(seq(i + j + 2).raw());
  CHECK(r.rhs == Rational(oracle::leibniz_det(g)));
}

TEST_CASE("verify_cigler falls back to the restated form on a singular Hankel") {
  // H_2 = mu0*mu2 - mu1^2 = 0.
  const auto seq = MomentSequence::from_list(
      {Rational(1), Rational(2), Rational(4), Rational(3), Rational(5), Rational(-1), Rational(2)});
  CHECK(kind_of([&] { (void)hankel::cigler_lhs(seq, 1, 2); }) == ErrorKind::HankelSingular);
  const auto r = hankel::verify_cigler(seq, 1, 2);
  CHECK(r.fallback);
  CHECK(r.form == Form::restated);
  CHECK(r.equal);
}

TEST_CASE("identity verifiers require mu(0) = 1") {
  const auto seq = MomentSequence::from_list({Rational(2), Rational(1), Rational(3), Rational(1)});
  CHECK(kind_of([&] { (void)hankel::verify_cigler(seq, 1, 1); }) == ErrorKind::PreconditionViolation);
  CHECK(kind_of([&] { (void)hankel::verify_restated(seq, 1, 1); }) ==
        ErrorKind::PreconditionViolation);
  CHECK(kind_of([] { (void)hankel::verify_restated(kCatalan, 0, 1); }) ==
        ErrorKind::PreconditionViolation);
}

TEST_CASE("verify_restated") {
  auto r = hankel::verify_restated(kCatalan, 2, 2);
  CHECK(r.equal);
  CHECK(r.lhs == Rational(3));
  CHECK(r.rhs == Rational(3));
  CHECK(r.form == Form::restated);

  r = hankel::verify_restated(kCatalan, 2, 3);
  CHECK(r.equal);
  CHECK(r.lhs == Rational(14));

  SUBCASE("n = 1 compares two copies of the shifted Hankel determinant") {
    const auto seq = MomentSequence::random_moments(4, 12, 10);
    for (std::size_t m = 1; m <= 4; ++m) {
      r = hankel::verify_restated(seq, m, 1);
      CHECK(r.equal);
      CHECK(r.lhs == hankel::determinant(hankel::hankel_matrix(seq, 1, m)));
    }
  }

  SUBCASE("too few moments") {
    const auto seq = MomentSequence::random_moments(4, hankel::moments_required(2, 3) - 1, 10);
    CHECK(kind_of([&] { (void)hankel::verify_restated(seq, 2, 3); }) ==
          ErrorKind::IndexBeyondKnownMoments);
    const auto enough = MomentSequence::random_moments(4, hankel::moments_required(2, 3), 10);
    CHECK(hankel::verify_restated(enough, 2, 3).equal);
    const auto n1 = MomentSequence::random_moments(4, hankel::moments_required(3, 1), 10);
    CHECK(hankel::verify_restated(n1, 3, 1).equal);
  }
}

TEST_CASE("restated sides against the Leibniz oracle") {
  const auto seq = MomentSequence::random_moments(21, 13, 10);
  for (std::size_t m = 1; m <= 3; ++m) {
    for (std::size_t n = 1; n <= 3; ++n) {
      oracle::Grid q(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) q[i].push_back(oracle_d(seq, j, 0, i + m).raw());
      Rational rhs = oracle_d(seq, m + n, n, m + n);
      for (std::size_t i = 1; i < n; ++i) rhs *= oracle_d(seq, m + i, 0, m + i);
      const auto r = hankel::verify_restated(seq, m, n, Engine::laplace);
      CHECK(r.lhs == Rational(oracle::leibniz_det(q)));
      CHECK(r.rhs == rhs);
    }
  }
}

TEST_CASE("restated form survives vanishing Hankel determinants") {
  // Catalan moments with mu(2) altered so that H_2 = 0 while the identity,
  // being polynomial, must still hold.
  std::vector<Rational> values;
  for (std::size_t k = 0; k < 15; ++k) values.push_back(hankel::catalan(k));
  values[2] = Rational(1);
  const auto seq = MomentSequence::from_list(values, "degenerate");
  for (std::size_t m = 1; m <= 4; ++m)
    for (std::size_t n = 1; n <= 4; ++n) CHECK(hankel::verify_restated(seq, m, n).equal);
}

TEST_CASE("consistency_check") {
  CHECK(hankel::consistency_check(kCatalan, 2, 2));
  CHECK(hankel::consistency_check(kCatalan, 1, 1));
  CHECK(hankel::consistency_check(MomentSequence::random_moments(11, 12, 10), 2, 3));
  const auto singular = MomentSequence::from_list(
      {Rational(1), Rational(2), Rational(4), Rational(3), Rational(5), Rational(-1), Rational(2)});
  CHECK(kind_of([&] { (void)hankel::consistency_check(singular, 1, 2); }) ==
        ErrorKind::HankelSingular);
}

TEST_CASE("theorem1_sides") {
  auto sides = hankel::theorem1_sides(kCatalan, 2, 2);
  CHECK(sides.lhs == Rational(3));
  CHECK(sides.rhs == Rational(3));

  const auto seq = MomentSequence::random_moments(3, 12, 10);
  for (std::size_t m = 1; m <= 4; ++m) {
    sides = hankel::theorem1_sides(seq, m, 1);
    CHECK(sides.lhs == hankel::d_det(seq, {.j = 0, .a = 0, .b = m}));
    CHECK(sides.rhs == sides.lhs);
  }
  sides = hankel::theorem1_sides(seq, 1, 3);
  CHECK(sides.lhs == sides.rhs);

  SUBCASE("vanishing denominator") {
    // D_2(1,2) = mu(1) = 0 is the denominator for m = 1, n = 2.
    const auto seq0 = MomentSequence::from_list(
        {Rational(1), Rational(0), Rational(2), Rational(3), Rational(5), Rational(7)});
    CHECK(kind_of([&] { (void)hankel::theorem1_sides(seq0, 1, 2); }) ==
          ErrorKind::DenominatorVanishes);
  }
}

TEST_CASE("reduction_trace on Catalan (m=2, n=2)") {
  const auto trace = hankel::reduction_trace(kCatalan, 2, 2);
  CHECK(trace.all_passed());
  REQUIRE(trace.rows.size() == 1);
  const auto& row = trace.rows[0];
  CHECK(row.i == 1);
  CHECK(row.lambda == Rational(-1));
  CHECK(row.a_coeffs == std::vector<Rational>{Rational(-3), Rational(4)});
  CHECK(row.q_prime_row[0] == Rational(0));
  CHECK(row.q_prime_row[1] == Rational(3));
  CHECK(row.factored_scalar == Rational(1));
  CHECK(trace.det_q == Rational(3));
}

TEST_CASE("reduction_trace rows run bottom-up and every check passes") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto trace = hankel::reduction_trace(kCatalan, 2, n);
    CHECK(trace.all_passed());
    REQUIRE(trace.rows.size() == n - 1);
    for (std::size_t k = 0; k < trace.rows.size(); ++k) CHECK(trace.rows[k].i == n - 1 - k);
  }
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto seq = MomentSequence::random_moments(seed, 15, 10);
    for (std::size_t m = 1; m <= 3; ++m)
      for (std::size_t n = 1; n <= 4; ++n) {
        // Seed 3 has D_0(0,3) = 0 exactly; those traces are undefined.
        if (seed == 3 && (m + n >= 5 || (m == 3 && n >= 2))) {
          CHECK(kind_of([&] { (void)hankel::reduction_trace(seq, m, n); }) ==
                ErrorKind::TraceUndefined);
          continue;
        }
        const auto trace = hankel::reduction_trace(seq, m, n);
        CAPTURE(seed);
        CAPTURE(m);
        CAPTURE(n);
        for (const auto& c : trace.checks) {
          CAPTURE(c.name);
          CHECK(c.passed);
        }
        CHECK(trace.det_q == hankel::theorem1_sides(seq, m, n).rhs);
      }
  }
}

TEST_CASE("reduction_trace reports undefined steps") {
  // D_0(0,1) = mu(1) = 0 makes lambda_1 undefined for m = 1.
  const auto seq = MomentSequence::from_list(
      {Rational(1), Rational(0), Rational(2), Rational(3), Rational(5), Rational(7)});
  CHECK(kind_of([&] { (void)hankel::reduction_trace(seq, 1, 2); }) == ErrorKind::TraceUndefined);
}

TEST_CASE("catalan_corollary") {
  auto v = hankel::catalan_corollary(1, 2);
  CHECK(v.binom_det == Rational(2));
  CHECK(v.all_equal());
  v = hankel::catalan_corollary(2, 3);
  CHECK(v.binom_det == Rational(14));
  CHECK(v.hankel_quotient == Rational(14));
  CHECK(v.product == Rational(14));
  CHECK(hankel::catalan_binomial_matrix(2, 3) ==
        Matrix{{Rational(1), Rational(3), Rational(1)},
               {Rational(1), Rational(6), Rational(5)},
               {Rational(1), Rational(10), Rational(15)}});
  for (std::size_t m = 1; m <= 5; ++m) {
    v = hankel::catalan_corollary(m, 1);
    CHECK(v.binom_det == Rational(1));
    CHECK(v.all_equal());
  }
}
