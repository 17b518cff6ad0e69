#include <doctest.h>

#include "hankel/error.hpp"
#include "hankel/json_io.hpp"
#include "hankel/symbolic.hpp"

using hankel::Error;
using hankel::ErrorKind;
using hankel::MomentSequence;
using hankel::Rational;

TEST_CASE("sequence documents") {
  const auto seq = hankel::parse_sequence_json(R"({"name": "mine", "moments": ["1", "1/2", "-3"]})");
  CHECK(seq.id() == "mine");
  CHECK(seq(1) == Rational::parse("1/2"));
  CHECK(seq(2) == Rational(-3));
  CHECK(seq.known_length() == 3u);

  for (const char* bad : {R"({"moments": ["1", "1/0"]})", R"({"moments": [1, 2]})",
                          R"({"moments": []})", R"({"name": "x"})", "not json",
                          R"({"name": 3, "moments": ["1"]})"}) {
    CAPTURE(bad);
    try {
      (void)hankel::parse_sequence_json(bad);
      FAIL("accepted bad document");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ParseError);
    }
  }
  CHECK_THROWS_AS((void)hankel::load_sequence_file("/nonexistent/seq.json"), Error);
}

TEST_CASE("matrix documents") {
  const auto m = hankel::parse_matrix_json(R"({"rows": 2, "cols": 2, "entries": ["1","2","3","4/3"]})");
  CHECK(m(1, 1) == Rational::parse("4/3"));
  CHECK_THROWS_AS((void)hankel::parse_matrix_json(R"({"rows": 2, "cols": 2, "entries": ["1"]})"),
                  Error);
}

TEST_CASE("report serialization") {
  const auto r = hankel::verify_cigler(MomentSequence::catalan_sequence(), 2, 2);
  CHECK(hankel::to_json(r).dump() ==
        R"({"form":"original","m":2,"n":2,"sequence":"catalan","lhs":"3","rhs":"3","equal":true,"fallback":false})");

  hankel::DetResult d;
  d.value = Rational::parse("-1/2");
  d.engine = hankel::Engine::dodgson;
  d.fallback = true;
  CHECK(hankel::to_json(d).dump() == R"({"value":"-1/2","engine":"dodgson","fallback":true})");

  const auto p = hankel::ortho_coeffs(MomentSequence::catalan_sequence(), 2);
  CHECK(hankel::to_json(p).dump() ==
        R"({"n":2,"unsigned_coeffs":["1","3","1"],"signed_coeffs":["1","-3","1"]})");
}

TEST_CASE("polynomial serialization follows the canonical order") {
  const auto h2 = hankel::sym_d_det(2, 0, 2);
  CHECK(hankel::to_json(h2).dump() ==
        R"({"terms":[{"exps":[0,2],"coeff":"-1"},{"exps":[1,0,1],"coeff":"1"}]})");
}

TEST_CASE("trace serialization carries every row") {
  const auto t = hankel::reduction_trace(MomentSequence::catalan_sequence(), 2, 3);
  const auto j = hankel::to_json(t);
  CHECK(j["rows"].size() == 2);
  CHECK(j["rows"][0]["i"] == 2);
  CHECK(j["all_passed"] == true);
  CHECK(j["rows"][1]["lambda_i"] == "-1");
}
