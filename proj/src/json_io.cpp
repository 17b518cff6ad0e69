#include "hankel/json_io.hpp"

#include <fstream>
#include <sstream>

#include "hankel/error.hpp"

namespace hankel {

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

nlohmann::json parse_document(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

Rational parse_rational_field(const nlohmann::json& v) {
  if (!v.is_string()) throw Error(ErrorKind::ParseError, "rational values must be strings");
  return Rational::parse(v.get<std::string>());
}

Json rational_list(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

}  // namespace

MomentSequence parse_sequence_json(std::string_view text) {
  const auto doc = parse_document(text);
  if (!doc.is_object() || !doc.contains("moments") || !doc["moments"].is_array()) {
    throw Error(ErrorKind::ParseError, "sequence document needs a \"moments\" array");
  }
  std::string name = "list";
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw Error(ErrorKind::ParseError, "\"name\" must be a string");
    name = doc["name"].get<std::string>();
  }
  std::vector<Rational> moments;
  for (const auto& v : doc["moments"]) moments.push_back(parse_rational_field(v));
  if (moments.empty()) throw Error(ErrorKind::ParseError, "\"moments\" is empty");
  return MomentSequence::from_list(std::move(moments), std::move(name));
}

MomentSequence load_sequence_file(const std::filesystem::path& path) {
  return parse_sequence_json(read_file(path));
}

Matrix parse_matrix_json(std::string_view text) {
  const auto doc = parse_document(text);
  if (!doc.is_object() || !doc.contains("rows") || !doc.contains("cols") ||
      !doc.contains("entries") || !doc["rows"].is_number_unsigned() ||
      !doc["cols"].is_number_unsigned() || !doc["entries"].is_array()) {
    throw Error(ErrorKind::ParseError, "matrix document needs rows, cols and entries");
  }
  const auto rows = doc["rows"].get<std::size_t>();
  const auto cols = doc["cols"].get<std::size_t>();
  std::vector<Rational> entries;
  for (const auto& v : doc["entries"]) entries.push_back(parse_rational_field(v));
  if (entries.size() != rows * cols) {
    throw Error(ErrorKind::ParseError, "matrix entry count does not match rows*cols");
  }
  return Matrix(rows, cols, std::move(entries));
}

Matrix load_matrix_file(const std::filesystem::path& path) {
  return parse_matrix_json(read_file(path));
}

Json to_json(const Rational& value) { return value.to_string(); }

Json to_json(const DetResult& result) {
  return Json{{"value", result.value.to_string()},
              {"engine", std::string(engine_name(result.engine))},
              {"fallback", result.fallback}};
}

Json to_json(const OrthoPoly& poly) {
  return Json{{"n", poly.n},
              {"unsigned_coeffs", rational_list(poly.coeffs)},
              {"signed_coeffs", rational_list(poly.signed_coeffs())}};
}

Json to_json(const VerificationReport& report) {
  return Json{{"form", std::string(form_name(report.form))},
              {"m", report.m},
              {"n", report.n},
              {"sequence", report.sequence_id},
              {"lhs", report.lhs.to_string()},
              {"rhs", report.rhs.to_string()},
              {"equal", report.equal},
              {"fallback", report.fallback}};
}

Json to_json(const ReductionTrace& trace) {
  Json rows = Json::array();
  for (const auto& r : trace.rows) {
    rows.push_back(Json{{"i", r.i},
                        {"lambda_i", r.lambda.to_string()},
                        {"a_coeffs", rational_list(r.a_coeffs)},
                        {"q_row", rational_list(r.q_row)},
                        {"q_prime_row", rational_list(r.q_prime_row)},
                        {"q_double_prime_row", rational_list(r.q_double_prime_row)},
                        {"factored_scalar_i", r.factored_scalar.to_string()}});
  }
  Json checks = Json::array();
  for (const auto& c : trace.checks) checks.push_back(Json{{"name", c.name}, {"passed", c.passed}});
  return Json{{"m", trace.m},
              {"n", trace.n},
              {"sequence", trace.sequence_id},
              {"top_row", rational_list(trace.top_row)},
              {"rows", std::move(rows)},
              {"det_q", trace.det_q.to_string()},
              {"det_block", trace.det_block.to_string()},
              {"checks", std::move(checks)},
              {"all_passed", trace.all_passed()}};
}

Json to_json(const MultiPoly& poly) {
  Json terms = Json::array();
  for (const auto& [exps, coeff] : poly.terms()) {
    terms.push_back(Json{{"exps", exps}, {"coeff", coeff.get_str()}});
  }
  return Json{{"terms", std::move(terms)}};
}

Json to_json(const CorollaryValues& values, std::size_t m, std::size_t n) {
  return Json{{"m", m},
              {"n", n},
              {"binom_det", values.binom_det.to_string()},
              {"hankel_quotient", values.hankel_quotient.to_string()},
              {"product", values.product.to_string()},
              {"equal", values.all_equal()},
              {"fallback", values.condensation_fallback}};
}

}  // namespace hankel
