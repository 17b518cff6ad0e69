#include "hankel/rational.hpp"

#include <cctype>
#include <ostream>

#include "hankel/error.hpp"

namespace hankel {

std::string_view kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::IndexBeyondKnownMoments: return "IndexBeyondKnownMoments";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorKind::SpecOutOfRange: return "SpecOutOfRange";
    case ErrorKind::HankelSingular: return "HankelSingular";
    case ErrorKind::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorKind::TraceUndefined: return "TraceUndefined";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::PreconditionViolation: return "PreconditionViolation";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) {
    throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  }
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!is_integer_literal(num_text, true)) {
    throw Error(ErrorKind::ParseError, "malformed rational literal '" + std::string(text) + "'");
  }
  if (slash == std::string_view::npos) return Rational(parse_integer(num_text));

  const auto den_text = text.substr(slash + 1);
  if (!is_integer_literal(den_text, true)) {
    throw Error(ErrorKind::ParseError, "malformed rational literal '" + std::string(text) + "'");
  }
  const mpz_class den = parse_integer(den_text);
  if (den == 0) {
    throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  }
  return Rational(parse_integer(num_text), den);
}

std::size_t Rational::numerator_bits() const {
  if (is_zero()) return 0;
  return mpz_sizeinbase(q_.get_num_mpz_t(), 2);
}

std::string Rational::to_string() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  q_ /= rhs.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.to_string();
}

mpz_class binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace hankel
