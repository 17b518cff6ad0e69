#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hankel/rational.hpp"

namespace hankel {

/// Exponent vector indexed by indeterminate; canonical form has no trailing zeros.
using Exponents = std::vector<unsigned>;

/// Graded lexicographic order: total degree first, then the first differing
/// exponent (missing entries count as zero).
struct GradedLexLess {
  bool operator()(const Exponents& lhs, const Exponents& rhs) const;
};

/// Sparse polynomial with integer coefficients in indeterminates x_0, x_1, ...
/// No zero coefficient is ever stored, so structural equality is polynomial
/// equality.
class MultiPoly {
 public:
  using Terms = std::map<Exponents, mpz_class, GradedLexLess>;

  MultiPoly() = default;
  MultiPoly(long c);  // NOLINT(google-explicit-constructor)
  explicit MultiPoly(const mpz_class& c);

  static MultiPoly variable(std::size_t index);
  /// c * prod x_i^exps[i].
  static MultiPoly monomial(Exponents exps, const mpz_class& c = 1);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t total_degree() const;
  /// One past the largest indeterminate index that occurs.
  std::size_t variable_count() const;

  /// Termwise evaluation; `point` must cover variable_count() indices.
  Rational eval(std::span<const Rational> point) const;

  /// e.g. "x0*x2 - x1^2".
  std::string to_string(std::string_view var_prefix = "x") const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);

  friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
  friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
  friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);

  friend bool operator==(const MultiPoly& lhs, const MultiPoly& rhs) {
    return lhs.terms_ == rhs.terms_;
  }

 private:
  void add_term(const Exponents& exps, const mpz_class& c);

  Terms terms_;
};

enum class PolyOp { add, sub, mul };

MultiPoly multipoly_arith(const MultiPoly& a, const MultiPoly& b, PolyOp op);

}  // namespace hankel
