#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hankel {

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator. Thin value wrapper over mpq_class that guards division by
/// zero (GMP would trap) and fixes the textual format used everywhere:
/// "p" when the denominator is 1, "p/q" otherwise.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const mpz_class& value) : q_(value) {}
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& value) : q_(value) { q_.canonicalize(); }

  /// Accepts "p", "-p", "p/q"; surrounding whitespace is not allowed.
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  const mpq_class& raw() const noexcept { return q_; }

  bool is_zero() const noexcept { return sgn(q_) == 0; }
  bool is_integer() const noexcept { return q_.get_den() == 1; }
  int sign() const noexcept { return sgn(q_); }

  /// Bit length of |numerator|; 0 for zero.
  std::size_t numerator_bits() const;

  std::string to_string() const;

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& rhs) { q_ += rhs.q_; return *this; }
  Rational& operator-=(const Rational& rhs) { q_ -= rhs.q_; return *this; }
  Rational& operator*=(const Rational& rhs) { q_ *= rhs.q_; return *this; }
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.q_ == rhs.q_; }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.q_, rhs.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

/// binom(n, k) with the convention binom(n, k) = 0 for k < 0 or k > n (n >= 0).
mpz_class binomial(long n, long k);

}  // namespace hankel
