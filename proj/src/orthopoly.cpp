#include "hankel/orthopoly.hpp"

#include <string>

#include "hankel/error.hpp"

namespace hankel {

namespace {

bool odd(std::size_t k) { return k % 2 == 1; }

}  // namespace

std::vector<Rational> OrthoPoly::signed_coeffs() const {
  std::vector<Rational> out;
  out.reserve(coeffs.size());
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    out.push_back(odd(n - j) ? -coeffs[j] : coeffs[j]);
  }
  return out;
}

OrthoPoly ortho_coeffs(const MomentSequence& seq, std::size_t n, Engine engine) {
  OrthoPoly p;
  p.n = n;
  if (n == 0) {
    p.coeffs = {Rational(1)};
    return p;
  }
  const Rational hankel_n = d_det(seq, {.j = n, .a = 0, .b = n}, engine);
  if (hankel_n.is_zero()) {
    throw Error(ErrorKind::HankelSingular, "H_" + std::to_string(n) + " = D_" +
                                               std::to_string(n) + "(0," + std::to_string(n) +
                                               ") vanishes");
  }
  p.coeffs.reserve(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    p.coeffs.push_back(d_det(seq, {.j = j, .a = 0, .b = n}, engine) / hankel_n);
  }
  return p;
}

Rational poly_eval(const OrthoPoly& p, const Rational& x) {
  // Horner over the signed coefficients.
  const auto c = p.signed_coeffs();
  Rational acc{0};
  for (std::size_t j = c.size(); j-- > 0;) acc = acc * x + c[j];
  return acc;
}

Rational moment_pairing(const MomentSequence& seq, const OrthoPoly& p, std::size_t k) {
  Rational sum{0};
  for (std::size_t j = 0; j <= p.n; ++j) {
    Rational term = p.coeffs[j] * seq(j + k);
    if (odd(p.n - j)) term = -term;
    sum += term;
  }
  return sum;
}

Rational catalan_coeff_closed(std::size_t n, std::size_t j) {
  if (j > n) {
    throw Error(ErrorKind::IndexOutOfRange,
                "coefficient index " + std::to_string(j) + " exceeds degree " + std::to_string(n));
  }
  return Rational(binomial(static_cast<long>(n + j), static_cast<long>(n - j)));
}

}  // namespace hankel
