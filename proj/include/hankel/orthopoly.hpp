#pragma once

#include <cstddef>
#include <vector>

#include "hankel/detkit.hpp"
#include "hankel/moments.hpp"
#include "hankel/rational.hpp"

namespace hankel {

/// Monic degree-n orthogonal polynomial p_n(x) = sum_j (-1)^(n-j) p(n,j) x^j.
/// `coeffs` holds the unsigned values p(n, 0..n); the sign is applied only by
/// signed_coeffs(), poly_eval() and moment_pairing().
struct OrthoPoly {
  std::size_t n = 0;
  std::vector<Rational> coeffs;

  /// p(n, j), zero for j > n.
  Rational unsigned_coeff(std::size_t j) const { return j <= n ? coeffs[j] : Rational(0); }
  std::vector<Rational> signed_coeffs() const;
};

/// p(n, j) = D_j(0, n) / D_n(0, n). HankelSingular when D_n(0, n) = 0.
OrthoPoly ortho_coeffs(const MomentSequence& seq, std::size_t n,
                       Engine engine = Engine::automatic);

Rational poly_eval(const OrthoPoly& p, const Rational& x);

/// Moment functional applied to x^k p_n(x): sum_j (-1)^(n-j) p(n,j) mu(j+k).
Rational moment_pairing(const MomentSequence& seq, const OrthoPoly& p, std::size_t k);

/// binom(n+j, n-j), the Catalan-moment coefficient p(n, j).
Rational catalan_coeff_closed(std::size_t n, std::size_t j);

}  // namespace hankel
