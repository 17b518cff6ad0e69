#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hankel/detkit.hpp"
#include "hankel/moments.hpp"
#include "hankel/rational.hpp"

namespace hankel {

// Shifted-moment Hankel identity, for m, n >= 1:
//
//   det(mu(i+j))_{m x m} * det(p(i+m, j))_{n x n} = det(mu(i+j+n))_{m x m}
//
// and its division-free form
//
//   det(D_j(0, i+m))_{n x n} = D_{m+n}(n, m+n) * prod_{i=1}^{n-1} D_{m+i}(0, m+i).
//
// Both read at most mu(0..2(m+n)-2); see moments_required().

enum class Form { original, restated };

std::string_view form_name(Form form) noexcept;

struct VerificationReport {
  std::size_t m = 0;
  std::size_t n = 0;
  Rational lhs;
  Rational rhs;
  bool equal = false;
  Form form = Form::original;
  std::string sequence_id;
  bool fallback = false;  // original form was requested but some H vanished
};

/// n x n matrix with entry (i, j) = p(i+m, j).
Matrix coefficient_matrix(const MomentSequence& seq, std::size_t m, std::size_t n,
                          Engine engine = Engine::automatic);

/// n x n matrix Q with entry (i, j) = D_j(0, i+m).
Matrix restated_matrix(const MomentSequence& seq, std::size_t m, std::size_t n,
                       Engine engine = Engine::automatic);

/// H_m * det(p(i+m, j)). Requires mu(0) = 1; HankelSingular names the
/// vanishing H_{i+m}.
Rational cigler_lhs(const MomentSequence& seq, std::size_t m, std::size_t n,
                    Engine engine = Engine::automatic);

/// det(mu(i+j+n))_{m x m}.
Rational cigler_rhs(const MomentSequence& seq, std::size_t m, std::size_t n,
                    Engine engine = Engine::automatic);

/// Original form; switches to verify_restated (fallback = true) when a
/// Hankel determinant H_{i+m} vanishes.
VerificationReport verify_cigler(const MomentSequence& seq, std::size_t m, std::size_t n,
                                 Engine engine = Engine::automatic);

/// Division-free form; no nonvanishing hypotheses.
VerificationReport verify_restated(const MomentSequence& seq, std::size_t m, std::size_t n,
                                   Engine engine = Engine::automatic);

/// Links the two forms: restated lhs = det(p-matrix) * prod_{i=0}^{n-1} H_{i+m}
/// and restated rhs = cigler_rhs * prod_{i=1}^{n-1} H_{i+m}.
bool consistency_check(const MomentSequence& seq, std::size_t m, std::size_t n,
                       Engine engine = Engine::automatic);

struct SidePair {
  Rational lhs;
  Rational rhs;
};

/// det(D_j(mu; 0, i+m))_{n x n} against
/// D_0(mu; 0, m) * det(D_j(nu; 0, i+m))_{(n-1) x (n-1)} * prod_{i=1}^{n-1} D_{i+m}(mu; 0, i+m) / D_{i+m}(mu; 1, i+m)
/// with nu(i) = mu(i+1). DenominatorVanishes names the failing D_{i+m}(1, i+m).
SidePair theorem1_sides(const MomentSequence& seq, std::size_t m, std::size_t n,
                        Engine engine = Engine::automatic);

struct TraceCheck {
  std::string name;
  bool passed = false;
};

/// One row i >= 1 of the reduction: row i of Q receives lambda_i times row
/// i-1, the last moment column of D_0(0, i+m; lambda_i) is written as a
/// combination of the others, and the row is divided by factored_scalar.
struct TraceRow {
  std::size_t i = 0;
  Rational lambda;                   // -D_0(0, i+m) / D_0(0, i+m-1)
  std::vector<Rational> a_coeffs;    // a_1 .. a_{i+m-1}
  std::vector<Rational> q_row;       // Q_{i, 0..n-1}
  std::vector<Rational> q_prime_row;
  std::vector<Rational> q_double_prime_row;
  Rational factored_scalar;          // D_{i+m}(0, i+m) / D_{i+m}(1, i+m)
};

struct ReductionTrace {
  std::size_t m = 0;
  std::size_t n = 0;
  std::string sequence_id;
  std::vector<Rational> top_row;  // row 0, untouched by the reduction
  std::vector<TraceRow> rows;     // i = n-1 down to 1, in operation order
  Rational det_q;
  Rational det_block;             // bottom-right (n-1) x (n-1) block of Q''
  std::vector<TraceCheck> checks;

  bool all_passed() const;
};

/// Replays the reduction step by step and records every intermediate
/// identity as a named check. TraceUndefined when one of the determinants
/// the reduction divides by vanishes.
ReductionTrace reduction_trace(const MomentSequence& seq, std::size_t m, std::size_t n,
                               Engine engine = Engine::automatic);

/// n x n matrix with entry binom(i+j+m, i-j+m).
Matrix catalan_binomial_matrix(std::size_t m, std::size_t n);

struct CorollaryValues {
  Rational binom_det;
  Rational hankel_quotient;  // det(C_{n+i+j}) / det(C_{i+j}), both m x m
  Rational product;          // prod_{1<=i<=j<=n-1} (2m+i+j)/(i+j)
  bool condensation_fallback = false;

  bool all_equal() const { return binom_det == hankel_quotient && hankel_quotient == product; }
};

/// Hankel determinants in the quotient are evaluated by condensation.
CorollaryValues catalan_corollary(std::size_t m, std::size_t n);

}  // namespace hankel
