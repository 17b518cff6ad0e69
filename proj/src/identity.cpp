#include "hankel/identity.hpp"

#include <algorithm>
#include <string>

#include "hankel/error.hpp"
#include "hankel/orthopoly.hpp"

namespace hankel {

std::string_view form_name(Form form) noexcept {
  return form == Form::original ? "original" : "restated";
}

namespace {

void require_params(std::size_t m, std::size_t n) {
  if (m < 1 || n < 1) {
    throw Error(ErrorKind::PreconditionViolation, "identity parameters need m >= 1 and n >= 1");
  }
}

void require_normalized(const MomentSequence& seq) {
  if (seq(0) != Rational(1)) {
    throw Error(ErrorKind::PreconditionViolation,
                "sequence '" + seq.id() + "' has mu(0) = " + seq(0).to_string() + ", expected 1");
  }
}

// Determinant with the empty-matrix convention det() = 1.
Rational det_or_one(const Matrix& m, Engine engine) {
  if (m.rows() == 0) return Rational(1);
  return det(m, engine).value;
}

std::string d_name(std::size_t j, std::size_t a, std::size_t b) {
  return "D_" + std::to_string(j) + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

Rational hankel_det(const MomentSequence& seq, std::size_t size, Engine engine) {
  return d_det(seq, {.j = size, .a = 0, .b = size}, engine);
}

}  // namespace

Matrix coefficient_matrix(const MomentSequence& seq, std::size_t m, std::size_t n,
                          Engine engine) {
  std::vector<Rational> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const OrthoPoly p = ortho_coeffs(seq, i + m, engine);
    for (std::size_t j = 0; j < n; ++j) entries.push_back(p.unsigned_coeff(j));
  }
  return Matrix(n, n, std::move(entries));
}

Matrix restated_matrix(const MomentSequence& seq, std::size_t m, std::size_t n, Engine engine) {
  std::vector<Rational> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      entries.push_back(d_det(seq, {.j = j, .a = 0, .b = i + m}, engine));
  return Matrix(n, n, std::move(entries));
}

Rational cigler_lhs(const MomentSequence& seq, std::size_t m, std::size_t n, Engine engine) {
  require_params(m, n);
  require_normalized(seq);
  return det(hankel_matrix(seq, 0, m), engine).value *
         det(coefficient_matrix(seq, m, n, engine), engine).value;
}

Rational cigler_rhs(const MomentSequence& seq, std::size_t m, std::size_t n, Engine engine) {
  require_params(m, n);
  return det(hankel_matrix(seq, n, m), engine).value;
}

VerificationReport verify_cigler(const MomentSequence& seq, std::size_t m, std::size_t n,
                                 Engine engine) {
  require_params(m, n);
  require_normalized(seq);
  VerificationReport report;
  try {
    report.lhs = cigler_lhs(seq, m, n, engine);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::HankelSingular) throw;
    report = verify_restated(seq, m, n, engine);
    report.fallback = true;
    return report;
  }
  report.m = m;
  report.n = n;
  report.rhs = cigler_rhs(seq, m, n, engine);
  report.equal = report.lhs == report.rhs;
  report.form = Form::original;
  report.sequence_id = seq.id();
  return report;
}

VerificationReport verify_restated(const MomentSequence& seq, std::size_t m, std::size_t n,
                                   Engine engine) {
  require_params(m, n);
  require_normalized(seq);
  VerificationReport report;
  report.m = m;
  report.n = n;
  report.form = Form::restated;
  report.sequence_id = seq.id();
  report.lhs = det(restated_matrix(seq, m, n, engine), engine).value;
  Rational rhs = d_det(seq, {.j = m + n, .a = n, .b = m + n}, engine);
  for (std::size_t i = 1; i < n; ++i) rhs *= hankel_det(seq, m + i, engine);
  report.rhs = std::move(rhs);
  report.equal = report.lhs == report.rhs;
  return report;
}

bool consistency_check(const MomentSequence& seq, std::size_t m, std::size_t n, Engine engine) {
  require_params(m, n);
  Rational hankel_product_from_1{1};
  for (std::size_t i = 1; i < n; ++i) hankel_product_from_1 *= hankel_det(seq, m + i, engine);
  const Rational hankel_m = hankel_det(seq, m, engine);
  const Rational p_det = det(coefficient_matrix(seq, m, n, engine), engine).value;

  const VerificationReport restated = verify_restated(seq, m, n, engine);
  return restated.lhs == p_det * hankel_m * hankel_product_from_1 &&
         restated.rhs == cigler_rhs(seq, m, n, engine) * hankel_product_from_1;
}

SidePair theorem1_sides(const MomentSequence& seq, std::size_t m, std::size_t n, Engine engine) {
  require_params(m, n);
  const MomentSequence nu = MomentSequence::shift(seq, 1);

  SidePair out;
  out.lhs = det(restated_matrix(seq, m, n, engine), engine).value;

  Rational rhs = d_det(seq, {.j = 0, .a = 0, .b = m}, engine);
  rhs *= det_or_one(n > 1 ? restated_matrix(nu, m, n - 1, engine) : Matrix{}, engine);
  for (std::size_t i = 1; i < n; ++i) {
    const Rational den = d_det(seq, {.j = i + m, .a = 1, .b = i + m}, engine);
    if (den.is_zero()) {
      throw Error(ErrorKind::DenominatorVanishes, d_name(i + m, 1, i + m) + " vanishes");
    }
    rhs *= d_det(seq, {.j = i + m, .a = 0, .b = i + m}, engine) / den;
  }
  out.rhs = std::move(rhs);
  return out;
}

bool ReductionTrace::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const TraceCheck& c) { return c.passed; });
}

ReductionTrace reduction_trace(const MomentSequence& seq, std::size_t m, std::size_t n,
                               Engine engine) {
  require_params(m, n);
  const MomentSequence nu = MomentSequence::shift(seq, 1);
  auto D = [&](std::size_t j, std::size_t a, std::size_t b, const Rational& lambda = Rational(0)) {
    return d_det(seq, {.j = j, .a = a, .b = b, .lambda = lambda}, engine);
  };
  auto require_nonzero = [](const Rational& v, const std::string& what) {
    if (v.is_zero()) throw Error(ErrorKind::TraceUndefined, what + " vanishes");
  };

  ReductionTrace trace;
  trace.m = m;
  trace.n = n;
  trace.sequence_id = seq.id();

  const Matrix q = restated_matrix(seq, m, n, engine);
  trace.det_q = det(q, engine).value;
  trace.top_row.assign(q.row(0).begin(), q.row(0).end());

  auto check = [&](std::string name, bool passed) {
    trace.checks.push_back({std::move(name), passed});
  };

  // Rows n-1 down to 1; each uses the unmodified row i-1 of Q.
  std::vector<Rational> q_prime(q.entries().begin(), q.entries().end());
  std::vector<Rational> q_double_prime = q_prime;
  Rational scalar_product{1};
  for (std::size_t i = n - 1; i >= 1; --i) {
    const std::size_t b = i + m;
    const std::string tag = "[i=" + std::to_string(i) + "]";
    TraceRow row;
    row.i = i;

    const Rational cofactor = D(0, 0, b - 1);
    require_nonzero(cofactor, d_name(0, 0, b - 1));
    const Rational shifted_hankel = D(b, 1, b);
    require_nonzero(shifted_hankel, d_name(b, 1, b));
    const Rational hankel_b = D(b, 0, b);
    require_nonzero(hankel_b, d_name(b, 0, b));

    row.lambda = -D(0, 0, b) / cofactor;
    check("lambda_annihilates_D0" + tag, D(0, 0, b, row.lambda).is_zero());

    // a_k = (-1)^(k+i+m-1) D_k(1, i+m) / D_{i+m}(1, i+m), k = 1 .. i+m-1.
    for (std::size_t k = 1; k < b; ++k) {
      Rational a_k = D(k, 1, b) / shifted_hankel;
      if ((k + b - 1) % 2 == 1) a_k = -a_k;
      row.a_coeffs.push_back(std::move(a_k));
    }
    // sum_k a_k (mu(k), .., mu(k+b-1)) = (mu(b), .., mu(2b-1) + lambda)
    bool combination_holds = true;
    for (std::size_t r = 0; r < b; ++r) {
      Rational lhs{0};
      for (std::size_t k = 1; k < b; ++k) lhs += row.a_coeffs[k - 1] * seq(k + r);
      Rational target = seq(b + r);
      if (r + 1 == b) target += row.lambda;
      combination_holds = combination_holds && lhs == target;
    }
    check("cramer_combination" + tag, combination_holds);

    row.factored_scalar = hankel_b / shifted_hankel;
    scalar_product *= row.factored_scalar;

    bool perturbation_holds = true;
    bool entry_formula_holds = true;
    bool cramer_entry_holds = true;
    for (std::size_t j = 0; j < n; ++j) {
      const Rational updated = q(i, j) + row.lambda * q(i - 1, j);
      q_prime[i * n + j] = updated;
      q_double_prime[i * n + j] = updated / row.factored_scalar;
      row.q_row.push_back(q(i, j));
      row.q_prime_row.push_back(updated);
      row.q_double_prime_row.push_back(q_double_prime[i * n + j]);

      if (j < b) perturbation_holds = perturbation_holds && updated == D(j, 0, b, row.lambda);
      entry_formula_holds = entry_formula_holds && updated == D(j, 1, b) * row.factored_scalar;
      if (j >= 1 && j < b) {
        Rational via_a = row.a_coeffs[j - 1] * hankel_b;
        if ((j + b - 1) % 2 == 1) via_a = -via_a;
        cramer_entry_holds = cramer_entry_holds && updated == via_a;
      }
    }
    check("row_operation_is_lambda_perturbation" + tag, perturbation_holds);
    check("q_prime_first_column_zero" + tag, row.q_prime_row[0].is_zero());
    check("q_prime_entry_formula" + tag, entry_formula_holds);
    check("q_prime_via_cramer_coefficients" + tag, cramer_entry_holds);
    bool factoring_holds = true;
    for (std::size_t j = 0; j < n; ++j) {
      factoring_holds = factoring_holds &&
                        row.q_prime_row[j] == row.factored_scalar * row.q_double_prime_row[j];
    }
    check("row_factoring" + tag, factoring_holds);

    trace.rows.push_back(std::move(row));
  }

  check("row_operations_preserve_determinant",
        det(Matrix(n, n, q_prime), engine).value == trace.det_q);

  const Rational d0 = D(0, 0, m);
  bool first_column = q_double_prime[0] == d0;
  for (std::size_t i = 1; i < n; ++i) first_column = first_column && q_double_prime[i * n].is_zero();
  check("first_column_isolated", first_column);

  // Bottom-right block against D_j(nu; 0, i+m) computed on the shifted sequence.
  std::vector<Rational> block;
  bool block_matches = true;
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 1; j < n; ++j) {
      block.push_back(q_double_prime[i * n + j]);
      block_matches = block_matches &&
                      block.back() == d_det(nu, {.j = j - 1, .a = 0, .b = i - 1 + m}, engine);
    }
  }
  check("bottom_right_block_is_shifted", block_matches);
  trace.det_block = det_or_one(Matrix(n - 1, n - 1, std::move(block)), engine);

  check("determinant_factorization", trace.det_q == scalar_product * d0 * trace.det_block);
  return trace;
}

Matrix catalan_binomial_matrix(std::size_t m, std::size_t n) {
  std::vector<Rational> entries;
  entries.reserve(n * n);
  const auto sm = static_cast<long>(m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto si = static_cast<long>(i);
      const auto sj = static_cast<long>(j);
      entries.emplace_back(binomial(si + sj + sm, si - sj + sm));
    }
  }
  return Matrix(n, n, std::move(entries));
}

CorollaryValues catalan_corollary(std::size_t m, std::size_t n) {
  require_params(m, n);
  const MomentSequence cat = MomentSequence::catalan_sequence();

  CorollaryValues out;
  out.binom_det = det(catalan_binomial_matrix(m, n)).value;

  const DetResult shifted = dodgson_det(hankel_matrix(cat, n, m));
  const DetResult base = dodgson_det(hankel_matrix(cat, 0, m));
  out.condensation_fallback = shifted.fallback || base.fallback;
  out.hankel_quotient = shifted.value / base.value;

  Rational product{1};
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      product *= Rational(mpz_class(static_cast<unsigned long>(2 * m + i + j)),
                          mpz_class(static_cast<unsigned long>(i + j)));
    }
  }
  out.product = std::move(product);
  return out;
}

}  // namespace hankel
