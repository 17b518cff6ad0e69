#include "hankel/detkit.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "hankel/error.hpp"

namespace hankel {

std::string_view engine_name(Engine engine) noexcept {
  switch (engine) {
    case Engine::laplace: return "laplace";
    case Engine::bareiss: return "bareiss";
    case Engine::dodgson: return "dodgson";
    case Engine::automatic: return "auto";
  }
  return "unknown";
}

Engine parse_engine(std::string_view name) {
  if (name == "laplace") return Engine::laplace;
  if (name == "bareiss") return Engine::bareiss;
  if (name == "dodgson") return Engine::dodgson;
  if (name == "auto") return Engine::automatic;
  throw Error(ErrorKind::ParseError, "unknown engine '" + std::string(name) + "'");
}

namespace {

void require_square(const Matrix& m) {
  if (!m.is_square()) {
    throw Error(ErrorKind::NotSquare, "determinant of a " + std::to_string(m.rows()) + "x" +
                                          std::to_string(m.cols()) + " matrix");
  }
  if (m.rows() == 0) throw Error(ErrorKind::PreconditionViolation, "determinant of empty matrix");
}

std::size_t bits(const mpz_class& z) { return z == 0 ? 0 : mpz_sizeinbase(z.get_mpz_t(), 2); }

// Minor on the rows from `row` down and the listed columns.
Rational laplace_minor(const Matrix& m, std::size_t row, std::vector<std::size_t>& cols,
                       std::size_t& max_bits) {
  if (cols.size() == 1) return m(row, cols[0]);
  Rational sum{0};
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const Rational& entry = m(row, cols[k]);
    if (entry.is_zero()) continue;
    const std::size_t col = cols[k];
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
    Rational term = entry * laplace_minor(m, row + 1, cols, max_bits);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), col);
    if (k % 2 == 1) term = -term;
    sum += term;
    max_bits = std::max(max_bits, sum.numerator_bits());
  }
  return sum;
}

}  // namespace

DetResult laplace_det(const Matrix& m) {
  require_square(m);
  if (m.rows() > kLaplaceCap) {
    throw Error(ErrorKind::SizeCapExceeded, "laplace_det is capped at size " +
                                                std::to_string(kLaplaceCap) + ", got " +
                                                std::to_string(m.rows()));
  }
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t c = 0; c < cols.size(); ++c) cols[c] = c;
  DetResult out;
  out.engine = Engine::laplace;
  out.value = laplace_minor(m, 0, cols, out.max_bits);
  return out;
}

DetResult bareiss_det(const Matrix& m) {
  require_square(m);
  const std::size_t n = m.rows();

  DetResult out;
  out.engine = Engine::bareiss;

  // Clear denominators row by row; det(m) = det(a) / prod(scale).
  std::vector<mpz_class> a(n * n);
  mpz_class scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    mpz_class row_lcm = 1;
    for (const auto& x : m.row(r)) mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), x.denominator().get_mpz_t());
    for (std::size_t c = 0; c < n; ++c) {
      const auto& x = m(r, c);
      a[r * n + c] = x.numerator() * (row_lcm / x.denominator());
      out.max_bits = std::max(out.max_bits, bits(a[r * n + c]));
    }
    scale *= row_lcm;
  }
  auto at = [&](std::size_t r, std::size_t c) -> mpz_class& { return a[r * n + c]; };

  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && at(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) {
        out.value = Rational(0);
        return out;
      }
      for (std::size_t c = k; c < n; ++c) std::swap(at(k, c), at(swap_row, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        out.max_bits = std::max(out.max_bits, bits(v));
        at(i, j) = std::move(v);
      }
    }
    prev = at(k, k);
  }
  mpz_class value = at(n - 1, n - 1);
  if (sign < 0) value = -value;
  out.value = Rational(value, scale);
  return out;
}

DetResult dodgson_det(const Matrix& m) {
  require_square(m);
  const std::size_t n = m.rows();

  DetResult out;
  out.engine = Engine::dodgson;

  auto fallback = [&] {
    DetResult b = bareiss_det(m);
    b.engine = Engine::dodgson;
    b.fallback = true;
    b.max_bits = std::max(b.max_bits, out.max_bits);
    return b;
  };

  // `prev` is the layer two steps back, trimmed to the interior of `cur`'s
  // predecessor; for the first step it is implicitly all ones.
  std::vector<Rational> cur(m.entries().begin(), m.entries().end());
  std::vector<Rational> prev;
  for (std::size_t s = n; s > 1; --s) {
    // Interior of the current layer divides the next-but-one layer.
    if (s > 2) {
      for (std::size_t i = 1; i + 1 < s; ++i)
        for (std::size_t j = 1; j + 1 < s; ++j)
          if (cur[i * s + j].is_zero()) return fallback();
    }
    const std::size_t t = s - 1;
    std::vector<Rational> next;
    next.reserve(t * t);
    for (std::size_t i = 0; i < t; ++i) {
      for (std::size_t j = 0; j < t; ++j) {
        Rational v = cur[i * s + j] * cur[(i + 1) * s + j + 1] -
                     cur[i * s + j + 1] * cur[(i + 1) * s + j];
        if (!prev.empty()) v /= prev[(i + 1) * (s + 1) + j + 1];
        out.max_bits = std::max(out.max_bits, v.numerator_bits());
        next.push_back(std::move(v));
      }
    }
    prev = std::move(cur);
    cur = std::move(next);
  }
  out.value = cur.front();
  return out;
}

DetResult det(const Matrix& m, Engine engine) {
  switch (engine) {
    case Engine::laplace: return laplace_det(m);
    case Engine::dodgson: return dodgson_det(m);
    case Engine::bareiss:
    case Engine::automatic: break;
  }
  return bareiss_det(m);
}

Matrix hankel_matrix(const MomentSequence& seq, std::size_t offset, std::size_t size) {
  if (size < 1) throw Error(ErrorKind::PreconditionViolation, "hankel_matrix size must be >= 1");
  // Materialize the 2*size-1 distinct values once.
  std::vector<Rational> values;
  values.reserve(2 * size - 1);
  for (std::size_t k = 0; k + 1 < 2 * size; ++k) values.push_back(seq(offset + k));
  std::vector<Rational> entries;
  entries.reserve(size * size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) entries.push_back(values[i + j]);
  return Matrix(size, size, std::move(entries));
}

Matrix d_matrix(const MomentSequence& seq, const DSpec& spec) {
  if (spec.j < spec.a || spec.j > spec.b) {
    throw Error(ErrorKind::SpecOutOfRange,
                "D_" + std::to_string(spec.j) + "(" + std::to_string(spec.a) + "," +
                    std::to_string(spec.b) + ") has no underlying matrix");
  }
  if (spec.b <= spec.a) {
    throw Error(ErrorKind::PreconditionViolation, "d_matrix needs b > a");
  }
  const std::size_t size = spec.b - spec.a;
  std::vector<Rational> entries;
  entries.reserve(size * size);
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t col = spec.a; col <= spec.b; ++col) {
      if (col == spec.j) continue;
      entries.push_back(seq(col + r));
    }
  }
  entries.back() += spec.lambda;
  return Matrix(size, size, std::move(entries));
}

Rational d_det(const MomentSequence& seq, const DSpec& spec, Engine engine) {
  if (spec.j < spec.a || spec.j > spec.b) return Rational(0);
  if (spec.b == spec.a) return Rational(1);
  return det(d_matrix(seq, spec), engine).value;
}

}  // namespace hankel
