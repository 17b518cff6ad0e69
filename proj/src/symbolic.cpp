#include "hankel/symbolic.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "hankel/error.hpp"

namespace hankel {

MultiPoly poly_det(const PolyMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::NotSquare, "symbolic determinant of non-square matrix");
  const std::size_t k = m.rows();
  if (k > kSymbolicDetCap) {
    throw Error(ErrorKind::SizeCapExceeded, "symbolic determinant capped at size " +
                                                std::to_string(kSymbolicDetCap) + ", got " +
                                                std::to_string(k));
  }
  if (k == 0) return MultiPoly(1);

  // minors[mask]: determinant of rows (k - popcount(mask)) .. k-1 restricted
  // to the columns in mask. Built from the bottom row upwards.
  const std::uint32_t full = (1u << k) - 1;
  std::vector<MultiPoly> minors(full + 1);
  minors[0] = MultiPoly(1);
  for (unsigned size = 1; size <= k; ++size) {
    const std::size_t row = k - size;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      if (static_cast<unsigned>(std::popcount(mask)) != size) continue;
      MultiPoly sum;
      unsigned position = 0;
      for (std::size_t c = 0; c < k; ++c) {
        if (!(mask & (1u << c))) continue;
        const MultiPoly& entry = m(row, c);
        if (!entry.is_zero()) {
          MultiPoly term = entry * minors[mask & ~(1u << c)];
          if (position % 2 == 1) sum -= term; else sum += term;
        }
        ++position;
      }
      minors[mask] = std::move(sum);
    }
  }
  return minors[full];
}

MultiPoly sym_d_det(std::size_t j, std::size_t a, std::size_t b,
                    std::optional<std::size_t> lambda_var) {
  if (j < a || j > b) return MultiPoly();
  if (b == a) return MultiPoly(1);
  const std::size_t size = b - a;
  if (size > kSymbolicDetCap) {
    throw Error(ErrorKind::SizeCapExceeded, "sym_d_det capped at b-a = " +
                                                std::to_string(kSymbolicDetCap));
  }
  std::vector<MultiPoly> entries;
  entries.reserve(size * size);
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t col = a; col <= b; ++col) {
      if (col != j) entries.push_back(MultiPoly::variable(col + r));
    }
  }
  if (lambda_var) entries.back() += MultiPoly::variable(*lambda_var);
  return poly_det(PolyMatrix(size, size, std::move(entries)));
}

SymbolicCheck sym_verify_restated(std::size_t m, std::size_t n) {
  if (m < 1 || n < 1) {
    throw Error(ErrorKind::PreconditionViolation, "sym_verify_restated needs m, n >= 1");
  }
  if (m + n > kRestatedCap) {
    throw Error(ErrorKind::SizeCapExceeded,
                "sym_verify_restated capped at m+n <= " + std::to_string(kRestatedCap));
  }
  std::vector<MultiPoly> q;
  q.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q.push_back(sym_d_det(j, 0, i + m));

  SymbolicCheck out;
  out.lhs = poly_det(PolyMatrix(n, n, std::move(q)));
  out.rhs = sym_d_det(m + n, n, m + n);
  for (std::size_t i = 1; i < n; ++i) out.rhs *= sym_d_det(m + i, 0, m + i);
  out.difference = out.lhs - out.rhs;
  out.equal = out.difference.is_zero();
  return out;
}

bool sym_lambda_affinity(std::size_t j, std::size_t a, std::size_t b) {
  if (j < a || b == 0 || j > b - 1) {
    throw Error(ErrorKind::PreconditionViolation,
                "sym_lambda_affinity needs a <= j <= b-1, got j=" + std::to_string(j) +
                    " a=" + std::to_string(a) + " b=" + std::to_string(b));
  }
  if (b - a > kAffinityCap) {
    throw Error(ErrorKind::SizeCapExceeded,
                "sym_lambda_affinity capped at b-a <= " + std::to_string(kAffinityCap));
  }
  // First index past every moment the matrix reads.
  const std::size_t lambda = 2 * b - a;
  return sym_d_det(j, a, b, lambda) ==
         sym_d_det(j, a, b) + MultiPoly::variable(lambda) * sym_d_det(j, a, b - 1);
}

}  // namespace hankel
