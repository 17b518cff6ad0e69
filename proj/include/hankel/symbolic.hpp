#pragma once

#include <cstddef>
#include <optional>

#include "hankel/matrix.hpp"
#include "hankel/multipoly.hpp"

namespace hankel {

// Symbolic counterparts of the determinant family: indeterminate x_k stands
// for the moment mu(k), with mu(0) left free.

using PolyMatrix = DenseMatrix<MultiPoly>;

/// Largest matrix sym_d_det expands.
inline constexpr std::size_t kSymbolicDetCap = 6;
/// Largest b - a accepted by sym_lambda_affinity.
inline constexpr std::size_t kAffinityCap = 5;
/// Largest m + n accepted by sym_verify_restated.
inline constexpr std::size_t kRestatedCap = 5;

/// Laplace expansion memoized over column subsets; no division anywhere.
/// The empty matrix has determinant 1. SizeCapExceeded above kSymbolicDetCap.
MultiPoly poly_det(const PolyMatrix& m);

/// D_j(mu; a, b; lambda) as a polynomial in x_a .. x_{2b-a-1}, plus the
/// indeterminate x_{*lambda_var} in the corner when given. Zero for j outside
/// [a, b]; 1 for the empty matrix b == a == j.
MultiPoly sym_d_det(std::size_t j, std::size_t a, std::size_t b,
                    std::optional<std::size_t> lambda_var = std::nullopt);

struct SymbolicCheck {
  bool equal = false;
  MultiPoly lhs;
  MultiPoly rhs;
  MultiPoly difference;  // lhs - rhs
};

/// Division-free identity as a polynomial identity. Requires m, n >= 1 and
/// m + n <= kRestatedCap.
SymbolicCheck sym_verify_restated(std::size_t m, std::size_t n);

/// D_j(a, b; lambda) == D_j(a, b) + lambda * D_j(a, b-1) as polynomials.
/// Requires a <= j <= b-1 (PreconditionViolation) and b - a <= kAffinityCap.
bool sym_lambda_affinity(std::size_t j, std::size_t a, std::size_t b);

}  // namespace hankel
