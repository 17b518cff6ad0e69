#pragma once

#include <cstddef>
#include <string_view>

#include "hankel/matrix.hpp"
#include "hankel/moments.hpp"
#include "hankel/rational.hpp"

namespace hankel {

enum class Engine { laplace, bareiss, dodgson, automatic };

std::string_view engine_name(Engine engine) noexcept;
/// "laplace", "bareiss", "dodgson" or "auto"; throws ParseError otherwise.
Engine parse_engine(std::string_view name);

/// Largest matrix the cofactor-expansion engine accepts.
inline constexpr std::size_t kLaplaceCap = 8;

struct DetResult {
  Rational value;
  Engine engine = Engine::bareiss;  // engine that produced the value
  bool fallback = false;            // condensation hit a zero interior entry
  std::size_t max_bits = 0;         // largest intermediate numerator, in bits
};

// All engines require a square matrix of size >= 1 (NotSquare otherwise).

/// Cofactor expansion along the first row. SizeCapExceeded above kLaplaceCap.
DetResult laplace_det(const Matrix& m);

/// Fraction-free elimination. Rows are first scaled to integers by the lcm of
/// their denominators; elimination then runs over mpz with exact division
/// and row swaps on zero pivots.
DetResult bareiss_det(const Matrix& m);

/// Dodgson condensation: each layer entry is the connected 2x2 minor of the
/// previous layer divided by the matching interior entry two layers back.
/// A zero in the interior of any layer switches the whole computation to
/// bareiss_det and sets `fallback`.
DetResult dodgson_det(const Matrix& m);

/// Dispatch; `automatic` selects bareiss.
DetResult det(const Matrix& m, Engine engine = Engine::automatic);

inline Rational determinant(const Matrix& m, Engine engine = Engine::automatic) {
  return det(m, engine).value;
}

/// Entry (i, j) = seq(i + j + offset); size >= 1.
Matrix hankel_matrix(const MomentSequence& seq, std::size_t offset, std::size_t size);

/// Parameters of D_j(mu; a, b; lambda): moment columns a..b with column j
/// removed, rows 0..b-a-1, and lambda added to the bottom-right entry.
struct DSpec {
  std::size_t j = 0;
  std::size_t a = 0;
  std::size_t b = 0;
  Rational lambda{0};
};

/// The (b-a)x(b-a) matrix of spec. Requires a <= j <= b (SpecOutOfRange) and
/// b > a; reads moments up to index 2b-a-1.
Matrix d_matrix(const MomentSequence& seq, const DSpec& spec);

/// D_j(mu; a, b; lambda). Zero when j lies outside [a, b]. For b == a the
/// matrix is empty and the value is 1 when j == a.
Rational d_det(const MomentSequence& seq, const DSpec& spec, Engine engine = Engine::automatic);

}  // namespace hankel
