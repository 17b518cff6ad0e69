#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hankel/rational.hpp"

namespace hankel {

/// n-th Catalan number (1/(n+1))·binom(2n, n).
Rational catalan(std::size_t n);

/// An indexed moment source mu(0), mu(1), ...
///
/// Values are immutable once constructed: finite kinds own a fully
/// materialized term list, the Catalan kind is a pure function of the index,
/// and shifting only adjusts an offset. Copies share storage, so a sequence
/// may be read from any number of threads.
class MomentSequence {
 public:
  enum class Kind { catalan, explicit_list, seeded_random, shifted };

  static MomentSequence catalan_sequence();
  static MomentSequence from_list(std::vector<Rational> values, std::string name = "list");

  /// Term 0 is exactly 1; terms 1..count-1 have numerator drawn uniformly from
  /// [-bound, bound] \ {0} and denominator from [1, bound], then reduced.
  static MomentSequence random_moments(std::uint64_t seed, std::size_t count, std::uint64_t bound);

  /// i -> seq(i + k).
  static MomentSequence shift(const MomentSequence& seq, std::size_t k);

  /// Throws IndexBeyondKnownMoments past the known length.
  Rational operator()(std::size_t n) const;
  Rational at(std::size_t n) const { return (*this)(n); }

  Kind kind() const noexcept { return kind_; }
  const std::string& id() const noexcept { return id_; }

  /// Number of addressable terms; empty for unbounded sequences.
  std::optional<std::size_t> known_length() const;

  /// True when index n (and everything before it) can be read.
  bool defines(std::size_t n) const;

 private:
  MomentSequence(Kind kind, std::shared_ptr<const std::vector<Rational>> terms,
                 std::size_t offset, std::string id)
      : kind_(kind), terms_(std::move(terms)), offset_(offset), id_(std::move(id)) {}

  Kind kind_;
  std::shared_ptr<const std::vector<Rational>> terms_;  // null => Catalan
  std::size_t offset_ = 0;
  std::string id_;
};

/// Count of leading moments the division-free identity reads for (m, n); never
/// more than 2(m+n)-1. The original form and the reduction need no more.
std::size_t moments_required(std::size_t m, std::size_t n);

}  // namespace hankel
