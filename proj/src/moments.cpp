#include "hankel/moments.hpp"

#include <random>

#include "hankel/error.hpp"

namespace hankel {

Rational catalan(std::size_t n) {
  const mpz_class central = binomial(static_cast<long>(2 * n), static_cast<long>(n));
  return Rational(central, mpz_class(static_cast<unsigned long>(n + 1)));
}

MomentSequence MomentSequence::catalan_sequence() {
  return MomentSequence(Kind::catalan, nullptr, 0, "catalan");
}

MomentSequence MomentSequence::from_list(std::vector<Rational> values, std::string name) {
  if (values.empty()) {
    throw Error(ErrorKind::PreconditionViolation, "moment list must be nonempty");
  }
  return MomentSequence(Kind::explicit_list,
                        std::make_shared<const std::vector<Rational>>(std::move(values)), 0,
                        std::move(name));
}

MomentSequence MomentSequence::random_moments(std::uint64_t seed, std::size_t count,
                                              std::uint64_t bound) {
  if (count < 1 || bound < 1) {
    throw Error(ErrorKind::PreconditionViolation, "random_moments needs count >= 1 and bound >= 1");
  }
  std::mt19937_64 rng(seed);
  const auto b = static_cast<std::int64_t>(bound);
  // Nonzero numerators: draw from 2*bound values and skip over zero.
  std::uniform_int_distribution<std::int64_t> num_dist(0, 2 * b - 1);
  std::uniform_int_distribution<std::int64_t> den_dist(1, b);

  std::vector<Rational> terms;
  terms.reserve(count);
  terms.emplace_back(1);
  for (std::size_t i = 1; i < count; ++i) {
    const std::int64_t raw = num_dist(rng);
    const std::int64_t num = raw < b ? raw - b : raw - b + 1;
    const std::int64_t den = den_dist(rng);
    terms.emplace_back(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  }
  return MomentSequence(Kind::seeded_random,
                        std::make_shared<const std::vector<Rational>>(std::move(terms)), 0,
                        "random:" + std::to_string(seed) + ":" + std::to_string(count) + ":" +
                            std::to_string(bound));
}

MomentSequence MomentSequence::shift(const MomentSequence& seq, std::size_t k) {
  if (k == 0) return seq;
  // Shifts compose by adding offsets, so the id records the total shift.
  const std::string base = seq.kind_ == Kind::shifted ? seq.id_.substr(0, seq.id_.rfind(">>"))
                                                       : seq.id_;
  const std::size_t total = seq.offset_ + k;
  return MomentSequence(Kind::shifted, seq.terms_, total, base + ">>" + std::to_string(total));
}

Rational MomentSequence::operator()(std::size_t n) const {
  const std::size_t idx = n + offset_;
  if (!terms_) return catalan(idx);
  if (idx >= terms_->size()) {
    throw Error(ErrorKind::IndexBeyondKnownMoments,
                "moment index " + std::to_string(n) + " requested from '" + id_ + "' with " +
                    std::to_string(terms_->size() > offset_ ? terms_->size() - offset_ : 0) +
                    " known terms");
  }
  return (*terms_)[idx];
}

std::optional<std::size_t> MomentSequence::known_length() const {
  if (!terms_) return std::nullopt;
  return terms_->size() > offset_ ? terms_->size() - offset_ : 0;
}

bool MomentSequence::defines(std::size_t n) const {
  const auto len = known_length();
  return !len || n < *len;
}

std::size_t moments_required(std::size_t m, std::size_t n) {
  // Largest index read: mu(2m) via D_{m+1}(1, m+1) when n = 1, otherwise
  // mu(2(m+n)-3) via the bottom row of D_j(0, m+n-1).
  return n == 1 ? 2 * m + 1 : 2 * (m + n) - 2;
}

}  // namespace hankel
