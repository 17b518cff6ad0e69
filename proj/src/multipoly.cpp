#include "hankel/multipoly.hpp"

#include <algorithm>
#include <numeric>

#include "hankel/error.hpp"

namespace hankel {

namespace {

unsigned degree_of(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

void trim(Exponents& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

}  // namespace

bool GradedLexLess::operator()(const Exponents& lhs, const Exponents& rhs) const {
  const unsigned dl = degree_of(lhs);
  const unsigned dr = degree_of(rhs);
  if (dl != dr) return dl < dr;
  const std::size_t len = std::max(lhs.size(), rhs.size());
  for (std::size_t i = 0; i < len; ++i) {
    const unsigned l = i < lhs.size() ? lhs[i] : 0;
    const unsigned r = i < rhs.size() ? rhs[i] : 0;
    if (l != r) return l < r;
  }
  return false;
}

MultiPoly::MultiPoly(long c) : MultiPoly(mpz_class(c)) {}

MultiPoly::MultiPoly(const mpz_class& c) {
  if (c != 0) terms_.emplace(Exponents{}, c);
}

MultiPoly MultiPoly::variable(std::size_t index) {
  Exponents e(index + 1, 0);
  e[index] = 1;
  return monomial(std::move(e));
}

MultiPoly MultiPoly::monomial(Exponents exps, const mpz_class& c) {
  MultiPoly out;
  trim(exps);
  out.add_term(exps, c);
  return out;
}

void MultiPoly::add_term(const Exponents& exps, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

std::size_t MultiPoly::total_degree() const {
  return terms_.empty() ? 0 : degree_of(terms_.rbegin()->first);
}

std::size_t MultiPoly::variable_count() const {
  std::size_t out = 0;
  for (const auto& [e, c] : terms_) out = std::max(out, e.size());
  return out;
}

Rational MultiPoly::eval(std::span<const Rational> point) const {
  if (point.size() < variable_count()) {
    throw Error(ErrorKind::PreconditionViolation,
                "evaluation point has " + std::to_string(point.size()) + " coordinates, need " +
                    std::to_string(variable_count()));
  }
  Rational sum{0};
  for (const auto& [e, c] : terms_) {
    Rational term{c};
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
    sum += term;
  }
  return sum;
}

std::string MultiPoly::to_string(std::string_view var_prefix) const {
  if (terms_.empty()) return "0";
  std::string out;
  // Highest order first reads naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const mpz_class mag = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += std::string(var_prefix) + std::to_string(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += mono;
    }
  }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) { return *this = *this * rhs; }

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
  MultiPoly out;
  for (const auto& [el, cl] : lhs.terms_) {
    for (const auto& [er, cr] : rhs.terms_) {
      Exponents e(std::max(el.size(), er.size()), 0);
      for (std::size_t i = 0; i < el.size(); ++i) e[i] += el[i];
      for (std::size_t i = 0; i < er.size(); ++i) e[i] += er[i];
      out.add_term(e, cl * cr);
    }
  }
  return out;
}

MultiPoly multipoly_arith(const MultiPoly& a, const MultiPoly& b, PolyOp op) {
  switch (op) {
    case PolyOp::add: return a + b;
    case PolyOp::sub: return a - b;
    case PolyOp::mul: return a * b;
  }
  return {};
}

}  // namespace hankel
