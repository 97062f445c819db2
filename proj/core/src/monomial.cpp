#include "hyperres/monomial.hpp"

namespace hyperres {

namespace {
constexpr std::uint64_t kExpLimit = (1ull << 31); // per-exponent and degree cap

std::uint32_t checked_degree(const std::vector<std::uint32_t>& e) {
  std::uint64_t d = 0;
  for (auto x : e) d += x;
  if (d >= kExpLimit)
    fail(errc::exponent_overflow, "monomial degree exceeds 2^31");
  return static_cast<std::uint32_t>(d);
}
} // namespace

Monomial::Monomial(std::vector<std::uint32_t> exps)
    : exps_(std::move(exps)), degree_(checked_degree(exps_)) {}

Monomial Monomial::one(std::size_t nvars) {
  return Monomial(std::vector<std::uint32_t>(nvars, 0));
}

bool Monomial::divides(const Monomial& m) const {
  if (nvars() != m.nvars())
    fail(errc::ring_mismatch, "monomial variable count mismatch");
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > m.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
  if (nvars() != m.nvars())
    fail(errc::ring_mismatch, "monomial variable count mismatch");
  std::vector<std::uint32_t> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    std::uint64_t s = (std::uint64_t)exps_[i] + m.exps_[i];
    if (s >= kExpLimit) fail(errc::exponent_overflow, "exponent exceeds 2^31");
    e[i] = static_cast<std::uint32_t>(s);
  }
  return Monomial(std::move(e));
}

Monomial Monomial::quotient(const Monomial& m) const {
  std::vector<std::uint32_t> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (m.exps_[i] > exps_[i])
      fail(errc::invalid_argument, "monomial quotient is not a monomial");
    e[i] = exps_[i] - m.exps_[i];
  }
  return Monomial(std::move(e));
}

Monomial Monomial::pow(std::uint32_t e) const {
  std::vector<std::uint32_t> x(exps_.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::uint64_t s = (std::uint64_t)exps_[i] * e;
    if (s >= kExpLimit) fail(errc::exponent_overflow, "exponent exceeds 2^31");
    x[i] = static_cast<std::uint32_t>(s);
  }
  return Monomial(std::move(x));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars())
    fail(errc::ring_mismatch, "monomial variable count mismatch");
  std::vector<std::uint32_t> e(a.exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = a.exps_[i] > b.exps_[i] ? a.exps_[i] : b.exps_[i];
  return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.exps_.size(); ++i)
    if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
  return true;
}

std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars())
    fail(errc::ring_mismatch, "monomial variable count mismatch");
  if (a.degree() != b.degree())
    return a.degree() <=> b.degree();
  for (std::size_t i = a.nvars(); i-- > 0;) {
    if (a.exponent(i) != b.exponent(i)) {
      // smaller exponent at the first difference (from the back) wins
      return b.exponent(i) <=> a.exponent(i);
    }
  }
  return std::strong_ordering::equal;
}

} // namespace hyperres
