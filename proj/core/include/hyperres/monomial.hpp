#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "hyperres/errors.hpp"

namespace hyperres {

// Exponent vector with cached total degree.  Exponents are 32-bit; the
// Frobenius sweeps push single exponents into the thousands, nowhere near
// the limit, but products are overflow-checked anyway.
class Monomial {
public:
  explicit Monomial(std::vector<std::uint32_t> exps);
  static Monomial one(std::size_t nvars);

  std::size_t nvars() const { return exps_.size(); }
  std::uint32_t degree() const { return degree_; }
  std::uint32_t exponent(std::size_t i) const { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& m) const;
  Monomial operator*(const Monomial& m) const;
  // *this / m, pre: m.divides(*this)
  Monomial quotient(const Monomial& m) const;
  Monomial pow(std::uint32_t e) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static bool coprime(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }

private:
  std::vector<std::uint32_t> exps_;
  std::uint32_t degree_;
};

// Graded reverse lexicographic order: larger total degree wins; on equal
// degree scan exponents from the last variable towards the first, and at
// the first position where they differ the monomial with the *smaller*
// exponent is the larger one.
std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b);

inline bool grevlex_less(const Monomial& a, const Monomial& b) {
  return grevlex_compare(a, b) == std::strong_ordering::less;
}
inline bool grevlex_greater(const Monomial& a, const Monomial& b) {
  return grevlex_compare(a, b) == std::strong_ordering::greater;
}

} // namespace hyperres
