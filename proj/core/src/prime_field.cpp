#include "hyperres/prime_field.hpp"

namespace hyperres {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31))
    fail(errc::invalid_argument, "field modulus must be < 2^31");
  if (!is_prime_u32(p))
    fail(errc::invalid_argument,
         "field modulus " + std::to_string(p) + " is not prime");
}

PrimeField::elem PrimeField::inv(elem a) const {
  if (a == 0) fail(errc::zero_divisor_argument, "inverse of 0 in F_p");
  // extended Euclid on (a, p)
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<elem>(t);
}

PrimeField::elem PrimeField::pow(elem a, std::uint64_t e) const {
  elem acc = 1 % p_;
  elem base = a;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

} // namespace hyperres
