#pragma once

#include <cstdint>

#include "hyperres/errors.hpp"

namespace hyperres {

bool is_prime_u32(std::uint32_t n);

// F_p for a prime p < 2^31.  Elements are canonical representatives in
// [0, p) stored as uint32_t; all products go through 64-bit intermediates.
class PrimeField {
public:
  using elem = std::uint32_t;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }

  elem add(elem a, elem b) const {
    std::uint32_t s = a + b; // p < 2^31 so no wrap
    return s >= p_ ? s - p_ : s;
  }
  elem sub(elem a, elem b) const { return a >= b ? a - b : a + p_ - b; }
  elem neg(elem a) const { return a == 0 ? 0 : p_ - a; }
  elem mul(elem a, elem b) const {
    return static_cast<elem>((std::uint64_t)a * b % p_);
  }
  elem inv(elem a) const; // extended Euclid; throws on 0
  elem pow(elem a, std::uint64_t e) const;
  elem from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<elem>(r);
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
  std::uint32_t p_;
};

} // namespace hyperres
