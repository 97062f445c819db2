#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyperres/artinian.hpp"

namespace hyperres {

// e with p^e == q; throws NotAPowerOfP otherwise
std::uint32_t frobenius_exponent(std::uint32_t p, std::uint64_t q);

// q-th power of a polynomial in characteristic p for q = p^e: coefficients
// are fixed by Frobenius, exponents scale by q
Polynomial frobenius_power(const Polynomial& g, std::uint64_t q);

// bracket power: each generator raised to the q-th power
std::vector<Polynomial> bracket_power(const std::vector<Polynomial>& gens,
                                      std::uint64_t q);

struct SweepOptions {
  std::uint32_t e_min = 0;
  std::uint32_t e_max = 0;
  std::size_t max_maps = 4;
  bool parallel = false;
  bool with_socle = true;
  bool with_resolution = true;
};

// one bracket-power row: socle degrees of P/(I^[q] + f) and the Betti table
// of the R-resolution prefix of R/I^[q]
struct FrobeniusRow {
  std::uint32_t e = 0;
  std::uint64_t q = 1;
  bool ok = false;
  std::string error;
  SocleProfile socle;
  BettiTable betti;
};

std::vector<FrobeniusRow> run_sweep(RingPtr ring, const Polynomial& f,
                                    const std::vector<Polynomial>& ideal,
                                    const SweepOptions& opts);

} // namespace hyperres
