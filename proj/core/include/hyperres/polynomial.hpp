#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyperres/monomial.hpp"
#include "hyperres/ring.hpp"

namespace hyperres {

struct Term {
  Monomial mono;
  std::uint32_t coeff; // canonical representative in [0, p), never 0
};

// Sparse polynomial: terms strictly descending in grevlex, no zero
// coefficients.  Degree of the zero polynomial is -1 by convention.
class Polynomial {
public:
  Polynomial() = default; // empty (no ring); only is_zero() is meaningful
  static Polynomial zero(RingPtr ring);
  static Polynomial constant(RingPtr ring, std::int64_t c);
  static Polynomial variable(RingPtr ring, std::size_t i);
  static Polynomial term(RingPtr ring, Monomial m, std::int64_t c);
  // normalizes: sorts, merges equal monomials, drops zeros
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  // trusted fast path: terms already sorted descending, nonzero, distinct
  static Polynomial from_sorted_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t nterms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  const Term& lead_term() const;
  const Monomial& lead_monomial() const { return lead_term().mono; }
  std::uint32_t lead_coeff() const { return lead_term().coeff; }

  // total degree of the leading term (== top degree under grevlex); -1 if zero
  int degree() const;
  bool is_homogeneous() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(std::uint32_t c) const;          // c * this
  Polynomial mono_mul(const Monomial& m, std::uint32_t c) const;
  Polynomial pow(std::uint32_t e) const;
  Polynomial monic() const; // pre: nonzero

  bool operator==(const Polynomial& o) const;

  std::string to_string() const; // canonical text, parses back to *this

private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

std::string monomial_to_string(const PolyRing& ring, const Monomial& m);

// Exact division by a single nonzero divisor: f = q*d + r where no term of
// r is divisible by lead(d).  Returns q and leaves r in *rem if given.
Polynomial poly_divmod(const Polynomial& f, const Polynomial& d,
                       Polynomial* rem);

} // namespace hyperres
