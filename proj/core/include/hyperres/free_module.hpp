#pragma once

#include <memory>
#include <vector>

#include "hyperres/polynomial.hpp"

namespace hyperres {

// Graded free module ⊕_i R(-t_i).  The generator in position i sits in
// degree t_i, so a homogeneous element of degree d has a degree-(d - t_i)
// polynomial in each position.
class FreeModule {
public:
  FreeModule(RingPtr ring, std::vector<int> twists)
      : ring_(std::move(ring)), twists_(std::move(twists)) {}

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return twists_.size(); }
  const std::vector<int>& twists() const { return twists_; }
  int twist(std::size_t i) const { return twists_[i]; }

  bool operator==(const FreeModule& o) const {
    return twists_ == o.twists_ && same_ring(ring_, o.ring_);
  }

private:
  RingPtr ring_;
  std::vector<int> twists_;
};

using ModulePtr = std::shared_ptr<const FreeModule>;

inline ModulePtr make_module(RingPtr ring, std::vector<int> twists) {
  return std::make_shared<const FreeModule>(std::move(ring), std::move(twists));
}

// position + monomial, ordered position-over-term (lower position wins,
// grevlex inside a position)
struct ModTerm {
  std::size_t pos;
  Monomial mono;
};

inline std::strong_ordering pot_compare(const ModTerm& a, const ModTerm& b) {
  if (a.pos != b.pos) return b.pos <=> a.pos; // lower position is greater
  return grevlex_compare(a.mono, b.mono);
}

class ModuleElement {
public:
  explicit ModuleElement(ModulePtr module);
  ModuleElement(ModulePtr module, std::vector<Polynomial> comps);

  const ModulePtr& module() const { return module_; }
  std::size_t rank() const { return comps_.size(); }
  const Polynomial& comp(std::size_t i) const { return comps_[i]; }
  const std::vector<Polynomial>& comps() const { return comps_; }
  void set_comp(std::size_t i, Polynomial p);

  bool is_zero() const;
  bool is_homogeneous() const;
  // degree as an element of ⊕R(-t_i); pre: homogeneous and nonzero
  int degree() const;

  std::size_t lead_position() const; // pre: nonzero
  ModTerm lead_term() const;
  std::uint32_t lead_coeff() const;

  ModuleElement operator+(const ModuleElement& o) const;
  ModuleElement operator-(const ModuleElement& o) const;
  ModuleElement operator-() const;
  ModuleElement scaled(std::uint32_t c) const;
  ModuleElement mono_mul(const Monomial& m, std::uint32_t c) const;
  ModuleElement poly_mul(const Polynomial& p) const;
  ModuleElement monic() const;

  bool operator==(const ModuleElement& o) const;

  static ModuleElement basis_vector(ModulePtr module, std::size_t i,
                                    const Polynomial& coeff);

private:
  ModulePtr module_;
  std::vector<Polynomial> comps_;
};

void require_same_module(const ModulePtr& a, const ModulePtr& b);

} // namespace hyperres
