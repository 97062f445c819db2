#pragma once

#include <optional>
#include <vector>

#include "hyperres/betti.hpp"
#include "hyperres/graded_matrix.hpp"

namespace hyperres {

enum class ResolutionKind { over_polynomial_ring, over_hypersurface };

// Prefix of a minimal graded free resolution.  maps[k] : F_{k+1} -> F_k,
// with F_0 = ⊕R(-t) for t in ambient_twists.  Over a hypersurface R = P/(f)
// entries are stored as their canonical representatives (normal forms modulo
// f) and compositions vanish modulo f.
struct ResolutionPrefix {
  RingPtr ring;
  ResolutionKind kind = ResolutionKind::over_polynomial_ring;
  Polynomial modulus; // zero when over the polynomial ring
  std::vector<int> ambient_twists{0};
  std::vector<GradedMatrix> maps;

  std::size_t length() const { return maps.size(); }
  const std::vector<int>& twists_at(std::size_t pos) const;
  std::vector<std::vector<int>> position_twists() const;
  BettiTable betti() const;
  bool is_complex() const; // consecutive compositions vanish (mod modulus)
  bool is_minimal() const; // every map homogeneous with no constant entries
};

// Minimal free resolution of P/(gens) over the polynomial ring (finite;
// computed to the end).  The unit ideal is rejected.
ResolutionPrefix resolve_over_P(RingPtr ring,
                                const std::vector<Polynomial>& gens);

// Prefix with max_maps differentials of the minimal R-free resolution of
// R/(image of gens), R = P/(f).
ResolutionPrefix resolve_over_R(RingPtr ring, const Polynomial& f,
                                const std::vector<Polynomial>& gens,
                                std::size_t max_maps);

// Prefix of the minimal R-free resolution of the subquotient
// (span(gens) + (modulo)) / (modulo), which must be killed by f.
ResolutionPrefix resolve_subquotient_over_R(RingPtr ring, const Polynomial& f,
                                            const std::vector<Polynomial>& gens,
                                            const std::vector<Polynomial>& modulo,
                                            std::size_t max_maps);

// Cancels unit entries (Gaussian pruning with Schur complements) until the
// complex is minimal; homology is unchanged.
void minimize_complex(ResolutionPrefix& prefix);

// Smallest position i0 such that for every comparable k >= i0 the twists in
// position k+2 are those in position k shifted by period_degree; nullopt if
// no such i0, PrefixTooShort if fewer than three positions exist.
std::optional<std::size_t> detect_periodicity(const ResolutionPrefix& prefix,
                                              int period_degree);

// Indices (ascending (degree, index)) of a minimal generating subset of the
// subquotient (span(cands) + (modulo)) / (modulo) over the polynomial ring.
std::vector<std::size_t> minimal_modulo_subset(
    RingPtr ring, const std::vector<Polynomial>& cands,
    const std::vector<Polynomial>& modulo);

} // namespace hyperres
