#pragma once

#include <cstdint>
#include <string>

#include "hyperres/resolution.hpp"

namespace hyperres {

// D3 * D4 = f*Id = D4 * D3 over the polynomial ring (the second product
// after the compatible twist shift)
struct MatrixFactorization {
  GradedMatrix D3;
  GradedMatrix D4;
  Polynomial f;
};

// Lifts the 2-periodic tail (maps into positions 3 and 4) of a hypersurface
// resolution to the polynomial ring and corrects D4 so that both products
// equal f times the identity.
MatrixFactorization extract_mf(const ResolutionPrefix& prefix);

struct MfCheck {
  bool ok = true;
  std::string witness; // first failing entry when !ok
};

MfCheck verify_mf(const MatrixFactorization& mf);

// skew-symmetric with zero diagonal (the diagonal condition matters in
// characteristic 2)
bool is_alternating(const GradedMatrix& m);

struct AlternatingPair {
  GradedMatrix Phi;
  GradedMatrix Psi;
  GradedMatrix epsilon; // invertible degree-0 change of basis used
  Polynomial f;
};

// Solves a linear system for an invertible degree-0 endomorphism eps with
// Phi = D3 * eps^T alternating, then Psi = (eps^T)^-1 * D4.  The solution
// space is sampled (seeded, bounded retries) for an invertible element.
AlternatingPair alternating_normalize(const MatrixFactorization& mf,
                                      std::uint64_t seed = 0);

Polynomial matrix_determinant(const GradedMatrix& m);
GradedMatrix classical_adjoint(const GradedMatrix& m);

// pre: phi alternating with nonzero determinant (SingularInput otherwise);
// tests alternation of the classical adjoint
bool adjoint_alternating_check(const GradedMatrix& phi);

// graded transpose: entry (i,j) moves to (j,i), twists negate
GradedMatrix transpose(const GradedMatrix& m);
// same entries with all twists raised by s
GradedMatrix shifted(const GradedMatrix& m, int s);
// inverse of an invertible degree-0 endomorphism via its degree-filtered
// block-triangular structure; CorrectionNotInvertible if singular
GradedMatrix invert_unit_endo(const GradedMatrix& u);

} // namespace hyperres
