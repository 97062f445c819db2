#pragma once

// Dense degree-by-degree reference computations used to cross-check the
// sparse kernel: explicit monomial bases and naive row reduction, no normal
// forms and no Groebner machinery.  Slow but simple.

#include <map>
#include <vector>

#include "hyperres/polynomial.hpp"
#include "hyperres/resolution.hpp"

namespace hyperres::oracle {

// all monomials of total degree d, in a fixed enumeration order
std::vector<Monomial> degree_monomials(const RingPtr& ring, int d);

// dim_k of the degree-d slice of the ideal (gens)
int ideal_slice_rank(const RingPtr& ring, const std::vector<Polynomial>& gens,
                     int d);

// dim_k (P/(gens))_d
int quotient_hilbert(const RingPtr& ring, const std::vector<Polynomial>& gens,
                     int d);

// membership of a homogeneous g in (gens) by slice row reduction
bool in_ideal(const RingPtr& ring, const std::vector<Polynomial>& gens,
              const Polynomial& g);

// socle dimensions by degree of the Artinian quotient P/(gens), via the
// kernel of simultaneous multiplication by every variable
std::map<int, int> socle_dims(const RingPtr& ring,
                              const std::vector<Polynomial>& gens);

// beta_{i,j} = dim Tor_i(P/(gens), k)_j for j <= max_degree, from the Koszul
// complex on the variables
std::map<int, int> koszul_betti(const RingPtr& ring,
                                const std::vector<Polynomial>& gens, int i,
                                int max_degree);

// dim_k ((gens) : f)_d
int colon_slice_dim(const RingPtr& ring, const std::vector<Polynomial>& gens,
                    const Polynomial& f, int d);

// Graded exactness of a resolution prefix in every degree <= degree_bound:
// slice compositions vanish and ker(d_k)_d = im(d_{k+1})_d at homological
// positions k = 1..length-1.  Works over P and over P/(f).
bool exact_prefix(const ResolutionPrefix& prefix, int degree_bound);

} // namespace hyperres::oracle
