#pragma once

#include <map>
#include <string>
#include <vector>

#include "hyperres/resolution.hpp"

namespace hyperres {

// socle degrees with multiplicities of an Artinian quotient
struct SocleProfile {
  std::map<int, int> dims; // degree -> dimension
  int total() const;
  int top_degree() const; // -1 when empty
  std::string to_string() const;

  bool operator==(const SocleProfile& o) const = default;
};

// Hilbert function of P/(gens) in degrees 0..dmax.
std::vector<int> hilbert_function(RingPtr ring,
                                  const std::vector<Polynomial>& gens,
                                  int dmax);

// Socle of the Artinian quotient P/(gens), computed as the annihilator of
// the irrelevant maximal ideal via one colon per variable; throws
// NotArtinian when the quotient has positive dimension.
SocleProfile socle_profile(RingPtr ring, const std::vector<Polynomial>& gens);

// a-invariant of the hypersurface ring P/(f) in three variables
int a_invariant(const Polynomial& f);

// Data read off the finite resolution of a grade-3 Gorenstein quotient:
// the back twist b (the twist of the rank-1 last module) and the number of
// minimal generators mu.
struct GorensteinData {
  int b = 0;
  int mu = 0;
  ResolutionPrefix resolution;
};

GorensteinData gorenstein_data(RingPtr ring, const std::vector<Polynomial>& gens);

} // namespace hyperres
