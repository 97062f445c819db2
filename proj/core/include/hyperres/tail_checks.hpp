#pragma once

#include <optional>
#include <utility>

#include "hyperres/frobenius.hpp"

namespace hyperres {

// n such that a equals b with every twist raised by n, if one exists
std::optional<int> uniform_shift(const TwistCounts& a, const TwistCounts& b);

// The three tail-theorem hypotheses with their numeric evidence:
// (a) mu(I) = mu(J) (and = mu(J^[q]) when q is supplied),
// (b) rank F_2 = dim soc R/J,
// (c) sigma_i + sigma_j != b + 2a for every index pair (i,j).
struct HypothesisVerdict {
  bool a_holds = false;
  bool b_holds = false;
  bool c_holds = false;
  int mu_I = 0;
  int mu_J = 0;
  std::optional<int> mu_Jq;
  int rank_F2 = 0;
  int socle_dim = 0;
  int b = 0;
  int a = 0;
  std::optional<std::pair<int, int>> offending_pair; // socle degrees summing to b+2a
  bool all() const { return a_holds && b_holds && c_holds; }
};

HypothesisVerdict check_hypotheses(RingPtr ring, const Polynomial& f,
                                   const std::vector<Polynomial>& I,
                                   std::optional<std::uint64_t> also_q = {});

// predicted tail: F_2 = ⊕R(-(b+a-sigma_i)), F_3 = ⊕R(-(sigma_i+3)),
// then F_{i+2} = F_i(-|f|)
struct TailPrediction {
  std::vector<int> F2; // sorted twists
  std::vector<int> F3;
  int period = 0; // |f|
  std::vector<int> at(std::size_t pos) const; // pos >= 2
};

TailPrediction predict_tail(const SocleProfile& socle, int b, int a,
                            int f_degree);

// classifier for |f| = 3 with pure socle: everything follows from the
// parity of the back twist b
struct PureSocleClass {
  int s = 0;
  int deg_d3 = 0;
  int deg_d4 = 0;
  int sigma = 0;
  bool operator==(const PureSocleClass& o) const = default;
};

PureSocleClass classify_pure_socle(int b, int mu);
PureSocleClass classify_pure_socle_checked(const Polynomial& f,
                                           const SocleProfile& socle, int b,
                                           int mu);

struct TheoremReport {
  HypothesisVerdict verdict;
  TailPrediction prediction;
  BettiTable computed; // R-resolution of R/J, positions 0..max_position
  std::size_t max_position = 4;
  bool match = false; // predicted twists == computed at positions 2..max
  std::optional<PureSocleClass> classifier; // when |f| = 3 and socle is pure
  std::string note;
};

TheoremReport verify_theorem(RingPtr ring, const Polynomial& f,
                             const std::vector<Polynomial>& I,
                             std::size_t max_position);

// Frobenius shift: n = b(q-1)/2; socle and tail of R/J^[q] against those of
// R/J shifted by n, plus the back-twist law b_e = q b.
struct ShiftReport {
  std::uint64_t q = 1;
  int b = 0;
  int a = 0;
  int b_e = 0;
  bool be_ok = false;         // b_e == q*b
  bool representable = false; // b(q-1) even; otherwise no integral shift exists
  long long n = 0;
  bool socle_shift_ok = false;
  bool tails_checked = false; // hypotheses + socle shift let us assert tails
  bool tail_shift_ok = false;
  std::string note;
};

ShiftReport check_frobenius_shift(RingPtr ring, const Polynomial& f,
                                  const std::vector<Polynomial>& I,
                                  std::uint64_t q,
                                  std::size_t max_position = 4);

// degrees of the minimal generators of (I:f)/I, ascending; equals
// {b-3-sigma_i} whenever the tail-theorem hypotheses hold
std::vector<int> canonical_generator_degrees(RingPtr ring, const Polynomial& f,
                                             const std::vector<Polynomial>& I);

// Tail comparison between the R-resolutions of (I:f)/I and R/J.  In the
// natural grading the compared twists agree outright; the canonical-module
// normalization omega = ((I:f)/I)(b-3) carries the extra shift b-3.
struct CanonicalTailReport {
  int b = 0;
  int omega_shift = 0; // b - 3
  std::vector<int> colon_gen_degrees;
  BettiTable colon_betti; // resolution of (I:f)/I
  BettiTable rj_betti;    // resolution of R/J
  std::size_t compare_to = 3;
  bool tails_equal = false;          // positions 3..compare_to match exactly
  std::optional<int> observed_shift; // uniform twist offset at those positions
  std::string note;
};

CanonicalTailReport compare_canonical_tail(RingPtr ring, const Polynomial& f,
                                           const std::vector<Polynomial>& I,
                                           std::size_t depth);

} // namespace hyperres
