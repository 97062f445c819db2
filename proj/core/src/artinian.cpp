#include "hyperres/artinian.hpp"

#include <functional>

#include "hyperres/betti.hpp"
#include "hyperres/errors.hpp"
#include "hyperres/groebner.hpp"

namespace hyperres {

namespace {

std::vector<Monomial> ideal_lead_monomials(RingPtr ring,
                                           const std::vector<Polynomial>& gens) {
  ModulePtr amb = rank1_module(std::move(ring));
  GroebnerEngine e(amb);
  for (const auto& p : gens)
    if (!p.is_zero()) e.add_generator(ModuleElement(amb, {p}));
  e.complete();
  std::vector<Monomial> out;
  for (const auto& lt : e.lead_terms()) out.push_back(lt.mono);
  return out;
}

// number of degree-d monomials not divisible by any of the leads
int count_standard(std::size_t nvars, const std::vector<Monomial>& leads,
                   int d) {
  int count = 0;
  std::vector<std::uint32_t> exps(nvars, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t var, int rem) {
    if (var + 1 == nvars) {
      exps[var] = static_cast<std::uint32_t>(rem);
      Monomial m(exps);
      bool divisible = false;
      for (const auto& l : leads)
        if (l.divides(m)) {
          divisible = true;
          break;
        }
      if (!divisible) ++count;
      return;
    }
    for (int k = 0; k <= rem; ++k) {
      exps[var] = static_cast<std::uint32_t>(k);
      rec(var + 1, rem - k);
    }
  };
  if (nvars == 0) return d == 0 ? 1 : 0;
  rec(0, d);
  return count;
}

// per-variable pure-power degrees in the lead ideal; -1 when a variable has
// none (quotient not Artinian), all zero when a constant lead makes the
// quotient vanish outright
std::vector<int> pure_power_degrees(std::size_t nvars,
                                    const std::vector<Monomial>& leads) {
  std::vector<int> pow(nvars, -1);
  for (const auto& m : leads) {
    if (m.is_one()) return std::vector<int>(nvars, 0);
    std::size_t support = 0, var = 0;
    for (std::size_t i = 0; i < nvars; ++i)
      if (m.exponent(i) > 0) {
        ++support;
        var = i;
      }
    if (support == 1) {
      int e = static_cast<int>(m.exponent(var));
      if (pow[var] < 0 || e < pow[var]) pow[var] = e;
    }
  }
  return pow;
}

} // namespace

int SocleProfile::total() const {
  int n = 0;
  for (const auto& [d, m] : dims) n += m;
  return n;
}

int SocleProfile::top_degree() const {
  return dims.empty() ? -1 : dims.rbegin()->first;
}

std::string SocleProfile::to_string() const { return counts_to_string(dims); }

std::vector<int> hilbert_function(RingPtr ring,
                                  const std::vector<Polynomial>& gens,
                                  int dmax) {
  std::vector<Monomial> leads = ideal_lead_monomials(ring, gens);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(dmax) + 1);
  for (int d = 0; d <= dmax; ++d)
    out.push_back(count_standard(ring->nvars(), leads, d));
  return out;
}

SocleProfile socle_profile(RingPtr ring, const std::vector<Polynomial>& gens) {
  const std::size_t n = ring->nvars();
  std::vector<Monomial> kleads = ideal_lead_monomials(ring, gens);
  std::vector<int> pows = pure_power_degrees(n, kleads);
  for (std::size_t i = 0; i < n; ++i)
    if (pows[i] < 0)
      fail(errc::not_artinian, "quotient by '" + ring->var_name(i) +
                                   "'-free lead ideal is not Artinian");
  SocleProfile prof;
  int cap = 0;
  for (int p : pows) {
    if (p == 0) return prof; // unit ideal, zero quotient
    cap += p - 1;
  }

  // ann(m) via one colon per variable, intersected
  std::vector<Polynomial> cur;
  bool first = true;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Polynomial> ci =
        colon_ideal(ring, gens, Polynomial::variable(ring, i));
    cur = first ? std::move(ci) : intersect_ideals(ring, cur, ci);
    first = false;
  }
  std::vector<Monomial> cleads = ideal_lead_monomials(ring, cur);
  for (int d = 0; d <= cap; ++d) {
    int s = count_standard(n, kleads, d) - count_standard(n, cleads, d);
    if (s > 0) prof.dims[d] = s;
  }
  return prof;
}

int a_invariant(const Polynomial& f) {
  if (f.is_zero() || !f.is_homogeneous())
    fail(errc::invalid_argument, "hypersurface must be homogeneous nonzero");
  return f.degree() - static_cast<int>(f.ring()->nvars());
}

GorensteinData gorenstein_data(RingPtr ring,
                               const std::vector<Polynomial>& gens) {
  GorensteinData out;
  out.resolution = resolve_over_P(ring, gens);
  if (out.resolution.length() != 3)
    fail(errc::not_grade_three,
         "resolution has length " + std::to_string(out.resolution.length()) +
             ", expected 3");
  const std::vector<int>& last = out.resolution.twists_at(3);
  if (last.size() != 1)
    fail(errc::not_gorenstein, "last Betti number is " +
                                   std::to_string(last.size()) +
                                   ", expected 1");
  out.b = last[0];
  out.mu = static_cast<int>(out.resolution.twists_at(1).size());
  return out;
}

} // namespace hyperres
