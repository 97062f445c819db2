#include "hyperres/frobenius.hpp"

#include <future>

#include "hyperres/errors.hpp"

namespace hyperres {

std::uint32_t frobenius_exponent(std::uint32_t p, std::uint64_t q) {
  if (q == 0) fail(errc::not_power_of_p, "q must be positive");
  std::uint32_t e = 0;
  std::uint64_t v = q;
  while (v > 1) {
    if (v % p != 0)
      fail(errc::not_power_of_p,
           std::to_string(q) + " is not a power of " + std::to_string(p));
    v /= p;
    ++e;
  }
  return e;
}

Polynomial frobenius_power(const Polynomial& g, std::uint64_t q) {
  if (g.is_zero()) return g;
  const RingPtr& ring = g.ring();
  frobenius_exponent(ring->field().modulus(), q);
  std::vector<Term> out;
  out.reserve(g.nterms());
  for (const auto& t : g.terms()) {
    std::vector<std::uint32_t> exps;
    exps.reserve(t.mono.nvars());
    for (std::size_t i = 0; i < t.mono.nvars(); ++i) {
      std::uint64_t e = static_cast<std::uint64_t>(t.mono.exponent(i)) * q;
      if (e >= (1u << 31)) fail(errc::exponent_overflow, "exponent overflow");
      exps.push_back(static_cast<std::uint32_t>(e));
    }
    // c^(p^e) = c in F_p; the exponent map preserves grevlex order
    out.push_back(Term{Monomial(std::move(exps)), t.coeff});
  }
  return Polynomial::from_sorted_terms(ring, std::move(out));
}

std::vector<Polynomial> bracket_power(const std::vector<Polynomial>& gens,
                                      std::uint64_t q) {
  std::vector<Polynomial> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(frobenius_power(g, q));
  return out;
}

namespace {

FrobeniusRow sweep_row(RingPtr ring, const Polynomial& f,
                       const std::vector<Polynomial>& ideal, std::uint32_t e,
                       const SweepOptions& opts) {
  FrobeniusRow row;
  row.e = e;
  row.q = 1;
  for (std::uint32_t k = 0; k < e; ++k) row.q *= ring->field().modulus();
  try {
    std::vector<Polynomial> je = bracket_power(ideal, row.q);
    if (opts.with_socle) {
      std::vector<Polynomial> k = je;
      k.push_back(f);
      row.socle = socle_profile(ring, k);
    }
    if (opts.with_resolution)
      row.betti = resolve_over_R(ring, f, je, opts.max_maps).betti();
    row.ok = true;
  } catch (const std::exception& ex) {
    row.ok = false;
    row.error = ex.what();
  }
  return row;
}

} // namespace

std::vector<FrobeniusRow> run_sweep(RingPtr ring, const Polynomial& f,
                                    const std::vector<Polynomial>& ideal,
                                    const SweepOptions& opts) {
  if (opts.e_max < opts.e_min)
    fail(errc::invalid_argument, "empty exponent range");
  std::vector<FrobeniusRow> rows;
  if (opts.parallel) {
    std::vector<std::future<FrobeniusRow>> futs;
    for (std::uint32_t e = opts.e_min; e <= opts.e_max; ++e)
      futs.push_back(std::async(std::launch::async, sweep_row, ring, f, ideal,
                                e, opts));
    for (auto& fu : futs) rows.push_back(fu.get());
  } else {
    for (std::uint32_t e = opts.e_min; e <= opts.e_max; ++e)
      rows.push_back(sweep_row(ring, f, ideal, e, opts));
  }
  return rows;
}

} // namespace hyperres
