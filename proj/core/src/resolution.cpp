#include "hyperres/resolution.hpp"

#include <algorithm>
#include <utility>

#include "hyperres/errors.hpp"
#include "hyperres/groebner.hpp"

namespace hyperres {

namespace {

std::vector<Polynomial> nonzero_of(const std::vector<Polynomial>& v) {
  std::vector<Polynomial> out;
  for (const auto& p : v)
    if (!p.is_zero()) out.push_back(p);
  return out;
}

ModuleElement nf_entries(const ModuleElement& v, const GroebnerBasis& fgb) {
  std::vector<Polynomial> comps;
  comps.reserve(v.rank());
  for (std::size_t i = 0; i < v.rank(); ++i)
    comps.push_back(fgb.normal_form(v.comp(i)));
  return ModuleElement(v.module(), std::move(comps));
}

std::vector<ModuleElement> select(const std::vector<ModuleElement>& v,
                                  const std::vector<std::size_t>& idx) {
  std::vector<ModuleElement> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(v[i]);
  return out;
}

// minimal generators of the syzygies of the columns of `map`
std::vector<ModuleElement> p_syzygy_step(const GradedMatrix& map) {
  ModulePtr target = map.target_module();
  std::vector<ModuleElement> syz = module_syzygies(target, map.columns());
  ModulePtr src = map.source_module();
  std::vector<ModuleElement> cand;
  cand.reserve(syz.size());
  for (const auto& s : syz) cand.push_back(ModuleElement(src, s.comps()));
  return select(cand, minimal_generator_subset(src, cand, nullptr));
}

// Minimal generators of the syzygies of the columns of `map` modulo f:
// augment with f*e_i, take polynomial-ring syzygies, keep the cofactors of
// the columns, reduce entries to canonical form, prune.
std::vector<ModuleElement> r_syzygy_step(const GradedMatrix& map,
                                         const Polynomial& f,
                                         const GroebnerBasis& fgb) {
  ModulePtr target = map.target_module();
  std::vector<ModuleElement> aug = map.columns();
  const std::size_t m = aug.size();
  for (std::size_t i = 0; i < target->rank(); ++i)
    aug.push_back(ModuleElement::basis_vector(target, i, f));
  std::vector<ModuleElement> syz = module_syzygies(target, aug);
  ModulePtr src = map.source_module();
  std::vector<ModuleElement> cand;
  for (const auto& s : syz) {
    std::vector<Polynomial> comps(s.comps().begin(),
                                  s.comps().begin() +
                                      static_cast<std::ptrdiff_t>(m));
    ModuleElement red = nf_entries(ModuleElement(src, std::move(comps)), fgb);
    if (!red.is_zero()) cand.push_back(std::move(red));
  }
  return select(cand, minimal_generator_subset(src, cand, &f));
}

void require_hypersurface(const Polynomial& f) {
  if (f.is_zero() || !f.is_homogeneous() || f.degree() < 1)
    fail(errc::invalid_argument,
         "hypersurface must be homogeneous of positive degree");
}

} // namespace

const std::vector<int>& ResolutionPrefix::twists_at(std::size_t pos) const {
  return pos == 0 ? ambient_twists : maps[pos - 1].col_twists();
}

std::vector<std::vector<int>> ResolutionPrefix::position_twists() const {
  std::vector<std::vector<int>> out;
  out.reserve(length() + 1);
  for (std::size_t i = 0; i <= length(); ++i) out.push_back(twists_at(i));
  return out;
}

BettiTable ResolutionPrefix::betti() const {
  BettiTable t;
  for (std::size_t i = 0; i <= length(); ++i)
    t.push_row(twist_counts(twists_at(i)));
  return t;
}

bool ResolutionPrefix::is_complex() const {
  if (maps.size() < 2) return true;
  const bool over_r = kind == ResolutionKind::over_hypersurface;
  GroebnerBasis fgb = over_r
                          ? ideal_groebner(ring, {modulus})
                          : GroebnerBasis(rank1_module(ring), {});
  for (std::size_t k = 0; k + 1 < maps.size(); ++k) {
    GradedMatrix prod = maps[k] * maps[k + 1];
    for (std::size_t i = 0; i < prod.rows(); ++i)
      for (std::size_t j = 0; j < prod.cols(); ++j) {
        const Polynomial& e = prod.at(i, j);
        if (e.is_zero()) continue;
        if (!over_r || !fgb.normal_form(e).is_zero()) return false;
      }
  }
  return true;
}

bool ResolutionPrefix::is_minimal() const {
  for (const auto& m : maps)
    if (!m.is_minimal()) return false;
  return true;
}

ResolutionPrefix resolve_over_P(RingPtr ring,
                                const std::vector<Polynomial>& gens) {
  ResolutionPrefix pre;
  pre.ring = ring;
  pre.kind = ResolutionKind::over_polynomial_ring;
  pre.modulus = Polynomial::zero(ring);
  pre.ambient_twists = {0};
  ModulePtr amb = rank1_module(ring);
  std::vector<ModuleElement> elems = as_elements(amb, gens);
  std::vector<ModuleElement> cols =
      select(elems, minimal_generator_subset(amb, elems, nullptr));
  if (cols.empty()) return pre; // zero ideal
  for (const auto& c : cols)
    if (c.degree() == 0)
      fail(errc::invalid_argument, "cannot resolve the zero module (unit ideal)");
  ModulePtr target = amb;
  while (true) {
    pre.maps.push_back(GradedMatrix::from_columns(target, cols));
    if (pre.maps.size() > ring->nvars())
      fail(errc::invalid_argument,
           "resolution over the polynomial ring failed to terminate");
    std::vector<ModuleElement> next = p_syzygy_step(pre.maps.back());
    if (next.empty()) break;
    target = pre.maps.back().source_module();
    cols = std::move(next);
  }
  return pre;
}

ResolutionPrefix resolve_over_R(RingPtr ring, const Polynomial& f,
                                const std::vector<Polynomial>& gens,
                                std::size_t max_maps) {
  require_hypersurface(f);
  ResolutionPrefix pre;
  pre.ring = ring;
  pre.kind = ResolutionKind::over_hypersurface;
  pre.modulus = f;
  pre.ambient_twists = {0};
  GroebnerBasis fgb = ideal_groebner(ring, {f});
  ModulePtr amb = rank1_module(ring);
  std::vector<ModuleElement> elems = as_elements(amb, gens);
  std::vector<std::size_t> kept = minimal_generator_subset(amb, elems, &f);
  if (kept.empty() || max_maps == 0) return pre; // R itself, or nothing asked
  std::vector<ModuleElement> cols;
  for (std::size_t i : kept) {
    ModuleElement red = nf_entries(elems[i], fgb);
    if (red.degree() == 0)
      fail(errc::invalid_argument, "cannot resolve the zero module (unit ideal)");
    cols.push_back(std::move(red));
  }
  ModulePtr target = amb;
  while (true) {
    pre.maps.push_back(GradedMatrix::from_columns(target, cols));
    if (pre.maps.size() >= max_maps) break;
    std::vector<ModuleElement> next = r_syzygy_step(pre.maps.back(), f, fgb);
    if (next.empty()) break;
    target = pre.maps.back().source_module();
    cols = std::move(next);
  }
  return pre;
}

ResolutionPrefix resolve_subquotient_over_R(RingPtr ring, const Polynomial& f,
                                            const std::vector<Polynomial>& gens,
                                            const std::vector<Polynomial>& modulo,
                                            std::size_t max_maps) {
  require_hypersurface(f);
  ResolutionPrefix pre;
  pre.ring = ring;
  pre.kind = ResolutionKind::over_hypersurface;
  pre.modulus = f;
  std::vector<Polynomial> mod_nz = nonzero_of(modulo);
  std::vector<std::size_t> kept = minimal_modulo_subset(ring, gens, modulo);
  if (kept.empty()) {
    pre.ambient_twists.clear(); // the zero module
    return pre;
  }
  GroebnerBasis igb = ideal_groebner(ring, mod_nz);
  std::vector<Polynomial> mgens;
  std::vector<int> twists;
  for (std::size_t i : kept) {
    if (!igb.normal_form(f * gens[i]).is_zero())
      fail(errc::invalid_argument,
           "subquotient is not annihilated by the hypersurface");
    mgens.push_back(gens[i]);
    twists.push_back(gens[i].degree());
  }
  pre.ambient_twists = twists;
  if (max_maps == 0) return pre;

  // relations of the generators inside P/(modulo), then reduce modulo f
  GroebnerBasis fgb = ideal_groebner(ring, {f});
  ModulePtr amb = rank1_module(ring);
  std::vector<Polynomial> all = mgens;
  for (const auto& p : mod_nz) all.push_back(p);
  std::vector<ModuleElement> syz = module_syzygies(amb, as_elements(amb, all));
  ModulePtr f0 = make_module(ring, twists);
  std::vector<ModuleElement> cand;
  for (const auto& s : syz) {
    std::vector<Polynomial> comps(s.comps().begin(),
                                  s.comps().begin() +
                                      static_cast<std::ptrdiff_t>(mgens.size()));
    ModuleElement red = nf_entries(ModuleElement(f0, std::move(comps)), fgb);
    if (!red.is_zero()) cand.push_back(std::move(red));
  }
  std::vector<ModuleElement> cols =
      select(cand, minimal_generator_subset(f0, cand, &f));
  ModulePtr target = f0;
  while (!cols.empty()) {
    pre.maps.push_back(GradedMatrix::from_columns(target, cols));
    if (pre.maps.size() >= max_maps) break;
    std::vector<ModuleElement> next = r_syzygy_step(pre.maps.back(), f, fgb);
    if (next.empty()) break;
    target = pre.maps.back().source_module();
    cols = std::move(next);
  }
  return pre;
}

void minimize_complex(ResolutionPrefix& pre) {
  const PrimeField& F = pre.ring->field();
  const bool over_r = pre.kind == ResolutionKind::over_hypersurface;
  GroebnerBasis fgb = over_r ? ideal_groebner(pre.ring, {pre.modulus})
                             : GroebnerBasis(rank1_module(pre.ring), {});

  auto rebuild = [&](const GradedMatrix& m, std::ptrdiff_t drop_row,
                     std::ptrdiff_t drop_col) {
    std::vector<int> rt, ct;
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (static_cast<std::ptrdiff_t>(i) != drop_row)
        rt.push_back(m.row_twist(i));
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (static_cast<std::ptrdiff_t>(j) != drop_col)
        ct.push_back(m.col_twist(j));
    GradedMatrix out(m.ring(), std::move(rt), std::move(ct));
    std::size_t oi = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (static_cast<std::ptrdiff_t>(i) == drop_row) continue;
      std::size_t oj = 0;
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (static_cast<std::ptrdiff_t>(j) == drop_col) continue;
        out.set(oi, oj, m.at(i, j));
        ++oj;
      }
      ++oi;
    }
    return out;
  };

  while (true) {
    std::size_t pk = 0, pi = 0, pj = 0;
    bool found = false;
    for (std::size_t k = 0; k < pre.maps.size() && !found; ++k)
      for (std::size_t i = 0; i < pre.maps[k].rows() && !found; ++i)
        for (std::size_t j = 0; j < pre.maps[k].cols() && !found; ++j) {
          const Polynomial& e = pre.maps[k].at(i, j);
          if (!e.is_zero() && e.is_constant()) {
            pk = k;
            pi = i;
            pj = j;
            found = true;
          }
        }
    if (!found) return;

    const GradedMatrix& M = pre.maps[pk];
    std::uint32_t cinv = F.inv(M.at(pi, pj).lead_coeff());
    std::vector<int> rt, ct;
    for (std::size_t i = 0; i < M.rows(); ++i)
      if (i != pi) rt.push_back(M.row_twist(i));
    for (std::size_t j = 0; j < M.cols(); ++j)
      if (j != pj) ct.push_back(M.col_twist(j));
    GradedMatrix schur(pre.ring, std::move(rt), std::move(ct));
    std::size_t oi = 0;
    for (std::size_t i = 0; i < M.rows(); ++i) {
      if (i == pi) continue;
      std::size_t oj = 0;
      for (std::size_t j = 0; j < M.cols(); ++j) {
        if (j == pj) continue;
        Polynomial e = M.at(i, j) - (M.at(i, pj) * M.at(pi, j)).scaled(cinv);
        if (over_r && !e.is_zero()) e = fgb.normal_form(e);
        if (!e.is_zero()) schur.set(oi, oj, std::move(e));
        ++oj;
      }
      ++oi;
    }
    if (pk + 1 < pre.maps.size())
      pre.maps[pk + 1] = rebuild(pre.maps[pk + 1], static_cast<std::ptrdiff_t>(pj), -1);
    if (pk > 0)
      pre.maps[pk - 1] = rebuild(pre.maps[pk - 1], -1, static_cast<std::ptrdiff_t>(pi));
    else
      pre.ambient_twists.erase(pre.ambient_twists.begin() +
                               static_cast<std::ptrdiff_t>(pi));
    pre.maps[pk] = std::move(schur);
  }
}

std::optional<std::size_t> detect_periodicity(const ResolutionPrefix& pre,
                                              int period_degree) {
  const std::size_t npos = pre.length() + 1;
  if (npos < 3)
    fail(errc::prefix_too_short,
         "need at least three positions to test periodicity");
  auto matches = [&](std::size_t k) {
    TwistCounts a = twist_counts(pre.twists_at(k));
    TwistCounts b = twist_counts(pre.twists_at(k + 2));
    if (a.size() != b.size()) return false;
    for (const auto& [t, m] : a) {
      auto it = b.find(t + period_degree);
      if (it == b.end() || it->second != m) return false;
    }
    return true;
  };
  std::ptrdiff_t k = static_cast<std::ptrdiff_t>(npos) - 3;
  if (!matches(static_cast<std::size_t>(k))) return std::nullopt;
  while (k > 0 && matches(static_cast<std::size_t>(k - 1))) --k;
  return static_cast<std::size_t>(k);
}

std::vector<std::size_t> minimal_modulo_subset(
    RingPtr ring, const std::vector<Polynomial>& cands,
    const std::vector<Polynomial>& modulo) {
  ModulePtr amb = rank1_module(std::move(ring));
  GroebnerEngine e(amb);
  for (const auto& p : modulo)
    if (!p.is_zero()) e.add_generator(ModuleElement(amb, {p}));
  struct Cand {
    int deg;
    std::size_t idx;
  };
  std::vector<Cand> order;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (cands[i].is_zero()) continue;
    if (!cands[i].is_homogeneous())
      fail(errc::non_homogeneous, "generators must be homogeneous");
    order.push_back(Cand{cands[i].degree(), i});
  }
  std::sort(order.begin(), order.end(), [](const Cand& a, const Cand& b) {
    return a.deg != b.deg ? a.deg < b.deg : a.idx < b.idx;
  });
  std::vector<std::size_t> kept;
  for (const Cand& c : order) {
    if (!e.normal_form(cands[c.idx]).is_zero()) {
      kept.push_back(c.idx);
      e.add_generator(ModuleElement(amb, {cands[c.idx]}));
    }
  }
  return kept;
}

} // namespace hyperres
