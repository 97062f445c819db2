#include "hyperres/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <utility>

#include "hyperres/errors.hpp"
#include "geobucket.hpp"

namespace hyperres {

namespace {

std::atomic<std::uint64_t> g_spairs{0};
std::atomic<std::uint64_t> g_reductions{0};

// shared reduction core, also used by GroebnerBasis on a frozen basis
struct ReducerSet {
  const std::vector<ModuleElement>* basis;
  const std::vector<ModTerm>* leads;
  const std::vector<std::vector<std::uint32_t>>* bypos;
  std::size_t flimit;
};

int pick_reducer(const ReducerSet& rs, std::size_t pos, const Monomial& m,
                 std::ptrdiff_t skip) {
  int best = -1;
  std::size_t best_terms = 0;
  for (std::uint32_t g : (*rs.bypos)[pos]) {
    if (static_cast<std::ptrdiff_t>(g) == skip) continue;
    if (!(*rs.leads)[g].mono.divides(m)) continue;
    std::size_t nt = (*rs.basis)[g].comp(pos).nterms();
    if (best < 0 || nt < best_terms) {
      best = static_cast<int>(g);
      best_terms = nt;
    }
  }
  return best;
}

// Full normal form of v with respect to the (monic) reducers: positions
// below rs.flimit are rewritten until no term has a reducible lead; any
// higher positions just accumulate the dragged-along cofactors.
ModuleElement reduce_element(const ReducerSet& rs, const ModuleElement& v,
                             std::ptrdiff_t skip) {
  const RingPtr& ring = v.module()->ring();
  const PrimeField& F = ring->field();
  const std::size_t R = v.rank();
  std::vector<detail::Geobucket> buckets;
  buckets.reserve(R);
  for (std::size_t i = 0; i < R; ++i) buckets.emplace_back(F);
  for (std::size_t i = 0; i < R; ++i) {
    if (!v.comp(i).is_zero()) buckets[i].add_sorted(v.comp(i).terms());
  }

  std::vector<std::vector<Term>> out(R);
  for (std::size_t pos = 0; pos < rs.flimit && pos < R; ++pos) {
    Term t{Monomial::one(ring->nvars()), 0};
    while (buckets[pos].extract_lead(t)) {
      int g = pick_reducer(rs, pos, t.mono, skip);
      if (g < 0) {
        out[pos].push_back(std::move(t));
        continue;
      }
      g_reductions.fetch_add(1, std::memory_order_relaxed);
      const ModuleElement& ge = (*rs.basis)[g];
      Monomial m = t.mono.quotient((*rs.leads)[g].mono);
      std::uint32_t c = t.coeff; // reducer is monic
      const auto& front = ge.comp(pos).terms();
      std::vector<Term> sub;
      sub.reserve(front.size() - 1);
      for (std::size_t k = 1; k < front.size(); ++k)
        sub.push_back(Term{front[k].mono * m, F.neg(F.mul(front[k].coeff, c))});
      buckets[pos].add_sorted(std::move(sub));
      for (std::size_t p2 = pos + 1; p2 < R; ++p2) {
        if (ge.comp(p2).is_zero()) continue;
        buckets[p2].add_sorted(detail::scaled_shift(ge.comp(p2), m, F.neg(c), F));
      }
    }
  }
  for (std::size_t pos = rs.flimit; pos < R; ++pos) out[pos] = buckets[pos].demote_all();

  std::vector<Polynomial> comps;
  comps.reserve(R);
  for (std::size_t i = 0; i < R; ++i)
    comps.push_back(Polynomial::from_sorted_terms(ring, std::move(out[i])));
  return ModuleElement(v.module(), std::move(comps));
}

} // namespace

GbWork groebner_work() {
  return GbWork{g_spairs.load(), g_reductions.load()};
}

void reset_groebner_work() {
  g_spairs.store(0);
  g_reductions.store(0);
}

// --- GroebnerBasis -------------------------------------------------------

GroebnerBasis::GroebnerBasis(ModulePtr module, std::vector<ModuleElement> gens)
    : module_(std::move(module)), gens_(std::move(gens)) {}

ModuleElement GroebnerBasis::normal_form(const ModuleElement& v) const {
  require_same_module(v.module(), module_);
  if (v.is_zero() || gens_.empty()) return v;
  std::vector<ModTerm> leads;
  std::vector<std::vector<std::uint32_t>> bypos(module_->rank());
  leads.reserve(gens_.size());
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    leads.push_back(gens_[i].lead_term());
    bypos[leads.back().pos].push_back(static_cast<std::uint32_t>(i));
  }
  ReducerSet rs{&gens_, &leads, &bypos, module_->rank()};
  return reduce_element(rs, v, -1);
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  if (module_->rank() != 1)
    fail(errc::invalid_argument, "polynomial normal form needs a rank-1 module");
  return normal_form(ModuleElement(module_, {f})).comp(0);
}

bool GroebnerBasis::is_unit_ideal() const {
  return module_->rank() == 1 && gens_.size() == 1 &&
         gens_[0].comp(0).is_constant() && !gens_[0].comp(0).is_zero();
}

// --- GroebnerEngine ------------------------------------------------------

GroebnerEngine::GroebnerEngine(ModulePtr module)
    : GroebnerEngine(module, module->rank(), false, module->rank()) {}

GroebnerEngine::GroebnerEngine(ModulePtr work, std::size_t flimit, bool track,
                               std::size_t base_rank)
    : work_(std::move(work)), flimit_(flimit), track_(track),
      base_rank1_(base_rank == 1), bypos_(flimit) {}

GroebnerEngine GroebnerEngine::syzygy_engine(
    ModulePtr base, const std::vector<ModuleElement>& gens) {
  const RingPtr& ring = base->ring();
  const std::size_t br = base->rank();
  std::vector<int> twists = base->twists();
  std::vector<int> gdegs;
  gdegs.reserve(gens.size());
  for (const auto& g : gens) {
    require_same_module(g.module(), base);
    if (g.is_zero())
      fail(errc::invalid_argument, "syzygy generators must be nonzero");
    if (!g.is_homogeneous())
      fail(errc::non_homogeneous, "syzygy generators must be homogeneous");
    gdegs.push_back(g.degree());
    twists.push_back(g.degree());
  }
  ModulePtr work = make_module(ring, std::move(twists));
  GroebnerEngine e(work, br, true, br);
  e.syz_module_ = make_module(ring, std::move(gdegs));
  for (std::size_t j = 0; j < gens.size(); ++j) {
    std::vector<Polynomial> comps = gens[j].comps();
    comps.resize(work->rank(), Polynomial::zero(ring));
    comps[br + j] = Polynomial::constant(ring, 1);
    ModuleElement v(work, std::move(comps));
    e.gens_.push(GenEv{v.degree(), e.seq_++, std::move(v)});
  }
  return e;
}

void GroebnerEngine::add_generator(const ModuleElement& g) {
  if (track_)
    fail(errc::invalid_argument,
         "syzygy engines take all generators at construction");
  require_same_module(g.module(), work_);
  if (g.is_zero()) return;
  if (!g.is_homogeneous())
    fail(errc::non_homogeneous, "generators must be homogeneous");
  gens_.push(GenEv{g.degree(), seq_++, g});
}

bool GroebnerEngine::idle() const { return gens_.empty() && pairs_.empty(); }

void GroebnerEngine::process_to_degree(int d) {
  while (true) {
    int gd = gens_.empty() ? INT_MAX : gens_.top().deg;
    int pd = pairs_.empty() ? INT_MAX : pairs_.top().deg;
    int next = std::min(gd, pd);
    if (next > d) break;
    if (gd <= pd) {
      ModuleElement v = gens_.top().v;
      gens_.pop();
      ReducerSet rs{&basis_, &leads_, &bypos_, flimit_};
      dispatch(reduce_element(rs, v, -1));
    } else {
      PairEv e = pairs_.top();
      pairs_.pop();
      handle_pair(e);
    }
  }
  processed_ = std::max(processed_, d);
}

void GroebnerEngine::complete() {
  while (!idle()) {
    int gd = gens_.empty() ? INT_MAX : gens_.top().deg;
    int pd = pairs_.empty() ? INT_MAX : pairs_.top().deg;
    process_to_degree(std::min(gd, pd));
  }
}

ModuleElement GroebnerEngine::reduce(const ModuleElement& v,
                                     std::ptrdiff_t skip) const {
  ReducerSet rs{&basis_, &leads_, &bypos_, flimit_};
  return reduce_element(rs, v, skip);
}

int GroebnerEngine::find_reducer(std::size_t pos, const Monomial& m,
                                 std::ptrdiff_t skip) const {
  ReducerSet rs{&basis_, &leads_, &bypos_, flimit_};
  return pick_reducer(rs, pos, m, skip);
}

void GroebnerEngine::dispatch(ModuleElement r) {
  bool fzero = true;
  for (std::size_t i = 0; i < flimit_ && fzero; ++i)
    if (!r.comp(i).is_zero()) fzero = false;
  if (fzero) {
    if (track_) record_syzygy(r);
    return;
  }
  add_to_basis(r.monic());
}

void GroebnerEngine::add_to_basis(ModuleElement h) {
  std::uint32_t idx = static_cast<std::uint32_t>(basis_.size());
  ModTerm lt = h.lead_term();
  basis_.push_back(std::move(h));
  leads_.push_back(lt);
  for (std::uint32_t g : bypos_[lt.pos]) {
    Monomial L = Monomial::lcm(leads_[g].mono, lt.mono);
    int pdeg = static_cast<int>(L.degree()) + work_->twist(lt.pos);
    pairs_.push(PairEv{pdeg, g, idx});
  }
  bypos_[lt.pos].push_back(idx);
}

bool GroebnerEngine::chain_skip(std::uint32_t i, std::uint32_t j) const {
  const ModTerm& li = leads_[i];
  const ModTerm& lj = leads_[j];
  Monomial L = Monomial::lcm(li.mono, lj.mono);
  for (std::uint32_t k : bypos_[li.pos]) {
    if (k == i || k == j) continue;
    if (!leads_[k].mono.divides(L)) continue;
    if (done_.count(key(i, k)) && done_.count(key(k, j))) return true;
  }
  return false;
}

void GroebnerEngine::emit_koszul(std::uint32_t i, std::uint32_t j) {
  // rank-1 base: the S-pair of coprime leads reduces to zero with the Koszul
  // relation b*e_i - a*e_j as its certificate
  const RingPtr& ring = work_->ring();
  const Polynomial& a = basis_[i].comp(0);
  const Polynomial& b = basis_[j].comp(0);
  std::vector<Polynomial> comps(work_->rank(), Polynomial::zero(ring));
  for (std::size_t k = flimit_; k < work_->rank(); ++k) {
    Polynomial ci = basis_[i].comp(k);
    Polynomial cj = basis_[j].comp(k);
    if (ci.is_zero() && cj.is_zero()) continue;
    comps[k] = b * ci - a * cj;
  }
  record_syzygy(ModuleElement(work_, std::move(comps)));
}

void GroebnerEngine::record_syzygy(const ModuleElement& graph_elem) {
  std::vector<Polynomial> comps(graph_elem.comps().begin() +
                                    static_cast<std::ptrdiff_t>(flimit_),
                                graph_elem.comps().end());
  bool zero = true;
  for (const auto& c : comps)
    if (!c.is_zero()) {
      zero = false;
      break;
    }
  if (zero) return;
  syz_.push_back(ModuleElement(syz_module_, std::move(comps)));
}

void GroebnerEngine::handle_pair(const PairEv& e) {
  const std::uint32_t i = e.i, j = e.j;
  if (base_rank1_ && Monomial::coprime(leads_[i].mono, leads_[j].mono)) {
    if (track_) emit_koszul(i, j);
    done_.insert(key(i, j));
    return;
  }
  if (!track_ && chain_skip(i, j)) {
    done_.insert(key(i, j));
    return;
  }
  Monomial L = Monomial::lcm(leads_[i].mono, leads_[j].mono);
  ModuleElement s = basis_[i].mono_mul(L.quotient(leads_[i].mono), 1) -
                    basis_[j].mono_mul(L.quotient(leads_[j].mono), 1);
  g_spairs.fetch_add(1, std::memory_order_relaxed);
  ModuleElement r = reduce(s, -1);
  done_.insert(key(i, j));
  dispatch(std::move(r));
}

ModuleElement GroebnerEngine::normal_form(const ModuleElement& v) {
  require_same_module(v.module(), work_);
  if (v.is_zero()) return v;
  if (v.is_homogeneous())
    process_to_degree(v.degree());
  else
    complete();
  return reduce(v, -1);
}

Polynomial GroebnerEngine::normal_form(const Polynomial& f) {
  if (work_->rank() != 1)
    fail(errc::invalid_argument, "polynomial normal form needs a rank-1 module");
  return normal_form(ModuleElement(work_, {f})).comp(0);
}

std::vector<ModTerm> GroebnerEngine::lead_terms() const {
  // homogeneous degree-ascending runs never insert a lead divisible by an
  // earlier one, so this is normally the identity filter
  std::vector<ModTerm> out;
  out.reserve(leads_.size());
  for (std::size_t i = 0; i < leads_.size(); ++i) {
    bool redundant = false;
    for (std::uint32_t g : bypos_[leads_[i].pos]) {
      if (g == i) continue;
      if (leads_[g].mono.divides(leads_[i].mono) &&
          !(leads_[g].mono == leads_[i].mono)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(leads_[i]);
  }
  return out;
}

GroebnerBasis GroebnerEngine::reduced_basis() const {
  std::vector<ModuleElement> out;
  out.reserve(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i)
    out.push_back(reduce(basis_[i], static_cast<std::ptrdiff_t>(i)).monic());
  std::sort(out.begin(), out.end(),
            [](const ModuleElement& a, const ModuleElement& b) {
              return pot_compare(a.lead_term(), b.lead_term()) ==
                     std::strong_ordering::greater;
            });
  return GroebnerBasis(work_, std::move(out));
}

// --- entry points --------------------------------------------------------

GroebnerBasis groebner_basis(ModulePtr module,
                             const std::vector<ModuleElement>& gens) {
  GroebnerEngine e(module);
  for (const auto& g : gens) e.add_generator(g);
  e.complete();
  return e.reduced_basis();
}

GroebnerBasis ideal_groebner(RingPtr ring, const std::vector<Polynomial>& gens) {
  ModulePtr m = rank1_module(std::move(ring));
  return groebner_basis(m, as_elements(m, gens));
}

std::vector<ModuleElement> module_syzygies(
    ModulePtr module, const std::vector<ModuleElement>& gens) {
  GroebnerEngine e = GroebnerEngine::syzygy_engine(std::move(module), gens);
  e.complete();
  return e.syzygies();
}

std::vector<Polynomial> colon_ideal(RingPtr ring,
                                    const std::vector<Polynomial>& I,
                                    const Polynomial& g) {
  if (g.is_zero())
    fail(errc::zero_divisor_argument, "colon by the zero polynomial");
  std::vector<Polynomial> nz;
  for (const auto& p : I)
    if (!p.is_zero()) nz.push_back(p);
  ModulePtr m = rank1_module(ring);
  std::vector<Polynomial> all = nz;
  all.push_back(g);
  std::vector<ModuleElement> syz = module_syzygies(m, as_elements(m, all));
  std::vector<Polynomial> out;
  for (const auto& s : syz) {
    const Polynomial& last = s.comp(nz.size());
    if (!last.is_zero()) out.push_back(last.monic());
  }
  return out;
}

std::vector<Polynomial> intersect_ideals(RingPtr ring,
                                         const std::vector<Polynomial>& A,
                                         const std::vector<Polynomial>& B) {
  std::vector<Polynomial> an, bn;
  for (const auto& p : A)
    if (!p.is_zero()) an.push_back(p);
  for (const auto& p : B)
    if (!p.is_zero()) bn.push_back(p);
  if (an.empty() || bn.empty()) return {};
  ModulePtr m2 = make_module(ring, {0, 0});
  Polynomial one = Polynomial::constant(ring, 1);
  Polynomial zero = Polynomial::zero(ring);
  std::vector<ModuleElement> gens;
  gens.push_back(ModuleElement(m2, {one, one}));
  for (const auto& a : an) gens.push_back(ModuleElement(m2, {a, zero}));
  for (const auto& b : bn) gens.push_back(ModuleElement(m2, {zero, b}));
  std::vector<ModuleElement> syz = module_syzygies(m2, gens);
  std::vector<Polynomial> out;
  for (const auto& s : syz) {
    const Polynomial& u = s.comp(0);
    if (!u.is_zero()) out.push_back(u.monic());
  }
  return out;
}

std::vector<std::size_t> minimal_generator_subset(
    ModulePtr module, const std::vector<ModuleElement>& gens,
    const Polynomial* modf) {
  struct Cand {
    int deg;
    std::size_t idx;
  };
  std::vector<Cand> order;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    require_same_module(gens[i].module(), module);
    if (gens[i].is_zero()) continue;
    if (!gens[i].is_homogeneous())
      fail(errc::non_homogeneous, "generators must be homogeneous");
    order.push_back(Cand{gens[i].degree(), i});
  }
  std::sort(order.begin(), order.end(), [](const Cand& a, const Cand& b) {
    return a.deg != b.deg ? a.deg < b.deg : a.idx < b.idx;
  });
  GroebnerEngine e(module);
  if (modf) {
    if (modf->is_zero() || !modf->is_homogeneous())
      fail(errc::invalid_argument, "hypersurface must be homogeneous nonzero");
    for (std::size_t i = 0; i < module->rank(); ++i)
      e.add_generator(ModuleElement::basis_vector(module, i, *modf));
  }
  std::vector<std::size_t> kept;
  for (const Cand& c : order) {
    if (!e.normal_form(gens[c.idx]).is_zero()) {
      kept.push_back(c.idx);
      e.add_generator(gens[c.idx]);
    }
  }
  return kept;
}

std::vector<int> minimal_generator_degrees(ModulePtr module,
                                           const std::vector<ModuleElement>& gens,
                                           const Polynomial* modf) {
  std::vector<std::size_t> kept = minimal_generator_subset(module, gens, modf);
  std::vector<int> out;
  out.reserve(kept.size());
  for (std::size_t i : kept) out.push_back(gens[i].degree());
  return out;
}

ModulePtr rank1_module(RingPtr ring) { return make_module(std::move(ring), {0}); }

std::vector<ModuleElement> as_elements(ModulePtr rank1,
                                       const std::vector<Polynomial>& polys) {
  std::vector<ModuleElement> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(ModuleElement(rank1, {p}));
  return out;
}

} // namespace hyperres
