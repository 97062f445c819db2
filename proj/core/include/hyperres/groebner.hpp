#pragma once

#include <cstdint>
#include <memory>
#include <queue>
#include <unordered_set>
#include <vector>

#include "hyperres/free_module.hpp"

namespace hyperres {

// Work counters, summed across all engines ever run (thread-safe).  These
// stand in for wall-clock time in serialized reports so that identical runs
// produce identical bytes.
struct GbWork {
  std::uint64_t spairs;
  std::uint64_t reductions;
};
GbWork groebner_work();
void reset_groebner_work();

// A finished, reduced Groebner basis: minimal monic generators, tails fully
// reduced.  Valid for queries in every degree.
class GroebnerBasis {
public:
  GroebnerBasis(ModulePtr module, std::vector<ModuleElement> gens);

  const ModulePtr& module() const { return module_; }
  const std::vector<ModuleElement>& generators() const { return gens_; }
  bool reduced() const { return true; }

  ModuleElement normal_form(const ModuleElement& v) const;
  Polynomial normal_form(const Polynomial& f) const; // rank-1 convenience
  bool contains(const ModuleElement& v) const { return normal_form(v).is_zero(); }
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
  // rank-1: basis is {1}
  bool is_unit_ideal() const;

private:
  ModulePtr module_;
  std::vector<ModuleElement> gens_;
};

// Incremental homogeneous Buchberger.  Generators and S-pairs are queued by
// degree and handled in ascending order, so a basis processed to degree d
// answers membership exactly for homogeneous elements of degree <= d.
//
// In syzygy mode the engine works in the graph module F + R^m: generator j
// enters as (g_j, e_j), reduction touches only the F block, and every
// reduction that kills the F part leaves behind a generator of the syzygy
// module in the e block.  All pairs between F-lead elements are processed
// (chain criterion off in this mode; the product criterion is applied for
// rank-1 F blocks with the corresponding Koszul relation emitted directly).
class GroebnerEngine {
public:
  explicit GroebnerEngine(ModulePtr module);
  static GroebnerEngine syzygy_engine(ModulePtr base,
                                      const std::vector<ModuleElement>& gens);

  void add_generator(const ModuleElement& g); // plain mode only
  void process_to_degree(int d);
  void complete();
  int processed_degree() const { return processed_; }
  bool idle() const; // no queued events

  // full normal form; processes queued events up to deg(v) first
  ModuleElement normal_form(const ModuleElement& v);
  Polynomial normal_form(const Polynomial& f);

  // raw basis (monic, possibly redundant leads); stable insertion order
  const std::vector<ModuleElement>& basis() const { return basis_; }
  std::vector<ModTerm> lead_terms() const; // leads with redundant ones dropped
  GroebnerBasis reduced_basis() const;     // pre: complete() was run

  // syzygy mode: generators of syz(g_1..g_m) as elements of R^m whose
  // position-j twist is deg(g_j); pre: complete() was run
  const std::vector<ModuleElement>& syzygies() const { return syz_; }
  const ModulePtr& syzygy_module() const { return syz_module_; }

private:
  GroebnerEngine(ModulePtr work, std::size_t flimit, bool track,
                 std::size_t base_rank);

  struct GenEv {
    int deg;
    std::uint32_t seq;
    ModuleElement v;
  };
  struct GenCmp {
    bool operator()(const GenEv& a, const GenEv& b) const {
      return a.deg != b.deg ? a.deg > b.deg : a.seq > b.seq;
    }
  };
  struct PairEv {
    int deg;
    std::uint32_t i, j; // i < j
  };
  struct PairCmp {
    bool operator()(const PairEv& a, const PairEv& b) const {
      if (a.deg != b.deg) return a.deg > b.deg;
      if (a.j != b.j) return a.j > b.j;
      return a.i > b.i;
    }
  };

  ModuleElement reduce(const ModuleElement& v, std::ptrdiff_t skip = -1) const;
  int find_reducer(std::size_t pos, const Monomial& m,
                   std::ptrdiff_t skip) const;
  void dispatch(ModuleElement r);
  void add_to_basis(ModuleElement h);
  void handle_pair(const PairEv& e);
  bool chain_skip(std::uint32_t i, std::uint32_t j) const;
  void emit_koszul(std::uint32_t i, std::uint32_t j);
  void record_syzygy(const ModuleElement& graph_elem);
  static std::uint64_t key(std::uint32_t i, std::uint32_t j) {
    return i < j ? ((std::uint64_t)i << 32) | j : ((std::uint64_t)j << 32) | i;
  }

  ModulePtr work_;      // graph module in syzygy mode, else the base module
  std::size_t flimit_;  // positions < flimit_ get reduced and paired
  bool track_;
  bool base_rank1_;
  std::vector<ModuleElement> basis_;
  std::vector<ModTerm> leads_;
  std::vector<std::vector<std::uint32_t>> bypos_;
  std::priority_queue<GenEv, std::vector<GenEv>, GenCmp> gens_;
  std::priority_queue<PairEv, std::vector<PairEv>, PairCmp> pairs_;
  std::unordered_set<std::uint64_t> done_;
  std::uint32_t seq_ = 0;
  int processed_ = -1;
  ModulePtr syz_module_;
  std::vector<ModuleElement> syz_;
};

// --- convenience entry points -------------------------------------------

GroebnerBasis groebner_basis(ModulePtr module,
                             const std::vector<ModuleElement>& gens);
GroebnerBasis ideal_groebner(RingPtr ring, const std::vector<Polynomial>& gens);

// generators of the syzygy module of gens (graph method); result lives in
// R^m with twists = generator degrees
std::vector<ModuleElement> module_syzygies(ModulePtr module,
                                           const std::vector<ModuleElement>& gens);

// generators of (I : g); throws ZeroDivisorArgument on g = 0
std::vector<Polynomial> colon_ideal(RingPtr ring,
                                    const std::vector<Polynomial>& I,
                                    const Polynomial& g);

std::vector<Polynomial> intersect_ideals(RingPtr ring,
                                         const std::vector<Polynomial>& A,
                                         const std::vector<Polynomial>& B);

// Indices (in ascending (degree, index) processing order) of a subset of
// gens that minimally generates the submodule; with modf != nullptr the
// computation runs modulo the hypersurface, i.e. in the module over
// R = P/(modf) presented by appending modf * e_i.
std::vector<std::size_t> minimal_generator_subset(
    ModulePtr module, const std::vector<ModuleElement>& gens,
    const Polynomial* modf);

std::vector<int> minimal_generator_degrees(ModulePtr module,
                                           const std::vector<ModuleElement>& gens,
                                           const Polynomial* modf);

// rank-1 helpers
ModulePtr rank1_module(RingPtr ring);
std::vector<ModuleElement> as_elements(ModulePtr rank1,
                                       const std::vector<Polynomial>& polys);

} // namespace hyperres
