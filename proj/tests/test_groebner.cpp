#include "doctest.h"

#include "hyperres/artinian.hpp"
#include "hyperres/groebner.hpp"
#include "hyperres/parse.hpp"
#include "oracle.hpp"
#include "testutil.hpp"

using namespace hyperres;

namespace {
Polynomial P(const RingPtr& r, const std::string& s) {
  return parse_polynomial(s, r);
}
} // namespace

TEST_CASE("groebner basis of a monomial ideal") {
  auto r = make_ring(5, {"x", "y", "z"});
  GroebnerBasis gb = ideal_groebner(r, {P(r, "x^2"), P(r, "x*y")});
  CHECK(gb.generators().size() == 2);
  CHECK(gb.contains(P(r, "x^2*y^3")));
  CHECK_FALSE(gb.contains(P(r, "y^5")));
  CHECK(gb.normal_form(P(r, "y^5")) == P(r, "y^5"));
  CHECK(gb.normal_form(P(r, "x^2+x*y")).is_zero());
}

TEST_CASE("basis leads are pairwise indivisible and monic") {
  testutil::Rng rng(21);
  for (std::uint32_t p : {2u, 5u}) {
    auto r = make_ring(p, {"x", "y", "z"});
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Polynomial> gens;
      std::size_t ngens = 2 + testutil::pick(rng, 3);
      for (std::size_t i = 0; i < ngens; ++i)
        gens.push_back(testutil::random_homogeneous(
            rng, r, 1 + static_cast<int>(testutil::pick(rng, 3)), 3));
      GroebnerBasis gb = ideal_groebner(r, gens);
      const auto& basis = gb.generators();
      for (std::size_t i = 0; i < basis.size(); ++i) {
        CHECK(basis[i].lead_coeff() == 1);
        for (std::size_t j = 0; j < basis.size(); ++j)
          if (i != j)
            CHECK_FALSE(basis[i].lead_term().mono.divides(
                basis[j].lead_term().mono));
      }
    }
  }
}

TEST_CASE("membership agrees with the dense oracle") {
  testutil::Rng rng(22);
  for (std::uint32_t p : {2u, 5u}) {
    auto r = make_ring(p, {"x", "y", "z"});
    for (int trial = 0; trial < 15; ++trial) {
      std::vector<Polynomial> gens;
      std::size_t ngens = 2 + testutil::pick(rng, 3);
      for (std::size_t i = 0; i < ngens; ++i)
        gens.push_back(testutil::random_homogeneous(
            rng, r, 1 + static_cast<int>(testutil::pick(rng, 3)), 3));
      GroebnerBasis gb = ideal_groebner(r, gens);
      for (int k = 0; k < 4; ++k) {
        Polynomial probe = testutil::random_homogeneous(
            rng, r, 1 + static_cast<int>(testutil::pick(rng, 4)), 4);
        CHECK(gb.contains(probe) == oracle::in_ideal(r, gens, probe));
      }
      // elements built from the generators are members
      Polynomial combo = Polynomial::zero(r);
      int target = 0;
      for (const Polynomial& g : gens) target = std::max(target, g.degree());
      target += 1;
      for (const Polynomial& g : gens)
        combo = combo + g * testutil::random_homogeneous(
                                rng, r, target - g.degree(), 2);
      CHECK(gb.contains(combo));
    }
  }
}

TEST_CASE("every S-pair reduces to zero") {
  testutil::Rng rng(23);
  auto r = make_ring(7, {"x", "y", "z"});
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < 3; ++i)
      gens.push_back(testutil::random_homogeneous(
          rng, r, 1 + static_cast<int>(testutil::pick(rng, 3)), 3));
    GroebnerBasis gb = ideal_groebner(r, gens);
    const auto& basis = gb.generators();
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i + 1; j < basis.size(); ++j) {
        const Monomial &mi = basis[i].lead_term().mono,
                       &mj = basis[j].lead_term().mono;
        Monomial l = Monomial::lcm(mi, mj);
        Polynomial s = basis[i].comp(0).mono_mul(l.quotient(mi), 1) -
                       basis[j].comp(0).mono_mul(l.quotient(mj), 1);
        CHECK(gb.normal_form(s).is_zero());
      }
  }
}

TEST_CASE("hilbert function matches the oracle") {
  testutil::Rng rng(24);
  for (std::uint32_t p : {3u, 5u}) {
    auto r = make_ring(p, {"x", "y", "z"});
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<Polynomial> gens =
          testutil::random_artinian_ideal(rng, r, 3, 1);
      std::vector<int> hf = hilbert_function(r, gens, 8);
      for (int d = 0; d <= 8; ++d)
        CHECK(hf[static_cast<std::size_t>(d)] ==
              oracle::quotient_hilbert(r, gens, d));
    }
  }
}

TEST_CASE("colon ideal: hand case and oracle dimensions") {
  auto r = make_ring(5, {"x", "y", "z"});
  std::vector<Polynomial> I = {P(r, "x^2"), P(r, "y^2")};
  std::vector<Polynomial> c = colon_ideal(r, I, P(r, "x"));
  GroebnerBasis gb = ideal_groebner(r, c);
  CHECK(gb.contains(P(r, "x")));
  CHECK(gb.contains(P(r, "y^2")));
  CHECK_FALSE(gb.contains(P(r, "y")));
  CHECK_THROWS_AS(colon_ideal(r, I, Polynomial::zero(r)), AlgebraError);

  testutil::Rng rng(25);
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<Polynomial> gens =
        testutil::random_artinian_ideal(rng, r, 3, 1);
    Polynomial f = testutil::random_homogeneous(
        rng, r, 1 + static_cast<int>(testutil::pick(rng, 2)), 2);
    std::vector<Polynomial> colon = colon_ideal(r, gens, f);
    for (const Polynomial& g : colon)
      CHECK(oracle::in_ideal(r, gens, g * f));
    for (int d = 0; d <= 6; ++d)
      CHECK(static_cast<int>(oracle::degree_monomials(r, d).size()) -
                oracle::quotient_hilbert(r, colon, d) ==
            oracle::colon_slice_dim(r, gens, f, d));
  }
}

TEST_CASE("ideal intersection has the right slice dimensions") {
  testutil::Rng rng(26);
  auto r = make_ring(5, {"x", "y", "z"});
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<Polynomial> A = testutil::random_artinian_ideal(rng, r, 3, 0);
    std::vector<Polynomial> B = testutil::random_artinian_ideal(rng, r, 3, 0);
    std::vector<Polynomial> meet = intersect_ideals(r, A, B);
    std::vector<Polynomial> join = A;
    join.insert(join.end(), B.begin(), B.end());
    for (const Polynomial& g : meet) {
      CHECK(oracle::in_ideal(r, A, g));
      CHECK(oracle::in_ideal(r, B, g));
    }
    for (int d = 0; d <= 7; ++d)
      CHECK(oracle::ideal_slice_rank(r, meet, d) ==
            oracle::ideal_slice_rank(r, A, d) +
                oracle::ideal_slice_rank(r, B, d) -
                oracle::ideal_slice_rank(r, join, d));
  }
}

TEST_CASE("module syzygies annihilate the generators") {
  testutil::Rng rng(27);
  auto r = make_ring(5, {"x", "y", "z"});
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < 3; ++i)
      gens.push_back(testutil::random_homogeneous(
          rng, r, 1 + static_cast<int>(testutil::pick(rng, 2)), 2));
    ModulePtr rank1 = rank1_module(r);
    std::vector<ModuleElement> elems = as_elements(rank1, gens);
    std::vector<ModuleElement> syz = module_syzygies(rank1, elems);
    for (const ModuleElement& s : syz) {
      Polynomial acc = Polynomial::zero(r);
      for (std::size_t j = 0; j < gens.size(); ++j)
        acc = acc + s.comp(j) * gens[j];
      CHECK(acc.is_zero());
      CHECK(s.is_homogeneous());
    }
    // the syzygies capture every relation: the Koszul relation between the
    // first two generators must lie in the syzygy submodule
    REQUIRE_FALSE(syz.empty());
    ModuleElement koszul(syz[0].module());
    koszul.set_comp(0, gens[1]);
    koszul.set_comp(1, -gens[0]);
    GroebnerBasis sgb = groebner_basis(syz[0].module(), syz);
    CHECK(sgb.contains(koszul));
  }
}

TEST_CASE("minimal generator subset drops redundant generators") {
  auto r = make_ring(5, {"x", "y", "z"});
  std::vector<Polynomial> gens = {P(r, "x^2"), P(r, "y^2"),
                                  P(r, "x^2+y^2"), P(r, "x^3")};
  ModulePtr rank1 = rank1_module(r);
  std::vector<std::size_t> keep =
      minimal_generator_subset(rank1, as_elements(rank1, gens), nullptr);
  CHECK(keep == std::vector<std::size_t>{0, 1});

  // modulo f = x^3+y^3+z^3 the cube z^3 becomes redundant in (x^3,y^3,z^3)
  Polynomial f = P(r, "x^3+y^3+z^3");
  std::vector<Polynomial> cubes = {P(r, "x^3"), P(r, "y^3"), P(r, "z^3")};
  std::vector<std::size_t> modkeep =
      minimal_generator_subset(rank1, as_elements(rank1, cubes), &f);
  CHECK(modkeep == std::vector<std::size_t>{0, 1});
}

TEST_CASE("unit ideal is recognized") {
  auto r = make_ring(5, {"x", "y", "z"});
  GroebnerBasis gb =
      ideal_groebner(r, {P(r, "x"), P(r, "y"), P(r, "z"),
                         Polynomial::constant(r, 2)});
  CHECK(gb.is_unit_ideal());
  CHECK(ideal_groebner(r, {P(r, "x^2")}).is_unit_ideal() == false);
}
