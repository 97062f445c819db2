#include "doctest.h"

#include "hyperres/parse.hpp"
#include "hyperres/resolution.hpp"
#include "oracle.hpp"
#include "testutil.hpp"

using namespace hyperres;

namespace {
Polynomial P(const RingPtr& r, const std::string& s) {
  return parse_polynomial(s, r);
}
TwistCounts tc(const std::string& s) { return parse_counts(s); }
} // namespace

TEST_CASE("koszul resolution of the variables") {
  auto r = make_ring(5, {"x", "y", "z"});
  ResolutionPrefix res =
      resolve_over_P(r, {P(r, "x"), P(r, "y"), P(r, "z")});
  REQUIRE(res.length() == 3);
  CHECK(res.betti().row(0) == tc("0:1"));
  CHECK(res.betti().row(1) == tc("1:3"));
  CHECK(res.betti().row(2) == tc("2:3"));
  CHECK(res.betti().row(3) == tc("3:1"));
  CHECK(res.is_complex());
  CHECK(res.is_minimal());
  CHECK(oracle::exact_prefix(res, 6));
}

TEST_CASE("resolution of a complete intersection of squares") {
  auto r = make_ring(5, {"x", "y", "z"});
  ResolutionPrefix res =
      resolve_over_P(r, {P(r, "x^2"), P(r, "y^2"), P(r, "z^2")});
  REQUIRE(res.length() == 3);
  CHECK(res.betti().row(1) == tc("2:3"));
  CHECK(res.betti().row(2) == tc("4:3"));
  CHECK(res.betti().row(3) == tc("6:1"));
  CHECK(oracle::exact_prefix(res, 9));
}

TEST_CASE("redundant generators are dropped before resolving") {
  auto r = make_ring(5, {"x", "y", "z"});
  ResolutionPrefix res = resolve_over_P(
      r, {P(r, "x"), P(r, "y"), P(r, "x+y"), P(r, "x^2")});
  CHECK(res.betti().row(1) == tc("1:2"));
  CHECK(res.is_minimal());
}

TEST_CASE("unit ideal is rejected") {
  auto r = make_ring(5, {"x", "y", "z"});
  CHECK_THROWS_AS(resolve_over_P(r, {Polynomial::constant(r, 1)}),
                  AlgebraError);
}

TEST_CASE("random P-resolutions match the Koszul-homology oracle") {
  testutil::Rng rng(31);
  for (std::uint32_t p : {2u, 5u}) {
    auto r = make_ring(p, {"x", "y", "z"});
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<Polynomial> gens =
          testutil::random_artinian_ideal(rng, r, 3, 1);
      ResolutionPrefix res = resolve_over_P(r, gens);
      CHECK(res.is_complex());
      CHECK(res.is_minimal());
      int bound = 0;
      for (const GradedMatrix& m : res.maps)
        for (int t : m.col_twists()) bound = std::max(bound, t);
      CHECK(oracle::exact_prefix(res, bound + 1));
      BettiTable bt = res.betti();
      for (std::size_t i = 0; i <= 3; ++i) {
        std::map<int, int> want = oracle::koszul_betti(
            r, gens, static_cast<int>(i), bound + 1);
        TwistCounts got =
            i < bt.positions() ? bt.row(i) : TwistCounts{};
        CHECK(TwistCounts(want.begin(), want.end()) == got);
      }
    }
  }
}

TEST_CASE("hypersurface resolution of a periodic module") {
  auto r = make_ring(5, {"x", "y"});
  Polynomial f = P(r, "x*y");
  ResolutionPrefix res = resolve_over_R(r, f, {P(r, "x")}, 4);
  REQUIRE(res.length() == 4);
  for (std::size_t k = 0; k <= 4; ++k)
    CHECK(res.twists_at(k) == std::vector<int>{static_cast<int>(k)});
  CHECK(res.is_complex());
  CHECK(res.is_minimal());
  CHECK(oracle::exact_prefix(res, 10));
  std::optional<std::size_t> i0 = detect_periodicity(res, f.degree());
  REQUIRE(i0.has_value());
  CHECK(*i0 == 0);
}

TEST_CASE("section-zero base row over the cubic hypersurface") {
  auto r = make_ring(5, {"x", "y", "z"});
  Polynomial f = P(r, "x^3+y^3+z^3");
  ResolutionPrefix res = resolve_over_R(
      r, f, {P(r, "x^5"), P(r, "y^5"), P(r, "z^5")}, 4);
  REQUIRE(res.length() == 4);
  CHECK(res.betti().row(0) == tc("0:1"));
  CHECK(res.betti().row(1) == tc("5:3"));
  CHECK(res.betti().row(2) == tc("8:3 9:1"));
  CHECK(res.betti().row(3) == tc("9:1 10:3"));
  CHECK(res.betti().row(4) == tc("11:3 12:1"));
  CHECK(res.is_minimal());
  CHECK(oracle::exact_prefix(res, 14));
  std::optional<std::size_t> i0 = detect_periodicity(res, 3);
  REQUIRE(i0.has_value());
  CHECK(*i0 == 2);
}

TEST_CASE("subquotient resolution: residue field shifted by one") {
  auto r = make_ring(5, {"x", "y"});
  Polynomial f = P(r, "x*y");
  // (x) / (x^2, xy) is k(-1) over R = P/(xy)
  ResolutionPrefix res = resolve_subquotient_over_R(
      r, f, {P(r, "x")}, {P(r, "x^2"), P(r, "x*y")}, 3);
  CHECK(res.ambient_twists == std::vector<int>{1});
  CHECK(res.betti().row(0) == tc("1:1"));
  CHECK(res.betti().row(1) == tc("2:2"));
  CHECK(res.betti().row(2) == tc("3:2"));
  CHECK(res.betti().row(3) == tc("4:2"));
  CHECK(res.is_minimal());
  CHECK(res.is_complex());
}

TEST_CASE("minimize_complex cancels unit entries") {
  auto r = make_ring(5, {"x", "y", "z"});
  // F1 carries a duplicated generator; the unit column in d2 records the
  // duplication and must cancel away
  GradedMatrix d1(r, {0}, {1, 1, 1});
  d1.set(0, 0, P(r, "x"));
  d1.set(0, 1, P(r, "y"));
  d1.set(0, 2, P(r, "x"));
  GradedMatrix d2(r, {1, 1, 1}, {1});
  d2.set(0, 0, Polynomial::constant(r, 1));
  d2.set(2, 0, Polynomial::constant(r, -1));
  ResolutionPrefix pre;
  pre.ring = r;
  pre.kind = ResolutionKind::over_polynomial_ring;
  pre.modulus = Polynomial::zero(r);
  pre.ambient_twists = {0};
  pre.maps = {d1, d2};
  CHECK(pre.is_complex());
  CHECK_FALSE(pre.is_minimal());
  minimize_complex(pre);
  CHECK(pre.is_complex());
  CHECK(pre.is_minimal());
  CHECK(pre.betti().row(1) == tc("1:2"));
  CHECK(pre.maps[1].cols() == 0);
}

TEST_CASE("periodicity detection needs three positions") {
  auto r = make_ring(5, {"x", "y"});
  ResolutionPrefix res = resolve_over_R(r, P(r, "x*y"), {P(r, "x")}, 1);
  CHECK_THROWS_AS(detect_periodicity(res, 2), AlgebraError);
}
