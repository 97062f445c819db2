#include "doctest.h"

#include "hyperres/artinian.hpp"
#include "hyperres/parse.hpp"
#include "oracle.hpp"
#include "testutil.hpp"

using namespace hyperres;

namespace {
Polynomial P(const RingPtr& r, const std::string& s) {
  return parse_polynomial(s, r);
}
} // namespace

TEST_CASE("hilbert function of a complete intersection") {
  auto r = make_ring(5, {"x", "y", "z"});
  std::vector<int> hf = hilbert_function(
      r, {P(r, "x^2"), P(r, "y^2"), P(r, "z^2")}, 6);
  CHECK(hf == std::vector<int>{1, 3, 3, 1, 0, 0, 0});
}

TEST_CASE("socle of hand-picked quotients") {
  auto r = make_ring(5, {"x", "y", "z"});
  SocleProfile s1 = socle_profile(r, {P(r, "x"), P(r, "y"), P(r, "z")});
  CHECK(s1.dims == std::map<int, int>{{0, 1}});
  CHECK(s1.to_string() == "0:1");

  SocleProfile s2 =
      socle_profile(r, {P(r, "x^2"), P(r, "y^2"), P(r, "z^2")});
  CHECK(s2.dims == std::map<int, int>{{3, 1}});
  CHECK(s2.total() == 1);
  CHECK(s2.top_degree() == 3);

  SocleProfile s3 = socle_profile(
      r, {P(r, "x^2"), P(r, "x*y"), P(r, "y^2"), P(r, "z")});
  CHECK(s3.dims == std::map<int, int>{{1, 2}});
}

TEST_CASE("socle profile matches the multiplication-kernel oracle") {
  testutil::Rng rng(41);
  for (std::uint32_t p : {2u, 5u, 7u}) {
    auto r = make_ring(p, {"x", "y", "z"});
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<Polynomial> gens =
          testutil::random_artinian_ideal(rng, r, 3, 1);
      SocleProfile s = socle_profile(r, gens);
      std::map<int, int> want = oracle::socle_dims(r, gens);
      CHECK(s.dims == want);
    }
  }
}

TEST_CASE("non-Artinian input is rejected") {
  auto r = make_ring(5, {"x", "y", "z"});
  CHECK_THROWS_AS(socle_profile(r, {P(r, "x"), P(r, "y")}), AlgebraError);
  try {
    socle_profile(r, {P(r, "x")});
  } catch (const AlgebraError& e) {
    CHECK(e.kind() == errc::not_artinian);
  }
}

TEST_CASE("a-invariant of the hypersurface ring") {
  auto r = make_ring(5, {"x", "y", "z"});
  CHECK(a_invariant(P(r, "x^3+y^3+z^3")) == 0);
  CHECK(a_invariant(P(r, "x^5+y^5+z^5")) == 2);
}

TEST_CASE("gorenstein data reads b and mu off the resolution") {
  auto r = make_ring(5, {"x", "y", "z"});
  GorensteinData ci =
      gorenstein_data(r, {P(r, "x^2"), P(r, "y^2"), P(r, "z^2")});
  CHECK(ci.b == 6);
  CHECK(ci.mu == 3);
  CHECK(ci.resolution.length() == 3);

  GorensteinData s0 =
      gorenstein_data(r, {P(r, "x^5"), P(r, "y^5"), P(r, "z^5")});
  CHECK(s0.b == 15);
  CHECK(s0.mu == 3);

  GorensteinData quad = gorenstein_data(
      r, {P(r, "x^2"), P(r, "x*z"), P(r, "x*y+z^2"), P(r, "y*z"),
          P(r, "y^2")});
  CHECK(quad.b == 5);
  CHECK(quad.mu == 5);

  // socle dimension 4, so not Gorenstein
  CHECK_THROWS_AS(gorenstein_data(r, {P(r, "x^5"), P(r, "y^5"), P(r, "z^5"),
                                      P(r, "x^3+y^3+z^3")}),
                  AlgebraError);
  CHECK_THROWS_AS(
      gorenstein_data(r, {P(r, "x^2"), P(r, "x*y"), P(r, "y^2"), P(r, "z")}),
      AlgebraError);
}
