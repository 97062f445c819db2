#include "doctest.h"

#include "hyperres/frobenius.hpp"
#include "hyperres/parse.hpp"
#include "testutil.hpp"

using namespace hyperres;

namespace {
Polynomial P(const RingPtr& r, const std::string& s) {
  return parse_polynomial(s, r);
}
} // namespace

TEST_CASE("frobenius exponent") {
  CHECK(frobenius_exponent(5, 1) == 0);
  CHECK(frobenius_exponent(5, 125) == 3);
  CHECK(frobenius_exponent(2, 1024) == 10);
  CHECK_THROWS_AS(frobenius_exponent(5, 10), AlgebraError);
  try {
    frobenius_exponent(3, 8);
  } catch (const AlgebraError& e) {
    CHECK(e.kind() == errc::not_power_of_p);
  }
}

TEST_CASE("frobenius power scales exponents and fixes coefficients") {
  auto r = make_ring(2, {"x", "y", "z"});
  CHECK(frobenius_power(P(r, "x+y"), 2) == P(r, "x^2+y^2"));
  auto r5 = make_ring(5, {"x", "y", "z"});
  CHECK(frobenius_power(P(r5, "2*x*y+3*z^2"), 5) ==
        P(r5, "2*x^5*y^5+3*z^10"));
  CHECK(frobenius_power(Polynomial::zero(r5), 25).is_zero());

  testutil::Rng rng(51);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    auto ring = make_ring(p, {"x", "y", "z"});
    for (int i = 0; i < 10; ++i) {
      Polynomial g = testutil::random_homogeneous(
          rng, ring, 1 + static_cast<int>(testutil::pick(rng, 3)), 3);
      // (g^[q])^[q'] = g^[qq'] and the lead monomial just powers up
      Polynomial a = frobenius_power(frobenius_power(g, p), p * p);
      CHECK(a == frobenius_power(g, p * p * p));
      CHECK(frobenius_power(g, p).lead_monomial() ==
            g.lead_monomial().pow(p));
      CHECK(frobenius_power(g, p).degree() ==
            g.degree() * static_cast<int>(p));
    }
  }
}

TEST_CASE("bracket power raises every generator") {
  auto r = make_ring(5, {"x", "y", "z"});
  std::vector<Polynomial> gens = {P(r, "x^2"), P(r, "x*y+z^2")};
  std::vector<Polynomial> b = bracket_power(gens, 5);
  REQUIRE(b.size() == 2);
  CHECK(b[0] == P(r, "x^10"));
  CHECK(b[1] == P(r, "x^5*y^5+z^10"));
}

TEST_CASE("sweep rows match the embedded reference case") {
  auto r = make_ring(5, {"x", "y", "z"});
  Polynomial f = P(r, "x^3+y^3+z^3");
  std::vector<Polynomial> ideal = {P(r, "x^2"), P(r, "x*z"),
                                   P(r, "x*y+z^2"), P(r, "y*z"),
                                   P(r, "y^2")};
  SweepOptions opts;
  opts.e_min = 0;
  opts.e_max = 1;
  opts.max_maps = 4;
  std::vector<FrobeniusRow> rows = run_sweep(r, f, ideal, opts);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].ok);
  CHECK(rows[0].socle.to_string() == "2:1");
  CHECK(counts_to_string(rows[0].betti.row(1)) == "2:5");
  CHECK(counts_to_string(rows[0].betti.row(4)) == "6:6");
  CHECK(rows[1].ok);
  CHECK(rows[1].socle.to_string() == "12:6");
  CHECK(counts_to_string(rows[1].betti.row(1)) == "10:5");
  CHECK(counts_to_string(rows[1].betti.row(2)) == "13:6");
  CHECK(counts_to_string(rows[1].betti.row(3)) == "15:6");
  CHECK(counts_to_string(rows[1].betti.row(4)) == "16:6");

  SweepOptions par = opts;
  par.parallel = true;
  std::vector<FrobeniusRow> prows = run_sweep(r, f, ideal, par);
  REQUIRE(prows.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(prows[i].socle == rows[i].socle);
    CHECK(prows[i].betti == rows[i].betti);
  }
}
