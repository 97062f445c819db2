#include "doctest.h"

#include "hyperres/errors.hpp"
#include "hyperres/fp_matrix.hpp"
#include "hyperres/parse.hpp"
#include "hyperres/polynomial.hpp"
#include "testutil.hpp"

using namespace hyperres;

namespace {
RingPtr ring5() { return make_ring(5, {"x", "y", "z"}); }
Polynomial P(const RingPtr& r, const std::string& s) {
  return parse_polynomial(s, r);
}
} // namespace

TEST_CASE("prime field arithmetic") {
  PrimeField f7(7);
  CHECK(f7.add(3, 5) == 1);
  CHECK(f7.sub(2, 5) == 4);
  CHECK(f7.mul(3, 5) == 1);
  CHECK(f7.neg(0) == 0);
  for (PrimeField::elem a = 1; a < 7; ++a)
    CHECK(f7.mul(a, f7.inv(a)) == 1);
  CHECK(f7.pow(3, 6) == 1);
  CHECK(f7.from_int(-1) == 6);
  CHECK(f7.from_int(14) == 0);
  CHECK_THROWS_AS(PrimeField(6), AlgebraError);
  PrimeField f2(2);
  CHECK(f2.add(1, 1) == 0);
  CHECK(f2.inv(1) == 1);
}

TEST_CASE("grevlex order on degree 3 monomials") {
  // with x > y > z: x^3 > x^2y > xy^2 > y^3 > x^2z > xyz > y^2z > xz^2 > yz^2 > z^3
  auto M = [](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    return Monomial({a, b, c});
  };
  std::vector<Monomial> chain = {M(3, 0, 0), M(2, 1, 0), M(1, 2, 0),
                                 M(0, 3, 0), M(2, 0, 1), M(1, 1, 1),
                                 M(0, 2, 1), M(1, 0, 2), M(0, 1, 2),
                                 M(0, 0, 3)};
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    CHECK(grevlex_greater(chain[i], chain[i + 1]));
  CHECK(grevlex_greater(M(1, 0, 0), Monomial::one(3)));
  CHECK(grevlex_greater(M(2, 0, 0), M(1, 1, 0)));
  CHECK(grevlex_greater(M(1, 1, 0), M(2, 0, 0)) == false);
  CHECK(grevlex_greater(M(2, 0, 0), M(2, 0, 0)) == false);
}

TEST_CASE("monomial divisibility and quotients") {
  Monomial a({2, 1, 0}), b({3, 1, 2});
  CHECK(a.divides(b));
  CHECK_FALSE(b.divides(a));
  CHECK(b.quotient(a) == Monomial({1, 0, 2}));
  CHECK(Monomial::lcm(a, Monomial({0, 2, 1})) == Monomial({2, 2, 1}));
  CHECK(Monomial::coprime(Monomial({2, 0, 0}), Monomial({0, 0, 3})));
  CHECK(a.pow(3) == Monomial({6, 3, 0}));
  CHECK_THROWS_AS(Monomial({1u << 31, 0, 0}).pow(4), AlgebraError);
}

TEST_CASE("polynomial arithmetic") {
  auto r = make_ring(7, {"x", "y", "z"});
  Polynomial s = P(r, "x+y+z");
  CHECK(s * s == P(r, "x^2+y^2+z^2+2*x*y+2*x*z+2*y*z"));
  auto r2 = make_ring(2, {"x", "y", "z"});
  Polynomial t = P(r2, "x+y");
  CHECK(t * t == P(r2, "x^2+y^2"));
  CHECK((P(r, "x") - P(r, "x")).is_zero());
  CHECK(Polynomial::zero(r).degree() == -1);
  CHECK(P(r, "x^2+y*z").is_homogeneous());
  CHECK_FALSE(P(r, "x^2+y").is_homogeneous());
  CHECK(P(r, "3*x^2").monic() == P(r, "x^2"));
  CHECK(P(r, "x+y").pow(0) == Polynomial::constant(r, 1));
}

TEST_CASE("to_string parses back") {
  testutil::Rng rng(11);
  auto r = ring5();
  for (int i = 0; i < 20; ++i) {
    Polynomial g = testutil::random_homogeneous(
        rng, r, 1 + static_cast<int>(testutil::pick(rng, 4)), 4);
    CHECK(parse_polynomial(g.to_string(), r) == g);
  }
}

TEST_CASE("parser syntax") {
  auto r = ring5();
  CHECK(P(r, "xy") == P(r, "x*y")); // implicit multiplication
  CHECK(P(r, "-x^2") == -P(r, "x^2"));
  CHECK(P(r, "2(x+y)") == P(r, "2*x+2*y"));
  CHECK(P(r, "x^3+y^3+z^3").degree() == 3);
  CHECK_THROWS_AS(P(r, "x + * y"), AlgebraError);
  CHECK_THROWS_AS(P(r, "w"), AlgebraError);
  CHECK_THROWS_AS(P(r, "x^"), AlgebraError);
  try {
    P(r, "w+1");
  } catch (const AlgebraError& e) {
    CHECK(e.kind() == errc::unknown_variable);
  }
}

TEST_CASE("poly_divmod is exact division with remainder") {
  testutil::Rng rng(12);
  auto r = ring5();
  for (int i = 0; i < 50; ++i) {
    Polynomial f = testutil::random_homogeneous(
        rng, r, 2 + static_cast<int>(testutil::pick(rng, 3)), 5);
    Polynomial d = testutil::random_homogeneous(
        rng, r, 1 + static_cast<int>(testutil::pick(rng, 2)), 3);
    Polynomial rem;
    Polynomial q = poly_divmod(f, d, &rem);
    CHECK(q * d + rem == f);
    for (const Term& t : rem.terms())
      CHECK_FALSE(d.lead_monomial().divides(t.mono));
  }
}

TEST_CASE("fp matrix rank, nullspace, inverse") {
  PrimeField f5(5);
  FpMatrix m(3, 3, f5);
  // rows (1 2 3 / 2 4 6 / 0 1 1): rank 2
  std::uint32_t vals[3][3] = {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m.set(i, j, vals[i][j]);
  CHECK(m.rank() == 2);
  auto ns = m.nullspace();
  REQUIRE(ns.size() == 1);
  for (std::size_t i = 0; i < 3; ++i) {
    std::uint32_t acc = 0;
    for (std::size_t j = 0; j < 3; ++j)
      acc = f5.add(acc, f5.mul(vals[i][j], ns[0][j]));
    CHECK(acc == 0);
  }

  testutil::Rng rng(13);
  int invertible_seen = 0;
  for (int trial = 0; trial < 20; ++trial) {
    FpMatrix a(4, 4, f5);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        a.set(i, j, static_cast<std::uint32_t>(testutil::pick(rng, 5)));
    if (!a.is_invertible()) continue;
    ++invertible_seen;
    FpMatrix inv = a.inverse();
    FpMatrix prod = a.multiply(inv);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        CHECK(prod.at(i, j) == (i == j ? 1u : 0u));
  }
  CHECK(invertible_seen > 0);
}
