#include "doctest.h"

#include "hyperres/errors.hpp"
#include "hyperres/fixtures.hpp"
#include "hyperres/matrix_factorization.hpp"
#include "hyperres/parse.hpp"
#include "testutil.hpp"

using namespace hyperres;

namespace {

Polynomial P(const RingPtr& r, const std::string& s) {
  return parse_polynomial(s, r);
}

// Pfaffian of a 4x4 alternating matrix and the matrix solving
// A * pf_adjoint(A) = pf_adjoint(A) * A = Pf(A) * Id, computed directly
// from the six independent entries.  Independent of classical_adjoint.
Polynomial pfaffian4(const GradedMatrix& a) {
  return a.at(0, 1) * a.at(2, 3) - a.at(0, 2) * a.at(1, 3) +
         a.at(0, 3) * a.at(1, 2);
}

GradedMatrix pfaffian_adjoint4(const GradedMatrix& a, int pf_degree) {
  std::vector<int> ct;
  for (int t : a.row_twists()) ct.push_back(t + pf_degree);
  GradedMatrix out(a.ring(), a.col_twists(), ct);
  auto set = [&](std::size_t i, std::size_t j, Polynomial v) {
    if (!v.is_zero()) out.set(i, j, std::move(v));
  };
  set(0, 1, -a.at(2, 3));
  set(0, 2, a.at(1, 3));
  set(0, 3, -a.at(1, 2));
  set(1, 0, a.at(2, 3));
  set(1, 2, -a.at(0, 3));
  set(1, 3, a.at(0, 2));
  set(2, 0, -a.at(1, 3));
  set(2, 1, a.at(0, 3));
  set(2, 3, -a.at(0, 1));
  set(3, 0, a.at(1, 2));
  set(3, 1, -a.at(0, 2));
  set(3, 2, a.at(0, 1));
  return out;
}

GradedMatrix scaled_matrix(const GradedMatrix& m, std::uint32_t c) {
  GradedMatrix out(m.ring(), m.row_twists(), m.col_twists());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) out.set(i, j, m.at(i, j).scaled(c));
  return out;
}

bool entry_degrees_within(const GradedMatrix& m, int lo, int hi) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero() &&
          (m.at(i, j).degree() < lo || m.at(i, j).degree() > hi))
        return false;
  return true;
}

} // namespace

TEST_CASE("transpose and shift round-trip") {
  auto r = make_ring(5, {"x", "y", "z"});
  GradedMatrix a = fixtures::section0_alternating_matrix(r);
  CHECK(transpose(transpose(a)) == a);
  CHECK(shifted(shifted(a, 3), -3) == a);
  CHECK(is_alternating(transpose(a)));
  GradedMatrix t = transpose(a);
  CHECK(t.row_twists() == std::vector<int>{-10, -10, -10, -9});
  CHECK(t.at(1, 0) == a.at(0, 1));
}

TEST_CASE("invert a degree-0 endomorphism") {
  auto r = make_ring(5, {"x", "y", "z"});
  GradedMatrix one =
      GradedMatrix::scalar(r, {0, 1}, Polynomial::constant(r, 1));

  GradedMatrix d = GradedMatrix::scalar(r, {0, 1}, Polynomial::constant(r, 2));
  GradedMatrix dinv = invert_unit_endo(d);
  CHECK(d * dinv == one);
  CHECK(dinv * d == one);
  CHECK(dinv.at(0, 0) == Polynomial::constant(r, 3));

  // strictly upper block-triangular correction
  GradedMatrix u(r, {0, 1}, {0, 1});
  u.set(0, 0, Polynomial::constant(r, 1));
  u.set(0, 1, P(r, "x"));
  u.set(1, 1, Polynomial::constant(r, 2));
  GradedMatrix ui = invert_unit_endo(u);
  CHECK(u * ui == one);
  CHECK(ui * u == one);

  // permuted twists: the constant block sits off the main diagonal
  GradedMatrix w(r, {1, 0}, {0, 1});
  w.set(0, 1, Polynomial::constant(r, 2));
  w.set(1, 0, Polynomial::constant(r, 3));
  w.set(1, 1, P(r, "x"));
  GradedMatrix wi = invert_unit_endo(w);
  CHECK(w * wi == GradedMatrix::scalar(r, {1, 0}, Polynomial::constant(r, 1)));
  CHECK(wi * w == GradedMatrix::scalar(r, {0, 1}, Polynomial::constant(r, 1)));

  GradedMatrix sing(r, {0, 1}, {0, 1});
  sing.set(0, 1, P(r, "x"));
  sing.set(1, 1, Polynomial::constant(r, 2));
  try {
    invert_unit_endo(sing);
    FAIL("singular endomorphism must be rejected");
  } catch (const AlgebraError& e) {
    CHECK(e.kind() == errc::correction_not_invertible);
  }

  GradedMatrix mism(r, {0, 1}, {0, 2});
  mism.set(0, 0, Polynomial::constant(r, 1));
  mism.set(1, 1, P(r, "x"));
  CHECK_THROWS_AS(invert_unit_endo(mism), AlgebraError);
}

TEST_CASE("classical adjoint against the determinant identity") {
  auto r = make_ring(7, {"x", "y", "z"});
  testutil::Rng rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    GradedMatrix m(r, {0, 0, 0}, {1, 1, 1});
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        m.set(i, j, testutil::random_homogeneous(rng, r, 1, 2));
    Polynomial det = matrix_determinant(m);
    GradedMatrix adj = classical_adjoint(m);
    if (det.is_zero()) {
      CHECK((m * adj).is_zero());
      continue;
    }
    CHECK(m * adj == GradedMatrix::scalar(r, m.row_twists(), det));
    CHECK(adj * shifted(m, 3) ==
          GradedMatrix::scalar(r, adj.row_twists(), det));
  }
}

TEST_CASE("pfaffian adjoint identity on random alternating matrices") {
  testutil::Rng rng(23);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    auto r = make_ring(p, {"x", "y", "z"});
    for (int trial = 0; trial < 4; ++trial) {
      GradedMatrix a(r, {0, 0, 0, 0}, {2, 2, 2, 2});
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) {
          Polynomial g = testutil::random_homogeneous(rng, r, 2, 2);
          a.set(i, j, g);
          a.set(j, i, -g);
        }
      REQUIRE(is_alternating(a));
      Polynomial pf = pfaffian4(a);
      CHECK(matrix_determinant(a) == pf * pf);
      GradedMatrix pa = pfaffian_adjoint4(a, 4);
      if (pf.is_zero()) {
        CHECK((a * pa).is_zero());
        continue;
      }
      CHECK(a * pa == GradedMatrix::scalar(r, a.row_twists(), pf));
      CHECK(pa * shifted(a, 4) ==
            GradedMatrix::scalar(r, pa.row_twists(), pf));
      CHECK(adjoint_alternating_check(a));
    }
  }
}

TEST_CASE("reference alternating matrix factors the cubic") {
  auto r = make_ring(5, {"x", "y", "z"});
  GradedMatrix a = fixtures::section0_alternating_matrix(r);
  CHECK(a.row_twists() == std::vector<int>{8, 8, 8, 9});
  CHECK(a.col_twists() == std::vector<int>{10, 10, 10, 9});
  CHECK(is_alternating(a));
  CHECK(a.is_homogeneous());
  CHECK(entry_degrees_within(a, 1, 2));

  Polynomial f = P(r, "x^3+y^3+z^3");
  Polynomial pf = pfaffian4(a);
  CHECK(pf == f.scaled(2));
  CHECK(matrix_determinant(a) == pf * pf);
  CHECK(adjoint_alternating_check(a));

  // Psi = 3 * pfaffian adjoint inverts the factor 2 modulo 5
  GradedMatrix psi = scaled_matrix(pfaffian_adjoint4(a, 3), 3);
  CHECK(is_alternating(psi));
  MfCheck ck = verify_mf(MatrixFactorization{a, psi, f});
  CHECK(ck.ok);
}

TEST_CASE("extract the trivial factorization of xy") {
  auto r = make_ring(5, {"x", "y"});
  Polynomial f = P(r, "x*y");
  ResolutionPrefix res = resolve_over_R(r, f, {P(r, "x")}, 4);
  MatrixFactorization mf = extract_mf(res);
  REQUIRE(mf.D3.rows() == 1);
  REQUIRE(mf.D3.cols() == 1);
  CHECK(mf.D3.at(0, 0) == P(r, "x"));
  CHECK(mf.D4.at(0, 0) == P(r, "y"));
  CHECK(verify_mf(mf).ok);

  try {
    alternating_normalize(mf);
    FAIL("odd size must be rejected");
  } catch (const AlgebraError& e) {
    CHECK(e.kind() == errc::odd_size);
  }

  ResolutionPrefix shallow = resolve_over_R(r, f, {P(r, "x")}, 3);
  try {
    extract_mf(shallow);
    FAIL("prefix below position 4 must be rejected");
  } catch (const AlgebraError& e) {
    CHECK(e.kind() == errc::periodicity_not_detected);
  }

  ResolutionPrefix overp = resolve_over_P(r, {P(r, "x")});
  CHECK_THROWS_AS(extract_mf(overp), AlgebraError);
}

TEST_CASE("tampered factorization yields an entry witness") {
  auto r = make_ring(5, {"x", "y"});
  GradedMatrix d3(r, {2}, {3});
  d3.set(0, 0, P(r, "x"));
  GradedMatrix d4(r, {3}, {4});
  d4.set(0, 0, P(r, "x"));
  MfCheck ck = verify_mf(MatrixFactorization{d3, d4, P(r, "x*y")});
  CHECK_FALSE(ck.ok);
  CHECK(ck.witness.rfind("D3*D4 (1,1):", 0) == 0);
  CHECK(ck.witness.find("!=") != std::string::npos);
}

TEST_CASE("extract and normalize the fifth-powers factorization") {
  auto r = make_ring(5, {"x", "y", "z"});
  Polynomial f = P(r, "x^3+y^3+z^3");
  std::vector<Polynomial> gens =
      testutil::parse_all(r, {"x^5", "y^5", "z^5"});
  ResolutionPrefix res = resolve_over_R(r, f, gens, 4);
  MatrixFactorization mf = extract_mf(res);
  CHECK(mf.D3.row_twists() == std::vector<int>{8, 8, 8, 9});
  CHECK(mf.D3.col_twists() == std::vector<int>{9, 10, 10, 10});
  CHECK(verify_mf(mf).ok);

  AlternatingPair ap = alternating_normalize(mf, 0);
  CHECK(is_alternating(ap.Phi));
  CHECK(is_alternating(ap.Psi));
  CHECK(ap.Phi.row_twists() == std::vector<int>{8, 8, 8, 9});
  CHECK(ap.Phi.col_twists() == std::vector<int>{10, 10, 10, 9});
  CHECK(entry_degrees_within(ap.Phi, 1, 2));
  CHECK(entry_degrees_within(ap.Psi, 1, 2));
  CHECK(verify_mf(MatrixFactorization{ap.Phi, ap.Psi, f}).ok);
  CHECK(ap.epsilon.is_homogeneous());
  CHECK(matrix_determinant(ap.Phi) == pfaffian4(ap.Phi) * pfaffian4(ap.Phi));
}
