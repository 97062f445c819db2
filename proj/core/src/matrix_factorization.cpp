#include "hyperres/matrix_factorization.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "hyperres/fp_matrix.hpp"

namespace hyperres {

namespace {

void gen_monomials(std::size_t nvars, int d, std::size_t i,
                   std::vector<std::uint32_t>& e, std::vector<Monomial>& out) {
  if (i + 1 == nvars) {
    e[i] = static_cast<std::uint32_t>(d);
    out.push_back(Monomial(e));
    return;
  }
  for (int k = d; k >= 0; --k) {
    e[i] = static_cast<std::uint32_t>(k);
    gen_monomials(nvars, d - k, i + 1, e, out);
  }
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  if (nvars == 0) {
    if (d == 0) out.push_back(Monomial::one(0));
    return out;
  }
  std::vector<std::uint32_t> e(nvars, 0);
  gen_monomials(nvars, d, 0, e, out);
  return out;
}

Polynomial det_rec(const RingPtr& ring,
                   const std::vector<std::vector<Polynomial>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial::constant(ring, 1);
  if (n == 1) return m[0][0];
  Polynomial acc = Polynomial::zero(ring);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Polynomial>> sub;
    sub.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Polynomial> row;
      row.reserve(n - 1);
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      sub.push_back(std::move(row));
    }
    Polynomial t = m[0][j] * det_rec(ring, sub);
    acc = j % 2 == 0 ? acc + t : acc - t;
  }
  return acc;
}

std::vector<std::vector<Polynomial>> grid_of(const GradedMatrix& m) {
  std::vector<std::vector<Polynomial>> g;
  g.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<Polynomial> row;
    row.reserve(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
    g.push_back(std::move(row));
  }
  return g;
}

} // namespace

GradedMatrix transpose(const GradedMatrix& m) {
  std::vector<int> rt, ct;
  for (int t : m.col_twists()) rt.push_back(-t);
  for (int t : m.row_twists()) ct.push_back(-t);
  GradedMatrix out(m.ring(), std::move(rt), std::move(ct));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) out.set(j, i, m.at(i, j));
  return out;
}

GradedMatrix shifted(const GradedMatrix& m, int s) {
  std::vector<int> rt, ct;
  for (int t : m.row_twists()) rt.push_back(t + s);
  for (int t : m.col_twists()) ct.push_back(t + s);
  GradedMatrix out(m.ring(), std::move(rt), std::move(ct));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) out.set(i, j, m.at(i, j));
  return out;
}

GradedMatrix invert_unit_endo(const GradedMatrix& u) {
  const std::size_t n = u.rows();
  const RingPtr& ring = u.ring();
  if (u.cols() != n)
    fail(errc::correction_not_invertible, "endomorphism must be square");
  if (!u.is_homogeneous())
    fail(errc::invalid_argument, "endomorphism must be homogeneous");
  const std::vector<int>& rt = u.row_twists();
  const std::vector<int>& ct = u.col_twists();
  {
    std::vector<int> a = rt, b = ct;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b)
      fail(errc::correction_not_invertible,
           "row and column twists are different multisets");
  }
  // sort rows and columns by twist: the matrix becomes block upper
  // triangular with constant diagonal blocks
  std::vector<std::size_t> rp(n), cp(n);
  std::iota(rp.begin(), rp.end(), 0);
  std::iota(cp.begin(), cp.end(), 0);
  std::stable_sort(rp.begin(), rp.end(),
                   [&](std::size_t a, std::size_t b) { return rt[a] < rt[b]; });
  std::stable_sort(cp.begin(), cp.end(),
                   [&](std::size_t a, std::size_t b) { return ct[a] < ct[b]; });
  std::vector<int> tw(n);
  for (std::size_t i = 0; i < n; ++i) tw[i] = rt[rp[i]];
  std::vector<std::pair<std::size_t, std::size_t>> groups;
  for (std::size_t lo = 0; lo < n;) {
    std::size_t hi = lo;
    while (hi < n && tw[hi] == tw[lo]) ++hi;
    groups.push_back({lo, hi});
    lo = hi;
  }
  const PrimeField& field = ring->field();
  auto vat = [&](std::size_t a, std::size_t b) -> const Polynomial& {
    return u.at(rp[a], cp[b]);
  };
  std::vector<FpMatrix> dinv;
  for (auto [lo, hi] : groups) {
    FpMatrix blk(hi - lo, hi - lo, field);
    for (std::size_t a = lo; a < hi; ++a)
      for (std::size_t b = lo; b < hi; ++b)
        if (!vat(a, b).is_zero()) blk.set(a - lo, b - lo, vat(a, b).lead_coeff());
    if (!blk.is_invertible())
      fail(errc::correction_not_invertible,
           "a constant diagonal block is singular");
    dinv.push_back(blk.inverse());
  }
  // back-substitution over the block upper triangle
  std::vector<Polynomial> x(n * n, Polynomial::zero(ring));
  auto xat = [&](std::size_t a, std::size_t b) -> Polynomial& {
    return x[a * n + b];
  };
  for (std::size_t gb = 0; gb < groups.size(); ++gb) {
    const auto [blo, bhi] = groups[gb];
    for (std::size_t a = blo; a < bhi; ++a)
      for (std::size_t b = blo; b < bhi; ++b) {
        const std::uint32_t cv = dinv[gb].at(a - blo, b - blo);
        if (cv) xat(a, b) = Polynomial::constant(ring, cv);
      }
    for (std::size_t ga = gb; ga-- > 0;) {
      const auto [alo, ahi] = groups[ga];
      const std::size_t w = bhi - blo;
      std::vector<Polynomial> s((ahi - alo) * w, Polynomial::zero(ring));
      for (std::size_t a = alo; a < ahi; ++a)
        for (std::size_t b = blo; b < bhi; ++b) {
          Polynomial acc = Polynomial::zero(ring);
          for (std::size_t k = ahi; k < bhi; ++k)
            if (!vat(a, k).is_zero() && !xat(k, b).is_zero())
              acc = acc + vat(a, k) * xat(k, b);
          s[(a - alo) * w + (b - blo)] = std::move(acc);
        }
      for (std::size_t a = alo; a < ahi; ++a)
        for (std::size_t b = blo; b < bhi; ++b) {
          Polynomial acc = Polynomial::zero(ring);
          for (std::size_t a2 = alo; a2 < ahi; ++a2) {
            const std::uint32_t cv = dinv[ga].at(a - alo, a2 - alo);
            if (cv) acc = acc + s[(a2 - alo) * w + (b - blo)].scaled(cv);
          }
          xat(a, b) = -acc;
        }
    }
  }
  GradedMatrix out(ring, ct, rt);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!x[a * n + b].is_zero()) out.set(cp[a], rp[b], x[a * n + b]);
  if (!(u * out == GradedMatrix::scalar(ring, rt, Polynomial::constant(ring, 1))))
    fail(errc::correction_not_invertible, "inverse verification failed");
  return out;
}

MatrixFactorization extract_mf(const ResolutionPrefix& prefix) {
  if (prefix.kind != ResolutionKind::over_hypersurface)
    fail(errc::invalid_argument,
         "factorization extraction needs a hypersurface resolution");
  const Polynomial& f = prefix.modulus;
  if (prefix.length() < 4)
    fail(errc::periodicity_not_detected,
         "resolution prefix must reach position 4");
  std::optional<std::size_t> i0 = detect_periodicity(prefix, f.degree());
  if (!i0 || *i0 > 2)
    fail(errc::periodicity_not_detected,
         "tail is not 2-periodic from position 2");
  const GradedMatrix& d3 = prefix.maps[2];
  const GradedMatrix& d4 = prefix.maps[3];
  const int fd = f.degree();
  GradedMatrix prod = d3 * d4;
  std::vector<int> ccols;
  for (int t : prod.col_twists()) ccols.push_back(t - fd);
  GradedMatrix c(prefix.ring, prod.row_twists(), std::move(ccols));
  for (std::size_t i = 0; i < prod.rows(); ++i)
    for (std::size_t j = 0; j < prod.cols(); ++j) {
      if (prod.at(i, j).is_zero()) continue;
      Polynomial rem = Polynomial::zero(prefix.ring);
      Polynomial q = poly_divmod(prod.at(i, j), f, &rem);
      if (!rem.is_zero())
        fail(errc::invalid_argument,
             "lifted product is not divisible by the hypersurface");
      c.set(i, j, std::move(q));
    }
  GradedMatrix cinv = invert_unit_endo(c);
  return MatrixFactorization{d3, d4 * shifted(cinv, fd), f};
}

MfCheck verify_mf(const MatrixFactorization& mf) {
  MfCheck out;
  const int fd = mf.f.degree();
  const GradedMatrix p1 = mf.D3 * mf.D4;
  const GradedMatrix i1 =
      GradedMatrix::scalar(mf.D3.ring(), mf.D3.row_twists(), mf.f);
  const GradedMatrix p2 = mf.D4 * shifted(mf.D3, fd);
  const GradedMatrix i2 =
      GradedMatrix::scalar(mf.D3.ring(), mf.D4.row_twists(), mf.f);
  auto check = [&](const GradedMatrix& got, const GradedMatrix& want,
                   const char* name) {
    if (!out.ok) return;
    for (std::size_t i = 0; i < got.rows(); ++i)
      for (std::size_t j = 0; j < got.cols(); ++j)
        if (!(got.at(i, j) == want.at(i, j))) {
          out.ok = false;
          std::ostringstream os;
          os << name << " (" << i + 1 << "," << j + 1
             << "): " << got.at(i, j).to_string()
             << " != " << want.at(i, j).to_string();
          out.witness = os.str();
          return;
        }
  };
  check(p1, i1, "D3*D4");
  check(p2, i2, "D4*D3");
  return out;
}

bool is_alternating(const GradedMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!m.at(i, i).is_zero()) return false;
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (!(m.at(i, j) + m.at(j, i)).is_zero()) return false;
  }
  return true;
}

AlternatingPair alternating_normalize(const MatrixFactorization& mf,
                                      std::uint64_t seed) {
  const GradedMatrix& d3 = mf.D3;
  const RingPtr& ring = d3.ring();
  const std::size_t s = d3.rows();
  if (d3.cols() != s)
    fail(errc::invalid_argument, "alternating normalization needs a square D3");
  if (s % 2 != 0)
    fail(errc::odd_size, "alternating matrix factorizations have even size");
  if (s == 0) {
    GradedMatrix empty(ring, {}, {});
    return AlternatingPair{empty, empty, empty, mf.f};
  }
  const std::vector<int>& rt = d3.row_twists();
  const std::vector<int>& t3 = d3.col_twists();
  // pairing: row i of Phi pairs with column i, so twists must satisfy
  // rt[i] + pc[i] = k0 for one constant k0
  long long sum = 0;
  for (int v : rt) sum += v;
  for (int v : t3) sum += v;
  if (sum % static_cast<long long>(s) != 0)
    fail(errc::no_invertible_solution,
         "twist pattern admits no symmetric pairing");
  const int k0 = static_cast<int>(sum / static_cast<long long>(s));
  std::vector<int> pc(s);
  for (std::size_t i = 0; i < s; ++i) pc[i] = k0 - rt[i];
  {
    std::vector<int> a = pc, b = t3;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b)
      fail(errc::no_invertible_solution,
           "twist pattern admits no symmetric pairing");
  }
  // unknown entries of E = eps^T; E(j,k) is homogeneous of degree pc[k]-t3[j]
  struct Slot {
    std::size_t j, k;
    Monomial mu;
  };
  std::vector<Slot> slots;
  for (std::size_t j = 0; j < s; ++j)
    for (std::size_t k = 0; k < s; ++k)
      for (const Monomial& mu :
           monomials_of_degree(ring->nvars(), pc[k] - t3[j]))
        slots.push_back(Slot{j, k, mu});
  // linear conditions: Phi(i,k) + Phi(k,i) = 0 for i < k, Phi(i,i) = 0,
  // one equation per monomial, where Phi = D3 * E
  std::map<std::pair<std::pair<std::size_t, std::size_t>,
                     std::vector<std::uint32_t>>,
           std::size_t>
      eqids;
  std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> eqs;
  auto eq_row = [&](std::size_t a, std::size_t b, const Monomial& mono) {
    auto key = std::make_pair(std::make_pair(a, b), mono.exponents());
    auto it = eqids.find(key);
    if (it != eqids.end()) return it->second;
    const std::size_t id = eqs.size();
    eqids.emplace(std::move(key), id);
    eqs.emplace_back();
    return id;
  };
  for (std::size_t u = 0; u < slots.size(); ++u) {
    const Slot& sl = slots[u];
    for (std::size_t i = 0; i < s; ++i) {
      const Polynomial& g = d3.at(i, sl.j);
      if (g.is_zero()) continue;
      const Polynomial contrib = g.mono_mul(sl.mu, 1);
      const std::size_t a = std::min(i, sl.k);
      const std::size_t b = std::max(i, sl.k);
      for (const Term& tm : contrib.terms())
        eqs[eq_row(a, b, tm.mono)].push_back({u, tm.coeff});
    }
  }
  const PrimeField& field = ring->field();
  FpMatrix lin(eqs.size(), slots.size(), field);
  for (std::size_t e = 0; e < eqs.size(); ++e)
    for (auto [u, cv] : eqs[e]) lin.set(e, u, field.add(lin.at(e, u), cv));
  const std::vector<std::vector<std::uint32_t>> basis = lin.nullspace();
  if (basis.empty())
    fail(errc::no_invertible_solution,
         "alternation admits only the zero change of basis");
  const std::uint32_t p = field.modulus();
  std::mt19937_64 rng(seed);
  for (std::size_t tries = 0; tries < 64; ++tries) {
    std::vector<std::uint32_t> lambda(basis.size(), 0);
    if (tries < basis.size())
      lambda[tries] = 1;
    else if (tries == basis.size())
      lambda.assign(basis.size(), 1);
    else
      for (auto& l : lambda) l = static_cast<std::uint32_t>(rng() % p);
    std::vector<std::uint32_t> v(slots.size(), 0);
    for (std::size_t b = 0; b < basis.size(); ++b)
      if (lambda[b])
        for (std::size_t u = 0; u < slots.size(); ++u)
          v[u] = field.add(v[u], field.mul(lambda[b], basis[b][u]));
    std::vector<std::vector<Term>> terms(s * s);
    for (std::size_t u = 0; u < slots.size(); ++u)
      if (v[u]) terms[slots[u].j * s + slots[u].k].push_back(Term{slots[u].mu, v[u]});
    GradedMatrix em(ring, t3, pc);
    for (std::size_t j = 0; j < s; ++j)
      for (std::size_t k = 0; k < s; ++k)
        if (!terms[j * s + k].empty())
          em.set(j, k, Polynomial::from_terms(ring, terms[j * s + k]));
    try {
      GradedMatrix ei = invert_unit_endo(em);
      GradedMatrix phi = d3 * em;
      GradedMatrix psi = ei * mf.D4;
      if (is_alternating(phi) && is_alternating(psi))
        return AlternatingPair{std::move(phi), std::move(psi), transpose(em),
                               mf.f};
    } catch (const AlgebraError& err) {
      if (err.kind() != errc::correction_not_invertible) throw;
    }
  }
  fail(errc::no_invertible_solution,
       "no invertible solution within the retry budget");
}

Polynomial matrix_determinant(const GradedMatrix& m) {
  if (m.rows() != m.cols())
    fail(errc::invalid_argument, "determinant needs a square matrix");
  return det_rec(m.ring(), grid_of(m));
}

GradedMatrix classical_adjoint(const GradedMatrix& m) {
  if (m.rows() != m.cols())
    fail(errc::invalid_argument, "adjoint needs a square matrix");
  const std::size_t n = m.rows();
  const RingPtr& ring = m.ring();
  long long dd = 0;
  for (int t : m.col_twists()) dd += t;
  for (int t : m.row_twists()) dd -= t;
  std::vector<int> ct;
  for (int t : m.row_twists()) ct.push_back(t + static_cast<int>(dd));
  GradedMatrix out(ring, m.col_twists(), std::move(ct));
  if (n == 0) return out;
  const std::vector<std::vector<Polynomial>> g = grid_of(m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // adj(i,j) = (-1)^{i+j} * minor with row j and column i deleted
      std::vector<std::vector<Polynomial>> sub;
      sub.reserve(n - 1);
      for (std::size_t r = 0; r < n; ++r) {
        if (r == j) continue;
        std::vector<Polynomial> row;
        row.reserve(n - 1);
        for (std::size_t c = 0; c < n; ++c)
          if (c != i) row.push_back(g[r][c]);
        sub.push_back(std::move(row));
      }
      Polynomial mi = det_rec(ring, sub);
      if ((i + j) % 2 != 0) mi = -mi;
      if (!mi.is_zero()) out.set(i, j, std::move(mi));
    }
  return out;
}

bool adjoint_alternating_check(const GradedMatrix& phi) {
  if (!is_alternating(phi))
    fail(errc::invalid_argument, "input must be alternating");
  if (matrix_determinant(phi).is_zero())
    fail(errc::singular_input, "determinant is zero");
  return is_alternating(classical_adjoint(phi));
}

} // namespace hyperres
