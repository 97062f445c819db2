#include "hyperres/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "geobucket.hpp"

namespace hyperres {

namespace detail {
std::vector<Term> scaled_shift(const Polynomial& p, const Monomial& m,
                               std::uint32_t c, const PrimeField& field) {
  std::vector<Term> out;
  out.reserve(p.nterms());
  if (c == 0) return out;
  for (const auto& t : p.terms()) {
    std::uint32_t cc = field.mul(t.coeff, c);
    if (cc != 0) out.push_back(Term{t.mono * m, cc});
  }
  return out;
}
} // namespace detail

Polynomial Polynomial::zero(RingPtr ring) {
  Polynomial p;
  p.ring_ = std::move(ring);
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
  std::uint32_t cc = ring->field().from_int(c);
  if (cc == 0) return zero(std::move(ring));
  std::vector<Term> t;
  t.push_back(Term{Monomial::one(ring->nvars()), cc});
  return from_sorted_terms(std::move(ring), std::move(t));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
  if (i >= ring->nvars())
    fail(errc::invalid_argument, "variable index out of range");
  std::vector<std::uint32_t> e(ring->nvars(), 0);
  e[i] = 1;
  std::vector<Term> t;
  t.push_back(Term{Monomial(std::move(e)), 1});
  return from_sorted_terms(std::move(ring), std::move(t));
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, std::int64_t c) {
  if (m.nvars() != ring->nvars())
    fail(errc::ring_mismatch, "monomial has wrong variable count");
  std::uint32_t cc = ring->field().from_int(c);
  if (cc == 0) return zero(std::move(ring));
  std::vector<Term> t;
  t.push_back(Term{std::move(m), cc});
  return from_sorted_terms(std::move(ring), std::move(t));
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.mono.nvars() != ring->nvars())
      fail(errc::ring_mismatch, "monomial has wrong variable count");
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return grevlex_greater(a.mono, b.mono);
  });
  const auto& F = ring->field();
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    std::uint32_t c = t.coeff % F.modulus();
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = F.add(out.back().coeff, c);
      if (out.back().coeff == 0) out.pop_back();
    } else if (c != 0) {
      out.push_back(Term{std::move(t.mono), c});
    }
  }
  return from_sorted_terms(std::move(ring), std::move(out));
}

Polynomial Polynomial::from_sorted_terms(RingPtr ring,
                                         std::vector<Term> terms) {
  Polynomial p;
  p.ring_ = std::move(ring);
  p.terms_ = std::move(terms);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

const Term& Polynomial::lead_term() const {
  if (terms_.empty())
    fail(errc::invalid_argument, "leading term of the zero polynomial");
  return terms_.front();
}

int Polynomial::degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.front().mono.degree());
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  std::uint32_t d = terms_.front().mono.degree();
  for (const auto& t : terms_)
    if (t.mono.degree() != d) return false;
  return true;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  detail::Geobucket gb(ring_->field());
  gb.add_sorted(terms_);
  gb.add_sorted(o.terms_);
  return from_sorted_terms(ring_, gb.demote_all());
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + (-o);
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> t = terms_;
  for (auto& x : t) x.coeff = ring_->field().neg(x.coeff);
  return from_sorted_terms(ring_, std::move(t));
}

Polynomial Polynomial::scaled(std::uint32_t c) const {
  c %= ring_->field().modulus();
  if (c == 0) return zero(ring_);
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& x : terms_) {
    std::uint32_t cc = ring_->field().mul(x.coeff, c);
    if (cc != 0) t.push_back(Term{x.mono, cc});
  }
  return from_sorted_terms(ring_, std::move(t));
}

Polynomial Polynomial::mono_mul(const Monomial& m, std::uint32_t c) const {
  return from_sorted_terms(
      ring_, detail::scaled_shift(*this, m, c % ring_->field().modulus(),
                                  ring_->field()));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  if (is_zero() || o.is_zero()) return zero(ring_);
  const Polynomial& few = nterms() <= o.nterms() ? *this : o;
  const Polynomial& many = nterms() <= o.nterms() ? o : *this;
  detail::Geobucket gb(ring_->field());
  for (const auto& t : few.terms_)
    gb.add_sorted(detail::scaled_shift(many, t.mono, t.coeff, ring_->field()));
  return from_sorted_terms(ring_, gb.demote_all());
}

Polynomial Polynomial::pow(std::uint32_t e) const {
  Polynomial acc = constant(ring_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    if (e >>= 1) base = base * base;
  }
  return acc;
}

Polynomial Polynomial::monic() const {
  return scaled(ring_->field().inv(lead_coeff()));
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  if (!terms_.empty()) require_same_ring(ring_, o.ring_);
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].coeff != o.terms_[i].coeff ||
        !(terms_[i].mono == o.terms_[i].mono))
      return false;
  return true;
}

std::string monomial_to_string(const PolyRing& ring, const Monomial& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m.exponent(i) == 0) continue;
    os << ring.var_name(i);
    if (m.exponent(i) > 1) os << '^' << m.exponent(i);
  }
  return os.str();
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << '+';
    first = false;
    if (t.mono.is_one()) {
      os << t.coeff;
    } else {
      if (t.coeff != 1) os << t.coeff;
      os << monomial_to_string(*ring_, t.mono);
    }
  }
  return os.str();
}

Polynomial poly_divmod(const Polynomial& f, const Polynomial& d,
                       Polynomial* rem) {
  require_same_ring(f.ring(), d.ring());
  if (d.is_zero()) fail(errc::zero_divisor_argument, "division by zero");
  const auto& F = f.ring()->field();
  const Monomial& dl = d.lead_monomial();
  std::uint32_t dinv = F.inv(d.lead_coeff());

  detail::Geobucket gb(F);
  gb.add_sorted(f.terms());
  std::vector<Term> q, r;
  Term t{Monomial::one(0), 0};
  while (gb.extract_lead(t)) {
    if (dl.divides(t.mono)) {
      Monomial m = t.mono.quotient(dl);
      std::uint32_t c = F.mul(t.coeff, dinv);
      // cancel c*m*d below the lead (the lead itself was already popped)
      std::vector<Term> sub;
      sub.reserve(d.nterms());
      for (std::size_t i = 1; i < d.terms().size(); ++i) {
        const auto& dt = d.terms()[i];
        sub.push_back(Term{dt.mono * m, F.neg(F.mul(dt.coeff, c))});
      }
      gb.add_sorted(std::move(sub));
      q.push_back(Term{std::move(m), c});
    } else {
      r.push_back(std::move(t));
    }
  }
  if (rem) *rem = Polynomial::from_sorted_terms(f.ring(), std::move(r));
  return Polynomial::from_sorted_terms(f.ring(), std::move(q));
}

} // namespace hyperres
