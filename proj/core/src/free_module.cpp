#include "hyperres/free_module.hpp"

namespace hyperres {

void require_same_module(const ModulePtr& a, const ModulePtr& b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b))
    fail(errc::module_mismatch, "elements live in different free modules");
}

ModuleElement::ModuleElement(ModulePtr module) : module_(std::move(module)) {
  comps_.reserve(module_->rank());
  for (std::size_t i = 0; i < module_->rank(); ++i)
    comps_.push_back(Polynomial::zero(module_->ring()));
}

ModuleElement::ModuleElement(ModulePtr module, std::vector<Polynomial> comps)
    : module_(std::move(module)), comps_(std::move(comps)) {
  if (comps_.size() != module_->rank())
    fail(errc::module_mismatch, "component count does not match module rank");
  for (const auto& c : comps_)
    if (!c.is_zero()) require_same_ring(c.ring(), module_->ring());
}

void ModuleElement::set_comp(std::size_t i, Polynomial p) {
  if (!p.is_zero()) require_same_ring(p.ring(), module_->ring());
  comps_[i] = std::move(p);
}

bool ModuleElement::is_zero() const {
  for (const auto& c : comps_)
    if (!c.is_zero()) return false;
  return true;
}

bool ModuleElement::is_homogeneous() const {
  int d = -1;
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (comps_[i].is_zero()) continue;
    if (!comps_[i].is_homogeneous()) return false;
    int di = comps_[i].degree() + module_->twist(i);
    if (d == -1)
      d = di;
    else if (d != di)
      return false;
  }
  return true;
}

int ModuleElement::degree() const {
  for (std::size_t i = 0; i < comps_.size(); ++i)
    if (!comps_[i].is_zero()) return comps_[i].degree() + module_->twist(i);
  fail(errc::invalid_argument, "degree of the zero element");
}

std::size_t ModuleElement::lead_position() const {
  for (std::size_t i = 0; i < comps_.size(); ++i)
    if (!comps_[i].is_zero()) return i;
  fail(errc::invalid_argument, "leading term of the zero element");
}

ModTerm ModuleElement::lead_term() const {
  std::size_t p = lead_position();
  return ModTerm{p, comps_[p].lead_monomial()};
}

std::uint32_t ModuleElement::lead_coeff() const {
  return comps_[lead_position()].lead_coeff();
}

ModuleElement ModuleElement::operator+(const ModuleElement& o) const {
  require_same_module(module_, o.module_);
  std::vector<Polynomial> c;
  c.reserve(comps_.size());
  for (std::size_t i = 0; i < comps_.size(); ++i)
    c.push_back(comps_[i] + o.comps_[i]);
  return ModuleElement(module_, std::move(c));
}

ModuleElement ModuleElement::operator-(const ModuleElement& o) const {
  require_same_module(module_, o.module_);
  std::vector<Polynomial> c;
  c.reserve(comps_.size());
  for (std::size_t i = 0; i < comps_.size(); ++i)
    c.push_back(comps_[i] - o.comps_[i]);
  return ModuleElement(module_, std::move(c));
}

ModuleElement ModuleElement::operator-() const {
  std::vector<Polynomial> c;
  c.reserve(comps_.size());
  for (const auto& x : comps_) c.push_back(-x);
  return ModuleElement(module_, std::move(c));
}

ModuleElement ModuleElement::scaled(std::uint32_t k) const {
  std::vector<Polynomial> c;
  c.reserve(comps_.size());
  for (const auto& x : comps_) c.push_back(x.scaled(k));
  return ModuleElement(module_, std::move(c));
}

ModuleElement ModuleElement::mono_mul(const Monomial& m, std::uint32_t k) const {
  std::vector<Polynomial> c;
  c.reserve(comps_.size());
  for (const auto& x : comps_) c.push_back(x.mono_mul(m, k));
  return ModuleElement(module_, std::move(c));
}

ModuleElement ModuleElement::poly_mul(const Polynomial& p) const {
  std::vector<Polynomial> c;
  c.reserve(comps_.size());
  for (const auto& x : comps_) c.push_back(x * p);
  return ModuleElement(module_, std::move(c));
}

ModuleElement ModuleElement::monic() const {
  return scaled(module_->ring()->field().inv(lead_coeff()));
}

bool ModuleElement::operator==(const ModuleElement& o) const {
  if (comps_.size() != o.comps_.size()) return false;
  for (std::size_t i = 0; i < comps_.size(); ++i)
    if (!(comps_[i] == o.comps_[i])) return false;
  return true;
}

ModuleElement ModuleElement::basis_vector(ModulePtr module, std::size_t i,
                                          const Polynomial& coeff) {
  ModuleElement e(module);
  e.set_comp(i, coeff);
  return e;
}

} // namespace hyperres
