#include "hyperres/ring.hpp"

#include <set>

namespace hyperres {

PolyRing::PolyRing(PrimeField field, std::vector<std::string> vars)
    : field_(field), vars_(std::move(vars)) {
  if (vars_.empty())
    fail(errc::invalid_argument, "polynomial ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.empty()) fail(errc::invalid_argument, "empty variable name");
    if (!seen.insert(v).second)
      fail(errc::invalid_argument, "duplicate variable name '" + v + "'");
  }
}

std::optional<std::size_t> PolyRing::var_index(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

RingPtr make_ring(std::uint32_t p, std::vector<std::string> vars) {
  return std::make_shared<const PolyRing>(PrimeField(p), std::move(vars));
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b))
    fail(errc::ring_mismatch, "operands live in different rings");
}

} // namespace hyperres
