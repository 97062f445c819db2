#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hyperres/prime_field.hpp"

namespace hyperres {

// F_p[x_1..x_n] with every variable in degree 1.  Rings are immutable and
// shared by pointer; two rings are interchangeable iff same_ring() holds.
class PolyRing {
public:
  PolyRing(PrimeField field, std::vector<std::string> vars);

  const PrimeField& field() const { return field_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& var_names() const { return vars_; }
  const std::string& var_name(std::size_t i) const { return vars_[i]; }
  std::optional<std::size_t> var_index(const std::string& name) const;

  bool operator==(const PolyRing& o) const {
    return field_ == o.field_ && vars_ == o.vars_;
  }

private:
  PrimeField field_;
  std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::uint32_t p, std::vector<std::string> vars);

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

void require_same_ring(const RingPtr& a, const RingPtr& b);

} // namespace hyperres
