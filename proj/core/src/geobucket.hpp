#pragma once

// Internal accumulator for long chains of polynomial additions (reduction
// loops, products).  Terms are kept in geometrically sized sorted buckets;
// a merge only touches buckets of comparable size, which keeps repeated
// "p -= c*m*q" updates from degenerating into quadratic merges.

#include <utility>
#include <vector>

#include "hyperres/polynomial.hpp"

namespace hyperres::detail {

class Geobucket {
public:
  explicit Geobucket(const PrimeField& field) : field_(&field) {}

  bool empty_hint() const { return total_ == 0; } // may overcount cancellations

  // takes a sorted-descending strip of terms (distinct monomials, coeffs != 0)
  void add_sorted(std::vector<Term> t) {
    if (t.empty()) return;
    total_ += t.size();
    std::size_t lvl = level_for(t.size());
    if (lvl >= buckets_.size()) buckets_.resize(lvl + 1);
    while (true) {
      if (buckets_[lvl].empty()) {
        buckets_[lvl] = std::move(t);
        return;
      }
      t = merge(std::move(buckets_[lvl]), std::move(t));
      buckets_[lvl].clear();
      if (t.empty()) return;
      lvl = level_for(t.size());
      if (lvl >= buckets_.size()) {
        buckets_.resize(lvl + 1);
        buckets_[lvl] = std::move(t);
        return;
      }
    }
  }

  // Pops the current leading term (largest monomial with nonzero combined
  // coefficient).  Returns false when the accumulator is zero.
  bool extract_lead(Term& out) {
    while (true) {
      int best = -1;
      for (std::size_t i = 0; i < buckets_.size(); ++i) {
        if (buckets_[i].empty()) continue;
        if (best < 0 || grevlex_greater(buckets_[i].front().mono,
                                        buckets_[best].front().mono))
          best = static_cast<int>(i);
      }
      if (best < 0) return false;
      Monomial m = buckets_[best].front().mono;
      std::uint64_t c = 0;
      for (auto& b : buckets_) {
        if (!b.empty() && b.front().mono == m) {
          c += b.front().coeff;
          b.erase(b.begin());
          --total_;
        }
      }
      std::uint32_t cc = static_cast<std::uint32_t>(c % field_->modulus());
      if (cc != 0) {
        out = Term{std::move(m), cc};
        return true;
      }
      // full cancellation across buckets; keep looking
    }
  }

  // drains everything into one sorted strip
  std::vector<Term> demote_all() {
    std::vector<Term> acc;
    for (auto& b : buckets_) {
      if (b.empty()) continue;
      acc = acc.empty() ? std::move(b) : merge(std::move(acc), std::move(b));
    }
    buckets_.clear();
    total_ = 0;
    return acc;
  }

private:
  static std::size_t level_for(std::size_t n) {
    std::size_t lvl = 0, cap = 4;
    while (cap < n) {
      cap <<= 1;
      ++lvl;
    }
    return lvl;
  }

  // merges two sorted strips, combining equal monomials mod p
  std::vector<Term> merge(std::vector<Term> a, std::vector<Term> b) const {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      auto ord = grevlex_compare(a[i].mono, b[j].mono);
      if (ord == std::strong_ordering::greater) {
        out.push_back(std::move(a[i++]));
      } else if (ord == std::strong_ordering::less) {
        out.push_back(std::move(b[j++]));
      } else {
        std::uint32_t c = field_->add(a[i].coeff, b[j].coeff);
        if (c != 0) out.push_back(Term{std::move(a[i].mono), c});
        ++i;
        ++j;
      }
    }
    for (; i < a.size(); ++i) out.push_back(std::move(a[i]));
    for (; j < b.size(); ++j) out.push_back(std::move(b[j]));
    return out;
  }

  const PrimeField* field_;
  std::vector<std::vector<Term>> buckets_;
  std::size_t total_ = 0;
};

// c * m * p as a sorted strip (grevlex is multiplicative, order preserved)
std::vector<Term> scaled_shift(const Polynomial& p, const Monomial& m,
                               std::uint32_t c, const PrimeField& field);

} // namespace hyperres::detail
