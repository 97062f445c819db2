#pragma once

#include <cstdint>
#include <vector>

#include "hyperres/prime_field.hpp"

namespace hyperres {

// Dense matrix over F_p.  Row reduction is plain Gauss-Jordan; sizes in
// this project stay in the low thousands, exactness is the point.
class FpMatrix {
public:
  FpMatrix(std::size_t rows, std::size_t cols, PrimeField field);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const PrimeField& field() const { return field_; }

  std::uint32_t at(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }
  void set(std::size_t i, std::size_t j, std::uint32_t v) {
    a_[i * cols_ + j] = v % field_.modulus();
  }

  // in-place reduced row echelon form; returns rank
  std::size_t row_reduce();
  std::size_t rank() const; // on a copy
  // basis of the right kernel, one column vector per entry
  std::vector<std::vector<std::uint32_t>> nullspace() const;
  // A * x for a column vector x
  std::vector<std::uint32_t> apply(const std::vector<std::uint32_t>& x) const;
  FpMatrix multiply(const FpMatrix& o) const;
  FpMatrix inverse() const; // pre: square and invertible, else throws
  bool is_invertible() const;

  // ranks of [A] and [A | b]; used for membership-style queries
  static bool in_row_span(const FpMatrix& rows, const std::vector<std::uint32_t>& v);

private:
  std::size_t rows_, cols_;
  PrimeField field_;
  std::vector<std::uint32_t> a_;
};

} // namespace hyperres
