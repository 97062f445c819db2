#include "hyperres/fp_matrix.hpp"

#include "hyperres/errors.hpp"

namespace hyperres {

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, PrimeField field)
    : rows_(rows), cols_(cols), field_(field), a_(rows * cols, 0) {}

std::size_t FpMatrix::row_reduce() {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t piv = rank;
    while (piv < rows_ && at(piv, col) == 0) ++piv;
    if (piv == rows_) continue;
    if (piv != rank)
      for (std::size_t j = col; j < cols_; ++j)
        std::swap(a_[piv * cols_ + j], a_[rank * cols_ + j]);
    std::uint32_t inv = field_.inv(at(rank, col));
    for (std::size_t j = col; j < cols_; ++j)
      a_[rank * cols_ + j] = field_.mul(a_[rank * cols_ + j], inv);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == rank) continue;
      std::uint32_t f = at(i, col);
      if (f == 0) continue;
      for (std::size_t j = col; j < cols_; ++j)
        a_[i * cols_ + j] =
            field_.sub(a_[i * cols_ + j], field_.mul(f, a_[rank * cols_ + j]));
    }
    ++rank;
  }
  return rank;
}

std::size_t FpMatrix::rank() const {
  FpMatrix c = *this;
  return c.row_reduce();
}

std::vector<std::vector<std::uint32_t>> FpMatrix::nullspace() const {
  FpMatrix r = *this;
  std::size_t rk = r.row_reduce();
  // in RREF the first nonzero entry of each row marks its pivot column
  std::vector<std::ptrdiff_t> pivot_of_col(cols_, -1);
  for (std::size_t row = 0; row < rk; ++row) {
    std::size_t first = 0;
    while (first < cols_ && r.at(row, first) == 0) ++first;
    if (first < cols_) pivot_of_col[first] = static_cast<std::ptrdiff_t>(row);
  }
  std::vector<std::vector<std::uint32_t>> basis;
  for (std::size_t freec = 0; freec < cols_; ++freec) {
    if (pivot_of_col[freec] >= 0) continue;
    std::vector<std::uint32_t> v(cols_, 0);
    v[freec] = 1;
    for (std::size_t col = 0; col < cols_; ++col) {
      if (pivot_of_col[col] < 0) continue;
      std::size_t pr = static_cast<std::size_t>(pivot_of_col[col]);
      v[col] = field_.neg(r.at(pr, freec));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::uint32_t> FpMatrix::apply(
    const std::vector<std::uint32_t>& x) const {
  if (x.size() != cols_) fail(errc::invalid_argument, "vector size mismatch");
  std::vector<std::uint32_t> y(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < cols_; ++j)
      acc += (std::uint64_t)at(i, j) * x[j] % field_.modulus();
    y[i] = static_cast<std::uint32_t>(acc % field_.modulus());
  }
  return y;
}

FpMatrix FpMatrix::multiply(const FpMatrix& o) const {
  if (cols_ != o.rows_) fail(errc::invalid_argument, "matrix shape mismatch");
  FpMatrix out(rows_, o.cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      std::uint32_t v = at(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        out.a_[i * o.cols_ + j] = field_.add(
            out.a_[i * o.cols_ + j], field_.mul(v, o.at(k, j)));
    }
  return out;
}

FpMatrix FpMatrix::inverse() const {
  if (rows_ != cols_) fail(errc::singular_input, "inverse of non-square matrix");
  FpMatrix aug(rows_, 2 * cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.set(i, j, at(i, j));
    aug.set(i, cols_ + i, 1);
  }
  if (aug.row_reduce() < rows_)
    fail(errc::singular_input, "matrix is singular over F_p");
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (aug.at(i, j) != (i == j ? 1u : 0u))
        fail(errc::singular_input, "matrix is singular over F_p");
  FpMatrix inv(rows_, cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      inv.set(i, j, aug.at(i, cols_ + j));
  return inv;
}

bool FpMatrix::is_invertible() const {
  return rows_ == cols_ && rank() == rows_;
}

bool FpMatrix::in_row_span(const FpMatrix& rows,
                           const std::vector<std::uint32_t>& v) {
  FpMatrix aug(rows.rows() + 1, rows.cols(), rows.field());
  for (std::size_t i = 0; i < rows.rows(); ++i)
    for (std::size_t j = 0; j < rows.cols(); ++j)
      aug.set(i, j, rows.at(i, j));
  for (std::size_t j = 0; j < rows.cols(); ++j) aug.set(rows.rows(), j, v[j]);
  return aug.rank() == rows.rank();
}

} // namespace hyperres
