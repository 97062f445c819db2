#include "hyperres/graded_matrix.hpp"

#include <sstream>
#include <utility>

#include "hyperres/errors.hpp"

namespace hyperres {

GradedMatrix::GradedMatrix(RingPtr ring, std::vector<int> row_twists,
                           std::vector<int> col_twists)
    : ring_(std::move(ring)), row_twists_(std::move(row_twists)),
      col_twists_(std::move(col_twists)),
      entries_(row_twists_.size() * col_twists_.size(),
               Polynomial::zero(ring_)) {}

GradedMatrix GradedMatrix::from_columns(ModulePtr target,
                                        const std::vector<ModuleElement>& cols) {
  std::vector<int> ct;
  ct.reserve(cols.size());
  for (const auto& c : cols) {
    require_same_module(c.module(), target);
    if (c.is_zero())
      fail(errc::invalid_argument, "matrix columns must be nonzero");
    if (!c.is_homogeneous())
      fail(errc::non_homogeneous, "matrix columns must be homogeneous");
    ct.push_back(c.degree());
  }
  GradedMatrix m(target->ring(), target->twists(), std::move(ct));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (!cols[j].comp(i).is_zero()) m.set(i, j, cols[j].comp(i));
  return m;
}

GradedMatrix GradedMatrix::scalar(RingPtr ring, const std::vector<int>& twists,
                                  const Polynomial& c) {
  int d = c.is_zero() ? 0 : c.degree();
  std::vector<int> ct;
  ct.reserve(twists.size());
  for (int t : twists) ct.push_back(t + d);
  GradedMatrix m(std::move(ring), twists, std::move(ct));
  for (std::size_t i = 0; i < m.rows(); ++i) m.set(i, i, c);
  return m;
}

void GradedMatrix::set(std::size_t i, std::size_t j, Polynomial p) {
  entries_[i * cols() + j] = std::move(p);
}

bool GradedMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool GradedMatrix::is_homogeneous() const {
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) {
      const Polynomial& e = at(i, j);
      if (e.is_zero()) continue;
      if (!e.is_homogeneous()) return false;
      if (e.degree() != col_twists_[j] - row_twists_[i]) return false;
    }
  return true;
}

bool GradedMatrix::is_minimal() const {
  if (!is_homogeneous()) return false;
  for (const auto& e : entries_)
    if (!e.is_zero() && e.degree() == 0) return false;
  return true;
}

ModuleElement GradedMatrix::column(std::size_t j) const {
  ModulePtr tgt = target_module();
  std::vector<Polynomial> comps;
  comps.reserve(rows());
  for (std::size_t i = 0; i < rows(); ++i) comps.push_back(at(i, j));
  return ModuleElement(std::move(tgt), std::move(comps));
}

std::vector<ModuleElement> GradedMatrix::columns() const {
  std::vector<ModuleElement> out;
  out.reserve(cols());
  for (std::size_t j = 0; j < cols(); ++j) out.push_back(column(j));
  return out;
}

GradedMatrix GradedMatrix::operator*(const GradedMatrix& o) const {
  require_same_ring(ring_, o.ring_);
  if (col_twists_ != o.row_twists_)
    fail(errc::module_mismatch, "matrix product: source/target twists differ");
  GradedMatrix out(ring_, row_twists_, o.col_twists_);
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t k = 0; k < o.cols(); ++k) {
      Polynomial acc = Polynomial::zero(ring_);
      for (std::size_t j = 0; j < cols(); ++j) {
        if (at(i, j).is_zero() || o.at(j, k).is_zero()) continue;
        acc = acc + at(i, j) * o.at(j, k);
      }
      if (!acc.is_zero()) out.set(i, k, std::move(acc));
    }
  return out;
}

GradedMatrix GradedMatrix::operator-() const {
  GradedMatrix out(ring_, row_twists_, col_twists_);
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j)
      if (!at(i, j).is_zero()) out.set(i, j, -at(i, j));
  return out;
}

bool GradedMatrix::operator==(const GradedMatrix& o) const {
  return same_ring(ring_, o.ring_) && row_twists_ == o.row_twists_ &&
         col_twists_ == o.col_twists_ && entries_ == o.entries_;
}

std::string GradedMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows(); ++i) {
    os << '[';
    for (std::size_t j = 0; j < cols(); ++j) {
      if (j) os << ", ";
      os << at(i, j).to_string();
    }
    os << ']';
    if (i + 1 < rows()) os << '\n';
  }
  return os.str();
}

} // namespace hyperres
