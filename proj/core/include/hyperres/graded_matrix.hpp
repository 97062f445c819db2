#pragma once

#include <string>
#include <vector>

#include "hyperres/free_module.hpp"

namespace hyperres {

// Matrix of a degree-0 map between graded free modules, columns = images of
// the source generators.  Entry (i,j) is homogeneous of degree
// col_twist(j) - row_twist(i) whenever nonzero.
class GradedMatrix {
public:
  GradedMatrix(RingPtr ring, std::vector<int> row_twists,
               std::vector<int> col_twists); // zero entries

  // columns must be nonzero homogeneous elements of target
  static GradedMatrix from_columns(ModulePtr target,
                                   const std::vector<ModuleElement>& cols);
  // c * identity as a map ⊕R(-t_i - deg c) -> ⊕R(-t_i)
  static GradedMatrix scalar(RingPtr ring, const std::vector<int>& twists,
                             const Polynomial& c);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return row_twists_.size(); }
  std::size_t cols() const { return col_twists_.size(); }
  const std::vector<int>& row_twists() const { return row_twists_; }
  const std::vector<int>& col_twists() const { return col_twists_; }
  int row_twist(std::size_t i) const { return row_twists_[i]; }
  int col_twist(std::size_t j) const { return col_twists_[j]; }

  const Polynomial& at(std::size_t i, std::size_t j) const {
    return entries_[i * cols() + j];
  }
  void set(std::size_t i, std::size_t j, Polynomial p);

  bool is_zero() const;
  bool is_homogeneous() const;
  // homogeneous with no nonzero constant entry
  bool is_minimal() const;

  ModulePtr target_module() const { return make_module(ring_, row_twists_); }
  ModulePtr source_module() const { return make_module(ring_, col_twists_); }
  ModuleElement column(std::size_t j) const;
  std::vector<ModuleElement> columns() const;

  GradedMatrix operator*(const GradedMatrix& o) const;
  GradedMatrix operator-() const;
  bool operator==(const GradedMatrix& o) const;

  std::string to_string() const; // one bracketed row per line

private:
  RingPtr ring_;
  std::vector<int> row_twists_;
  std::vector<int> col_twists_;
  std::vector<Polynomial> entries_;
};

} // namespace hyperres
