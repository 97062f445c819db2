#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyperres/graded_matrix.hpp"

namespace hyperres::fixtures {

// One transcribed table row, keyed exactly as in the reference tables:
// exponent e, the socle column (when the table has one), and one
// "twist:mult ..." entry per homological position.
struct ReferenceRow {
  std::uint32_t e = 0;
  std::string socle;
  std::vector<std::string> positions;
};

struct ReferenceCase {
  std::string selector;
  std::uint32_t p = 0;
  std::vector<std::string> vars;
  std::string f;
  std::vector<std::string> ideal;
  std::size_t first_position = 0;
  std::size_t last_position = 3;
  bool with_socle = false;
  std::uint32_t default_budget = 2; // largest e run without the override flag
  std::vector<ReferenceRow> rows;
};

const std::vector<ReferenceCase>& reference_cases();
// InvalidArgument for an unknown selector
const ReferenceCase& reference_case(const std::string& selector);

// the displayed 4x4 alternating matrix accompanying the section0 tables;
// pre: ring is F_5[x,y,z]
GradedMatrix section0_alternating_matrix(RingPtr ring);

} // namespace hyperres::fixtures
