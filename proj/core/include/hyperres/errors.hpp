#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperres {

// Every recoverable failure in the library is reported through AlgebraError.
// The kind() code is stable and is what tests and the CLI dispatch on; the
// message is for humans.
enum class errc {
  invalid_argument,
  unknown_variable,
  syntax_error,
  exponent_overflow,
  ring_mismatch,
  module_mismatch,
  non_homogeneous,
  zero_divisor_argument,
  not_artinian,
  not_grade_three,
  not_gorenstein,
  not_power_of_p,
  prefix_too_short,
  periodicity_not_detected,
  correction_not_invertible,
  odd_size,
  no_invertible_solution,
  singular_input,
  f_degree_not_three,
  socle_not_pure,
  config_error,
  budget_exceeded,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_argument: return "invalid_argument";
    case errc::unknown_variable: return "unknown_variable";
    case errc::syntax_error: return "syntax_error";
    case errc::exponent_overflow: return "exponent_overflow";
    case errc::ring_mismatch: return "ring_mismatch";
    case errc::module_mismatch: return "module_mismatch";
    case errc::non_homogeneous: return "non_homogeneous";
    case errc::zero_divisor_argument: return "zero_divisor_argument";
    case errc::not_artinian: return "not_artinian";
    case errc::not_grade_three: return "not_grade_three";
    case errc::not_gorenstein: return "not_gorenstein";
    case errc::not_power_of_p: return "not_power_of_p";
    case errc::prefix_too_short: return "prefix_too_short";
    case errc::periodicity_not_detected: return "periodicity_not_detected";
    case errc::correction_not_invertible: return "correction_not_invertible";
    case errc::odd_size: return "odd_size";
    case errc::no_invertible_solution: return "no_invertible_solution";
    case errc::singular_input: return "singular_input";
    case errc::f_degree_not_three: return "f_degree_not_three";
    case errc::socle_not_pure: return "socle_not_pure";
    case errc::config_error: return "config_error";
    case errc::budget_exceeded: return "budget_exceeded";
  }
  return "unknown";
}

class AlgebraError : public std::runtime_error {
public:
  static constexpr std::size_t no_offset = static_cast<std::size_t>(-1);

  AlgebraError(errc code, std::string msg, std::size_t offset = no_offset)
      : std::runtime_error(std::move(msg)), code_(code), offset_(offset) {}

  errc kind() const { return code_; }
  // byte offset into the input for parser errors, no_offset otherwise
  std::size_t offset() const { return offset_; }

private:
  errc code_;
  std::size_t offset_;
};

[[noreturn]] inline void fail(errc code, std::string msg,
                              std::size_t offset = AlgebraError::no_offset) {
  throw AlgebraError(code, std::move(msg), offset);
}

} // namespace hyperres
