#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyperres/fixtures.hpp"
#include "hyperres/matrix_factorization.hpp"
#include "hyperres/tail_checks.hpp"

namespace hyperres {

struct JobConfig {
  std::uint32_t p = 0;
  std::vector<std::string> vars;
  std::string f;
  std::vector<std::string> ideal;
  std::vector<std::uint32_t> exponents{0};
  std::size_t max_position = 4;
  std::vector<std::string> checks; // any of: theorem cor21 prop41 prop45 mf
  std::uint64_t seed = 0;
  std::string format = "text"; // text | json

  bool operator==(const JobConfig& o) const = default;
};

// parses and validates a JSON config document; ConfigError names the field
JobConfig parse_job_config(const std::string& text);
std::string job_config_to_json(const JobConfig& config);

struct CheckOutcome {
  std::string name;
  bool asserted = false; // counted toward the overall pass/fail
  bool passed = false;
  std::string detail;
  bool operator==(const CheckOutcome& o) const = default;
};

struct ExponentReport {
  std::uint32_t e = 0;
  std::uint64_t q = 1;
  bool ok = false;
  std::string error;
  std::string socle;
  BettiTable betti;
  std::vector<CheckOutcome> checks;
  bool operator==(const ExponentReport& o) const = default;
};

// deterministic effort counters; reported instead of wall time so that
// fixed-seed runs are byte-identical
struct WorkCounters {
  std::uint64_t spairs = 0;
  std::uint64_t reductions = 0;
  bool operator==(const WorkCounters& o) const = default;
};

struct ReportBundle {
  JobConfig config;
  std::vector<ExponentReport> rows;
  WorkCounters work;
  bool all_passed = true; // no row errors and every asserted check passed
  bool operator==(const ReportBundle& o) const = default;
};

ReportBundle run(const JobConfig& config);

// two-line column layout: "pos k" headers over "twist:mult" cells
std::string render_betti(const BettiTable& table);
std::string render_bundle(const ReportBundle& bundle);
std::string bundle_to_json(const ReportBundle& bundle);
ReportBundle bundle_from_json(const std::string& text);

struct ReproduceResult {
  std::string selector;
  std::uint32_t e_max = 0;
  bool passed = false;
  std::string diff; // one line per mismatch, empty when passed
  std::vector<ExponentReport> rows;
};

// Recomputes the selected reference rows for e = 0..e_max and diffs them
// against the embedded tables.  BudgetExceeded (naming the last completed e)
// when e_max overruns the case budget and allow_large_e is not set.
ReproduceResult reproduce_reference(const std::string& selector,
                                    std::uint32_t e_max,
                                    bool allow_large_e = false);
std::string render_reproduce(const ReproduceResult& r);

} // namespace hyperres
