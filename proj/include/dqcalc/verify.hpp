#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dqcalc::verify {

enum class Suite { all, oracle, roundtrip, screw, axioms, pauli };

Suite parse_suite(std::string_view name);  // throws InvalidParameter

struct Options {
  Suite suite = Suite::all;
  std::uint64_t seed = 42;
  std::size_t trials = 1000;
  // When set, replaces every check's pinned tolerance.
  std::optional<double> tol_override;
  // Trials are independent; the parallel path fills an index-addressed
  // defect vector (OpenMP) and reduces it in trial order, so serial and
  // parallel runs render byte-identical reports.
  bool parallel = true;
};

struct CheckResult {
  std::string suite;
  std::string name;
  std::size_t trials = 0;
  double tolerance = 0.0;
  double max_defect = 0.0;
  bool pass = false;
  double millis = 0.0;  // wall time; excluded from render() on purpose
};

struct Report {
  std::vector<CheckResult> checks;
  bool all_pass() const;
  const CheckResult* find(std::string_view name) const;
};

Report run(const Options& opt);

// Deterministic text form: one line per check plus an overall verdict.
std::string render(const Report& report);

}  // namespace dqcalc::verify
