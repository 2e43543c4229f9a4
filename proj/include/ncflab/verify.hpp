#pragma once

// Cross-validation of the counting formulas and closed forms against an
// exhaustive walk over all n-variable NCFs.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncflab/counting.hpp"
#include "ncflab/ncf.hpp"

namespace ncflab {

struct CensusOptions {
  /// Also compare block sensitivity with sensitivity and C (exact search; n <= 6).
  bool block_sensitivity = true;
};

/// Everything learned from one pass over the NCF stream.
struct Census {
  int n = 0;
  std::uint64_t functions = 0;
  std::map<int, std::uint64_t> by_layers;
  std::map<int, std::uint64_t> by_symmetry;
  std::uint64_t strongly_asymmetric = 0;
  std::uint64_t strongly_asymmetric_max_layers = 0;
  std::uint64_t distinct_tables = 0;

  std::uint64_t roundtrip_failures = 0;
  std::uint64_t expanded_form_mismatches = 0;
  std::uint64_t formula_mismatches = 0;
  std::uint64_t measure_collapse_failures = 0;
  std::uint64_t asymmetry_criterion_failures = 0;
  std::uint64_t structural_check_failures = 0;

  /// First counterexample per failing check, in stream order.
  std::map<std::string, std::string> counterexamples;

  bool operator==(const Census&) const = default;
};

/// OpenMP over layer structures; merged in stream order.
Census census(int n, const CensusOptions& options = {});
Census census_serial(int n, const CensusOptions& options = {});

struct CheckResult {
  bool pass = false;
  std::string expected;
  std::string actual;
};

struct VerifyReport {
  int n = 0;
  bool exhaustive = false;
  std::map<std::string, CheckResult> checks;

  bool all_pass() const noexcept;
};

struct VerifyOptions {
  /// Above this n only formula identities are checked.
  int exhaustive_max_arity = 5;
  CensusOptions census;
};

VerifyReport verify(int n, const VerifyOptions& options = {});

}  // namespace ncflab
