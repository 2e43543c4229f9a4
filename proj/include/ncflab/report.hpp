#pragma once

// Aggregated analysis of a single function and the JSON/CSV shapes used by
// the command-line tool.

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ncflab/boolfn.hpp"
#include "ncflab/complexity.hpp"
#include "ncflab/counting.hpp"
#include "ncflab/ncf.hpp"
#include "ncflab/symmetry.hpp"
#include "ncflab/verify.hpp"

namespace ncflab {

/// "n:HEX" truth table or ANF text. ANF arity defaults to the largest index used.
BooleanFunction parse_function_spec(std::string_view text, std::optional<int> arity = std::nullopt);

struct AnalysisOptions {
  bool witnesses = false;
  bool block_sensitivity = false;
  ComplexityLimits limits;
  AutomorphismLimits automorphism;
};

struct Agreement {
  bool c_is_max_of_fibers = false;
  std::optional<bool> cert_formula;           // NCF: closed form == brute force
  std::optional<bool> sensitivity_equals_c;   // NCF
  std::optional<bool> block_equals_sensitivity;  // NCF with block sensitivity requested
  std::optional<bool> asymmetry_criterion;    // NCF: strongly asymmetric <=> s == n
};

struct AnalysisReport {
  std::string anf;
  std::string table;
  int arity = 0;
  std::optional<NcfClassification> ncf;  // empty when arity < 2
  ComplexityProfile profile;
  SymmetryReport symmetry;
  std::optional<NcfSymmetryChecks> structural;
  Agreement agreement;
};

AnalysisReport analyze(const BooleanFunction& f, const AnalysisOptions& options = {});

nlohmann::json to_json(const ComplexityProfile& p);
nlohmann::json to_json(const SymmetryReport& r);
nlohmann::json to_json(const AnalysisReport& r);
nlohmann::json to_json(const VerifyReport& r);

/// Human-readable summary.
std::string to_text(const AnalysisReport& r);

inline const std::vector<std::string>& count_kinds() {
  static const std::vector<std::string> kinds{"total", "layers", "symmetry", "strongly_asymmetric",
                                              "strongly_asym_max_layers"};
  return kinds;
}

/// CSV with header n,r_or_s,kind,value. Empty `kinds` means all.
std::string to_csv(const CountTable& t, const std::set<std::string>& kinds = {});

}  // namespace ncflab
