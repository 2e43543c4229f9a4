#pragma once

// Variable symmetry: classes of pairwise exchangeable variables and the
// automorphism search behind strong asymmetry.

#include <optional>
#include <string>
#include <vector>

#include "ncflab/boolfn.hpp"
#include "ncflab/ncf.hpp"

namespace ncflab {

/// Swapping x_i and x_j leaves f unchanged. equivalent(f, i, i) is true.
bool equivalent(const BooleanFunction& f, int i, int j);

struct SymmetryPartition {
  int arity = 0;
  /// Each class sorted; classes ordered by least element.
  std::vector<std::vector<int>> classes;

  int class_of(int variable) const;
  bool operator==(const SymmetryPartition&) const = default;
};

SymmetryPartition partition(const BooleanFunction& f);

/// Number of symmetric classes.
int symmetry_level(const BooleanFunction& f);

/// Order in which automorphism witnesses are preferred: canonical cycle
/// notation compared element-wise, with the end of a cycle ranking after
/// every element. "(1 2 3 4 5)" precedes "(1 2)(3 5)" precedes "(1 3)".
bool cycle_order_less(const Permutation& a, const Permutation& b);

/// f(x_sigma(1), ..., x_sigma(n)) == f.
bool is_automorphism(const BooleanFunction& f, const Permutation& sigma);

struct AutomorphismLimits {
  int brute_force_max_arity = 8;
};

struct StrongAsymmetry {
  bool strongly_asymmetric = false;
  /// Least nontrivial automorphism in cycle_order_less, brute-force path only.
  std::optional<Permutation> witness;
  bool used_ncf_fast_path = false;
};

/// Brute force over all n! permutations (OpenMP over leading images).
StrongAsymmetry strong_asymmetry_brute_force(const BooleanFunction& f, const AutomorphismLimits& limits = {});
StrongAsymmetry strong_asymmetry_brute_force_serial(const BooleanFunction& f,
                                                    const AutomorphismLimits& limits = {});

/// Brute force up to the guard; above it, NCFs are decided as (s == n).
/// Non-NCFs above the guard raise GuardError.
StrongAsymmetry is_strongly_asymmetric(const BooleanFunction& f, const AutomorphismLimits& limits = {});

struct SymmetryReport {
  int s = 0;
  SymmetryPartition partition;
  bool partially_symmetric = false;
  bool totally_symmetric = false;
  bool strongly_asymmetric = false;
  std::optional<Permutation> witness;
};

SymmetryReport symmetry_report(const BooleanFunction& f, const AutomorphismLimits& limits = {});

struct StructuralCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct NcfSymmetryChecks {
  int r = 0;
  int s = 0;
  int single_input_layers = 0;  // r1
  int mixed_input_layers = 0;   // r2
  std::vector<StructuralCheck> checks;

  bool all_pass() const noexcept;
};

/// Structural relations between layers and symmetric classes of an NCF.
NcfSymmetryChecks ncf_symmetry_checks(const LayerDecomposition& d, const SymmetryPartition& p);

}  // namespace ncflab
