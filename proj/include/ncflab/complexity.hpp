#pragma once

// Certificate complexity, sensitivity and block sensitivity.
//
// The brute-force measures come in two flavours: an OpenMP kernel that
// splits the per-word searches across workers, and a *_serial reference
// used by tests and benchmarks. Both return identical results, witnesses
// included.

#include <optional>
#include <span>
#include <vector>

#include "ncflab/boolfn.hpp"

namespace ncflab {

struct ComplexityLimits {
  int certificate_max_arity = 14;
  int block_sensitivity_max_arity = 6;
};

struct CertificateWitness {
  Word word;
  int size = 0;
  std::vector<int> certificate;  // 1-based, ascending

  bool operator==(const CertificateWitness&) const = default;
};

struct ComplexityProfile {
  int c0 = 0;
  int c1 = 0;
  int c = 0;
  int sensitivity = 0;
  std::optional<int> block_sensitivity;
  std::optional<std::vector<CertificateWitness>> witnesses;  // indexed by word
  /// Constant input: one fiber is empty and its maximum is taken as 0.
  bool degenerate = false;

  bool operator==(const ComplexityProfile&) const = default;
};

struct ProfileOptions {
  bool block_sensitivity = false;
  bool witnesses = false;
  ComplexityLimits limits;
};

/// Smallest certificate at w: by cardinality, then lexicographic index set.
CertificateWitness certificate_at(const BooleanFunction& f, const Word& w,
                                  const ComplexityLimits& limits = {});

ComplexityProfile cert_profile(const BooleanFunction& f, const ProfileOptions& options = {});
ComplexityProfile cert_profile_serial(const BooleanFunction& f, const ProfileOptions& options = {});

struct CertTriple {
  int c0 = 0;
  int c1 = 0;
  int c = 0;

  bool operator==(const CertTriple&) const = default;
};

/// Closed-form (C_0, C_1, C) of an NCF from its layer structure and stored b.
CertTriple ncf_cert_formula(std::span<const int> structure, bool b);

int sensitivity_at(const BooleanFunction& f, const Word& w);
int sensitivity(const BooleanFunction& f);
int sensitivity_serial(const BooleanFunction& f);

/// Maximum number of disjoint sensitive blocks at w.
int block_sensitivity_at(const BooleanFunction& f, const Word& w, const ComplexityLimits& limits = {});
int block_sensitivity(const BooleanFunction& f, const ComplexityLimits& limits = {});

}  // namespace ncflab
