#include "ncflab/verify.hpp"

#include <omp.h>

#include <algorithm>

#include "ncflab/complexity.hpp"
#include "ncflab/enumeration.hpp"
#include "ncflab/parallel.hpp"
#include "ncflab/symmetry.hpp"

namespace ncflab {

namespace {

constexpr int kCensusMaxArity = 6;

struct Shard {
  Census census;
  std::vector<std::uint64_t> tables;
};

void note(Census& c, const std::string& check, const LayerDecomposition& d, const std::string& detail) {
  c.counterexamples.emplace(check, format_decomposition(d) + " " + detail);
}

void visit_one(const LayerDecomposition& d, const CensusOptions& options, Shard& shard) {
  Census& c = shard.census;
  const int n = d.arity;
  const BooleanFunction f = compose(d);
  ++c.functions;
  shard.tables.push_back(f.blocks()[0]);

  if (compose_expanded(d) != f) {
    ++c.expanded_form_mismatches;
    note(c, "expanded_form_agreement", d, "nested and expanded readings differ");
  }

  const auto classified = decompose(f);
  if (!classified.is_ncf() || classified.decomposition() != d) {
    ++c.roundtrip_failures;
    note(c, "roundtrip_decompose_compose", d,
         classified.is_ncf() ? "decomposed as " + format_decomposition(classified.decomposition())
                             : "rejected: " + to_string(classified.reason()));
  }

  const int r = d.layer_count();
  ++c.by_layers[r];

  const SymmetryPartition p = partition(f);
  const int s = static_cast<int>(p.classes.size());
  ++c.by_symmetry[s];

  const auto asym = strong_asymmetry_brute_force_serial(f);
  if (asym.strongly_asymmetric) {
    ++c.strongly_asymmetric;
    if (r == n - 1) ++c.strongly_asymmetric_max_layers;
  }
  if (asym.strongly_asymmetric != (s == n)) {
    ++c.asymmetry_criterion_failures;
    note(c, "strong_asymmetry_iff_n_symmetric", d, "s=" + std::to_string(s));
  }

  const auto structure = layer_structure(d);
  const CertTriple formula = ncf_cert_formula(structure, d.b);
  const ComplexityProfile profile = cert_profile_serial(f);
  const CertTriple brute{profile.c0, profile.c1, profile.c};
  if (!(formula == brute)) {
    ++c.formula_mismatches;
    note(c, "cert_formula_vs_oracle", d,
         "formula (" + std::to_string(formula.c0) + "," + std::to_string(formula.c1) + ") brute (" +
             std::to_string(brute.c0) + "," + std::to_string(brute.c1) + ")");
  }

  bool collapse = profile.sensitivity == profile.c;
  int bs = -1;
  if (options.block_sensitivity) {
    bs = block_sensitivity(f);
    collapse = collapse && bs == profile.sensitivity;
  }
  if (!collapse) {
    ++c.measure_collapse_failures;
    note(c, "measure_collapse", d,
         "s=" + std::to_string(profile.sensitivity) + " bs=" + std::to_string(bs) + " C=" + std::to_string(profile.c));
  }

  const auto structural = ncf_symmetry_checks(d, p);
  if (!structural.all_pass()) {
    ++c.structural_check_failures;
    for (const auto& chk : structural.checks) {
      if (!chk.pass) {
        note(c, "ncf_symmetry_structure", d, chk.name + ": " + chk.detail);
        break;
      }
    }
  }
}

void merge(Census& into, const Census& part) {
  into.functions += part.functions;
  for (const auto& [k, v] : part.by_layers) into.by_layers[k] += v;
  for (const auto& [k, v] : part.by_symmetry) into.by_symmetry[k] += v;
  into.strongly_asymmetric += part.strongly_asymmetric;
  into.strongly_asymmetric_max_layers += part.strongly_asymmetric_max_layers;
  into.roundtrip_failures += part.roundtrip_failures;
  into.expanded_form_mismatches += part.expanded_form_mismatches;
  into.formula_mismatches += part.formula_mismatches;
  into.measure_collapse_failures += part.measure_collapse_failures;
  into.asymmetry_criterion_failures += part.asymmetry_criterion_failures;
  into.structural_check_failures += part.structural_check_failures;
  // Earlier shards come first in stream order, so existing entries win.
  for (const auto& kv : part.counterexamples) into.counterexamples.insert(kv);
}

void check_census_arity(int n) {
  if (n < 2) throw InputError("census requires n >= 2");
  if (n > kCensusMaxArity) throw GuardError("census", kCensusMaxArity, n);
}

Census finish(int n, std::vector<Shard>& shards) {
  Census total;
  total.n = n;
  std::vector<std::uint64_t> tables;
  for (auto& shard : shards) {
    merge(total, shard.census);
    tables.insert(tables.end(), shard.tables.begin(), shard.tables.end());
  }
  std::sort(tables.begin(), tables.end());
  total.distinct_tables = static_cast<std::uint64_t>(std::unique(tables.begin(), tables.end()) - tables.begin());
  return total;
}

std::string str(const BigInt& v) { return v.str(); }
std::string str(std::uint64_t v) { return std::to_string(v); }

void add(VerifyReport& report, const std::string& name, const std::string& expected, const std::string& actual) {
  report.checks[name] = CheckResult{expected == actual, expected, actual};
}

}  // namespace

Census census_serial(int n, const CensusOptions& options) {
  check_census_arity(n);
  std::vector<Shard> shards(1);
  for_each_ncf(n, [&](const LayerDecomposition& d) { visit_one(d, options, shards[0]); },
               EnumerationLimits{kCensusMaxArity});
  return finish(n, shards);
}

Census census(int n, const CensusOptions& options) {
  check_census_arity(n);
  const auto structures = layer_structures(n);
  std::vector<Shard> shards(structures.size());
  const auto count = static_cast<std::int64_t>(structures.size());
#pragma omp parallel for num_threads(worker_count()) schedule(dynamic, 1)
  for (std::int64_t k = 0; k < count; ++k) {
    auto& shard = shards[static_cast<std::size_t>(k)];
    for_each_ncf_with_structure(n, structures[static_cast<std::size_t>(k)],
                                [&](const LayerDecomposition& d) { visit_one(d, options, shard); });
  }
  return finish(n, shards);
}

bool VerifyReport::all_pass() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const auto& kv) { return kv.second.pass; });
}

VerifyReport verify(int n, const VerifyOptions& options) {
  if (n < 2) throw InputError("verify requires n >= 2");
  VerifyReport report;
  report.n = n;

  const BigInt total = count_total(n);
  BigInt layer_sum = 0;
  for (int r = 1; r <= n - 1; ++r) layer_sum += count_by_layers(n, r);
  add(report, "sum_by_layers_equals_total", str(total), str(layer_sum));
  BigInt symmetry_sum = 0;
  for (int s = 1; s <= n; ++s) symmetry_sum += count_s_symmetric(n, s);
  add(report, "sum_by_symmetry_equals_total", str(total), str(symmetry_sum));
  add(report, "count_by_layers_max_r", str(factorial(n) * (BigInt{1} << n)), str(count_by_layers(n, n - 1)));
  add(report, "n_symmetric_pell_equals_restricted_sum", str(count_strongly_asymmetric_restricted_sum(n)),
      str(count_strongly_asymmetric(n)));
  add(report, "totally_symmetric_count", "4", str(count_s_symmetric(n, 1)));
  add(report, "triple_sum_edge_s_1", str(count_s_symmetric(n, 1)), str(count_s_symmetric_triple_sum(n, 1)));
  add(report, "triple_sum_edge_s_n", str(count_s_symmetric(n, n)), str(count_s_symmetric_triple_sum(n, n)));
  {
    const BigInt nn = count_strongly_asymmetric(n);
    const BigInt bound = count_strongly_asym_max_layers(n);
    const bool strict = n >= 4;
    const std::string relation = nn > bound ? ">" : (nn == bound ? "=" : "<");
    report.checks["strongly_asym_vs_max_layers_bound"] =
        CheckResult{strict ? nn > bound : nn == bound, std::string("N(n,n) ") + (strict ? ">" : "=") + " " + str(bound),
                    "N(n,n) " + relation + " " + str(bound) + " (N(n,n)=" + str(nn) + ")"};
  }

  report.exhaustive = n <= options.exhaustive_max_arity;
  if (!report.exhaustive) return report;

  const Census c = census(n, options.census);
  add(report, "stream_length", str(total), str(c.functions));
  add(report, "distinct_tables", str(total), str(c.distinct_tables));
  for (int r = 1; r <= n - 1; ++r) {
    const auto it = c.by_layers.find(r);
    add(report, "count_by_layers_r" + std::to_string(r), str(count_by_layers(n, r)),
        str(it == c.by_layers.end() ? std::uint64_t{0} : it->second));
  }
  for (int s = 1; s <= n; ++s) {
    const auto it = c.by_symmetry.find(s);
    add(report, "count_s_symmetric_s" + std::to_string(s), str(count_s_symmetric(n, s)),
        str(it == c.by_symmetry.end() ? std::uint64_t{0} : it->second));
  }
  add(report, "strongly_asymmetric_census", str(count_strongly_asymmetric(n)), str(c.strongly_asymmetric));
  add(report, "strongly_asym_max_layers_census", str(count_strongly_asym_max_layers(n)),
      str(c.strongly_asymmetric_max_layers));

  auto failures = [&](const std::string& name, std::uint64_t count) {
    std::string actual = str(count) + " failures";
    if (const auto it = c.counterexamples.find(name); it != c.counterexamples.end()) {
      actual += "; first: " + it->second;
    }
    add(report, name, "0 failures", actual);
  };
  failures("strong_asymmetry_iff_n_symmetric", c.asymmetry_criterion_failures);
  failures("roundtrip_decompose_compose", c.roundtrip_failures);
  failures("expanded_form_agreement", c.expanded_form_mismatches);
  failures("cert_formula_vs_oracle", c.formula_mismatches);
  failures("measure_collapse", c.measure_collapse_failures);
  failures("ncf_symmetry_structure", c.structural_check_failures);
  return report;
}

}  // namespace ncflab
