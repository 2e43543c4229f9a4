#include "ncflab/complexity.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>

#include "ncflab/parallel.hpp"

namespace ncflab {

namespace {

void guard(const char* name, int limit, int n) {
  if (n > limit) throw GuardError(name, limit, n);
}

Index full_mask(int n) { return n == 32 ? ~Index{0} : (Index{1} << n) - 1; }

// f is constant on the subcube fixing `fixed` to the bits of w.
bool constant_on_subcube(const BooleanFunction& f, Index w, Index fixed, Index full) {
  const bool value = f.at(w);
  const Index base = w & fixed;
  const Index free = full & ~fixed;
  Index sub = 0;
  do {
    if (f.at(base | sub) != value) return false;
    sub = (sub - free) & free;
  } while (sub != 0);
  return true;
}

CertificateWitness certificate_search(const BooleanFunction& f, Index w) {
  const int n = f.arity();
  const Index full = full_mask(n);
  std::vector<int> combo;
  for (int k = 0; k <= n; ++k) {
    combo.resize(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) combo[static_cast<std::size_t>(j)] = j;
    for (;;) {
      Index mask = 0;
      for (int v : combo) mask |= Index{1} << v;
      if (constant_on_subcube(f, w, mask, full)) {
        CertificateWitness out{Word(n, w), k, {}};
        for (int v : combo) out.certificate.push_back(v + 1);
        return out;
      }
      // next k-combination of {0..n-1} in lexicographic order
      int j = k - 1;
      while (j >= 0 && combo[static_cast<std::size_t>(j)] == n - k + j) --j;
      if (j < 0) break;
      ++combo[static_cast<std::size_t>(j)];
      for (int t = j + 1; t < k; ++t) combo[static_cast<std::size_t>(t)] = combo[static_cast<std::size_t>(t - 1)] + 1;
    }
  }
  // k = n always certifies; unreachable.
  return CertificateWitness{Word(n, w), n, {}};
}

int sensitivity_at_index(const BooleanFunction& f, Index w) {
  const bool value = f.at(w);
  int count = 0;
  for (int i = 0; i < f.arity(); ++i) count += f.at(w ^ (Index{1} << i)) != value;
  return count;
}

int block_sensitivity_at_index(const BooleanFunction& f, Index w) {
  const int n = f.arity();
  const Index full = full_mask(n);
  const bool value = f.at(w);
  std::vector<bool> sensitive(std::size_t{1} << n, false);
  for (Index b = 1; b <= full; ++b) sensitive[b] = f.at(w ^ b) != value;
  // Only minimal sensitive blocks matter for a disjoint packing.
  std::vector<Index> minimal;
  for (Index b = 1; b <= full; ++b) {
    if (!sensitive[b]) continue;
    bool is_minimal = true;
    for (Index sub = (b - 1) & b; sub != 0; sub = (sub - 1) & b) {
      if (sensitive[sub]) {
        is_minimal = false;
        break;
      }
    }
    if (is_minimal) minimal.push_back(b);
  }
  std::vector<int> best(std::size_t{1} << n, -1);
  best[0] = 0;
  // Masks in increasing order: every strict submask is already solved.
  for (Index avail = 1; avail <= full; ++avail) {
    const Index lowest = avail & (~avail + 1);
    int result = best[avail & ~lowest];
    for (Index b : minimal) {
      if ((b & lowest) && (b & ~avail) == 0) result = std::max(result, 1 + best[avail & ~b]);
    }
    best[avail] = result;
  }
  return best[full];
}

struct FiberMax {
  int c0 = 0;
  int c1 = 0;
  int s = 0;
};

ComplexityProfile assemble(const BooleanFunction& f, const FiberMax& m,
                           std::optional<std::vector<CertificateWitness>> witnesses,
                           const ProfileOptions& options) {
  ComplexityProfile p;
  p.c0 = m.c0;
  p.c1 = m.c1;
  p.c = std::max(m.c0, m.c1);
  p.sensitivity = m.s;
  p.degenerate = f.is_constant();
  p.witnesses = std::move(witnesses);
  if (options.block_sensitivity) p.block_sensitivity = block_sensitivity(f, options.limits);
  return p;
}

}  // namespace

CertificateWitness certificate_at(const BooleanFunction& f, const Word& w, const ComplexityLimits& limits) {
  guard("certificate", limits.certificate_max_arity, f.arity());
  if (w.arity() != f.arity()) throw InputError("word arity does not match function arity");
  return certificate_search(f, w.index());
}

ComplexityProfile cert_profile_serial(const BooleanFunction& f, const ProfileOptions& options) {
  guard("certificate", options.limits.certificate_max_arity, f.arity());
  const auto size = static_cast<Index>(f.size());
  FiberMax m;
  std::optional<std::vector<CertificateWitness>> witnesses;
  if (options.witnesses) witnesses.emplace();
  for (Index w = 0; w < size; ++w) {
    auto cert = certificate_search(f, w);
    int& slot = f.at(w) ? m.c1 : m.c0;
    slot = std::max(slot, cert.size);
    m.s = std::max(m.s, sensitivity_at_index(f, w));
    if (witnesses) witnesses->push_back(std::move(cert));
  }
  return assemble(f, m, std::move(witnesses), options);
}

ComplexityProfile cert_profile(const BooleanFunction& f, const ProfileOptions& options) {
  guard("certificate", options.limits.certificate_max_arity, f.arity());
  const auto size = static_cast<std::int64_t>(f.size());
  std::vector<CertificateWitness> per_word(static_cast<std::size_t>(size));
  int c0 = 0;
  int c1 = 0;
  int s = 0;
#pragma omp parallel for num_threads(worker_count()) schedule(dynamic, 16) \
    reduction(max : c0, c1, s)
  for (std::int64_t w = 0; w < size; ++w) {
    const auto idx = static_cast<Index>(w);
    auto cert = certificate_search(f, idx);
    if (f.at(idx)) {
      c1 = std::max(c1, cert.size);
    } else {
      c0 = std::max(c0, cert.size);
    }
    s = std::max(s, sensitivity_at_index(f, idx));
    per_word[static_cast<std::size_t>(w)] = std::move(cert);
  }
  std::optional<std::vector<CertificateWitness>> witnesses;
  if (options.witnesses) witnesses = std::move(per_word);
  return assemble(f, FiberMax{c0, c1, s}, std::move(witnesses), options);
}

CertTriple ncf_cert_formula(std::span<const int> structure, bool b) {
  const int r = static_cast<int>(structure.size());
  if (r == 0) throw InputError("empty layer structure");
  for (int i = 0; i < r; ++i) {
    if (structure[static_cast<std::size_t>(i)] < 1) throw InputError("layer sizes must be positive");
  }
  if (structure.back() < 2) throw InputError("last layer must have at least two variables");

  int c0 = 0;
  int c1 = 0;
  if (r == 1) {
    c0 = 1;
    c1 = structure[0];
  } else {
    int odd = 0;   // k_1 + k_3 + ...
    int even = 0;  // k_2 + k_4 + ...
    for (int i = 0; i < r; ++i) ((i % 2 == 0) ? odd : even) += structure[static_cast<std::size_t>(i)];
    if (r % 2 == 1) {
      c0 = even + 1;
      c1 = odd;
    } else {
      c0 = even;
      c1 = odd + 1;
    }
  }
  // The base values describe the positive form with nested output (r >= 2,
  // stored b = 0) or the bare monomial (r == 1, stored b = 1). Complementing
  // the output swaps the fibers.
  const bool swap = (r == 1) ? !b : b;
  if (swap) std::swap(c0, c1);
  return CertTriple{c0, c1, std::max(c0, c1)};
}

int sensitivity_at(const BooleanFunction& f, const Word& w) {
  if (w.arity() != f.arity()) throw InputError("word arity does not match function arity");
  return sensitivity_at_index(f, w.index());
}

int sensitivity_serial(const BooleanFunction& f) {
  int best = 0;
  const auto size = static_cast<Index>(f.size());
  for (Index w = 0; w < size; ++w) best = std::max(best, sensitivity_at_index(f, w));
  return best;
}

int sensitivity(const BooleanFunction& f) {
  int best = 0;
  const auto size = static_cast<std::int64_t>(f.size());
#pragma omp parallel for num_threads(worker_count()) reduction(max : best)
  for (std::int64_t w = 0; w < size; ++w) {
    best = std::max(best, sensitivity_at_index(f, static_cast<Index>(w)));
  }
  return best;
}

int block_sensitivity_at(const BooleanFunction& f, const Word& w, const ComplexityLimits& limits) {
  guard("block_sensitivity", limits.block_sensitivity_max_arity, f.arity());
  if (w.arity() != f.arity()) throw InputError("word arity does not match function arity");
  return block_sensitivity_at_index(f, w.index());
}

int block_sensitivity(const BooleanFunction& f, const ComplexityLimits& limits) {
  guard("block_sensitivity", limits.block_sensitivity_max_arity, f.arity());
  int best = 0;
  const auto size = static_cast<Index>(f.size());
  for (Index w = 0; w < size; ++w) best = std::max(best, block_sensitivity_at_index(f, w));
  return best;
}

}  // namespace ncflab
