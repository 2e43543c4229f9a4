#pragma once

// Exact counting formulas for NCFs. All arithmetic is arbitrary precision.

#include <map>

#include <boost/multiprecision/cpp_int.hpp>

namespace ncflab {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(int n);

/// Sum over layer structures with r layers of n!/(k_1!...k_r!), times 2^(n+1).
BigInt count_by_layers(int n, int r);

/// Number of n-variable NCFs.
BigInt count_total(int n);

/// N(n, s): s = 1 gives 4, s = n the integer Pell form, otherwise the triple sum.
BigInt count_s_symmetric(int n, int s);

/// The triple sum over r, layer structures and per-layer class counts t_i,
/// evaluated for any 1 <= s <= n.
BigInt count_s_symmetric_triple_sum(int n, int s);

/// n! * A_{n-1} with A_0 = 0, A_1 = 2, A_m = 2 A_{m-1} + A_{m-2}.
BigInt count_strongly_asymmetric(int n);

/// The strongly asymmetric sum restricted to k_i <= 2 and k_r = 2:
/// 2 * sum_r sum_k n!/(k_1!...k_r!) * 2^r.
BigInt count_strongly_asymmetric_restricted_sum(int n);

/// n! * 2^(n-1): strongly asymmetric NCFs with exactly n - 1 layers.
BigInt count_strongly_asym_max_layers(int n);

struct CountTable {
  int n = 0;
  BigInt total;
  std::map<int, BigInt> by_layers;
  std::map<int, BigInt> by_symmetry;
  BigInt strongly_asymmetric;
  BigInt strongly_asym_max_layers;
};

/// Guard on n: the triple sum walks all 2^(n-2) layer structures.
inline constexpr int kCountMaxArity = 20;

CountTable count_table(int n, int max_arity = kCountMaxArity);

}  // namespace ncflab
