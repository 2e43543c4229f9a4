#include "ncflab/counting.hpp"

#include <string>
#include <vector>

#include "ncflab/enumeration.hpp"
#include "ncflab/errors.hpp"

namespace ncflab {

namespace {

void require_n(int n) {
  if (n < 2) throw InputError("counting requires n >= 2, got " + std::to_string(n));
}

BigInt pow2(int e) { return BigInt{1} << e; }

BigInt multinomial(int n, const LayerStructure& parts) {
  BigInt denominator = 1;
  for (int k : parts) denominator *= factorial(k);
  return factorial(n) / denominator;
}

// Per-layer choices yielding t classes: 2 for t = 1, 2^k - 2 for t = 2. This
// is the closed expression (t-1)(2^k-2) + 1 - (-1)^t.
BigInt layer_choices(int k, int t) {
  const int sign = (t % 2 == 0) ? 1 : -1;
  return BigInt(t - 1) * (pow2(k) - 2) + 1 - sign;
}

// coefficient list: poly[s] = number of input assignments across the layers
// giving s classes in total.
std::vector<BigInt> class_polynomial(const LayerStructure& parts) {
  std::vector<BigInt> poly{1};
  for (int k : parts) {
    std::vector<BigInt> next(poly.size() + 2);
    for (std::size_t s = 0; s < poly.size(); ++s) {
      if (poly[s] == 0) continue;
      for (int t = 1; t <= std::min(2, k); ++t) next[s + static_cast<std::size_t>(t)] += poly[s] * layer_choices(k, t);
    }
    poly = std::move(next);
  }
  return poly;
}

}  // namespace

BigInt factorial(int n) {
  if (n < 0) throw InputError("negative factorial");
  BigInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

BigInt count_by_layers(int n, int r) {
  require_n(n);
  if (r < 1 || r > n - 1) {
    throw InputError("layer count " + std::to_string(r) + " outside 1.." + std::to_string(n - 1));
  }
  BigInt sum = 0;
  for_each_layer_structure(n, [&](const LayerStructure& k) {
    if (static_cast<int>(k.size()) == r) sum += multinomial(n, k);
  });
  return pow2(n + 1) * sum;
}

BigInt count_total(int n) {
  require_n(n);
  BigInt sum = 0;
  for_each_layer_structure(n, [&](const LayerStructure& k) { sum += multinomial(n, k); });
  return pow2(n + 1) * sum;
}

BigInt count_s_symmetric_triple_sum(int n, int s) {
  require_n(n);
  if (s < 1 || s > n) throw InputError("symmetry level " + std::to_string(s) + " outside 1.." + std::to_string(n));
  BigInt sum = 0;
  for_each_layer_structure(n, [&](const LayerStructure& k) {
    const int r = static_cast<int>(k.size());
    if (r < (s + 1) / 2 || r > s) return;
    // inner sum over t_1 + ... + t_r = s, 1 <= t_i <= min(2, k_i)
    const auto poly = class_polynomial(k);
    if (static_cast<std::size_t>(s) < poly.size() && poly[static_cast<std::size_t>(s)] != 0) {
      sum += multinomial(n, k) * poly[static_cast<std::size_t>(s)];
    }
  });
  return 2 * sum;
}

BigInt count_strongly_asymmetric(int n) {
  require_n(n);
  BigInt prev = 0;  // A_0
  BigInt cur = 2;   // A_1
  for (int m = 2; m <= n - 1; ++m) {
    BigInt next = 2 * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return factorial(n) * cur;
}

BigInt count_strongly_asymmetric_restricted_sum(int n) {
  require_n(n);
  BigInt sum = 0;
  for_each_layer_structure(n, [&](const LayerStructure& k) {
    if (k.back() != 2) return;
    for (int part : k) {
      if (part > 2) return;
    }
    sum += multinomial(n, k) * pow2(static_cast<int>(k.size()));
  });
  return 2 * sum;
}

BigInt count_strongly_asym_max_layers(int n) {
  require_n(n);
  return factorial(n) * pow2(n - 1);
}

BigInt count_s_symmetric(int n, int s) {
  require_n(n);
  if (s < 1 || s > n) throw InputError("symmetry level " + std::to_string(s) + " outside 1.." + std::to_string(n));
  if (s == 1) return 4;
  if (s == n) return count_strongly_asymmetric(n);
  return count_s_symmetric_triple_sum(n, s);
}

CountTable count_table(int n, int max_arity) {
  require_n(n);
  if (n > max_arity) throw GuardError("count", max_arity, n);
  CountTable t;
  t.n = n;
  const BigInt big_factorial = factorial(n);
  std::vector<BigInt> by_s(static_cast<std::size_t>(n + 1));
  std::map<int, BigInt> layer_sums;
  // One walk over the structures feeds every column.
  for_each_layer_structure(n, [&](const LayerStructure& k) {
    BigInt denominator = 1;
    for (int part : k) denominator *= factorial(part);
    const BigInt m = big_factorial / denominator;
    layer_sums[static_cast<int>(k.size())] += m;
    const auto poly = class_polynomial(k);
    for (std::size_t s = 2; s < poly.size() && s < static_cast<std::size_t>(n); ++s) {
      by_s[s] += m * poly[s];
    }
  });
  for (int r = 1; r <= n - 1; ++r) t.by_layers[r] = pow2(n + 1) * layer_sums[r];
  t.total = 0;
  for (const auto& [r, v] : t.by_layers) t.total += v;
  t.by_symmetry[1] = 4;
  for (int s = 2; s <= n - 1; ++s) t.by_symmetry[s] = 2 * by_s[static_cast<std::size_t>(s)];
  t.strongly_asymmetric = count_strongly_asymmetric(n);
  t.by_symmetry[n] = t.strongly_asymmetric;
  t.strongly_asym_max_layers = count_strongly_asym_max_layers(n);
  return t;
}

}  // namespace ncflab
